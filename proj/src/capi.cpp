#include "vncore/vncore.h"

#include "vncore/error.hpp"
#include "vncore/instances.hpp"
#include "vncore/io.hpp"
#include "vncore/pipeline.hpp"

#include <cstring>
#include <new>

struct vnc_instance {
    vncore::fincat::Instance value;
};

struct vnc_core {
    vncore::vn::VNCoreData value;
};

struct vnc_report {
    vncore::Report value;
    std::string text;
};

namespace {

thread_local std::string last_error;

vnc_status status_of(vncore::ErrorCode code)
{
    using vncore::ErrorCode;
    switch (code) {
    case ErrorCode::Malformed: return VNC_MALFORMED;
    case ErrorCode::NotWellDefined: return VNC_NOT_WELL_DEFINED;
    case ErrorCode::IoError: return VNC_IO_ERROR;
    default: return VNC_INVALID_ARGUMENT;
    }
}

template <class F>
vnc_status guarded(F&& body)
{
    last_error.clear();
    try {
        return body();
    } catch (const vncore::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return VNC_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return VNC_INTERNAL_ERROR;
    }
}

vnc_status null_argument()
{
    last_error = "null argument";
    return VNC_INVALID_ARGUMENT;
}

char* duplicate(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

vnc_report* wrap(vncore::Report r)
{
    std::string text = r.text();
    return new vnc_report{std::move(r), std::move(text)};
}

const vncore::Report& checks_of(const vnc_report* report)
{
    static const vncore::Report empty;
    return report ? report->value : empty;
}

} // namespace

extern "C" {

const char* vnc_last_error(void)
{
    return last_error.c_str();
}

void vnc_string_free(char* s)
{
    delete[] s;
}

vnc_status vnc_instance_load(const char* path, vnc_instance** out)
{
    if (!path || !out)
        return null_argument();
    return guarded([&] {
        *out = new vnc_instance{vncore::io::read_instance(vncore::io::read_file(path))};
        return VNC_OK;
    });
}

vnc_status vnc_instance_parse(const char* text, vnc_instance** out)
{
    if (!text || !out)
        return null_argument();
    return guarded([&] {
        *out = new vnc_instance{vncore::io::read_instance(text)};
        return VNC_OK;
    });
}

vnc_status vnc_instance_example(const char* name, vnc_instance** out)
{
    if (!name || !out)
        return null_argument();
    return guarded([&] {
        *out = new vnc_instance{vncore::instances::example(name)};
        return VNC_OK;
    });
}

vnc_status vnc_instance_serialize(const vnc_instance* inst, char** text)
{
    if (!inst || !text)
        return null_argument();
    return guarded([&] {
        *text = duplicate(vncore::io::write_instance(inst->value));
        return VNC_OK;
    });
}

vnc_status vnc_instance_save(const vnc_instance* inst, const char* path)
{
    if (!inst || !path)
        return null_argument();
    return guarded([&] {
        vncore::io::write_file(path, vncore::io::write_instance(inst->value));
        return VNC_OK;
    });
}

vnc_status vnc_instance_mutate(const vnc_instance* inst, vnc_mutation m, vnc_instance** out)
{
    if (!inst || !out)
        return null_argument();
    return guarded([&] {
        auto all = vncore::instances::all_mutations();
        auto index = static_cast<std::size_t>(m);
        if (index >= all.size())
            vncore::raise(vncore::ErrorCode::InvalidArgument, "unknown mutation");
        *out = new vnc_instance{vncore::instances::mutate_instance(inst->value, all[index])};
        return VNC_OK;
    });
}

void vnc_instance_free(vnc_instance* inst)
{
    delete inst;
}

vnc_status vnc_validate(const vnc_instance* inst, vnc_report** report)
{
    if (!inst || !report)
        return null_argument();
    return guarded([&] {
        *report = wrap(vncore::pipeline::validate(inst->value));
        return (*report)->value.passed() ? VNC_OK : VNC_CHECK_FAILED;
    });
}

vnc_status vnc_build(const vnc_instance* inst, int force, vnc_core** core, vnc_report** report)
{
    if (!inst || !core || !report)
        return null_argument();
    *core = nullptr;
    return guarded([&] {
        auto result = vncore::pipeline::build(inst->value, force != 0);
        if (result.core)
            *core = new vnc_core{std::move(*result.core)};
        *report = wrap(std::move(result.report));
        return *core && (*report)->value.passed() ? VNC_OK : VNC_CHECK_FAILED;
    });
}

vnc_status vnc_core_load(const char* path, vnc_core** out)
{
    if (!path || !out)
        return null_argument();
    return guarded([&] {
        *out = new vnc_core{vncore::io::read_core(vncore::io::read_file(path))};
        return VNC_OK;
    });
}

vnc_status vnc_core_parse(const char* text, vnc_core** out)
{
    if (!text || !out)
        return null_argument();
    return guarded([&] {
        *out = new vnc_core{vncore::io::read_core(text)};
        return VNC_OK;
    });
}

vnc_status vnc_core_serialize(const vnc_core* core, const vnc_report* report, char** text)
{
    if (!core || !text)
        return null_argument();
    return guarded([&] {
        *text = duplicate(vncore::io::write_core(core->value, checks_of(report)));
        return VNC_OK;
    });
}

vnc_status vnc_core_save(const vnc_core* core, const vnc_report* report, const char* path)
{
    if (!core || !path)
        return null_argument();
    return guarded([&] {
        vncore::io::write_file(path, vncore::io::write_core(core->value, checks_of(report)));
        return VNC_OK;
    });
}

size_t vnc_core_dim(const vnc_core* core)
{
    return core ? core->value.dim : 0;
}

void vnc_core_free(vnc_core* core)
{
    delete core;
}

vnc_status vnc_check(const vnc_core* core, unsigned flags, vnc_report** report)
{
    if (!core || !report)
        return null_argument();
    return guarded([&] {
        vncore::pipeline::CheckOptions options;
        options.antipodal = flags & VNC_CHECK_ANTIPODAL;
        options.fusion = flags & VNC_CHECK_FUSION;
        options.partial_inverse = flags & VNC_CHECK_PARTIAL_INVERSE;
        options.complete_unit = flags & VNC_CHECK_COMPLETE_UNIT;
        *report = wrap(vncore::pipeline::check(core->value, options));
        return (*report)->value.passed() ? VNC_OK : VNC_CHECK_FAILED;
    });
}

const char* vnc_report_text(const vnc_report* report)
{
    return report ? report->text.c_str() : "";
}

int vnc_report_passed(const vnc_report* report)
{
    return report && report->value.passed();
}

void vnc_report_free(vnc_report* report)
{
    delete report;
}

} // extern "C"
