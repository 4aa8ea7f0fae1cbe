// Batch front-end over the C API.
//
//   vncore validate <instance>
//   vncore build    <instance> <core-out> [--force]
//   vncore check    <core> [--antipodal] [--fusion] [--partial-inverse] [--complete-unit] [--all]
//   vncore run      <instance> [check flags]     validate, build and check in memory
//   vncore example  <name> [out]
//   vncore mutate   <instance> <mutation> <out>
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 malformed input or usage.

#include "vncore/vncore.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;

struct Deleter {
    void operator()(vnc_instance* p) const { vnc_instance_free(p); }
    void operator()(vnc_core* p) const { vnc_core_free(p); }
    void operator()(vnc_report* p) const { vnc_report_free(p); }
    void operator()(char* p) const { vnc_string_free(p); }
};

template <class T>
using Owned = std::unique_ptr<T, Deleter>;

bool timings = false;

class Timer {
public:
    explicit Timer(const char* stage) : stage_(stage), start_(std::chrono::steady_clock::now()) {}
    ~Timer()
    {
        if (!timings)
            return;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        std::fprintf(stderr, "[time] %s: %.3f s\n", stage_, elapsed.count());
    }

private:
    const char* stage_;
    std::chrono::steady_clock::time_point start_;
};

// Usage-level and malformed-input failures exit 2; failed checks exit 1.
int error_exit(vnc_status status)
{
    std::fprintf(stderr, "error: %s\n", vnc_last_error());
    return status == VNC_CHECK_FAILED ? kFail : kMalformed;
}

int report_exit(const vnc_report* report)
{
    std::fputs(vnc_report_text(report), stdout);
    if (vnc_report_passed(report))
        return kPass;
    return kFail;
}

struct CheckFlags {
    bool antipodal = false;
    bool fusion = false;
    bool partial_inverse = false;
    bool complete_unit = false;
    bool all = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_flag("--antipodal", antipodal, "report whether S is an antihomomorphism");
        cmd->add_flag("--fusion", fusion, "check the fusion equation for V = (mu (x) 1)(1 (x) delta)");
        cmd->add_flag("--partial-inverse", partial_inverse, "check VWV = V");
        cmd->add_flag("--complete-unit", complete_unit, "adjoin a unit and recheck");
        cmd->add_flag("--all", all, "all of the above");
    }

    unsigned bits() const
    {
        if (all)
            return VNC_CHECK_ALL;
        unsigned bits = 0;
        if (antipodal)
            bits |= VNC_CHECK_ANTIPODAL;
        if (fusion)
            bits |= VNC_CHECK_FUSION;
        if (partial_inverse)
            bits |= VNC_CHECK_PARTIAL_INVERSE;
        if (complete_unit)
            bits |= VNC_CHECK_COMPLETE_UNIT;
        return bits;
    }
};

int load_instance(const std::string& path, Owned<vnc_instance>& out)
{
    vnc_instance* raw = nullptr;
    vnc_status s = vnc_instance_load(path.c_str(), &raw);
    out.reset(raw);
    return s == VNC_OK ? kPass : error_exit(s);
}

int cmd_validate(const std::string& path)
{
    Owned<vnc_instance> inst;
    if (int rc = load_instance(path, inst))
        return rc;
    vnc_report* raw = nullptr;
    vnc_status s;
    {
        Timer t("validate");
        s = vnc_validate(inst.get(), &raw);
    }
    Owned<vnc_report> report(raw);
    if (!report)
        return error_exit(s);
    return report_exit(report.get());
}

int cmd_build(const std::string& path, const std::string& out, bool force)
{
    Owned<vnc_instance> inst;
    if (int rc = load_instance(path, inst))
        return rc;
    vnc_core* core_raw = nullptr;
    vnc_report* report_raw = nullptr;
    vnc_status s;
    {
        Timer t("build");
        s = vnc_build(inst.get(), force, &core_raw, &report_raw);
    }
    Owned<vnc_core> core(core_raw);
    Owned<vnc_report> report(report_raw);
    if (!report)
        return error_exit(s);
    if (core) {
        vnc_status w = vnc_core_save(core.get(), report.get(), out.c_str());
        if (w != VNC_OK)
            return error_exit(w);
    }
    return report_exit(report.get());
}

int run_checks(const vnc_core* core, unsigned flags)
{
    vnc_report* raw = nullptr;
    vnc_status s;
    {
        Timer t("check");
        s = vnc_check(core, flags, &raw);
    }
    Owned<vnc_report> report(raw);
    if (!report)
        return error_exit(s);
    return report_exit(report.get());
}

int cmd_check(const std::string& path, unsigned flags)
{
    vnc_core* raw = nullptr;
    vnc_status s = vnc_core_load(path.c_str(), &raw);
    Owned<vnc_core> core(raw);
    if (s != VNC_OK)
        return error_exit(s);
    return run_checks(core.get(), flags);
}

int cmd_run(const std::string& path, unsigned flags)
{
    Owned<vnc_instance> inst;
    if (int rc = load_instance(path, inst))
        return rc;
    vnc_core* core_raw = nullptr;
    vnc_report* report_raw = nullptr;
    vnc_status s;
    {
        Timer t("validate+build");
        s = vnc_build(inst.get(), 0, &core_raw, &report_raw);
    }
    Owned<vnc_core> core(core_raw);
    Owned<vnc_report> report(report_raw);
    if (!report)
        return error_exit(s);
    int rc = report_exit(report.get());
    if (rc != kPass || !core)
        return rc == kPass ? kFail : rc;
    return run_checks(core.get(), flags);
}

int cmd_example(const std::string& name, const std::string& out)
{
    vnc_instance* raw = nullptr;
    vnc_status s = vnc_instance_example(name.c_str(), &raw);
    Owned<vnc_instance> inst(raw);
    if (s != VNC_OK)
        return error_exit(VNC_MALFORMED);
    if (!out.empty() && out != "-") {
        s = vnc_instance_save(inst.get(), out.c_str());
        return s == VNC_OK ? kPass : error_exit(s);
    }
    char* text_raw = nullptr;
    s = vnc_instance_serialize(inst.get(), &text_raw);
    Owned<char> text(text_raw);
    if (s != VNC_OK)
        return error_exit(s);
    std::fputs(text.get(), stdout);
    return kPass;
}

int cmd_mutate(const std::string& path, vnc_mutation m, const std::string& out)
{
    Owned<vnc_instance> inst;
    if (int rc = load_instance(path, inst))
        return rc;
    vnc_instance* raw = nullptr;
    vnc_status s = vnc_instance_mutate(inst.get(), m, &raw);
    Owned<vnc_instance> mutant(raw);
    if (s != VNC_OK)
        return error_exit(s);
    s = vnc_instance_save(mutant.get(), out.c_str());
    return s == VNC_OK ? kPass : error_exit(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact construction and checking of VN-cores from finite presentations"};
    app.require_subcommand(1);
    app.add_flag("--timings", timings, "print stage timings to standard error");

    std::string path, out, name;
    bool force = false;
    CheckFlags flags;

    auto* validate = app.add_subcommand("validate", "run every validator on an instance file");
    validate->add_option("instance", path)->required();

    auto* build = app.add_subcommand("build", "build the core of an instance file");
    build->add_option("instance", path)->required();
    build->add_option("out", out, "core file to write")->required();
    build->add_flag("--force", force, "skip validation");

    auto* check = app.add_subcommand("check", "check the laws of a core file");
    check->add_option("core", path)->required();
    flags.attach(check);

    auto* run = app.add_subcommand("run", "validate, build and check an instance file");
    run->add_option("instance", path)->required();
    CheckFlags run_flags;
    run_flags.attach(run);

    auto* example = app.add_subcommand("example", "write a bundled instance (z2, z3-f7, s3, promonoidal-toy)");
    example->add_option("name", name)->required();
    example->add_option("out", out, "file to write; standard output when omitted");

    const std::map<std::string, vnc_mutation> mutations{
        {"BreakSplit", VNC_MUTATION_BREAK_SPLIT},
        {"BreakUNaturality", VNC_MUTATION_BREAK_U_NATURALITY},
        {"ZeroS", VNC_MUTATION_ZERO_S},
        {"ScaleCoupling", VNC_MUTATION_SCALE_COUPLING},
        {"CorruptComposition", VNC_MUTATION_CORRUPT_COMPOSITION},
    };
    vnc_mutation mutation = VNC_MUTATION_BREAK_SPLIT;
    auto* mutate = app.add_subcommand("mutate", "write a deliberately broken copy of an instance");
    mutate->add_option("instance", path)->required();
    mutate->add_option("mutation", mutation)->required()->transform(CLI::CheckedTransformer(mutations));
    mutate->add_option("out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kMalformed;
    }

    if (*validate)
        return cmd_validate(path);
    if (*build)
        return cmd_build(path, out, force);
    if (*check)
        return cmd_check(path, flags.bits());
    if (*run)
        return cmd_run(path, run_flags.bits());
    if (*example)
        return cmd_example(name, out);
    return cmd_mutate(path, mutation, out);
}
