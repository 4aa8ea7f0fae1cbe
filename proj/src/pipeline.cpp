#include "vncore/pipeline.hpp"

#include "vncore/coend.hpp"
#include "vncore/error.hpp"
#include "vncore/instances.hpp"

#include <set>

namespace vncore::pipeline {

namespace {

void append_prefixed(Report& into, const Report& from, const std::string& prefix)
{
    for (const auto& c : from.entries()) {
        switch (c.status) {
        case CheckStatus::Pass: into.pass(prefix + c.name, c.detail); break;
        case CheckStatus::Fail: into.fail(prefix + c.name, c.detail); break;
        case CheckStatus::Info: into.info(prefix + c.name, c.detail); break;
        }
    }
}

// Runs one stage; an exception becomes a failure line of that stage.
template <class F>
bool stage(Report& report, const char* name, F&& run)
{
    try {
        Report r = run();
        report.append(r);
        return r.passed();
    } catch (const Error& e) {
        report.fail(name, e.what());
        return false;
    }
}

void run_suite(Report& report, const vn::VNCoreData& core, const CheckOptions& options, const std::string& prefix)
{
    Report r = vn::check_shapes(core);
    append_prefixed(report, r, prefix);
    if (!r.passed())
        return;
    report.info(prefix + "core.dim", std::to_string(core.dim));
    append_prefixed(report, vn::check_semibialgebra(core), prefix);
    append_prefixed(report, vn::check_vn_axiom(core), prefix);
    if (core.has_unit)
        append_prefixed(report, vn::check_unitality(core), prefix);
    if (options.antipodal)
        append_prefixed(report, vn::check_antipodal(core), prefix);
    if (options.fusion)
        append_prefixed(report, vn::check_fusion_equation(core), prefix);
    if (options.partial_inverse)
        append_prefixed(report, vn::check_partial_inverse(core), prefix);
}

} // namespace

Report validate(const fincat::Instance& inst)
{
    Report report;
    const auto& cat = inst.cat;
    if (!stage(report, "category", [&] { return fincat::validate_category(cat); })) {
        report.info("skipped", "U, generators and density depend on the category");
        return report;
    }
    if (!stage(report, "U", [&] { return fincat::validate_U(cat, inst.U); })) {
        report.info("skipped", "generators and density depend on U");
        return report;
    }
    std::set<std::size_t> dims;
    for (auto a : inst.gen.generators)
        dims.insert(cat.u_dim(a));
    for (auto n : dims)
        stage(report, "E1_E2", [&] { return fincat::check_E1_E2(cat.field(), n); });
    if (!stage(report, "generators", [&] { return fincat::validate_generator_data(cat, inst.U, inst.gen); })) {
        report.info("skipped", "density depends on the generator data");
        return report;
    }
    stage(report, "density", [&] { return coend::density_check_all(cat, inst.U, inst.gen); });
    return report;
}

BuildResult build(const fincat::Instance& inst, bool force)
{
    BuildResult out{force ? Report{} : validate(inst), std::nullopt};
    if (!out.report.passed()) {
        out.report.info("build", "not attempted: validation failed");
        return out;
    }
    if (force)
        out.report.info("build", "validation skipped");
    try {
        auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
        out.report.info("coend.dim", std::to_string(E.dim()));
        out.report.append(coend::check_dinaturality(inst.cat, inst.U, inst.gen, E));
        auto core = vn::build_core(inst.cat, inst.U, inst.gen, E);
        out.report.pass("build", "mu, delta and S descend to E");
        auto m = inst.meta.find("mutation");
        if (m != inst.meta.end() && m->second == instances::to_string(instances::Mutation::ZeroS)) {
            core = instances::mutate_core(core, instances::Mutation::ZeroS);
            out.report.info("mutation", "ZeroS applied to S");
        }
        out.core = std::move(core);
    } catch (const Error& e) {
        out.report.fail("build", e.what());
    }
    return out;
}

Report check(const vn::VNCoreData& core, const CheckOptions& options)
{
    Report report;
    run_suite(report, core, options, "");
    if (options.complete_unit && report.passed()) {
        if (core.has_unit) {
            report.info("completed", "core already has a unit");
        } else {
            auto completed = vn::complete_with_unit(core);
            run_suite(report, completed, options, "completed.");
        }
    }
    return report;
}

} // namespace vncore::pipeline
