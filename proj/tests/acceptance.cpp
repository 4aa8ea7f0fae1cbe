// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "vncore/coend.hpp"
#include "vncore/core.hpp"
#include "vncore/error.hpp"
#include "vncore/instances.hpp"
#include "vncore/io.hpp"
#include "vncore/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace vncore;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why)
    {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
};

struct Built {
    fincat::Instance inst;
    Report validate_build;
    std::optional<vn::VNCoreData> core;
};

std::map<std::string, Built> build_all()
{
    std::map<std::string, Built> out;
    for (const auto& name : instances::example_names()) {
        auto inst = instances::example(name);
        auto b = pipeline::build(inst);
        out.emplace(name, Built{std::move(inst), std::move(b.report), std::move(b.core)});
    }
    return out;
}

// validate -> build -> check with every flag.
struct FullRun {
    int exit_code = 2;
    std::string report;
    std::string core_file;
};

FullRun full_pipeline(const fincat::Instance& inst)
{
    FullRun run;
    auto b = pipeline::build(inst);
    run.report = b.report.text();
    if (!b.report.passed() || !b.core) {
        run.exit_code = 1;
        return run;
    }
    Report checks = pipeline::check(*b.core, pipeline::CheckOptions::all());
    run.report += checks.text();
    run.core_file = io::write_core(*b.core, b.report);
    run.exit_code = pipeline::exit_code(checks);
    return run;
}

Outcome criterion_theorem()
{
    Outcome o;
    std::ostringstream times;
    for (const auto& name : instances::example_names()) {
        auto start = Clock::now();
        auto inst = instances::example(name);
        auto b = pipeline::build(inst);
        o.require(b.report.passed() && b.core.has_value(), name + ": validate/build failed");
        if (!b.core)
            continue;
        Report checks = pipeline::check(*b.core, pipeline::CheckOptions::all());
        const double t = seconds_since(start);
        o.require(pipeline::exit_code(checks) == 0, name + ": check exit " + std::to_string(pipeline::exit_code(checks)));
        o.require(checks.has("vn_axiom", CheckStatus::Pass), name + ": vn_axiom not exact");
        // The axiom once more, written out as matrices on E.
        const auto& c = *b.core;
        const auto id = la::Matrix::identity(c.field, c.dim);
        const auto lhs = c.mu * la::kron(c.mu, id) * la::kron(id, la::kron(c.S, id)) * la::kron(id, c.delta) * c.delta;
        o.require(lhs == id, name + ": mu(mu(x)1)(1(x)S(x)1)(1(x)delta)delta != 1");
        o.require(t < 5.0, name + ": " + fixed(t) + " s exceeds 5 s");
        times << (times.tellp() > 0 ? ", " : "") << name << " " << fixed(t) << " s";
    }
    if (o.ok)
        o.detail = times.str();
    return o;
}

Outcome criterion_dimensions(std::map<std::string, Built>& all)
{
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> expected{{"z2", 2}, {"z3-f7", 3}, {"s3", 6}};
    std::ostringstream d;
    for (const auto& [name, dim] : expected) {
        const auto& b = all.at(name);
        auto E = coend::compute_endv(b.inst.cat, b.inst.U, b.inst.gen);
        const std::size_t ref = oracle::coend_dim(b.inst);
        o.require(E.dim() == dim, name + ": dim E = " + std::to_string(E.dim()));
        o.require(ref == dim, name + ": oracle dim = " + std::to_string(ref));
        d << (d.tellp() > 0 ? ", " : "") << name << " " << E.dim() << " (oracle " << ref << ")";
    }
    if (o.ok)
        o.detail = d.str();
    return o;
}

Outcome criterion_laws(std::map<std::string, Built>& all)
{
    Outcome o;
    double s3_fusion = 0;
    for (auto& [name, b] : all) {
        if (!b.core) {
            o.require(false, name + ": no core");
            continue;
        }
        const auto& c = *b.core;
        o.require(vn::check_semibialgebra(c).passed(), name + ": semibialgebra laws");
        auto start = Clock::now();
        Report fusion = vn::check_fusion_equation(c);
        const double t = seconds_since(start);
        if (name == "s3") {
            s3_fusion = t;
            o.require(c.dim * c.dim * c.dim == 216, "s3: triple tensor is not 216-dimensional");
        }
        o.require(fusion.has("fusion.equation", CheckStatus::Pass), name + ": fusion equation");
        o.require(vn::check_partial_inverse(c).has("partial_inverse.VWV", CheckStatus::Pass), name + ": VWV = V");
    }
    o.require(s3_fusion < 10.0, "s3 fusion check took " + fixed(s3_fusion) + " s");
    if (o.ok)
        o.detail = "all cores; s3 fusion on dim 216 in " + fixed(s3_fusion) + " s";
    return o;
}

Outcome criterion_unit(std::map<std::string, Built>& all)
{
    Outcome o;
    for (auto& [name, b] : all) {
        if (!b.core) {
            o.require(false, name + ": no core");
            continue;
        }
        Report r = pipeline::check(*b.core, pipeline::CheckOptions::all());
        for (const auto& e : r.entries()) {
            if (e.status != CheckStatus::Pass || e.name.rfind("completed.", 0) == 0)
                continue;
            o.require(r.has("completed." + e.name, CheckStatus::Pass), name + ": completion loses " + e.name);
        }
        for (const char* u : {"left", "right", "delta", "S"})
            o.require(r.has(std::string("completed.unitality.") + u, CheckStatus::Pass),
                      name + ": unitality." + u);
        auto c = vn::complete_with_unit(*b.core);
        const auto& one = *c.unit;
        o.require(c.S * one == one, name + ": S(1) != 1");
        o.require(c.delta * one == la::kron(one, one), name + ": delta(1) != 1 (x) 1");
        o.require(c.dim == b.core->dim + 1, name + ": completed dimension");
    }
    if (o.ok)
        o.detail = "every passing check survives; unitality, S(1) = 1, delta(1) = 1 (x) 1 exact";
    return o;
}

Outcome criterion_mutations(std::map<std::string, Built>& all)
{
    Outcome o;
    std::size_t caught = 0;
    for (auto& [name, b] : all)
        for (auto m : instances::all_mutations()) {
            const std::string tag = name + "/" + instances::to_string(m);
            auto mutant = instances::mutate_instance(b.inst, m);
            // Round-trip through the file format, as the command-line tool would.
            mutant = io::read_instance(io::write_instance(mutant));
            const std::string checker = instances::designated_checker(m);
            const std::string failure = instances::expected_failure(m);
            Report r;
            if (checker == "validate_category")
                r = fincat::validate_category(mutant.cat);
            else if (checker == "validate_U")
                r = fincat::validate_U(mutant.cat, mutant.U);
            else if (checker == "validate_generator_data")
                r = fincat::validate_generator_data(mutant.cat, mutant.U, mutant.gen);
            else {
                auto built = pipeline::build(mutant);
                if (built.core)
                    r = vn::check_vn_axiom(*built.core);
            }
            o.require(r.has(failure, CheckStatus::Fail), tag + ": " + checker + " did not fail " + failure);
            FullRun run = full_pipeline(mutant);
            o.require(run.exit_code == 1, tag + ": full pipeline exit " + std::to_string(run.exit_code));
            if (r.has(failure, CheckStatus::Fail) && run.exit_code == 1)
                ++caught;
        }
    if (o.ok)
        o.detail = std::to_string(caught) + " mutants caught, each by its designated checker with exit 1";
    return o;
}

Outcome criterion_conditions(std::map<std::string, Built>& all)
{
    Outcome o;
    std::size_t objects = 0, non_generators = 0;
    for (auto& [name, b] : all) {
        const auto& inst = b.inst;
        o.require(fincat::validate_generator_data(inst.cat, inst.U, inst.gen).passed(), name + ": generator data");
        std::set<std::size_t> dims;
        for (auto a : inst.gen.generators)
            dims.insert(inst.cat.u_dim(a));
        for (auto n : dims)
            o.require(fincat::check_E1_E2(inst.cat.field(), n).passed(), name + ": E1/E2 in dim " + std::to_string(n));
        for (fincat::ObjectId c = 0; c < inst.cat.objects().size(); ++c) {
            o.require(coend::density_check(inst.cat, inst.U, inst.gen, c).passed(),
                      name + ": density of " + inst.cat.object(c).name);
            ++objects;
            if (!inst.gen.is_generator(c))
                ++non_generators;
        }
    }
    if (o.ok)
        o.detail = std::to_string(objects) + " objects dense, " + std::to_string(non_generators) + " of them non-generators";
    return o;
}

Outcome criterion_resolutions(std::map<std::string, Built>& all)
{
    Outcome o;
    std::mt19937 rng(1729);
    std::size_t objects = 0, samples = 0;
    for (auto& [name, b] : all) {
        const auto& inst = b.inst;
        auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
        for (const auto& [c, list] : inst.gen.resolutions) {
            const std::size_t n = inst.cat.u_dim(c);
            if (n == 0)
                continue;
            o.require(list.size() >= 2, name + ": one resolution for " + inst.cat.object(c).name);
            if (list.size() < 2)
                continue;
            o.require(list[0].label != list[1].label, name + ": resolutions not distinct");
            auto a = coend::cop_via(inst.cat, inst.U, E, c, list[0]);
            auto bb = coend::cop_via(inst.cat, inst.U, E, c, list[1]);
            for (int t = 0; t < 20; ++t) {
                auto v = oracle::random_matrix(inst.cat.field(), n * n, 1, rng, 9);
                o.require(a * v == bb * v, name + ": resolutions disagree on " + inst.cat.object(c).name);
                ++samples;
            }
            ++objects;
        }
    }
    if (o.ok)
        o.detail = std::to_string(objects) + " objects, " + std::to_string(samples) + " random elements";
    return o;
}

Outcome criterion_determinism()
{
    Outcome o;
    for (const auto& name : instances::example_names()) {
        const std::string file = io::write_instance(instances::example(name));
        FullRun first = full_pipeline(io::read_instance(file));
        FullRun second = full_pipeline(io::read_instance(file));
        o.require(first.report == second.report, name + ": reports differ");
        o.require(first.core_file == second.core_file, name + ": core files differ");
        o.require(io::write_instance(instances::example(name)) == file, name + ": instance files differ");
    }
    if (o.ok)
        o.detail = "reports and core files byte-identical across two runs";
    return o;
}

} // namespace

int main()
{
    auto all = build_all();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 theorem as a machine check", criterion_theorem},
        {"2 coend dimensions", [&] { return criterion_dimensions(all); }},
        {"3 semibialgebra, fusion, VWV", [&] { return criterion_laws(all); }},
        {"4 unit completion", [&] { return criterion_unit(all); }},
        {"5 checker sensitivity", [&] { return criterion_mutations(all); }},
        {"6 generator conditions, E1/E2, density", [&] { return criterion_conditions(all); }},
        {"7 resolution independence", [&] { return criterion_resolutions(all); }},
        {"8 determinism", criterion_determinism},
    };
    int failed = 0;
    for (const auto& [title, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%s] %s\n", o.ok ? "PASS" : "FAIL", title, o.detail.c_str());
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
