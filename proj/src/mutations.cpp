#include "vncore/instances.hpp"

#include <algorithm>

namespace vncore::instances {

using fincat::BasisId;
using fincat::ObjectId;

const char* to_string(Mutation m)
{
    switch (m) {
    case Mutation::BreakSplit: return "BreakSplit";
    case Mutation::BreakUNaturality: return "BreakUNaturality";
    case Mutation::ZeroS: return "ZeroS";
    case Mutation::ScaleCoupling: return "ScaleCoupling";
    case Mutation::CorruptComposition: return "CorruptComposition";
    }
    return "?";
}

std::optional<Mutation> mutation_from_string(std::string_view name)
{
    for (auto m : all_mutations())
        if (name == to_string(m))
            return m;
    return std::nullopt;
}

std::vector<Mutation> all_mutations()
{
    return {Mutation::BreakSplit, Mutation::BreakUNaturality, Mutation::ZeroS, Mutation::ScaleCoupling,
            Mutation::CorruptComposition};
}

const char* designated_checker(Mutation m)
{
    switch (m) {
    case Mutation::BreakSplit: return "validate_U";
    case Mutation::BreakUNaturality: return "validate_generator_data";
    case Mutation::ZeroS: return "check_vn_axiom";
    case Mutation::ScaleCoupling: return "validate_generator_data";
    case Mutation::CorruptComposition: return "validate_category";
    }
    return "?";
}

const char* expected_failure(Mutation m)
{
    switch (m) {
    case Mutation::BreakSplit: return "U.splitness";
    case Mutation::BreakUNaturality: return "generators.tau_diagram";
    case Mutation::ZeroS: return "vn_axiom";
    case Mutation::ScaleCoupling: return "generators.tau_diagram";
    case Mutation::CorruptComposition: return "category.associativity";
    }
    return "?";
}

namespace {

bool is_identity_basis(const fincat::CatPresentation& cat, BasisId b)
{
    const auto& bm = cat.basis(b);
    if (bm.source != bm.target)
        return false;
    const auto& id = cat.identity_coeffs(bm.source);
    for (std::size_t t = 0; t < id.size(); ++t)
        if ((t == bm.slot) != (sgn(id[t]) != 0) || (t == bm.slot && id[t] != 1))
            return false;
    return !id.empty();
}

void break_split(Instance& inst)
{
    const Field& k = inst.cat.field();
    for (auto& [pair, i] : inst.U.i) {
        auto product = inst.cat.tensor_object(pair.first, pair.second);
        if (product && inst.cat.u_dim(*product) > 0) {
            i = i.scaled(k.inv(k.from_int(2)));
            inst.meta["mutated_at"] = inst.cat.object(pair.first).name + "," + inst.cat.object(pair.second).name;
            return;
        }
    }
    raise(ErrorCode::InvalidArgument, "BreakSplit needs a nonzero tensor pair");
}

void break_u(Instance& inst)
{
    const auto& cat = inst.cat;
    const auto& gens = inst.gen.generators;
    if (gens.empty())
        raise(ErrorCode::InvalidArgument, "BreakUNaturality needs a generator");
    // Prefer a generator with a morphism to another generator, where naturality itself breaks.
    ObjectId chosen = gens.front();
    for (auto a : gens)
        if (std::any_of(gens.begin(), gens.end(), [&](ObjectId b) { return b != a && cat.hom_dim(a, b) > 0; })) {
            chosen = a;
            break;
        }
    auto& u = inst.gen.u.at(chosen);
    u = u.scaled(cat.field().from_int(2));
    inst.meta["mutated_at"] = cat.object(chosen).name;
}

void scale_coupling(Instance& inst)
{
    const Field& k = inst.cat.field();
    for (auto& [a, e] : inst.gen.e)
        e = inst.cat.scale(e, k.from_int(2));
}

void corrupt_composition(Instance& inst)
{
    const auto& table = inst.cat.composition_table();
    std::vector<std::uint64_t> keys;
    for (const auto& [key, coeffs] : table) {
        auto [g, f] = inst.cat.unpack(key);
        if (is_identity_basis(inst.cat, g) || is_identity_basis(inst.cat, f))
            continue;
        if (std::any_of(coeffs.begin(), coeffs.end(), [](const la::Scalar& c) { return sgn(c) != 0; }))
            keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    const Field& k = inst.cat.field();
    for (auto key : keys) {
        auto [g, f] = inst.cat.unpack(key);
        auto coeffs = table.at(key);
        auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const la::Scalar& c) { return sgn(c) != 0; });
        *it = k.mul(*it, k.from_int(2));
        fincat::CatPresentation trial = inst.cat;
        trial.set_composition(g, f, coeffs);
        if (fincat::validate_category(trial).has(expected_failure(Mutation::CorruptComposition),
                                                  CheckStatus::Fail)) {
            inst.meta["mutated_at"] = inst.cat.basis(g).name + " . " + inst.cat.basis(f).name;
            inst.cat = std::move(trial);
            return;
        }
    }
    raise(ErrorCode::InvalidArgument, "no composition constant whose corruption breaks associativity");
}

} // namespace

Instance mutate_instance(const Instance& base, Mutation m)
{
    Instance out = base;
    switch (m) {
    case Mutation::BreakSplit: break_split(out); break;
    case Mutation::BreakUNaturality: break_u(out); break;
    case Mutation::ZeroS: break;
    case Mutation::ScaleCoupling: scale_coupling(out); break;
    case Mutation::CorruptComposition: corrupt_composition(out); break;
    }
    out.meta["mutation"] = to_string(m);
    out.meta["designated_checker"] = designated_checker(m);
    out.meta["expected_failure"] = expected_failure(m);
    return out;
}

vn::VNCoreData mutate_core(const vn::VNCoreData& core, Mutation m)
{
    if (m != Mutation::ZeroS)
        raise(ErrorCode::InvalidArgument, std::string(to_string(m)) + " acts on instances, not cores");
    vn::VNCoreData out = core;
    out.S = Matrix(core.field, core.dim, core.dim);
    return out;
}

} // namespace vncore::instances
