#include "vncore/fincat.hpp"

#include "vncore/error.hpp"

#include <algorithm>
#include <set>

namespace vncore::fincat {

using la::kron;

// ---------------------------------------------------------------- CatPresentation

ObjectId CatPresentation::add_object(std::string name, std::size_t u_dim)
{
    if (object_index_.count(name))
        raise(ErrorCode::Malformed, "duplicate object '" + name + "'");
    ObjectId id = objects_.size();
    object_index_[name] = id;
    objects_.push_back({std::move(name), u_dim});
    return id;
}

BasisId CatPresentation::set_hom(ObjectId source, ObjectId target, const std::vector<std::string>& names)
{
    if (source >= objects_.size() || target >= objects_.size())
        raise(ErrorCode::Malformed, "hom between unknown objects");
    auto& slot = homs_[{source, target}];
    if (!slot.empty())
        raise(ErrorCode::Malformed, "hom basis declared twice for (" + objects_[source].name + ", " +
                                        objects_[target].name + ")");
    BasisId first = basis_.size();
    for (const auto& n : names) {
        if (basis_index_.count(n))
            raise(ErrorCode::Malformed, "duplicate basis morphism '" + n + "'");
        basis_index_[n] = basis_.size();
        slot.push_back(basis_.size());
        basis_.push_back({n, source, target, slot.size() - 1});
    }
    return first;
}

void CatPresentation::set_composition(BasisId g, BasisId f, std::vector<Scalar> coeffs)
{
    const auto& bg = basis_.at(g);
    const auto& bf = basis_.at(f);
    if (bg.source != bf.target)
        raise(ErrorCode::Malformed, "composition of non-composable " + bg.name + " . " + bf.name);
    if (coeffs.size() != hom_dim(bf.source, bg.target))
        raise(ErrorCode::Malformed, "composition " + bg.name + " . " + bf.name + " has wrong length");
    for (auto& c : coeffs)
        c = field_.from_rational(c);
    composition_[key(g, f)] = std::move(coeffs);
}

void CatPresentation::set_identity(ObjectId a, std::vector<Scalar> coeffs)
{
    if (coeffs.size() != hom_dim(a, a))
        raise(ErrorCode::Malformed, "identity of " + objects_.at(a).name + " has wrong length");
    for (auto& c : coeffs)
        c = field_.from_rational(c);
    identities_[a] = std::move(coeffs);
}

void CatPresentation::set_tensor_object(ObjectId a, ObjectId b, ObjectId product)
{
    if (a >= objects_.size() || b >= objects_.size() || product >= objects_.size())
        raise(ErrorCode::Malformed, "tensor table names an unknown object");
    tensor_objects_[{a, b}] = product;
}

void CatPresentation::set_tensor_morphism(BasisId f, BasisId g, std::vector<Scalar> coeffs)
{
    const auto& bf = basis_.at(f);
    const auto& bg = basis_.at(g);
    auto src = tensor_object(bf.source, bg.source);
    auto dst = tensor_object(bf.target, bg.target);
    if (!src || !dst)
        raise(ErrorCode::Malformed, "tensor morphism " + bf.name + " (x) " + bg.name + " between untabulated objects");
    if (coeffs.size() != hom_dim(*src, *dst))
        raise(ErrorCode::Malformed, "tensor morphism " + bf.name + " (x) " + bg.name + " has wrong length");
    for (auto& c : coeffs)
        c = field_.from_rational(c);
    tensor_morphisms_[key(f, g)] = std::move(coeffs);
}

std::optional<ObjectId> CatPresentation::find_object(const std::string& name) const
{
    auto it = object_index_.find(name);
    if (it == object_index_.end())
        return std::nullopt;
    return it->second;
}

ObjectId CatPresentation::object_id(const std::string& name) const
{
    auto id = find_object(name);
    if (!id)
        raise(ErrorCode::Malformed, "unknown object '" + name + "'");
    return *id;
}

std::optional<BasisId> CatPresentation::find_basis(const std::string& name) const
{
    auto it = basis_index_.find(name);
    if (it == basis_index_.end())
        return std::nullopt;
    return it->second;
}

std::span<const BasisId> CatPresentation::hom(ObjectId source, ObjectId target) const
{
    auto it = homs_.find({source, target});
    if (it == homs_.end())
        return {};
    return it->second;
}

std::vector<BasisId> CatPresentation::basis_from(ObjectId source) const
{
    std::vector<BasisId> out;
    for (const auto& b : basis_)
        if (b.source == source)
            out.push_back(&b - basis_.data());
    return out;
}

std::vector<BasisId> CatPresentation::basis_into(ObjectId target) const
{
    std::vector<BasisId> out;
    for (const auto& b : basis_)
        if (b.target == target)
            out.push_back(&b - basis_.data());
    return out;
}

const std::vector<Scalar>* CatPresentation::composition(BasisId g, BasisId f) const
{
    auto it = composition_.find(key(g, f));
    return it == composition_.end() ? nullptr : &it->second;
}

const std::vector<Scalar>& CatPresentation::identity_coeffs(ObjectId a) const
{
    static const std::vector<Scalar> none;
    auto it = identities_.find(a);
    return it == identities_.end() ? none : it->second;
}

std::optional<ObjectId> CatPresentation::tensor_object(ObjectId a, ObjectId b) const
{
    auto it = tensor_objects_.find({a, b});
    if (it == tensor_objects_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<Scalar>* CatPresentation::tensor_morphism(BasisId f, BasisId g) const
{
    auto it = tensor_morphisms_.find(key(f, g));
    return it == tensor_morphisms_.end() ? nullptr : &it->second;
}

std::pair<BasisId, BasisId> CatPresentation::unpack(std::uint64_t k) const
{
    return {static_cast<BasisId>(k >> 32), static_cast<BasisId>(k & 0xffffffffu)};
}

Morphism CatPresentation::zero(ObjectId source, ObjectId target) const
{
    return {source, target, std::vector<Scalar>(hom_dim(source, target))};
}

Morphism CatPresentation::basis_morphism(BasisId id) const
{
    const auto& b = basis_.at(id);
    Morphism m = zero(b.source, b.target);
    m.coeffs[b.slot] = 1;
    return m;
}

Morphism CatPresentation::identity(ObjectId a) const
{
    auto it = identities_.find(a);
    if (it == identities_.end()) {
        if (hom_dim(a, a) == 0)
            return zero(a, a);
        raise(ErrorCode::Malformed, "no identity tabulated for " + objects_.at(a).name);
    }
    return {a, a, it->second};
}

Morphism CatPresentation::add(const Morphism& a, const Morphism& b) const
{
    if (a.source != b.source || a.target != b.target)
        raise(ErrorCode::InvalidArgument, "adding morphisms with different endpoints");
    Morphism m = a;
    for (std::size_t k = 0; k < m.coeffs.size(); ++k)
        m.coeffs[k] = field_.add(m.coeffs[k], b.coeffs[k]);
    return m;
}

Morphism CatPresentation::scale(const Morphism& a, const Scalar& s) const
{
    Morphism m = a;
    for (auto& c : m.coeffs)
        c = field_.mul(c, s);
    return m;
}

Morphism CatPresentation::compose(const Morphism& g, const Morphism& f) const
{
    if (g.source != f.target)
        raise(ErrorCode::InvalidArgument, "composing non-composable morphisms");
    Morphism out = zero(f.source, g.target);
    if (out.coeffs.empty())
        return out;
    auto gb = hom(g.source, g.target);
    auto fb = hom(f.source, f.target);
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (sgn(g.coeffs[i]) == 0)
            continue;
        for (std::size_t j = 0; j < fb.size(); ++j) {
            if (sgn(f.coeffs[j]) == 0)
                continue;
            const auto* c = composition(gb[i], fb[j]);
            if (!c)
                raise(ErrorCode::Malformed,
                      "missing composition " + basis_[gb[i]].name + " . " + basis_[fb[j]].name);
            Scalar w = field_.mul(g.coeffs[i], f.coeffs[j]);
            for (std::size_t k = 0; k < c->size(); ++k)
                if (sgn((*c)[k]) != 0)
                    field_.fma(out.coeffs[k], w, (*c)[k]);
        }
    }
    return out;
}

Morphism CatPresentation::tensor(const Morphism& f, const Morphism& g) const
{
    auto src = tensor_object(f.source, g.source);
    auto dst = tensor_object(f.target, g.target);
    if (!src || !dst)
        raise(ErrorCode::Malformed, "tensor of morphisms between untabulated objects");
    Morphism out = zero(*src, *dst);
    if (out.coeffs.empty())
        return out;
    auto fb = hom(f.source, f.target);
    auto gb = hom(g.source, g.target);
    for (std::size_t i = 0; i < fb.size(); ++i) {
        if (sgn(f.coeffs[i]) == 0)
            continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (sgn(g.coeffs[j]) == 0)
                continue;
            const auto* c = tensor_morphism(fb[i], gb[j]);
            if (!c)
                raise(ErrorCode::Malformed,
                      "missing tensor morphism " + basis_[fb[i]].name + " (x) " + basis_[gb[j]].name);
            Scalar w = field_.mul(f.coeffs[i], g.coeffs[j]);
            for (std::size_t k = 0; k < c->size(); ++k)
                if (sgn((*c)[k]) != 0)
                    field_.fma(out.coeffs[k], w, (*c)[k]);
        }
    }
    return out;
}

std::string CatPresentation::describe(BasisId id) const
{
    const auto& b = basis_.at(id);
    return b.name + ":" + objects_[b.source].name + "->" + objects_[b.target].name;
}

// ---------------------------------------------------------------- U and generators

Matrix UFunctorData::apply(const CatPresentation& cat, const Morphism& m) const
{
    Matrix out(cat.field(), cat.u_dim(m.target), cat.u_dim(m.source));
    auto basis = cat.hom(m.source, m.target);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (sgn(m.coeffs[k]) == 0)
            continue;
        auto it = on_basis.find(basis[k]);
        if (it == on_basis.end())
            raise(ErrorCode::Malformed, "U undefined on " + cat.basis(basis[k]).name);
        out = out + it->second.scaled(m.coeffs[k]);
    }
    return out;
}

const Matrix& UFunctorData::r_at(ObjectId a, ObjectId b) const
{
    auto it = r.find({a, b});
    if (it == r.end())
        raise(ErrorCode::Malformed, "no r for tensor pair");
    return it->second;
}

const Matrix& UFunctorData::i_at(ObjectId a, ObjectId b) const
{
    auto it = i.find({a, b});
    if (it == i.end())
        raise(ErrorCode::Malformed, "no i for tensor pair");
    return it->second;
}

bool GeneratorData::is_generator(ObjectId id) const
{
    return std::find(generators.begin(), generators.end(), id) != generators.end();
}

std::vector<ObjectId> required_resolution_objects(const CatPresentation& cat, const GeneratorData& gen)
{
    std::set<ObjectId> needed;
    for (auto a : gen.generators)
        for (auto b : gen.generators)
            if (auto ab = cat.tensor_object(a, b))
                needed.insert(*ab);
    for (auto a : gen.generators) {
        auto star = gen.star_obj.find(a);
        if (star == gen.star_obj.end())
            continue;
        if (auto aa = cat.tensor_object(a, star->second))
            if (auto t = cat.tensor_object(*aa, a))
                needed.insert(*t);
    }
    std::vector<ObjectId> out;
    for (auto c : needed)
        if (!gen.is_generator(c))
            out.push_back(c);
    return out;
}

namespace {

std::string pair_name(const CatPresentation& cat, ObjectId a, ObjectId b)
{
    return "(" + cat.object(a).name + "," + cat.object(b).name + ")";
}

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

// ---------------------------------------------------------------- validate_category

Report validate_category(const CatPresentation& cat)
{
    Report report;
    FailureLog identity_log("category.identity");
    FailureLog unit_log("category.unit_law");
    FailureLog assoc_log("category.associativity");
    FailureLog tensor_id_log("category.tensor_identity");
    FailureLog tensor_log("category.tensor_functoriality");

    const auto n_obj = cat.objects().size();
    for (ObjectId a = 0; a < n_obj; ++a)
        if (cat.hom_dim(a, a) > 0 && cat.identity_coeffs(a).size() != cat.hom_dim(a, a))
            identity_log.add("no identity for " + cat.object(a).name);
    identity_log.flush(report);
    if (identity_log.count() > 0)
        return report;

    std::vector<std::vector<BasisId>> into(n_obj), from(n_obj);
    for (BasisId b = 0; b < cat.basis().size(); ++b) {
        into[cat.basis(b).target].push_back(b);
        from[cat.basis(b).source].push_back(b);
    }

    for (BasisId b = 0; b < cat.basis().size(); ++b) {
        const auto& bm = cat.basis(b);
        Morphism f = cat.basis_morphism(b);
        try {
            if (!(cat.compose(cat.identity(bm.target), f) == f))
                unit_log.add("id . " + cat.describe(b) + " != " + bm.name);
            if (!(cat.compose(f, cat.identity(bm.source)) == f))
                unit_log.add(cat.describe(b) + " . id != " + bm.name);
        } catch (const Error& e) {
            unit_log.add(e.what());
        }
    }
    unit_log.flush(report);

    std::size_t triples = 0;
    for (BasisId g = 0; g < cat.basis().size(); ++g) {
        const auto& bg = cat.basis(g);
        Morphism gm = cat.basis_morphism(g);
        for (BasisId h : from[bg.target]) {
            Morphism hm = cat.basis_morphism(h);
            Morphism hg(cat.zero(bg.source, cat.basis(h).target));
            try {
                hg = cat.compose(hm, gm);
            } catch (const Error& e) {
                assoc_log.add(e.what());
                continue;
            }
            for (BasisId f : into[bg.source]) {
                ++triples;
                Morphism fm = cat.basis_morphism(f);
                try {
                    if (!(cat.compose(hg, fm) == cat.compose(hm, cat.compose(gm, fm))))
                        assoc_log.add("(" + cat.basis(h).name + " . " + bg.name + ") . " + cat.basis(f).name +
                                      " != " + cat.basis(h).name + " . (" + bg.name + " . " +
                                      cat.basis(f).name + ")");
                } catch (const Error& e) {
                    assoc_log.add(e.what());
                }
            }
        }
    }
    assoc_log.flush(report, std::to_string(triples) + " basis triples");

    const auto& entries = cat.tensor_objects();
    for (const auto& [pair, product] : entries) {
        try {
            if (!(cat.tensor(cat.identity(pair.first), cat.identity(pair.second)) == cat.identity(product)))
                tensor_id_log.add("id (x) id != id on " + pair_name(cat, pair.first, pair.second));
        } catch (const Error& e) {
            tensor_id_log.add(e.what());
        }
    }
    tensor_id_log.flush(report);

    // (f (x) g) . (f' (x) g') == (f . f') (x) (g . g') over chains of tabulated pairs.
    std::size_t checked = 0;
    for (const auto& [p1, z1] : entries)
        for (const auto& [p2, z2] : entries)
            for (const auto& [p3, z3] : entries) {
                auto f1s = cat.hom(p1.first, p2.first);
                auto g1s = cat.hom(p1.second, p2.second);
                auto f2s = cat.hom(p2.first, p3.first);
                auto g2s = cat.hom(p2.second, p3.second);
                if (f1s.empty() || g1s.empty() || f2s.empty() || g2s.empty())
                    continue;
                for (auto f1 : f1s)
                    for (auto g1 : g1s)
                        for (auto f2 : f2s)
                            for (auto g2 : g2s) {
                                ++checked;
                                try {
                                    auto F1 = cat.basis_morphism(f1), G1 = cat.basis_morphism(g1);
                                    auto F2 = cat.basis_morphism(f2), G2 = cat.basis_morphism(g2);
                                    auto lhs = cat.compose(cat.tensor(F2, G2), cat.tensor(F1, G1));
                                    auto rhs = cat.tensor(cat.compose(F2, F1), cat.compose(G2, G1));
                                    if (!(lhs == rhs))
                                        tensor_log.add("(" + cat.basis(f2).name + "(x)" + cat.basis(g2).name +
                                                       ") . (" + cat.basis(f1).name + "(x)" +
                                                       cat.basis(g1).name + ")");
                                } catch (const Error& e) {
                                    tensor_log.add(e.what());
                                }
                            }
            }
    tensor_log.flush(report, std::to_string(checked) + " composable tensor pairs");
    return report;
}

// ---------------------------------------------------------------- validate_U

Report validate_U(const CatPresentation& cat, const UFunctorData& U)
{
    Report report;
    const Field& k = cat.field();
    FailureLog shape_log("U.shapes");
    for (BasisId b = 0; b < cat.basis().size(); ++b) {
        const auto& bm = cat.basis(b);
        auto it = U.on_basis.find(b);
        if (it == U.on_basis.end())
            shape_log.add("U undefined on " + bm.name);
        else if (it->second.rows() != cat.u_dim(bm.target) || it->second.cols() != cat.u_dim(bm.source))
            shape_log.add("U(" + bm.name + ") has shape " + shape(it->second));
    }
    for (const auto& [pair, product] : cat.tensor_objects()) {
        std::size_t left = cat.u_dim(pair.first) * cat.u_dim(pair.second);
        std::size_t right = cat.u_dim(product);
        auto r = U.r.find(pair);
        auto i = U.i.find(pair);
        if (r == U.r.end() || r->second.rows() != right || r->second.cols() != left)
            shape_log.add("r missing or misshapen at " + pair_name(cat, pair.first, pair.second));
        if (i == U.i.end() || i->second.rows() != left || i->second.cols() != right)
            shape_log.add("i missing or misshapen at " + pair_name(cat, pair.first, pair.second));
    }
    shape_log.flush(report);
    if (shape_log.count() > 0)
        return report;

    FailureLog identity_log("U.identity");
    for (ObjectId a = 0; a < cat.objects().size(); ++a) {
        auto id = U.apply(cat, cat.identity(a));
        if (!id.is_identity() && cat.u_dim(a) > 0)
            identity_log.add("U(id_" + cat.object(a).name + ") != 1");
    }
    identity_log.flush(report);

    FailureLog func_log("U.functoriality");
    std::vector<std::uint64_t> keys;
    keys.reserve(cat.composition_table().size());
    for (const auto& [key, coeffs] : cat.composition_table())
        keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (auto key : keys) {
        auto [g, f] = cat.unpack(key);
        const auto& bf = cat.basis(f);
        const auto& bg = cat.basis(g);
        Morphism composite{bf.source, bg.target, cat.composition_table().at(key)};
        if (!(U.on_basis.at(g) * U.on_basis.at(f) == U.apply(cat, composite)))
            func_log.add("U(" + bg.name + " . " + bf.name + ") != U(" + bg.name + ") U(" + bf.name + ")");
    }
    func_log.flush(report, std::to_string(keys.size()) + " composites");

    FailureLog split_log("U.splitness");
    for (const auto& [pair, product] : cat.tensor_objects())
        if (!(U.r.at(pair) * U.i.at(pair)).is_identity() && cat.u_dim(product) > 0)
            split_log.add("r i != 1 at " + pair_name(cat, pair.first, pair.second));
    split_log.flush(report);

    FailureLog nat_r("U.naturality_r");
    FailureLog nat_i("U.naturality_i");
    for (const auto& [p1, z1] : cat.tensor_objects())
        for (const auto& [p2, z2] : cat.tensor_objects())
            for (auto f : cat.hom(p1.first, p2.first))
                for (auto g : cat.hom(p1.second, p2.second)) {
                    Matrix fg = kron(U.on_basis.at(f), U.on_basis.at(g));
                    Matrix tens(k, 0, 0);
                    try {
                        tens = U.apply(cat, cat.tensor(cat.basis_morphism(f), cat.basis_morphism(g)));
                    } catch (const Error& e) {
                        nat_r.add(e.what());
                        continue;
                    }
                    std::string w = cat.basis(f).name + " (x) " + cat.basis(g).name;
                    if (!(tens * U.r.at(p1) == U.r.at(p2) * fg))
                        nat_r.add(w);
                    if (!(U.i.at(p2) * tens == fg * U.i.at(p1)))
                        nat_i.add(w);
                }
    nat_r.flush(report);
    nat_i.flush(report);
    return report;
}

// ---------------------------------------------------------------- validate_generator_data

Matrix triple_r(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId a)
{
    ObjectId star = gen.star_obj.at(a);
    auto aa = cat.tensor_object(a, star);
    if (!aa || !cat.tensor_object(*aa, a))
        raise(ErrorCode::Malformed, "triple (A (x) A*) (x) A not tabulated for " + cat.object(a).name);
    const Field& k = cat.field();
    return U.r_at(*aa, a) * kron(U.r_at(a, star), Matrix::identity(k, cat.u_dim(a)));
}

Matrix triple_i(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId a)
{
    ObjectId star = gen.star_obj.at(a);
    auto aa = cat.tensor_object(a, star);
    if (!aa || !cat.tensor_object(*aa, a))
        raise(ErrorCode::Malformed, "triple (A (x) A*) (x) A not tabulated for " + cat.object(a).name);
    const Field& k = cat.field();
    return kron(U.i_at(a, star), Matrix::identity(k, cat.u_dim(a))) * U.i_at(*aa, a);
}

Report validate_generator_data(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen)
{
    Report report;
    const Field& k = cat.field();

    FailureLog structure("generators.structure");
    for (auto a : gen.generators) {
        const std::string& name = cat.object(a).name;
        auto star = gen.star_obj.find(a);
        if (star == gen.star_obj.end() || !gen.is_generator(star->second)) {
            structure.add("antipode of " + name + " is not a generator");
            continue;
        }
        auto u = gen.u.find(a);
        if (u == gen.u.end() || u->second.rows() != cat.u_dim(a) || u->second.cols() != cat.u_dim(star->second))
            structure.add("u_" + name + " missing or misshapen");
        auto aa = cat.tensor_object(a, star->second);
        auto triple = aa ? cat.tensor_object(*aa, a) : std::nullopt;
        if (!triple) {
            structure.add("(A (x) A*) (x) A not tabulated for " + name);
            continue;
        }
        auto e = gen.e.find(a);
        if (e == gen.e.end() || e->second.source != *triple || e->second.target != a ||
            e->second.coeffs.size() != cat.hom_dim(*triple, a))
            structure.add("e_" + name + " missing or has wrong endpoints");
    }
    for (const auto& [c, list] : gen.resolutions)
        for (const auto& res : list)
            for (const auto& t : res.terms)
                if (!gen.is_generator(t.source) || t.map.source != t.source || t.map.target != c ||
                    t.map.coeffs.size() != cat.hom_dim(t.source, c) || t.lift.rows() != cat.u_dim(t.source) ||
                    t.lift.cols() != cat.u_dim(c))
                    structure.add("resolution '" + res.label + "' of " + cat.object(c).name + " is malformed");
    structure.flush(report);
    if (structure.count() > 0)
        return report;

    // Antipode functor on generator morphisms.
    FailureLog star_log("generators.star_functor");
    auto star_of = [&](const Morphism& m) {
        ObjectId s = gen.star_obj.at(m.target), t = gen.star_obj.at(m.source);
        Morphism out = cat.zero(s, t);
        auto basis = cat.hom(m.source, m.target);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (sgn(m.coeffs[j]) == 0)
                continue;
            auto it = gen.star_mor.find(basis[j]);
            if (it == gen.star_mor.end())
                raise(ErrorCode::Malformed, "antipode undefined on " + cat.basis(basis[j]).name);
            if (it->second.source != s || it->second.target != t || it->second.coeffs.size() != out.coeffs.size())
                raise(ErrorCode::Malformed, "antipode of " + cat.basis(basis[j]).name + " has wrong endpoints");
            out = cat.add(out, cat.scale(it->second, m.coeffs[j]));
        }
        return out;
    };
    for (auto a : gen.generators)
        for (auto b : gen.generators)
            for (auto f : cat.hom(a, b)) {
                try {
                    star_of(cat.basis_morphism(f));
                } catch (const Error& e) {
                    star_log.add(e.what());
                }
            }
    for (auto a : gen.generators) {
        try {
            if (!(star_of(cat.identity(a)) == cat.identity(gen.star_obj.at(a))))
                star_log.add("(id_" + cat.object(a).name + ")* != id");
        } catch (const Error& e) {
            star_log.add(e.what());
        }
        for (auto b : gen.generators)
            for (auto c : gen.generators)
                for (auto f : cat.hom(a, b))
                    for (auto g : cat.hom(b, c)) {
                        try {
                            auto fm = cat.basis_morphism(f), gm = cat.basis_morphism(g);
                            if (!(star_of(cat.compose(gm, fm)) == cat.compose(star_of(fm), star_of(gm))))
                                star_log.add("(" + cat.basis(g).name + " . " + cat.basis(f).name + ")* != " +
                                             cat.basis(f).name + "* . " + cat.basis(g).name + "*");
                        } catch (const Error& e) {
                            star_log.add(e.what());
                        }
                    }
    }
    star_log.flush(report);

    // Condition 4: u invertible and natural.
    FailureLog inv_log("generators.u_invertible");
    FailureLog nat_log("generators.u_natural");
    for (auto a : gen.generators)
        if (!la::is_invertible(gen.u.at(a)))
            inv_log.add("u_" + cat.object(a).name + " is singular");
    inv_log.flush(report);
    if (inv_log.count() > 0)
        return report;
    for (auto a : gen.generators)
        for (auto b : gen.generators)
            for (auto f : cat.hom(a, b)) {
                try {
                    Matrix Uf = U.on_basis.at(f);
                    Matrix Ufstar = U.apply(cat, star_of(cat.basis_morphism(f)));
                    if (!(gen.u.at(a) * Ufstar == Uf.transpose() * gen.u.at(b)))
                        nat_log.add("u not natural at " + cat.basis(f).name);
                } catch (const Error& e) {
                    nat_log.add(e.what());
                }
            }
    nat_log.flush(report);

    // Condition 5.
    FailureLog tau_log("generators.tau_diagram");
    FailureLog rho_log("generators.rho_diagram");
    FailureLog split_log("generators.r3_i3_split");
    for (auto a : gen.generators) {
        const std::string& name = cat.object(a).name;
        std::size_t n = cat.u_dim(a);
        Matrix id_n = Matrix::identity(k, n);
        Matrix e_ua = kron(id_n, la::evaluation(k, n));
        const Matrix& u = gen.u.at(a);
        try {
            Matrix r3 = triple_r(cat, U, gen, a);
            Matrix i3 = triple_i(cat, U, gen, a);
            Matrix Ue = U.apply(cat, gen.e.at(a));
            if (!(Ue * r3 * kron(id_n, kron(la::inverse(u), id_n)) == e_ua))
                tau_log.add("U(e) r3 (1 u^-1 1) != 1 (x) ev at " + name);
            if (!(e_ua * kron(id_n, kron(u, id_n)) * i3 == Ue))
                rho_log.add("(1 (x) ev)(1 u 1) i3 != U(e) at " + name);
            if (!(r3 * i3).is_identity() && r3.rows() > 0)
                split_log.add("r3 i3 != 1 at " + name);
        } catch (const Error& e) {
            tau_log.add(e.what());
        }
    }
    tau_log.flush(report);
    rho_log.flush(report);
    split_log.flush(report);

    FailureLog res_log("generators.resolution_identity");
    FailureLog cover_log("generators.resolution_coverage");
    std::size_t resolutions = 0;
    for (const auto& [c, list] : gen.resolutions)
        for (const auto& res : list) {
            ++resolutions;
            Matrix sum(k, cat.u_dim(c), cat.u_dim(c));
            for (const auto& t : res.terms)
                sum = sum + U.apply(cat, t.map) * t.lift;
            if (!sum.is_identity() && cat.u_dim(c) > 0)
                res_log.add("sum U(g_j) lift_j != 1 for '" + res.label + "' of " + cat.object(c).name);
        }
    res_log.flush(report, std::to_string(resolutions) + " resolutions");
    for (auto c : required_resolution_objects(cat, gen)) {
        auto it = gen.resolutions.find(c);
        if (it == gen.resolutions.end() || it->second.empty())
            cover_log.add("no resolution for " + cat.object(c).name);
    }
    cover_log.flush(report);
    return report;
}

Report check_E1_E2(const Field& field, std::size_t n)
{
    Report report;
    Matrix id = Matrix::identity(field, n);
    Matrix ev = la::evaluation(field, n);
    Matrix coev = la::coevaluation(field, n);
    Matrix d = Matrix::identity(field, n);
    Matrix e_ua = kron(id, ev);
    std::string dim = "dim " + std::to_string(n);
    // E1: e_{UA} (n (x) 1) = 1 on UA.
    if (e_ua * kron(coev, id) == id)
        report.pass("E1", dim);
    else
        report.fail("E1", dim);
    // E2: (1 (x) d (x) 1)(1 (x) n) = e*_{UA} on UA*.
    if (kron(id, kron(d, id)) * kron(id, coev) == e_ua.transpose())
        report.pass("E2", dim);
    else
        report.fail("E2", dim);
    return report;
}

} // namespace vncore::fincat
