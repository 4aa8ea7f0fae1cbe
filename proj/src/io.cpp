#include "vncore/io.hpp"

#include "vncore/error.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace vncore::io {

using fincat::BasisId;
using fincat::CatPresentation;
using fincat::Morphism;
using fincat::ObjectId;
using la::Field;
using la::Matrix;
using la::Scalar;
using json = nlohmann::ordered_json;

namespace {

// Top-level keys one per line, array sections one element per line.
std::string pretty(const json& doc)
{
    std::ostringstream out;
    out << "{\n";
    std::size_t k = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++k) {
        out << "  " << json(it.key()).dump() << ": ";
        const json& v = it.value();
        if (v.is_array() && !v.empty()) {
            out << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i)
                out << "    " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
            out << "  ]";
        } else {
            out << v.dump();
        }
        out << (k + 1 < doc.size() ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

json scalars(const Field& k, const std::vector<Scalar>& v)
{
    json out = json::array();
    for (const auto& s : v)
        out.push_back(k.format(s));
    return out;
}

json matrix(const Matrix& m)
{
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", scalars(m.field(), m.entries())}};
}

[[noreturn]] void malformed(const std::string& what)
{
    raise(ErrorCode::Malformed, what);
}

std::vector<Scalar> read_scalars(const Field& k, const json& j, std::size_t expected, const std::string& what)
{
    if (!j.is_array())
        malformed(what + ": expected a list of scalars");
    if (j.size() != expected)
        malformed(what + ": expected " + std::to_string(expected) + " scalars, found " + std::to_string(j.size()));
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& s : j)
        out.push_back(k.parse(s.get<std::string>()));
    return out;
}

Matrix read_matrix(const Field& k, const json& j, std::size_t rows, std::size_t cols, const std::string& what)
{
    const auto r = j.at("rows").get<std::size_t>();
    const auto c = j.at("cols").get<std::size_t>();
    if (r != rows || c != cols)
        malformed(what + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, found " +
                  std::to_string(r) + "x" + std::to_string(c));
    return Matrix(k, r, c, read_scalars(k, j.at("entries"), r * c, what));
}

// Basis morphisms in the order the HOMS section lists them, so output does not
// depend on the ids a builder happened to assign.
std::vector<std::size_t> canonical_rank(const CatPresentation& cat)
{
    std::vector<std::size_t> rank(cat.basis().size());
    std::size_t next = 0;
    for (const auto& [pair, ids] : cat.homs())
        for (auto b : ids)
            rank[b] = next++;
    return rank;
}

std::vector<std::pair<BasisId, BasisId>> sorted_pairs(const CatPresentation& cat,
                                                      const std::unordered_map<std::uint64_t, std::vector<Scalar>>& table,
                                                      const std::vector<std::size_t>& rank)
{
    std::vector<std::pair<BasisId, BasisId>> out;
    for (const auto& entry : table)
        out.push_back(cat.unpack(entry.first));
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return std::pair(rank[a.first], rank[a.second]) < std::pair(rank[b.first], rank[b.second]);
    });
    return out;
}

const std::string& obj(const CatPresentation& cat, ObjectId a)
{
    return cat.object(a).name;
}

const std::string& mor(const CatPresentation& cat, BasisId b)
{
    return cat.basis(b).name;
}

BasisId basis_id(const CatPresentation& cat, const std::string& name)
{
    auto b = cat.find_basis(name);
    if (!b)
        malformed("unknown basis morphism '" + name + "'");
    return *b;
}

Morphism read_morphism(const CatPresentation& cat, ObjectId source, ObjectId target, const json& coeffs,
                       const std::string& what)
{
    return {source, target, read_scalars(cat.field(), coeffs, cat.hom_dim(source, target), what)};
}

ObjectId generator_id(const CatPresentation& cat, const fincat::GeneratorData& gen, const std::string& name)
{
    ObjectId a = cat.object_id(name);
    if (!gen.is_generator(a))
        malformed("'" + name + "' is not a generator");
    return a;
}

// Translates engine errors raised while parsing into Malformed.
template <class F>
auto parsing(F&& run)
{
    try {
        return run();
    } catch (const json::exception& e) {
        malformed(std::string("bad document: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Malformed)
            throw;
        malformed(e.what());
    }
}

const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
    }
    return "?";
}

} // namespace

std::string write_instance(const fincat::Instance& inst)
{
    const auto& cat = inst.cat;
    const Field& k = cat.field();
    const auto rank = canonical_rank(cat);
    json doc;
    doc["FIELD"] = k.name();

    json objects = json::array();
    for (const auto& o : cat.objects())
        objects.push_back({{"name", o.name}, {"u_dim", o.u_dim}});
    doc["OBJECTS"] = objects;

    json homs = json::array();
    for (const auto& [pair, ids] : cat.homs()) {
        json h = {{"source", obj(cat, pair.first)}, {"target", obj(cat, pair.second)}};
        json names = json::array();
        for (auto b : ids)
            names.push_back(mor(cat, b));
        h["basis"] = names;
        if (pair.first == pair.second && !cat.identity_coeffs(pair.first).empty())
            h["identity"] = scalars(k, cat.identity_coeffs(pair.first));
        homs.push_back(h);
    }
    doc["HOMS"] = homs;

    json comp = json::array();
    for (auto [g, f] : sorted_pairs(cat, cat.composition_table(), rank))
        comp.push_back({{"g", mor(cat, g)}, {"f", mor(cat, f)}, {"coeffs", scalars(k, *cat.composition(g, f))}});
    doc["COMPOSITION"] = comp;

    json tobj = json::array();
    for (const auto& [pair, product] : cat.tensor_objects())
        tobj.push_back({{"left", obj(cat, pair.first)}, {"right", obj(cat, pair.second)}, {"product", obj(cat, product)}});
    doc["TENSOR_OBJECTS"] = tobj;

    json tmor = json::array();
    for (auto [f, g] : sorted_pairs(cat, cat.tensor_morphism_table(), rank))
        tmor.push_back({{"f", mor(cat, f)}, {"g", mor(cat, g)}, {"coeffs", scalars(k, *cat.tensor_morphism(f, g))}});
    doc["TENSOR_MORPHISMS"] = tmor;

    std::vector<BasisId> by_rank(rank.size());
    for (BasisId b = 0; b < rank.size(); ++b)
        by_rank[rank[b]] = b;
    json umor = json::array();
    for (auto b : by_rank) {
        auto it = inst.U.on_basis.find(b);
        if (it != inst.U.on_basis.end())
            umor.push_back({{"morphism", mor(cat, b)}, {"matrix", matrix(it->second)}});
    }
    doc["U_MORPHISMS"] = umor;

    for (const auto& [key, table] : {std::pair{"R", &inst.U.r}, std::pair{"I", &inst.U.i}}) {
        json section = json::array();
        for (const auto& [pair, m] : *table)
            section.push_back({{"left", obj(cat, pair.first)}, {"right", obj(cat, pair.second)}, {"matrix", matrix(m)}});
        doc[key] = section;
    }

    const auto& gen = inst.gen;
    json gens = json::array();
    for (auto a : gen.generators)
        gens.push_back(obj(cat, a));
    doc["GENERATORS"] = gens;

    json star_objects = json::array();
    for (const auto& [a, b] : gen.star_obj)
        star_objects.push_back({{"object", obj(cat, a)}, {"dual", obj(cat, b)}});
    std::vector<BasisId> starred;
    for (const auto& entry : gen.star_mor)
        starred.push_back(entry.first);
    std::sort(starred.begin(), starred.end(), [&](BasisId a, BasisId b) { return rank[a] < rank[b]; });
    json star_morphisms = json::array();
    for (auto f : starred) {
        const auto& m = gen.star_mor.at(f);
        star_morphisms.push_back({{"morphism", mor(cat, f)},
                                  {"source", obj(cat, m.source)},
                                  {"target", obj(cat, m.target)},
                                  {"coeffs", scalars(k, m.coeffs)}});
    }
    doc["STAR"] = {{"objects", star_objects}, {"morphisms", star_morphisms}};

    json uiso = json::array();
    for (const auto& [a, m] : gen.u)
        uiso.push_back({{"object", obj(cat, a)}, {"matrix", matrix(m)}});
    doc["U_ISO"] = uiso;

    json emaps = json::array();
    for (const auto& [a, m] : gen.e)
        emaps.push_back({{"object", obj(cat, a)}, {"source", obj(cat, m.source)}, {"coeffs", scalars(k, m.coeffs)}});
    doc["E_MAPS"] = emaps;

    json res = json::array();
    for (const auto& [c, list] : gen.resolutions)
        for (const auto& r : list) {
            json terms = json::array();
            for (const auto& t : r.terms)
                terms.push_back({{"source", obj(cat, t.source)}, {"coeffs", scalars(k, t.map.coeffs)}, {"lift", matrix(t.lift)}});
            res.push_back({{"object", obj(cat, c)}, {"label", r.label}, {"terms", terms}});
        }
    doc["RESOLUTIONS"] = res;

    json meta = json::object();
    for (const auto& [key, value] : inst.meta)
        meta[key] = value;
    doc["META"] = meta;
    return pretty(doc);
}

fincat::Instance read_instance(const std::string& text)
{
    return parsing([&] {
        const json doc = json::parse(text);
        if (!doc.is_object())
            malformed("instance document must be an object");
        const Field k = Field::from_name(doc.at("FIELD").get<std::string>());
        fincat::Instance inst{CatPresentation(k), {}, {}, {}};
        auto& cat = inst.cat;

        for (const auto& o : doc.at("OBJECTS"))
            cat.add_object(o.at("name").get<std::string>(), o.at("u_dim").get<std::size_t>());
        for (const auto& h : doc.at("HOMS")) {
            ObjectId s = cat.object_id(h.at("source").get<std::string>());
            ObjectId t = cat.object_id(h.at("target").get<std::string>());
            auto names = h.at("basis").get<std::vector<std::string>>();
            if (names.empty())
                malformed("empty hom basis listed for " + obj(cat, s) + " -> " + obj(cat, t));
            cat.set_hom(s, t, names);
            if (h.contains("identity")) {
                if (s != t)
                    malformed("identity listed on a hom between distinct objects");
                cat.set_identity(s, read_scalars(k, h.at("identity"), names.size(), "identity of " + obj(cat, s)));
            }
        }
        for (const auto& c : doc.at("COMPOSITION")) {
            BasisId g = basis_id(cat, c.at("g").get<std::string>());
            BasisId f = basis_id(cat, c.at("f").get<std::string>());
            std::size_t n = cat.hom_dim(cat.basis(f).source, cat.basis(g).target);
            cat.set_composition(g, f, read_scalars(k, c.at("coeffs"), n, "composition " + mor(cat, g) + " . " + mor(cat, f)));
        }
        for (const auto& t : doc.at("TENSOR_OBJECTS"))
            cat.set_tensor_object(cat.object_id(t.at("left").get<std::string>()),
                                  cat.object_id(t.at("right").get<std::string>()),
                                  cat.object_id(t.at("product").get<std::string>()));
        for (const auto& t : doc.at("TENSOR_MORPHISMS")) {
            BasisId f = basis_id(cat, t.at("f").get<std::string>());
            BasisId g = basis_id(cat, t.at("g").get<std::string>());
            auto src = cat.tensor_object(cat.basis(f).source, cat.basis(g).source);
            auto tgt = cat.tensor_object(cat.basis(f).target, cat.basis(g).target);
            if (!src || !tgt)
                malformed("tensor morphism " + mor(cat, f) + " (x) " + mor(cat, g) + " between untabulated objects");
            cat.set_tensor_morphism(f, g, read_scalars(k, t.at("coeffs"), cat.hom_dim(*src, *tgt),
                                                       "tensor morphism " + mor(cat, f) + " (x) " + mor(cat, g)));
        }

        auto& U = inst.U;
        for (const auto& u : doc.at("U_MORPHISMS")) {
            BasisId b = basis_id(cat, u.at("morphism").get<std::string>());
            const auto& bm = cat.basis(b);
            U.on_basis.emplace(b, read_matrix(k, u.at("matrix"), cat.u_dim(bm.target), cat.u_dim(bm.source),
                                              "U(" + bm.name + ")"));
        }
        for (const char* key : {"R", "I"}) {
            const bool is_r = key[0] == 'R';
            for (const auto& e : doc.at(key)) {
                ObjectId a = cat.object_id(e.at("left").get<std::string>());
                ObjectId b = cat.object_id(e.at("right").get<std::string>());
                auto product = cat.tensor_object(a, b);
                if (!product)
                    malformed(std::string(key) + " given for an untabulated tensor pair");
                const std::size_t split = cat.u_dim(a) * cat.u_dim(b), whole = cat.u_dim(*product);
                const std::string what = std::string(key) + "(" + obj(cat, a) + ", " + obj(cat, b) + ")";
                Matrix m = is_r ? read_matrix(k, e.at("matrix"), whole, split, what)
                                : read_matrix(k, e.at("matrix"), split, whole, what);
                (is_r ? U.r : U.i).emplace(std::pair(a, b), std::move(m));
            }
        }

        auto& gen = inst.gen;
        for (const auto& g : doc.at("GENERATORS")) {
            ObjectId a = cat.object_id(g.get<std::string>());
            if (gen.is_generator(a))
                malformed("generator '" + obj(cat, a) + "' listed twice");
            gen.generators.push_back(a);
        }
        const json& star = doc.at("STAR");
        for (const auto& s : star.at("objects"))
            gen.star_obj[generator_id(cat, gen, s.at("object").get<std::string>())] =
                generator_id(cat, gen, s.at("dual").get<std::string>());
        for (const auto& s : star.at("morphisms")) {
            BasisId f = basis_id(cat, s.at("morphism").get<std::string>());
            ObjectId src = cat.object_id(s.at("source").get<std::string>());
            ObjectId tgt = cat.object_id(s.at("target").get<std::string>());
            gen.star_mor.emplace(f, read_morphism(cat, src, tgt, s.at("coeffs"), "dual of " + mor(cat, f)));
        }
        for (const auto& u : doc.at("U_ISO")) {
            ObjectId a = generator_id(cat, gen, u.at("object").get<std::string>());
            auto dual = gen.star_obj.find(a);
            if (dual == gen.star_obj.end())
                malformed("u given for " + obj(cat, a) + " without a dual");
            gen.u.emplace(a, read_matrix(k, u.at("matrix"), cat.u_dim(a), cat.u_dim(dual->second), "u_" + obj(cat, a)));
        }
        for (const auto& e : doc.at("E_MAPS")) {
            ObjectId a = generator_id(cat, gen, e.at("object").get<std::string>());
            ObjectId src = cat.object_id(e.at("source").get<std::string>());
            gen.e.emplace(a, read_morphism(cat, src, a, e.at("coeffs"), "e_" + obj(cat, a)));
        }
        for (const auto& r : doc.at("RESOLUTIONS")) {
            ObjectId c = cat.object_id(r.at("object").get<std::string>());
            fincat::Resolution res{r.at("label").get<std::string>(), {}};
            for (const auto& t : r.at("terms")) {
                ObjectId src = cat.object_id(t.at("source").get<std::string>());
                const std::string what = "resolution " + res.label + " of " + obj(cat, c);
                res.terms.push_back({src, read_morphism(cat, src, c, t.at("coeffs"), what),
                                     read_matrix(k, t.at("lift"), cat.u_dim(src), cat.u_dim(c), what)});
            }
            gen.resolutions[c].push_back(std::move(res));
        }
        if (doc.contains("META"))
            for (const auto& [key, value] : doc.at("META").items())
                inst.meta[key] = value.get<std::string>();
        return inst;
    });
}

std::string write_core(const vn::VNCoreData& core, const Report& checks)
{
    json doc;
    doc["FIELD"] = core.field.name();
    doc["E_DIM"] = core.dim;
    doc["MU"] = matrix(core.mu);
    doc["DELTA"] = matrix(core.delta);
    doc["S"] = matrix(core.S);
    doc["UNIT"] = core.has_unit && core.unit ? matrix(*core.unit) : json(nullptr);
    json blocks = json::array();
    for (const auto& [name, m] : core.cop_blocks)
        blocks.push_back({{"generator", name}, {"matrix", matrix(m)}});
    doc["COP_BLOCKS"] = blocks;
    json lines = json::array();
    for (const auto& c : checks.entries())
        lines.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    doc["CHECKS"] = lines;
    return pretty(doc);
}

vn::VNCoreData read_core(const std::string& text)
{
    return parsing([&] {
        const json doc = json::parse(text);
        if (!doc.is_object())
            malformed("core document must be an object");
        const Field k = Field::from_name(doc.at("FIELD").get<std::string>());
        const auto n = doc.at("E_DIM").get<std::size_t>();
        vn::VNCoreData core{k,
                            n,
                            read_matrix(k, doc.at("MU"), n, n * n, "MU"),
                            read_matrix(k, doc.at("DELTA"), n * n, n, "DELTA"),
                            read_matrix(k, doc.at("S"), n, n, "S"),
                            false,
                            std::nullopt,
                            {}};
        if (doc.contains("UNIT") && !doc.at("UNIT").is_null()) {
            core.has_unit = true;
            core.unit = read_matrix(k, doc.at("UNIT"), n, 1, "UNIT");
        }
        if (doc.contains("COP_BLOCKS"))
            for (const auto& b : doc.at("COP_BLOCKS")) {
                const json& m = b.at("matrix");
                const auto cols = m.at("cols").get<std::size_t>();
                core.cop_blocks.emplace_back(b.at("generator").get<std::string>(),
                                             read_matrix(k, m, n, cols, "cop block"));
            }
        return core;
    });
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents) || !out.flush())
        raise(ErrorCode::IoError, "cannot write '" + path + "'");
}

} // namespace vncore::io
