#include "concrete.hpp"
#include "vncore/coend.hpp"
#include "vncore/instances.hpp"

namespace vncore::instances {

using detail::ConcreteCategory;
using fincat::ObjectId;
using la::kron;

namespace {

// A presheaf on the discrete base: one vector space per point.
struct Graded {
    std::vector<std::size_t> dims;

    std::size_t total() const
    {
        std::size_t t = 0;
        for (auto d : dims)
            t += d;
        return t;
    }
    std::size_t offset(std::size_t z) const
    {
        std::size_t t = 0;
        for (std::size_t w = 0; w < z; ++w)
            t += dims[w];
        return t;
    }
};

// (F (x) G)(z) = coend over (x, y) of p(x,y,z) (x) F(x) (x) G(y). The base is
// discrete, so the only actions are identities and p vanishes off the diagonal.
Graded day_convolution(const Field& k, const PromonoidalSpec& base, const Graded& f, const Graded& g)
{
    const std::size_t n = base.points.size();
    Graded out;
    for (std::size_t z = 0; z < n; ++z) {
        coend::Weight w;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const bool p = x == z && y == z && base.points[z].diagonal;
                w.diagonal_dims.push_back(p ? f.dims[x] * g.dims[y] : 0);
            }
        for (std::size_t b = 0; b < w.diagonal_dims.size(); ++b) {
            const std::size_t d = w.diagonal_dims[b];
            w.actions.push_back({b, b, d, Matrix::identity(k, d), Matrix::identity(k, d)});
        }
        out.dims.push_back(coend::compute_coend_generic(k, w).dim());
    }
    return out;
}

// r_{F,G} : U(F) (x) U(G) -> U(F (x) G), nonzero only on F(z) (x) G(z).
Matrix structure_r(const Field& k, const PromonoidalSpec& base, const Graded& f, const Graded& g,
                   const Graded& fg)
{
    Matrix r(k, fg.total(), f.total() * g.total());
    for (std::size_t z = 0; z < base.points.size(); ++z) {
        if (!base.points[z].diagonal)
            continue;
        for (std::size_t a = 0; a < f.dims[z]; ++a)
            for (std::size_t b = 0; b < g.dims[z]; ++b)
                r.set(fg.offset(z) + a * g.dims[z] + b, (f.offset(z) + a) * g.total() + g.offset(z) + b,
                      k.from_rational(base.points[z].retract_r));
    }
    return r;
}

Matrix structure_i(const Field& k, const PromonoidalSpec& base, const Graded& f, const Graded& g,
                   const Graded& fg)
{
    Matrix i(k, f.total() * g.total(), fg.total());
    for (std::size_t z = 0; z < base.points.size(); ++z) {
        if (!base.points[z].diagonal)
            continue;
        for (std::size_t a = 0; a < f.dims[z]; ++a)
            for (std::size_t b = 0; b < g.dims[z]; ++b)
                i.set((f.offset(z) + a) * g.total() + g.offset(z) + b, fg.offset(z) + a * g.dims[z] + b,
                      k.from_rational(base.points[z].retract_i));
    }
    return i;
}

// Graded maps X -> Y, one elementary matrix per grade and entry.
std::vector<Matrix> graded_maps(const Field& k, const Graded& x, const Graded& y)
{
    std::vector<Matrix> out;
    for (std::size_t z = 0; z < x.dims.size(); ++z)
        for (std::size_t i = 0; i < y.dims[z]; ++i)
            for (std::size_t j = 0; j < x.dims[z]; ++j) {
                Matrix m(k, y.total(), x.total());
                m.set(y.offset(z) + i, x.offset(z) + j, k.one());
                out.push_back(std::move(m));
            }
    return out;
}

} // namespace

Instance build_promonoidal_instance(const PromonoidalSpec& base, const std::vector<PresheafSpec>& presheaves,
                                    const Field& field, const PromonoidalOptions& options)
{
    const Field& k = field;
    const std::size_t n = base.points.size();
    std::vector<std::size_t> dual(n);
    for (std::size_t z = 0; z < n; ++z) {
        std::size_t d = 0;
        while (d < n && base.points[d].name != base.points[z].dual)
            ++d;
        if (d == n)
            raise(ErrorCode::InvalidArgument, "dual of point " + base.points[z].name + " is not a point");
        dual[z] = d;
    }
    for (std::size_t z = 0; z < n; ++z) {
        if (dual[dual[z]] != z)
            raise(ErrorCode::InvalidArgument, "duality is not an involution at " + base.points[z].name);
        const auto& pt = base.points[z];
        if (pt.diagonal && k.mul(k.from_rational(pt.retract_r), k.from_rational(pt.retract_i)) != k.one())
            raise(ErrorCode::RetractError, "r i != 1 at " + pt.name);
    }

    const std::size_t ng = presheaves.size();
    std::vector<Graded> gens;
    for (const auto& p : presheaves) {
        if (p.dims.size() != n)
            raise(ErrorCode::InvalidArgument, "presheaf " + p.name + " needs one dimension per point");
        if (!p.coupling.empty() && p.coupling.size() != n)
            raise(ErrorCode::InvalidArgument, "presheaf " + p.name + " needs one coupling per point");
        gens.push_back({p.dims});
    }

    // A*(z) = A(z*)*, matched with a generator of the same dimensions.
    std::vector<std::size_t> star(ng);
    for (std::size_t a = 0; a < ng; ++a) {
        std::vector<std::size_t> want(n);
        for (std::size_t z = 0; z < n; ++z)
            want[z] = gens[a].dims[dual[z]];
        std::size_t b = gens[a].dims == want ? a : 0;
        while (b < ng && gens[b].dims != want)
            ++b;
        if (b == ng)
            raise(ErrorCode::ClosureError, "the dual of " + presheaves[a].name + " is not among the presheaves");
        star[a] = b;
    }

    ConcreteCategory c(k);
    std::vector<Graded> graded;
    auto add = [&](std::string name, Graded g) {
        c.objects.push_back({std::move(name), g.total()});
        graded.push_back(std::move(g));
        return c.objects.size() - 1;
    };
    for (std::size_t a = 0; a < ng; ++a)
        add(presheaves[a].name, gens[a]);
    std::vector<std::vector<ObjectId>> pair(ng, std::vector<ObjectId>(ng));
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b) {
            pair[a][b] = add(presheaves[a].name + "." + presheaves[b].name,
                             day_convolution(k, base, gens[a], gens[b]));
            c.tensor[{a, b}] = pair[a][b];
        }
    std::vector<ObjectId> triple(ng);
    for (std::size_t a = 0; a < ng; ++a) {
        ObjectId left = pair[a][star[a]];
        triple[a] = add("(" + c.objects[left].name + ")." + presheaves[a].name,
                        day_convolution(k, base, graded[left], gens[a]));
        c.tensor[{left, a}] = triple[a];
    }
    for (const auto& [p, product] : c.tensor) {
        c.r.emplace(p, structure_r(k, base, graded[p.first], graded[p.second], graded[product]));
        c.i.emplace(p, structure_i(k, base, graded[p.first], graded[p.second], graded[product]));
    }
    for (ObjectId x = 0; x < c.objects.size(); ++x)
        for (ObjectId y = 0; y < c.objects.size(); ++y) {
            auto basis = graded_maps(k, graded[x], graded[y]);
            if (!basis.empty())
                c.homs.emplace(std::make_pair(x, y), std::move(basis));
        }

    auto presented = detail::present(c, ErrorCode::InvalidArgument);
    Instance inst{std::move(presented.cat), std::move(presented.U), {}, {}};
    const auto& cat = inst.cat;
    auto& gen = inst.gen;

    // u_A : U(A*) -> U(A)* sends the A*(z) summand onto A(z*)*.
    std::vector<Matrix> u;
    for (std::size_t a = 0; a < ng; ++a) {
        const Graded& A = gens[a];
        const Graded& B = gens[star[a]];
        Matrix m(k, A.total(), B.total());
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t t = 0; t < B.dims[z]; ++t)
                m.set(A.offset(dual[z]) + t, B.offset(z) + t, k.one());
        u.push_back(m);
        gen.generators.push_back(a);
        gen.star_obj[a] = star[a];
        gen.u.emplace(a, m);
    }
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b)
            for (auto f : cat.hom(a, b)) {
                Matrix image = la::inverse(u[a]) * inst.U.on_basis.at(f).transpose() * u[b];
                gen.star_mor.emplace(f, detail::solve_morphism(cat, inst.U, star[b], star[a], image,
                                                               ErrorCode::CouplingError,
                                                               "dual of " + cat.basis(f).name));
            }

    // e = 1 (x) e^ followed by the unitor, where e^ pairs A*(z) (x) A(z) through
    // the coupling, then composes with p(z,z,z) into B(z, I).
    for (std::size_t a = 0; a < ng; ++a) {
        const Graded& A = gens[a];
        const Graded& B = gens[star[a]];
        const Graded& T = graded[triple[a]];
        Matrix image(k, A.total(), T.total());
        for (std::size_t z = 0; z < n; ++z) {
            const auto& pt = base.points[z];
            if (!pt.diagonal || T.dims[z] == 0)
                continue;
            Matrix chi(k, 1, B.dims[z] * A.dims[z]);
            const auto& supplied = presheaves[a].coupling;
            if (!supplied.empty() && supplied[z]) {
                if (supplied[z]->rows() != 1 || supplied[z]->cols() != chi.cols())
                    raise(ErrorCode::CouplingError, "coupling of " + presheaves[a].name + " at " + pt.name +
                                                        " has the wrong shape");
                chi = *supplied[z];
            } else if (dual[z] == z) {
                for (std::size_t t = 0; t < A.dims[z]; ++t)
                    chi.set(0, t * A.dims[z] + t, k.one());
            }
            const la::Scalar scale = k.mul(k.from_rational(pt.composition), k.from_rational(pt.unitor));
            for (std::size_t x = 0; x < A.dims[z]; ++x)
                for (std::size_t phi = 0; phi < B.dims[z]; ++phi)
                    for (std::size_t y = 0; y < A.dims[z]; ++y) {
                        const auto& c_xy = chi(0, phi * A.dims[z] + y);
                        if (sgn(c_xy) != 0)
                            image.set(A.offset(z) + x, T.offset(z) + (x * B.dims[z] + phi) * A.dims[z] + y,
                                      k.mul(scale, c_xy));
                    }
        }
        gen.e.emplace(a, detail::solve_morphism(cat, inst.U, triple[a], a, image, ErrorCode::CouplingError,
                                                "e for " + presheaves[a].name));
    }
    attach_resolutions(cat, inst.U, gen);

    if (options.verify_coupling) {
        Report r = fincat::validate_generator_data(cat, inst.U, gen);
        if (auto bad = r.first_failure())
            raise(ErrorCode::CouplingError, bad->name + ": " + bad->detail);
    }
    inst.meta["builder"] = "promonoidal";
    return inst;
}

} // namespace vncore::instances
