#include "vncore/coend.hpp"

#include "vncore/error.hpp"


namespace vncore::coend {

using la::kron;

Matrix GenericCoend::cop(std::size_t block) const
{
    const std::size_t n = block_dims.at(block);
    return quotient.projection.block(0, block_offsets[block], quotient.dim, n);
}

GenericCoend compute_coend_generic(const Field& field, const Weight& weight)
{
    std::vector<std::size_t> offsets;
    std::size_t ambient = 0;
    for (auto d : weight.diagonal_dims) {
        offsets.push_back(ambient);
        ambient += d;
    }
    const std::size_t blocks = weight.diagonal_dims.size();

    std::size_t rows = 0;
    for (const auto& a : weight.actions) {
        if (a.source >= blocks || a.target >= blocks)
            raise(ErrorCode::ActionMismatch, "action refers to a missing block");
        if (a.left.rows() != weight.diagonal_dims[a.source] || a.left.cols() != a.mixed_dim)
            raise(ErrorCode::ActionMismatch, "left action has shape " + std::to_string(a.left.rows()) + "x" +
                                                 std::to_string(a.left.cols()));
        if (a.right.rows() != weight.diagonal_dims[a.target] || a.right.cols() != a.mixed_dim)
            raise(ErrorCode::ActionMismatch, "right action has shape " + std::to_string(a.right.rows()) + "x" +
                                                 std::to_string(a.right.cols()));
        rows += a.mixed_dim;
    }

    Matrix relations(field, rows, ambient);
    std::size_t row = 0;
    for (const auto& a : weight.actions) {
        const std::size_t lo = offsets[a.source];
        const std::size_t ro = offsets[a.target];
        for (std::size_t x = 0; x < a.mixed_dim; ++x, ++row) {
            for (std::size_t k = 0; k < a.left.rows(); ++k)
                if (sgn(a.left(k, x)) != 0)
                    relations.add_to(row, lo + k, a.left(k, x));
            for (std::size_t k = 0; k < a.right.rows(); ++k)
                if (sgn(a.right(k, x)) != 0)
                    relations.add_to(row, ro + k, field.neg(a.right(k, x)));
        }
    }
    return {la::quotient_by(field, ambient, relations), std::move(offsets), weight.diagonal_dims};
}

Matrix CoendSpace::cop(ObjectId a) const
{
    auto it = block_of.find(a);
    if (it == block_of.end())
        raise(ErrorCode::InvalidArgument, "cop requested for a non-generator");
    return coend.cop(it->second);
}

CoendSpace compute_endv(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen)
{
    const Field& k = cat.field();
    Weight w;
    std::map<ObjectId, std::size_t> block_of;
    for (auto a : gen.generators) {
        block_of[a] = w.diagonal_dims.size();
        w.diagonal_dims.push_back(cat.u_dim(a) * cat.u_dim(a));
    }
    // f : A -> B acts on U(B)* (x) U(A).
    for (auto a : gen.generators)
        for (auto b : gen.generators)
            for (auto f : cat.hom(a, b)) {
                const Matrix& Uf = U.on_basis.at(f);
                const std::size_t na = cat.u_dim(a), nb = cat.u_dim(b);
                w.actions.push_back({block_of[a], block_of[b], nb * na,
                                     kron(Uf.transpose(), Matrix::identity(k, na)),
                                     kron(Matrix::identity(k, nb), Uf)});
            }
    return {compute_coend_generic(k, w), gen.generators, std::move(block_of)};
}

Report check_dinaturality(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                          const CoendSpace& E)
{
    Report report;
    const Field& k = cat.field();
    FailureLog log("coend.dinaturality");
    std::size_t count = 0;
    for (auto a : gen.generators)
        for (auto b : gen.generators)
            for (auto f : cat.hom(a, b)) {
                ++count;
                const Matrix& Uf = U.on_basis.at(f);
                Matrix lhs = E.cop(a) * kron(Uf.transpose(), Matrix::identity(k, cat.u_dim(a)));
                Matrix rhs = E.cop(b) * kron(Matrix::identity(k, cat.u_dim(b)), Uf);
                if (!(lhs == rhs))
                    log.add("cop not dinatural at " + cat.describe(f));
            }
    log.flush(report, std::to_string(count) + " generator morphisms");

    std::vector<Matrix> cops;
    for (auto a : gen.generators)
        cops.push_back(E.cop(a));
    std::size_t r = cops.empty() ? 0 : la::rank(la::hstack(cops));
    if (r == E.dim())
        report.pass("coend.spanning", "dim E = " + std::to_string(E.dim()));
    else
        report.fail("coend.spanning", "coprojections span " + std::to_string(r) + " of " + std::to_string(E.dim()));
    return report;
}

DensityResult density_map(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                          ObjectId c)
{
    const Field& k = cat.field();
    Weight w;
    std::map<ObjectId, std::size_t> block_of;
    for (auto a : gen.generators) {
        block_of[a] = w.diagonal_dims.size();
        w.diagonal_dims.push_back(cat.hom_dim(a, c) * cat.u_dim(a));
    }
    // f : A -> A' acts on C(A', C) (x) U(A) by precomposition on the left and U(f) on the right.
    for (auto a : gen.generators)
        for (auto a2 : gen.generators)
            for (auto f : cat.hom(a, a2)) {
                auto into = cat.hom(a2, c);
                const std::size_t ha = cat.hom_dim(a, c);
                Matrix pre(k, ha, into.size());
                auto fm = cat.basis_morphism(f);
                for (std::size_t j = 0; j < into.size(); ++j) {
                    auto comp = cat.compose(cat.basis_morphism(into[j]), fm);
                    for (std::size_t t = 0; t < ha; ++t)
                        pre.set(t, j, comp.coeffs[t]);
                }
                const std::size_t na = cat.u_dim(a);
                w.actions.push_back({block_of[a], block_of[a2], into.size() * na,
                                     kron(pre, Matrix::identity(k, na)),
                                     kron(Matrix::identity(k, into.size()), U.on_basis.at(f))});
            }
    GenericCoend coend = compute_coend_generic(k, w);

    const std::size_t nc = cat.u_dim(c);
    Matrix alpha(k, nc, coend.quotient.ambient_dim);
    for (auto a : gen.generators) {
        const std::size_t off = coend.block_offsets[block_of[a]];
        const std::size_t na = cat.u_dim(a);
        auto into = cat.hom(a, c);
        for (std::size_t j = 0; j < into.size(); ++j)
            alpha.set_block(0, off + j * na, U.on_basis.at(into[j]));
    }
    Matrix induced = la::induced_on_quotient(coend.quotient, la::trivial_quotient(k, nc), alpha);
    return {coend.dim(), nc, la::rank(induced)};
}

Report density_check(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId c)
{
    Report report;
    const std::string name = "density." + cat.object(c).name;
    try {
        auto d = density_map(cat, U, gen, c);
        std::string detail = "coend dim " + std::to_string(d.coend_dim) + ", rank " + std::to_string(d.rank) +
                             ", target dim " + std::to_string(d.target_dim);
        if (d.dense())
            report.pass(name, detail);
        else
            report.fail(name, std::string(to_string(ErrorCode::NotDense)) + ": " + detail);
    } catch (const Error& e) {
        report.fail(name, e.what());
    }
    return report;
}

Report density_check_all(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen)
{
    Report report;
    for (ObjectId c = 0; c < cat.objects().size(); ++c)
        report.append(density_check(cat, U, gen, c));
    return report;
}

Matrix cop_via(const CatPresentation& cat, const UFunctorData& U, const CoendSpace& E, ObjectId c,
               const fincat::Resolution& resolution)
{
    const std::size_t nc = cat.u_dim(c);
    Matrix out(cat.field(), E.dim(), nc * nc);
    for (const auto& t : resolution.terms) {
        Matrix Ug = U.apply(cat, t.map);
        out = out + E.cop(t.source) * kron(Ug.transpose(), t.lift);
    }
    return out;
}

Matrix cop_general(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                   const CoendSpace& E, ObjectId c)
{
    if (E.block_of.count(c))
        return E.cop(c);
    auto it = gen.resolutions.find(c);
    if (it == gen.resolutions.end() || it->second.empty())
        raise(ErrorCode::NoResolution, "no resolution for " + cat.object(c).name);
    return cop_via(cat, U, E, c, it->second.front());
}

Matrix cop_general(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                   const CoendSpace& E, ObjectId c, const Matrix& element)
{
    return cop_general(cat, U, gen, E, c) * element;
}

} // namespace vncore::coend
