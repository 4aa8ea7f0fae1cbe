#include "concrete.hpp"

namespace vncore::instances::detail {

using la::kron;
using la::Scalar;
using la::SpanSolver;

Matrix vectorize(const Matrix& m)
{
    return Matrix::column(m.field(), m.entries());
}

std::string hom_name(const std::string& source, const std::string& target, std::size_t k)
{
    return source + "->" + target + ":" + std::to_string(k);
}

namespace {

class HomSolvers {
public:
    HomSolvers(const CatPresentation& cat, const UFunctorData& U) : cat_(cat), U_(U) {}

    const SpanSolver& at(ObjectId s, ObjectId t)
    {
        auto key = std::make_pair(s, t);
        auto it = solvers_.find(key);
        if (it != solvers_.end())
            return it->second;
        auto basis = cat_.hom(s, t);
        std::vector<Matrix> cols;
        for (auto b : basis)
            cols.push_back(vectorize(U_.on_basis.at(b)));
        return solvers_.emplace(key, SpanSolver(la::hstack(cols))).first->second;
    }

private:
    const CatPresentation& cat_;
    const UFunctorData& U_;
    std::map<std::pair<ObjectId, ObjectId>, SpanSolver> solvers_;
};

std::vector<Scalar> solve_in(HomSolvers& solvers, const CatPresentation& cat, ObjectId s, ObjectId t,
                             const Matrix& image, ErrorCode failure, const std::string& what)
{
    const std::size_t h = cat.hom_dim(s, t);
    std::vector<Scalar> coeffs(h);
    if (image.is_zero())
        return coeffs;
    if (h == 0)
        raise(failure, what + " is nonzero but C(" + cat.object(s).name + ", " + cat.object(t).name + ") = 0");
    Matrix coords(cat.field(), h, 1);
    if (!solvers.at(s, t).solve(vectorize(image), coords))
        raise(failure, what + " is not a morphism " + cat.object(s).name + " -> " + cat.object(t).name);
    for (std::size_t k = 0; k < h; ++k)
        coeffs[k] = coords(k, 0);
    return coeffs;
}

} // namespace

fincat::Morphism solve_morphism(const CatPresentation& cat, const UFunctorData& U, ObjectId source,
                                ObjectId target, const Matrix& image, ErrorCode failure, const std::string& what)
{
    HomSolvers solvers(cat, U);
    return {source, target, solve_in(solvers, cat, source, target, image, failure, what)};
}

Presented present(const ConcreteCategory& c, ErrorCode failure)
{
    Presented out{CatPresentation(c.field), {}};
    auto& cat = out.cat;
    auto& U = out.U;
    for (const auto& o : c.objects)
        cat.add_object(o.name, o.u_dim);

    for (const auto& [pair, basis] : c.homs) {
        if (basis.empty())
            continue;
        std::vector<std::string> names;
        for (std::size_t k = 0; k < basis.size(); ++k)
            names.push_back(hom_name(c.objects[pair.first].name, c.objects[pair.second].name, k));
        auto first = cat.set_hom(pair.first, pair.second, names);
        for (std::size_t k = 0; k < basis.size(); ++k)
            U.on_basis.emplace(first + k, basis[k]);
    }

    HomSolvers solvers(cat, U);
    const std::size_t n = c.objects.size();
    for (ObjectId x = 0; x < n; ++x)
        if (cat.hom_dim(x, x) > 0)
            cat.set_identity(x, solve_in(solvers, cat, x, x, Matrix::identity(c.field, cat.u_dim(x)), failure,
                                         "identity of " + cat.object(x).name));

    for (ObjectId x = 0; x < n; ++x)
        for (ObjectId y = 0; y < n; ++y) {
            auto fs = cat.hom(x, y);
            if (fs.empty())
                continue;
            for (ObjectId z = 0; z < n; ++z) {
                auto gs = cat.hom(y, z);
                if (gs.empty() || cat.hom_dim(x, z) == 0)
                    continue;
                for (auto g : gs)
                    for (auto f : fs) {
                        Matrix image = U.on_basis.at(g) * U.on_basis.at(f);
                        cat.set_composition(g, f, solve_in(solvers, cat, x, z, image, failure,
                                                           "composite " + cat.basis(g).name + " . " +
                                                               cat.basis(f).name));
                    }
            }
        }

    for (const auto& [pair, product] : c.tensor)
        cat.set_tensor_object(pair.first, pair.second, product);
    U.r = c.r;
    U.i = c.i;

    // U(f (x) g) = r (U f (x) U g) i by naturality and splitness.
    for (const auto& [p1, z1] : c.tensor)
        for (const auto& [p2, z2] : c.tensor) {
            if (cat.hom_dim(z1, z2) == 0)
                continue;
            for (auto f : cat.hom(p1.first, p2.first))
                for (auto g : cat.hom(p1.second, p2.second)) {
                    Matrix image = c.r.at(p2) * kron(U.on_basis.at(f), U.on_basis.at(g)) * c.i.at(p1);
                    cat.set_tensor_morphism(f, g, solve_in(solvers, cat, z1, z2, image, failure,
                                                           "tensor " + cat.basis(f).name + " (x) " +
                                                               cat.basis(g).name));
                }
        }
    return out;
}

} // namespace vncore::instances::detail
