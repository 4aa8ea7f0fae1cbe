#include "vncore/core.hpp"

#include "vncore/error.hpp"

namespace vncore::vn {

using la::kron;

namespace {

Matrix I(const Field& k, std::size_t n)
{
    return Matrix::identity(k, n);
}

// Name of a basis vector of E^(x legs), e.g. "e1 (x) e0".
std::string basis_name(std::size_t index, std::size_t dim, std::size_t legs)
{
    std::vector<std::size_t> digits(legs);
    for (std::size_t k = legs; k-- > 0;) {
        digits[k] = dim ? index % dim : 0;
        index = dim ? index / dim : 0;
    }
    std::string out;
    for (std::size_t k = 0; k < legs; ++k)
        out += (k ? " (x) e" : "e") + std::to_string(digits[k]);
    return out;
}

// Index of the first column where a and b differ, or cols() when equal.
std::size_t first_difference(const Matrix& a, const Matrix& b)
{
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c))
                return c;
    return a.cols();
}

void compare(Report& report, const std::string& name, const Matrix& lhs, const Matrix& rhs, std::size_t dim,
             std::size_t legs, const std::string& detail)
{
    auto c = first_difference(lhs, rhs);
    if (c == lhs.cols())
        report.pass(name, detail);
    else
        report.fail(name, "differs on " + basis_name(c, dim, legs) + ", deviation rank " +
                              std::to_string(la::rank(lhs - rhs)));
}

void compare_info(Report& report, const std::string& name, const Matrix& lhs, const Matrix& rhs, std::size_t dim,
                  std::size_t legs)
{
    auto c = first_difference(lhs, rhs);
    if (c == lhs.cols())
        report.info(name, "holds");
    else
        report.info(name, "does not hold, differs on " + basis_name(c, dim, legs));
}

constexpr std::size_t middle_swap[] = {0, 2, 1, 3};
constexpr std::size_t swap2[] = {1, 0};
constexpr std::size_t swap23[] = {0, 2, 1};

} // namespace

// ---------------------------------------------------------------- construction

Matrix build_mu(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                const fincat::GeneratorData& gen, const coend::CoendSpace& E)
{
    const Field& k = cat.field();
    const auto& q = E.quotient();
    const std::size_t N = q.ambient_dim;
    Matrix ambient(k, E.dim(), N * N);
    for (auto a : gen.generators)
        for (auto b : gen.generators) {
            auto ab = cat.tensor_object(a, b);
            if (!ab)
                raise(ErrorCode::Malformed,
                      "tensor of generators " + cat.object(a).name + ", " + cat.object(b).name + " not tabulated");
            const std::size_t na = cat.u_dim(a), nb = cat.u_dim(b);
            Matrix cop_ab = coend::cop_general(cat, U, gen, E, *ab);
            // Defined on (phi, psi, x, y); reorder to the block legs (phi, x, psi, y).
            Matrix on_legs = cop_ab * kron(U.i_at(a, b).transpose(), U.r_at(a, b));
            const std::size_t dims[] = {na, na, nb, nb};
            Matrix block = la::permute_input(on_legs, dims, middle_swap);
            const std::size_t oa = E.coend.block_offsets[E.block_of.at(a)];
            const std::size_t ob = E.coend.block_offsets[E.block_of.at(b)];
            for (std::size_t x = 0; x < na * na; ++x)
                for (std::size_t y = 0; y < nb * nb; ++y) {
                    const std::size_t col = (oa + x) * N + (ob + y);
                    const std::size_t src = x * nb * nb + y;
                    for (std::size_t r = 0; r < E.dim(); ++r)
                        if (sgn(block(r, src)) != 0)
                            ambient.set(r, col, block(r, src));
                }
        }
    return la::induced_on_quotient(la::tensor_quotient(q, q), la::trivial_quotient(k, E.dim()), ambient);
}

Matrix build_delta(const fincat::CatPresentation& cat, const fincat::UFunctorData&,
                   const fincat::GeneratorData& gen, const coend::CoendSpace& E)
{
    const Field& k = cat.field();
    const auto& q = E.quotient();
    const std::size_t d = E.dim();
    Matrix ambient(k, d * d, q.ambient_dim);
    for (auto a : gen.generators) {
        const std::size_t n = cat.u_dim(a);
        Matrix cop = E.cop(a);
        // phi (x) x  |->  sum_i cop(phi (x) e_i) (x) cop(e^i (x) x)
        Matrix block = kron(cop, cop) * kron(I(k, n), kron(la::coevaluation(k, n), I(k, n)));
        ambient.set_block(0, E.coend.block_offsets[E.block_of.at(a)], block);
    }
    return la::induced_on_quotient(q, la::trivial_quotient(k, d * d), ambient);
}

Matrix build_S(const fincat::CatPresentation& cat, const fincat::UFunctorData&, const fincat::GeneratorData& gen,
               const coend::CoendSpace& E)
{
    const Field& k = cat.field();
    const auto& q = E.quotient();
    Matrix ambient(k, E.dim(), q.ambient_dim);
    for (auto a : gen.generators) {
        const std::size_t n = cat.u_dim(a);
        const fincat::ObjectId star = gen.star_obj.at(a);
        const Matrix& u = gen.u.at(a);
        // phi (x) x  |->  cop_{A*}(u^T x (x) u^-1 phi)
        const std::size_t dims[] = {n, n};
        Matrix on_swapped = E.cop(star) * kron(u.transpose(), la::inverse(u));
        Matrix block = la::permute_input(on_swapped, dims, swap2);
        ambient.set_block(0, E.coend.block_offsets[E.block_of.at(a)], block);
    }
    return la::induced_on_quotient(q, la::trivial_quotient(k, E.dim()), ambient);
}

VNCoreData build_core(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                      const fincat::GeneratorData& gen, const coend::CoendSpace& E)
{
    VNCoreData core{cat.field(), E.dim(), build_mu(cat, U, gen, E), build_delta(cat, U, gen, E),
                    build_S(cat, U, gen, E), false, std::nullopt, {}};
    for (auto a : gen.generators)
        core.cop_blocks.emplace_back(cat.object(a).name, E.cop(a));
    return core;
}

// ---------------------------------------------------------------- checks

Report check_shapes(const VNCoreData& c)
{
    Report report;
    const std::size_t d = c.dim;
    bool ok = c.mu.rows() == d && c.mu.cols() == d * d && c.delta.rows() == d * d && c.delta.cols() == d &&
              c.S.rows() == d && c.S.cols() == d;
    if (c.has_unit)
        ok = ok && c.unit && c.unit->rows() == d && c.unit->cols() == 1;
    if (ok)
        report.pass("core.shapes", "dim " + std::to_string(d));
    else
        report.fail("core.shapes", "mu, delta, S or unit inconsistent with dim " + std::to_string(d));
    return report;
}

Report check_semibialgebra(const VNCoreData& c)
{
    Report report;
    const Field& k = c.field;
    const std::size_t d = c.dim;
    compare(report, "semibialgebra.associativity", c.mu * kron(c.mu, I(k, d)), c.mu * kron(I(k, d), c.mu), d, 3,
            "mu(mu (x) 1) = mu(1 (x) mu)");
    compare(report, "semibialgebra.coassociativity", kron(c.delta, I(k, d)) * c.delta,
            kron(I(k, d), c.delta) * c.delta, d, 1, "(delta (x) 1)delta = (1 (x) delta)delta");
    const std::size_t dims[] = {d, d, d, d};
    Matrix rhs = la::permute_input(kron(c.mu, c.mu), dims, middle_swap) * kron(c.delta, c.delta);
    compare(report, "semibialgebra.multiplicativity", c.delta * c.mu, rhs, d, 2,
            "delta mu = (mu (x) mu)(1 (x) swap (x) 1)(delta (x) delta)");
    return report;
}

Report check_vn_axiom(const VNCoreData& c)
{
    Report report;
    const Field& k = c.field;
    const std::size_t d = c.dim;
    Matrix composite = c.mu * kron(c.mu, I(k, d)) * kron(I(k, d), kron(c.S, I(k, d))) * kron(I(k, d), c.delta) *
                       c.delta;
    compare(report, "vn_axiom", composite, I(k, d), d, 1, "mu(mu (x) 1)(1 (x) S (x) 1)(1 (x) delta)delta = 1");
    return report;
}

Report check_antipodal(const VNCoreData& c)
{
    Report report;
    const std::size_t d = c.dim;
    const std::size_t dims[] = {d, d};
    Matrix rhs = la::permute_input(c.mu * kron(c.S, c.S), dims, swap2);
    auto col = first_difference(c.S * c.mu, rhs);
    bool antipodal = col == rhs.cols();
    std::string detail = antipodal ? "S(xy) = S(y)S(x)" : "S(xy) != S(y)S(x) on " + basis_name(col, d, 2);
    if (c.has_unit && c.unit) {
        bool fixes = c.S * *c.unit == *c.unit;
        antipodal = antipodal && fixes;
        detail += fixes ? ", S(1) = 1" : ", S(1) != 1";
    }
    report.info("antipodal", std::string(antipodal ? "true" : "false") + " (" + detail + ")");
    return report;
}

Matrix fusion_operator(const VNCoreData& c)
{
    const Field& k = c.field;
    return kron(c.mu, I(k, c.dim)) * kron(I(k, c.dim), c.delta);
}

Matrix partial_inverse_operator(const VNCoreData& c)
{
    const Field& k = c.field;
    const std::size_t d = c.dim;
    return kron(c.mu, I(k, d)) * kron(I(k, d), kron(c.S, I(k, d))) * kron(I(k, d), c.delta);
}

Report check_fusion_equation(const VNCoreData& c)
{
    Report report;
    const Field& k = c.field;
    const std::size_t d = c.dim;
    Matrix V = fusion_operator(c);
    Matrix V12 = kron(V, I(k, d));
    Matrix V23 = kron(I(k, d), V);
    const std::size_t dims[] = {d, d, d};
    Matrix V13 = la::permute_output(la::permute_input(V12, dims, swap23), dims, swap23);
    compare(report, "fusion.equation", V12 * V23, V23 * V13 * V12, d, 3, "V12 V23 = V23 V13 V12");
    compare_info(report, "fusion.mirror", V23 * V12, V12 * V13 * V23, d, 3);
    return report;
}

Report check_partial_inverse(const VNCoreData& c)
{
    Report report;
    const std::size_t d = c.dim;
    Matrix V = fusion_operator(c);
    Matrix W = partial_inverse_operator(c);
    compare(report, "partial_inverse.VWV", V * W * V, V, d, 2, "V W V = V");
    compare_info(report, "partial_inverse.WVW", W * V * W, W, d, 2);
    return report;
}

// ---------------------------------------------------------------- unit completion

VNCoreData complete_with_unit(const VNCoreData& c)
{
    const Field& k = c.field;
    const std::size_t d = c.dim;
    const std::size_t n = d + 1;
    const std::size_t one = d;

    Matrix mu(k, n, n * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < d; ++r)
                if (sgn(c.mu(r, i * d + j)) != 0)
                    mu.set(r, i * n + j, c.mu(r, i * d + j));
    for (std::size_t x = 0; x < d; ++x) {
        mu.set(x, one * n + x, k.one());
        mu.set(x, x * n + one, k.one());
    }
    mu.set(one, one * n + one, k.one());

    Matrix delta(k, n * n, n);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(c.delta(i * d + j, x)) != 0)
                    delta.set(i * n + j, x, c.delta(i * d + j, x));
    delta.set(one * n + one, one, k.one());

    Matrix S = la::direct_sum(c.S, I(k, 1));
    Matrix unit(k, n, 1);
    unit.set(one, 0, k.one());

    VNCoreData out{k, n, std::move(mu), std::move(delta), std::move(S), true, std::move(unit), {}};
    out.cop_blocks.reserve(c.cop_blocks.size());
    for (const auto& [name, cop] : c.cop_blocks)
        out.cop_blocks.emplace_back(name, la::vstack(cop, Matrix(k, 1, cop.cols())));
    return out;
}

Report check_unitality(const VNCoreData& c)
{
    Report report;
    if (!c.has_unit || !c.unit) {
        report.info("unitality", "no unit");
        return report;
    }
    const Field& k = c.field;
    const std::size_t d = c.dim;
    const Matrix& u = *c.unit;
    compare(report, "unitality.left", c.mu * kron(u, I(k, d)), I(k, d), d, 1, "mu(1 (x) x) = x");
    compare(report, "unitality.right", c.mu * kron(I(k, d), u), I(k, d), d, 1, "mu(x (x) 1) = x");
    if (c.delta * u == kron(u, u))
        report.pass("unitality.delta", "delta(1) = 1 (x) 1");
    else
        report.fail("unitality.delta", "delta(1) != 1 (x) 1");
    if (c.S * u == u)
        report.pass("unitality.S", "S(1) = 1");
    else
        report.fail("unitality.S", "S(1) != 1");
    return report;
}

} // namespace vncore::vn
