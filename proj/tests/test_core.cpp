#include "oracles.hpp"

#include "vncore/coend.hpp"
#include "vncore/core.hpp"
#include "vncore/error.hpp"
#include "vncore/instances.hpp"
#include "vncore/pipeline.hpp"

#include <doctest.h>

#include <map>

using namespace vncore;
using namespace vncore::vn;
using la::Field;
using la::Matrix;

namespace {

// A group instance rebuilt in the test: the group table and one matrix per
// element for every generator, written down from first principles.
struct GroupOracle {
    instances::GroupSpec group;
    std::map<std::string, std::vector<Matrix>> reps;
};

Matrix scalar(const Field& k, long v)
{
    return Matrix(k, 1, 1, {k.from_int(v)});
}

GroupOracle z2_oracle()
{
    const Field k = Field::rationals();
    GroupOracle o{{{"e", "g"}, {{0, 1}, {1, 0}}, {0, 1}}, {}};
    o.reps["triv"] = {scalar(k, 1), scalar(k, 1)};
    o.reps["sgn"] = {scalar(k, 1), scalar(k, -1)};
    return o;
}

GroupOracle z3_oracle()
{
    const Field k = Field::prime(7);
    GroupOracle o{{{"e", "g", "g^2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {0, 2, 1}}, {}};
    // Characters g |-> w^c with w = 2 of order 3 in F_7.
    const long w[3] = {1, 2, 4};
    for (int c = 0; c < 3; ++c)
        for (int g = 0; g < 3; ++g) {
            long v = 1;
            for (int t = 0; t < g; ++t)
                v = v * w[c] % 7;
            o.reps["chi" + std::to_string(c)].push_back(scalar(k, v));
        }
    return o;
}

// S3 acting on k^3 by permuting coordinates, restricted to the sum-zero plane
// with basis e0 - e1, e1 - e2.
GroupOracle s3_oracle()
{
    const Field k = Field::rationals();
    GroupOracle o{instances::symmetric_group_3(), {}};
    for (const auto& name : o.group.elements) {
        int s[3] = {name[0] - '0', name[1] - '0', name[2] - '0'};
        int sign = 1;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (s[a] > s[b])
                    sign = -sign;
        o.reps["triv"].push_back(scalar(k, 1));
        o.reps["sgn"].push_back(scalar(k, sign));
        Matrix P(k, 3, 3);
        for (int p = 0; p < 3; ++p)
            P.set(s[p], p, k.one());
        Matrix basis = Matrix::from_rows(k, {{1, 0}, {-1, 1}, {0, -1}});
        // Coordinates in the basis: solve basis * M = P * basis.
        oracle::Rows A(2, oracle::Row(3)), B(2, oracle::Row(3)), X;
        Matrix image = P * basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                A[i][j] = basis(j, i);
                B[i][j] = image(j, i);
            }
        REQUIRE(oracle::solve_left(A, B, {}, X));
        Matrix M(k, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                M.set(j, i, X[i][j]);
        o.reps["std"].push_back(M);
    }
    return o;
}

// ev : E -> k^G determined by ev . cop_A = (phi (x) x |-> (g |-> rho_A(g)[phi][x])).
Matrix evaluation_map(const VNCoreData& core, const GroupOracle& o)
{
    const Field& k = core.field;
    const std::size_t G = o.group.elements.size();
    oracle::Rows cop(core.dim), F(G);
    for (const auto& [name, block] : core.cop_blocks) {
        const auto& rho = o.reps.at(name);
        const std::size_t n = rho.front().rows();
        REQUIRE(block.cols() == n * n);
        for (std::size_t i = 0; i < core.dim; ++i)
            for (std::size_t c = 0; c < block.cols(); ++c)
                cop[i].push_back(block(i, c));
        for (std::size_t g = 0; g < G; ++g)
            for (std::size_t phi = 0; phi < n; ++phi)
                for (std::size_t x = 0; x < n; ++x)
                    F[g].push_back(rho[g](phi, x));
    }
    oracle::Rows X;
    REQUIRE(oracle::solve_left(cop, F, oracle::arith_of(k), X));
    Matrix ev(k, G, core.dim);
    for (std::size_t g = 0; g < G; ++g)
        for (std::size_t i = 0; i < core.dim; ++i)
            ev.set(g, i, k.from_rational(X[g][i]));
    return ev;
}

void check_against_functions(const std::string& name, const GroupOracle& o)
{
    CAPTURE(name);
    auto inst = instances::example(name);
    auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
    auto core = build_core(inst.cat, inst.U, inst.gen, E);
    const Field& k = core.field;
    const std::size_t G = o.group.elements.size(), d = core.dim;
    Matrix ev = evaluation_map(core, o);
    // Peter-Weyl: matrix coefficients of a complete set of irreducibles are a basis of k^G.
    CHECK(la::rank(ev) == G);
    CHECK(d == G);

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix prod = ev * core.mu.col(i * d + j);
            for (std::size_t g = 0; g < G; ++g)
                CHECK(prod(g, 0) == k.mul(ev(g, i), ev(g, j)));
        }
    Matrix evev = la::kron(ev, ev);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix split = evev * core.delta.col(i);
        Matrix anti = ev * core.S.col(i);
        for (std::size_t g = 0; g < G; ++g) {
            for (std::size_t h = 0; h < G; ++h)
                CHECK(split(g * G + h, 0) == ev(o.group.table[g][h], i));
            CHECK(anti(g, 0) == ev(o.group.inverse[g], i));
        }
    }

    // V(a (x) b)(g, h) = a(g) b(gh) and W(a (x) b)(g, h) = a(g) b(g^-1 h).
    Matrix V = fusion_operator(core), W = partial_inverse_operator(core);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix v = evev * V.col(i * d + j);
            Matrix w = evev * W.col(i * d + j);
            for (std::size_t g = 0; g < G; ++g)
                for (std::size_t h = 0; h < G; ++h) {
                    CHECK(v(g * G + h, 0) == k.mul(ev(g, i), ev(o.group.table[g][h], j)));
                    CHECK(w(g * G + h, 0) == k.mul(ev(g, i), ev(o.group.table[o.group.inverse[g]][h], j)));
                }
        }
}

VNCoreData built(const std::string& name)
{
    auto inst = instances::example(name);
    auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
    return build_core(inst.cat, inst.U, inst.gen, E);
}

} // namespace

TEST_CASE("group cores are the function algebras k^G")
{
    check_against_functions("z2", z2_oracle());
    check_against_functions("z3-f7", z3_oracle());
    check_against_functions("s3", s3_oracle());
}

TEST_CASE("all bundled cores satisfy the axioms")
{
    for (const auto& name : instances::example_names()) {
        CAPTURE(name);
        auto core = built(name);
        CHECK(check_shapes(core).passed());
        CHECK(check_semibialgebra(core).passed());
        CHECK(check_vn_axiom(core).passed());
        CHECK(check_fusion_equation(core).passed());
        CHECK(check_partial_inverse(core).passed());
        CHECK(check_antipodal(core).has("antipodal", CheckStatus::Info));
    }
}

TEST_CASE("antipodal is reported true on k^G")
{
    Report r = check_antipodal(built("z2"));
    REQUIRE(r.entries().size() == 1);
    CHECK(r.entries()[0].detail.rfind("true", 0) == 0);
    Report s3 = check_antipodal(built("s3"));
    CHECK(s3.entries()[0].detail.rfind("true", 0) == 0);

    // Doubling S on the first basis vector breaks S(xy) = S(y)S(x).
    auto core = built("s3");
    for (std::size_t i = 0; i < core.dim; ++i)
        core.S.set(i, 0, core.field.mul(core.S(i, 0), core.field.from_int(2)));
    Report broken = check_antipodal(core);
    REQUIRE(broken.entries().size() == 1);
    CHECK(broken.entries()[0].status == CheckStatus::Info);
    CHECK(broken.entries()[0].detail.rfind("false", 0) == 0);
}

TEST_CASE("axiom checks are sensitive")
{
    auto core = built("s3");
    auto zero_s = core;
    zero_s.S = Matrix(core.field, core.dim, core.dim);
    CHECK(check_vn_axiom(zero_s).has("vn_axiom", CheckStatus::Fail));

    auto doubled = core;
    doubled.delta = core.delta.scaled(core.field.from_int(2));
    CHECK(check_semibialgebra(doubled).has("semibialgebra.multiplicativity", CheckStatus::Fail));
    CHECK(check_fusion_equation(doubled).has("fusion.equation", CheckStatus::Fail));
    CHECK(check_vn_axiom(doubled).has("vn_axiom", CheckStatus::Fail));

    auto bad_mu = core;
    bad_mu.mu.set(0, 1, bad_mu.mu(0, 1) + 1);
    CHECK_FALSE(check_semibialgebra(bad_mu).passed());

    auto bad_shape = core;
    bad_shape.S = Matrix(core.field, core.dim, core.dim + 1);
    CHECK_FALSE(check_shapes(bad_shape).passed());
}

TEST_CASE("unit completion adds an exact unit")
{
    for (const auto& name : instances::example_names()) {
        CAPTURE(name);
        auto core = built(name);
        auto c = complete_with_unit(core);
        const std::size_t n = c.dim;
        CHECK(n == core.dim + 1);
        REQUIRE(c.has_unit);
        Matrix one = *c.unit;
        CHECK(one(n - 1, 0) == 1);
        CHECK(c.S * one == one);
        CHECK(c.delta * one == la::kron(one, one));
        for (std::size_t i = 0; i < n; ++i) {
            Matrix e(c.field, n, 1);
            e.set(i, 0, c.field.one());
            CHECK(c.mu * la::kron(one, e) == e);
            CHECK(c.mu * la::kron(e, one) == e);
        }
        CHECK(check_unitality(c).passed());
        CHECK(check_semibialgebra(c).passed());
        CHECK(check_vn_axiom(c).passed());
        CHECK(check_fusion_equation(c).passed());
        CHECK(check_partial_inverse(c).passed());
        // The original multiplication survives on the old basis.
        CHECK(c.mu.block(0, 0, core.dim, 1) == core.mu.block(0, 0, core.dim, 1));
    }
}

TEST_CASE("the z2 core completes to dimension 3")
{
    CHECK(complete_with_unit(built("z2")).dim == 3);
}

TEST_CASE("descent failures raise NotWellDefined")
{
    // dx and hx are isomorphic, so E has relations; doubling r on one pair
    // makes mu disagree on two related elements.
    auto inst = instances::promonoidal_toy_instance();
    auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
    auto pair = std::pair(inst.cat.object_id("dx"), inst.cat.object_id("hx"));
    inst.U.r.at(pair) = inst.U.r.at(pair).scaled(la::Scalar(2));
    try {
        build_mu(inst.cat, inst.U, inst.gen, E);
        FAIL("expected NotWellDefined");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotWellDefined);
    }
    auto forced = pipeline::build(inst, true);
    CHECK_FALSE(forced.core);
    CHECK(forced.report.has("build", CheckStatus::Fail));
}

TEST_CASE("a relation-free coend always descends")
{
    // z2 has no morphisms between distinct generators; broken structure maps
    // still give a core, whose laws then fail.
    auto inst = instances::z2_instance();
    auto E = coend::compute_endv(inst.cat, inst.U, inst.gen);
    for (auto& [pair, i] : inst.U.i)
        i = i.scaled(la::Scalar(1, 2));
    auto core = build_core(inst.cat, inst.U, inst.gen, E);
    CHECK_FALSE(check_semibialgebra(core).passed());
}
