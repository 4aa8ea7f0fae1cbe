#include "oracles.hpp"

#include "vncore/coend.hpp"
#include "vncore/error.hpp"
#include "vncore/instances.hpp"

#include <doctest.h>

#include <random>

using namespace vncore;
using namespace vncore::coend;
using la::Field;
using la::Matrix;

namespace {

const Field Q = Field::rationals();

Matrix random_element(const Field& k, std::size_t n, std::mt19937& rng)
{
    return oracle::random_matrix(k, n, 1, rng, 9);
}

} // namespace

TEST_CASE("generic coend against the brute-force coequalizer")
{
    // Random weights: the oracle writes each relation left(v) - right(v) out
    // by hand and eliminates with its own arithmetic.
    std::mt19937 rng(2024);
    for (int t = 0; t < 40; ++t) {
        Weight w;
        const std::size_t blocks = 1 + rng() % 3;
        for (std::size_t b = 0; b < blocks; ++b)
            w.diagonal_dims.push_back(rng() % 4);
        const std::size_t nactions = rng() % 4;
        for (std::size_t a = 0; a < nactions; ++a) {
            const std::size_t s = rng() % blocks, tg = rng() % blocks, mixed = rng() % 3;
            w.actions.push_back({s, tg, mixed, oracle::random_matrix(Q, w.diagonal_dims[s], mixed, rng, 2),
                                 oracle::random_matrix(Q, w.diagonal_dims[tg], mixed, rng, 2)});
        }
        std::vector<std::size_t> offset;
        std::size_t ambient = 0;
        for (auto d : w.diagonal_dims) {
            offset.push_back(ambient);
            ambient += d;
        }
        oracle::Rows relations;
        for (const auto& act : w.actions)
            for (std::size_t v = 0; v < act.mixed_dim; ++v) {
                oracle::Row r(ambient);
                for (std::size_t i = 0; i < w.diagonal_dims[act.source]; ++i)
                    r[offset[act.source] + i] += act.left(i, v);
                for (std::size_t i = 0; i < w.diagonal_dims[act.target]; ++i)
                    r[offset[act.target] + i] -= act.right(i, v);
                relations.push_back(std::move(r));
            }
        const std::size_t expected = ambient - oracle::rank(relations, {});
        GenericCoend c = compute_coend_generic(Q, w);
        CHECK(c.dim() == expected);
        // Coprojections equalize every action.
        for (const auto& act : w.actions)
            CHECK(c.cop(act.source) * act.left == c.cop(act.target) * act.right);
    }
}

TEST_CASE("inconsistent weights raise ActionMismatch")
{
    Weight w{{2}, {{0, 0, 1, Matrix(Q, 3, 1), Matrix(Q, 2, 1)}}};
    try {
        compute_coend_generic(Q, w);
        FAIL("expected ActionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ActionMismatch);
    }
    Weight out_of_range{{2}, {{0, 4, 1, Matrix(Q, 2, 1), Matrix(Q, 2, 1)}}};
    CHECK_THROWS_AS(compute_coend_generic(Q, out_of_range), Error);
}

TEST_CASE("coend dimensions of the bundled examples match the oracle")
{
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"z2", 2}, {"z3-f7", 3}, {"s3", 6}, {"promonoidal-toy", 2}};
    for (const auto& [name, dim] : expected) {
        CAPTURE(name);
        auto inst = instances::example(name);
        auto E = compute_endv(inst.cat, inst.U, inst.gen);
        CHECK(oracle::coend_dim(inst) == dim);
        CHECK(E.dim() == dim);
        CHECK(check_dinaturality(inst.cat, inst.U, inst.gen, E).passed());
    }
}

TEST_CASE("density agrees with the oracle on every tabulated object")
{
    for (const auto& name : instances::example_names()) {
        auto inst = instances::example(name);
        for (fincat::ObjectId c = 0; c < inst.cat.objects().size(); ++c) {
            CAPTURE(inst.cat.object(c).name);
            auto mine = density_map(inst.cat, inst.U, inst.gen, c);
            auto ref = oracle::density(inst, c);
            CHECK(mine.coend_dim == ref.coend_dim);
            CHECK(mine.rank == ref.image_rank);
            CHECK(mine.target_dim == inst.cat.u_dim(c));
            CHECK(mine.dense());
        }
    }
}

TEST_CASE("dropping a generator breaks density")
{
    // Without sgn, the sign representation cannot be reached from triv.
    auto inst = instances::z2_instance();
    auto sgn = inst.cat.object_id("sgn");
    std::erase(inst.gen.generators, sgn);
    Report r = density_check(inst.cat, inst.U, inst.gen, sgn);
    REQUIRE(r.has("density.sgn", CheckStatus::Fail));
    CHECK(r.first_failure()->detail.rfind("NotDense", 0) == 0);
    CHECK_FALSE(density_map(inst.cat, inst.U, inst.gen, sgn).dense());
}

TEST_CASE("cop_general is independent of the resolution")
{
    std::mt19937 rng(20240531);
    for (const auto& name : instances::example_names()) {
        auto inst = instances::example(name);
        auto E = compute_endv(inst.cat, inst.U, inst.gen);
        const auto& k = inst.cat.field();
        for (const auto& [c, list] : inst.gen.resolutions) {
            CAPTURE(inst.cat.object(c).name);
            const std::size_t n = inst.cat.u_dim(c);
            if (n == 0)
                continue;
            REQUIRE(list.size() >= 2);
            CHECK(list[0].label != list[1].label);
            Matrix a = cop_via(inst.cat, inst.U, E, c, list[0]);
            Matrix b = cop_via(inst.cat, inst.U, E, c, list[1]);
            for (int t = 0; t < 20; ++t) {
                Matrix v = random_element(k, n * n, rng);
                CHECK(a * v == b * v);
            }
            CHECK(cop_general(inst.cat, inst.U, inst.gen, E, c) == a);
        }
    }
}

TEST_CASE("cop_general on a generator is its block coprojection")
{
    auto inst = instances::s3_instance();
    auto E = compute_endv(inst.cat, inst.U, inst.gen);
    for (auto a : inst.gen.generators)
        CHECK(cop_general(inst.cat, inst.U, inst.gen, E, a) == E.cop(a));
}

TEST_CASE("objects without a resolution raise NoResolution")
{
    auto inst = instances::z2_instance();
    auto E = compute_endv(inst.cat, inst.U, inst.gen);
    auto c = inst.cat.object_id("triv.sgn");
    inst.gen.resolutions.erase(c);
    try {
        cop_general(inst.cat, inst.U, inst.gen, E, c);
        FAIL("expected NoResolution");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoResolution);
    }
}
