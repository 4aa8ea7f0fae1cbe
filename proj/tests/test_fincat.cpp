#include "vncore/error.hpp"
#include "vncore/fincat.hpp"
#include "vncore/instances.hpp"

#include <doctest.h>

using namespace vncore;
using namespace vncore::fincat;
using la::Matrix;

namespace {

const la::Field Q = la::Field::rationals();

std::vector<Scalar> s(std::initializer_list<long> v)
{
    std::vector<Scalar> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// One object A with U(A) = k and End(A) spanned by 1, a, b. The products
// a.a = b, b.a = a make composition non-associative: (a.a).a = a, a.(a.a) = 0.
CatPresentation three_dim_endos(bool associative)
{
    CatPresentation cat(Q);
    ObjectId A = cat.add_object("A", 1);
    BasisId one = cat.set_hom(A, A, {"1", "a", "b"});
    BasisId a = one + 1, b = one + 2;
    cat.set_identity(A, s({1, 0, 0}));
    for (BasisId x : {one, a, b}) {
        std::vector<Scalar> e(3);
        e[x - one] = 1;
        cat.set_composition(one, x, e);
        cat.set_composition(x, one, e);
    }
    if (associative) {
        for (BasisId x : {a, b})
            for (BasisId y : {a, b})
                cat.set_composition(x, y, s({0, 0, 0}));
    } else {
        cat.set_composition(a, a, s({0, 0, 1}));
        cat.set_composition(a, b, s({0, 0, 0}));
        cat.set_composition(b, a, s({0, 1, 0}));
        cat.set_composition(b, b, s({0, 0, 0}));
    }
    return cat;
}

// The unit object of Vect restricted to k, with every table filled in.
Instance point_instance()
{
    Instance inst{CatPresentation(Q), {}, {}, {}};
    auto& cat = inst.cat;
    ObjectId A = cat.add_object("A", 1);
    BasisId id = cat.set_hom(A, A, {"id"});
    cat.set_identity(A, s({1}));
    cat.set_composition(id, id, s({1}));
    cat.set_tensor_object(A, A, A);
    cat.set_tensor_morphism(id, id, s({1}));
    inst.U.on_basis.emplace(id, Matrix::identity(Q, 1));
    inst.U.r.emplace(std::pair(A, A), Matrix::identity(Q, 1));
    inst.U.i.emplace(std::pair(A, A), Matrix::identity(Q, 1));
    return inst;
}

} // namespace

TEST_CASE("hand-built category validates")
{
    auto inst = point_instance();
    CHECK(validate_category(inst.cat).passed());
    CHECK(validate_U(inst.cat, inst.U).passed());
}

TEST_CASE("composition of linear combinations is bilinear")
{
    auto cat = three_dim_endos(true);
    auto one = *cat.find_basis("1"), a = *cat.find_basis("a");
    Morphism x = cat.add(cat.basis_morphism(one), cat.scale(cat.basis_morphism(a), Scalar(2)));
    // (1 + 2a)(1 + 2a) = 1 + 4a since a.a = 0.
    CHECK(cat.compose(x, x).coeffs == s({1, 4, 0}));
    CHECK(cat.identity(0).coeffs == s({1, 0, 0}));
}

TEST_CASE("associativity failures name the triple")
{
    CHECK(validate_category(three_dim_endos(true)).passed());
    Report r = validate_category(three_dim_endos(false));
    REQUIRE(r.has("category.associativity", CheckStatus::Fail));
    CHECK(r.first_failure()->detail.find("a") != std::string::npos);
}

TEST_CASE("missing identity is reported")
{
    CatPresentation cat(Q);
    ObjectId A = cat.add_object("A", 1);
    BasisId id = cat.set_hom(A, A, {"id"});
    cat.set_composition(id, id, s({1}));
    CHECK(validate_category(cat).has("category.identity", CheckStatus::Fail));
    CHECK_THROWS_AS(cat.identity(A), Error);
}

TEST_CASE("malformed tables are rejected")
{
    CatPresentation cat(Q);
    ObjectId A = cat.add_object("A", 1);
    ObjectId B = cat.add_object("B", 1);
    CHECK_THROWS_AS(cat.add_object("A", 2), Error);
    BasisId f = cat.set_hom(A, B, {"f"});
    CHECK_THROWS_AS(cat.set_hom(A, B, {"g"}), Error);
    CHECK_THROWS_AS(cat.set_hom(B, A, {"f"}), Error);
    CHECK_THROWS_AS(cat.set_composition(f, f, s({1})), Error);
    CHECK_THROWS_AS(cat.object_id("C"), Error);
    BasisId g = cat.set_hom(B, A, {"g"});
    // An undeclared hom is zero, so g . f is the zero endomorphism of A.
    CHECK(cat.compose(cat.basis_morphism(g), cat.basis_morphism(f)).coeffs.empty());
    // Declared but untabulated composites are an error.
    cat.set_hom(A, A, {"id_A"});
    CHECK_THROWS_AS(cat.compose(cat.basis_morphism(g), cat.basis_morphism(f)), Error);
}

TEST_CASE("U must be functorial and split")
{
    auto inst = point_instance();
    inst.U.on_basis.begin()->second = Matrix::from_rows(Q, {{2}});
    Report r = validate_U(inst.cat, inst.U);
    CHECK(r.has("U.identity", CheckStatus::Fail));

    auto split = point_instance();
    split.U.i.begin()->second = Matrix::from_rows(Q, {{3}});
    CHECK(validate_U(split.cat, split.U).has("U.splitness", CheckStatus::Fail));

    auto shapes = point_instance();
    shapes.U.r.begin()->second = Matrix(Q, 1, 2);
    CHECK(validate_U(shapes.cat, shapes.U).has("U.shapes", CheckStatus::Fail));
}

TEST_CASE("E1 and E2 hold in every dimension")
{
    for (const auto& k : {Q, la::Field::prime(5)})
        for (std::size_t n = 0; n <= 4; ++n) {
            Report r = check_E1_E2(k, n);
            CHECK(r.has("E1", CheckStatus::Pass));
            CHECK(r.has("E2", CheckStatus::Pass));
        }
}

TEST_CASE("generator data of the bundled examples validates")
{
    for (const auto& name : instances::example_names()) {
        CAPTURE(name);
        auto inst = instances::example(name);
        CHECK(validate_category(inst.cat).passed());
        CHECK(validate_U(inst.cat, inst.U).passed());
        Report r = validate_generator_data(inst.cat, inst.U, inst.gen);
        CHECK(r.passed());
    }
}

TEST_CASE("required resolution objects are the non-generator products")
{
    auto inst = instances::z2_instance();
    auto needed = required_resolution_objects(inst.cat, inst.gen);
    // Four ordered pairs and the triples (A.A*).A with A* = A.
    CHECK(needed.size() == 6);
    for (auto c : needed) {
        CHECK_FALSE(inst.gen.is_generator(c));
        CHECK(inst.gen.resolutions.count(c) == 1);
    }
}

TEST_CASE("generator checks catch a broken u and a broken e")
{
    auto inst = instances::s3_instance();
    auto bad_u = inst;
    auto& u = bad_u.gen.u.begin()->second;
    u = u.scaled(Scalar(3));
    CHECK_FALSE(validate_generator_data(bad_u.cat, bad_u.U, bad_u.gen).passed());

    auto no_e = inst;
    no_e.gen.e.erase(no_e.gen.e.begin());
    CHECK(validate_generator_data(no_e.cat, no_e.U, no_e.gen).has("generators.structure", CheckStatus::Fail));
}
