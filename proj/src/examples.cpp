#include "vncore/instances.hpp"

namespace vncore::instances {

namespace {

Matrix scalar(const Field& k, long v)
{
    return Matrix::from_rows(k, {{v}});
}

Instance tagged(Instance inst, std::string name)
{
    inst.meta["example"] = std::move(name);
    return inst;
}

PromonoidalSpec two_point_base()
{
    PromonoidalSpec base;
    for (const char* name : {"x", "y"}) {
        PointSpec p;
        p.name = name;
        p.dual = name;
        base.points.push_back(p);
    }
    return base;
}

} // namespace

Instance z2_instance()
{
    const Field k = Field::rationals();
    RepSpec triv{"triv", {scalar(k, 1), scalar(k, 1)}};
    RepSpec sgn{"sgn", {scalar(k, 1), scalar(k, -1)}};
    return tagged(build_group_instance(cyclic_group(2), {triv, sgn}, k), "z2");
}

Instance z3_f7_instance()
{
    // 2 is a primitive cube root of unity mod 7.
    const Field k = Field::prime(7);
    std::vector<RepSpec> reps;
    for (long c = 0; c < 3; ++c) {
        RepSpec r{"chi" + std::to_string(c), {}};
        long value = 1;
        long root = c == 0 ? 1 : c == 1 ? 2 : 4;
        for (int g = 0; g < 3; ++g) {
            r.matrices.push_back(scalar(k, value));
            value = value * root % 7;
        }
        reps.push_back(std::move(r));
    }
    return tagged(build_group_instance(cyclic_group(3), reps, k), "z3-f7");
}

Instance s3_instance()
{
    const Field k = Field::rationals();
    GroupSpec g = symmetric_group_3();
    RepSpec triv{"triv", {}}, sgn{"sgn", {}}, standard{"std", {}};
    for (const auto& name : g.elements) {
        std::size_t s[3] = {std::size_t(name[0] - '0'), std::size_t(name[1] - '0'), std::size_t(name[2] - '0')};
        long inversions = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                inversions += s[a] > s[b];
        triv.matrices.push_back(scalar(k, 1));
        sgn.matrices.push_back(scalar(k, inversions % 2 ? -1 : 1));
        // Sum-zero subspace of k^3 with basis v1 = e0 - e1, v2 = e1 - e2; a
        // sum-zero vector w equals w0 v1 - w2 v2.
        std::vector<std::vector<long>> cols;
        for (auto [p, q] : {std::pair{0, 1}, std::pair{1, 2}}) {
            long w[3] = {0, 0, 0};
            w[s[p]] += 1;
            w[s[q]] -= 1;
            cols.push_back({w[0], -w[2]});
        }
        standard.matrices.push_back(Matrix::from_rows(k, {{cols[0][0], cols[1][0]}, {cols[0][1], cols[1][1]}}));
    }
    // The invariant form in the basis v1, v2 identifies std with its dual.
    DualWitness w{"std", "std", Matrix::from_rows(k, {{2, -1}, {-1, 2}})};
    return tagged(build_group_instance(g, {triv, sgn, standard}, k, {w}), "s3");
}

Instance promonoidal_toy_instance()
{
    const Field k = Field::rationals();
    // dx and hx are isomorphic, which gives the coend nontrivial relations.
    std::vector<PresheafSpec> presheaves{{"dx", {1, 0}, {}}, {"dy", {0, 1}, {}}, {"hx", {1, 0}, {}}};
    return tagged(build_promonoidal_instance(two_point_base(), presheaves, k), "promonoidal-toy");
}

std::vector<std::string> example_names()
{
    return {"z2", "z3-f7", "s3", "promonoidal-toy"};
}

Instance example(std::string_view name)
{
    if (name == "z2")
        return z2_instance();
    if (name == "z3-f7")
        return z3_f7_instance();
    if (name == "s3")
        return s3_instance();
    if (name == "promonoidal-toy")
        return promonoidal_toy_instance();
    raise(ErrorCode::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

} // namespace vncore::instances
