#include "concrete.hpp"
#include "vncore/instances.hpp"

#include <algorithm>
#include <array>

namespace vncore::instances {

using detail::ConcreteCategory;
using fincat::ObjectId;
using la::kron;

void GroupSpec::check() const
{
    const std::size_t n = elements.size();
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "group has no elements");
    if (table.size() != n || inverse.size() != n)
        raise(ErrorCode::InvalidArgument, "group table or inverse has the wrong size");
    for (const auto& row : table)
        if (row.size() != n || std::any_of(row.begin(), row.end(), [n](std::size_t v) { return v >= n; }))
            raise(ErrorCode::InvalidArgument, "group table row is malformed");
    const std::size_t e = identity();
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a][e] != a)
            raise(ErrorCode::InvalidArgument, "identity law fails at " + elements[a]);
        if (inverse[a] >= n || table[a][inverse[a]] != e || table[inverse[a]][a] != e)
            raise(ErrorCode::InvalidArgument, "inverse law fails at " + elements[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    raise(ErrorCode::InvalidArgument, "associativity fails at (" + elements[a] + ", " +
                                                          elements[b] + ", " + elements[c] + ")");
    }
}

std::size_t GroupSpec::identity() const
{
    for (std::size_t e = 0; e < elements.size(); ++e) {
        bool left_unit = true;
        for (std::size_t a = 0; a < elements.size() && left_unit; ++a)
            left_unit = table[e][a] == a;
        if (left_unit)
            return e;
    }
    raise(ErrorCode::InvalidArgument, "group has no identity element");
}

GroupSpec cyclic_group(std::size_t n)
{
    GroupSpec g;
    for (std::size_t a = 0; a < n; ++a) {
        g.elements.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
        g.table.emplace_back(n);
        for (std::size_t b = 0; b < n; ++b)
            g.table[a][b] = (a + b) % n;
        g.inverse.push_back((n - a) % n);
    }
    return g;
}

GroupSpec symmetric_group_3()
{
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::array<std::size_t, 3>& q) {
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    GroupSpec g;
    for (const auto& s : perms) {
        g.elements.push_back(std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]));
        std::vector<std::size_t> row;
        for (const auto& t : perms)
            row.push_back(index_of({s[t[0]], s[t[1]], s[t[2]]}));
        g.table.push_back(row);
        std::array<std::size_t, 3> inv{};
        for (std::size_t i = 0; i < 3; ++i)
            inv[s[i]] = i;
        g.inverse.push_back(index_of(inv));
    }
    return g;
}

namespace {

// Representation matrices of one object of the category, per group element.
using Rep = std::vector<Matrix>;

void check_rep(const GroupSpec& group, const RepSpec& rep, const Field& k)
{
    if (rep.matrices.size() != group.elements.size())
        raise(ErrorCode::InvalidArgument, "representation " + rep.name + " needs one matrix per element");
    const std::size_t d = rep.dim();
    for (const auto& m : rep.matrices)
        if (m.rows() != d || m.cols() != d || !(m.field() == k))
            raise(ErrorCode::InvalidArgument, "representation " + rep.name + " has inconsistent matrices");
    if (!rep.matrices[group.identity()].is_identity() && d > 0)
        raise(ErrorCode::InvalidArgument, "representation " + rep.name + " does not fix the identity");
    for (std::size_t a = 0; a < group.elements.size(); ++a)
        for (std::size_t b = 0; b < group.elements.size(); ++b)
            if (!(rep.matrices[a] * rep.matrices[b] == rep.matrices[group.table[a][b]]))
                raise(ErrorCode::InvalidArgument, "representation " + rep.name + " does not respect " +
                                                      group.elements[a] + " * " + group.elements[b]);
}

Rep contragredient(const GroupSpec& group, const Rep& rho)
{
    Rep out;
    for (std::size_t g = 0; g < rho.size(); ++g)
        out.push_back(rho[group.inverse[g]].transpose());
    return out;
}

Rep tensor(const Rep& a, const Rep& b)
{
    Rep out;
    for (std::size_t g = 0; g < a.size(); ++g)
        out.push_back(kron(a[g], b[g]));
    return out;
}

// Basis of {M : rho_y(g) M = M rho_x(g) for all g}, as dim_y x dim_x matrices.
std::vector<Matrix> intertwiners(const Field& k, const Rep& x, std::size_t dx, const Rep& y, std::size_t dy)
{
    if (dx == 0 || dy == 0)
        return {};
    const std::size_t unknowns = dx * dy;
    Matrix equations(k, x.size() * unknowns, unknowns);
    for (std::size_t g = 0; g < x.size(); ++g) {
        // Row-major vec(rho_y M - M rho_x) = (rho_y (x) 1 - 1 (x) rho_x^T) vec(M).
        Matrix block = kron(y[g], Matrix::identity(k, dx)) - kron(Matrix::identity(k, dy), x[g].transpose());
        equations.set_block(g * unknowns, 0, block);
    }
    Matrix kernel = la::kernel_basis(equations);
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        std::vector<la::Scalar> entries(unknowns);
        for (std::size_t t = 0; t < unknowns; ++t)
            entries[t] = kernel(t, c);
        out.emplace_back(k, dy, dx, std::move(entries));
    }
    return out;
}

} // namespace

Instance build_group_instance(const GroupSpec& group, const std::vector<RepSpec>& reps, const Field& field,
                              const std::vector<DualWitness>& duals)
{
    group.check();
    const Field& k = field;
    const std::size_t ng = reps.size();
    for (const auto& r : reps)
        check_rep(group, r, k);
    auto rep_index = [&](const std::string& name) {
        for (std::size_t a = 0; a < ng; ++a)
            if (reps[a].name == name)
                return a;
        raise(ErrorCode::InvalidArgument, "unknown representation '" + name + "'");
    };

    // A* among the generators, with u_A : U(A*) -> U(A)*.
    std::vector<std::size_t> star(ng);
    std::vector<Matrix> u;
    for (std::size_t a = 0; a < ng; ++a) {
        Rep dual = contragredient(group, reps[a].matrices);
        auto w = std::find_if(duals.begin(), duals.end(), [&](const DualWitness& d) { return d.rep == reps[a].name; });
        if (w != duals.end()) {
            std::size_t b = rep_index(w->dual);
            if (w->u.rows() != reps[a].dim() || w->u.cols() != reps[b].dim() || !la::is_invertible(w->u))
                raise(ErrorCode::IntertwinerError, "dual witness for " + reps[a].name + " is not invertible");
            for (std::size_t g = 0; g < dual.size(); ++g)
                if (!(w->u * reps[b].matrices[g] == dual[g] * w->u))
                    raise(ErrorCode::IntertwinerError, "dual witness for " + reps[a].name + " fails equivariance at " +
                                                           group.elements[g]);
            star[a] = b;
            u.push_back(w->u);
            continue;
        }
        std::size_t b = 0;
        while (b < ng && reps[b].matrices != dual)
            ++b;
        if (b == ng)
            raise(ErrorCode::ClosureError, "the dual of " + reps[a].name + " is not among the representations");
        star[a] = b;
        u.push_back(Matrix::identity(k, reps[a].dim()));
    }

    // Objects: generators, ordered pairs, then the triples (A.A*).A.
    ConcreteCategory c(k);
    std::vector<Rep> rho;
    auto add = [&](std::string name, Rep r, std::size_t dim) {
        c.objects.push_back({std::move(name), dim});
        rho.push_back(std::move(r));
        return c.objects.size() - 1;
    };
    for (const auto& r : reps)
        add(r.name, r.matrices, r.dim());
    std::vector<std::vector<ObjectId>> pair(ng, std::vector<ObjectId>(ng));
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b) {
            pair[a][b] = add(reps[a].name + "." + reps[b].name, tensor(reps[a].matrices, reps[b].matrices),
                             reps[a].dim() * reps[b].dim());
            c.tensor[{a, b}] = pair[a][b];
        }
    std::vector<ObjectId> triple(ng);
    for (std::size_t a = 0; a < ng; ++a) {
        ObjectId left = pair[a][star[a]];
        triple[a] = add("(" + c.objects[left].name + ")." + reps[a].name, tensor(rho[left], reps[a].matrices),
                        c.objects[left].u_dim * reps[a].dim());
        c.tensor[{left, a}] = triple[a];
    }
    for (const auto& [p, product] : c.tensor) {
        const std::size_t n = c.objects[product].u_dim;
        c.r.emplace(p, Matrix::identity(k, n));
        c.i.emplace(p, Matrix::identity(k, n));
    }
    for (ObjectId x = 0; x < c.objects.size(); ++x)
        for (ObjectId y = 0; y < c.objects.size(); ++y) {
            auto basis = intertwiners(k, rho[x], c.objects[x].u_dim, rho[y], c.objects[y].u_dim);
            if (!basis.empty())
                c.homs.emplace(std::make_pair(x, y), std::move(basis));
        }

    auto presented = detail::present(c, ErrorCode::IntertwinerError);
    Instance inst{std::move(presented.cat), std::move(presented.U), {}, {}};
    const auto& cat = inst.cat;
    auto& gen = inst.gen;
    for (std::size_t a = 0; a < ng; ++a) {
        gen.generators.push_back(a);
        gen.star_obj[a] = star[a];
        gen.u.emplace(a, u[a]);
    }
    // U(f*) = u_A^-1 U(f)^T u_B for f : A -> B.
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b)
            for (auto f : cat.hom(a, b)) {
                Matrix image = la::inverse(u[a]) * inst.U.on_basis.at(f).transpose() * u[b];
                gen.star_mor.emplace(f, detail::solve_morphism(cat, inst.U, star[b], star[a], image,
                                                               ErrorCode::IntertwinerError,
                                                               "dual of " + cat.basis(f).name));
            }
    // U(e_A) = (1 (x) ev)(1 (x) u_A (x) 1).
    for (std::size_t a = 0; a < ng; ++a) {
        const std::size_t n = reps[a].dim();
        Matrix id = Matrix::identity(k, n);
        Matrix image = kron(id, la::evaluation(k, n)) * kron(id, kron(u[a], id));
        gen.e.emplace(a, detail::solve_morphism(cat, inst.U, triple[a], a, image, ErrorCode::IntertwinerError,
                                                "e for " + reps[a].name));
    }
    attach_resolutions(cat, inst.U, gen);
    inst.meta["builder"] = "group";
    return inst;
}

} // namespace vncore::instances
