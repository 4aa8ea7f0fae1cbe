#pragma once

// Reference computations for the tests. They share no code with the engine's
// linear algebra: scalars are plain mpq_class reduced by hand, relations are
// written out element by element rather than through Kronecker products.

#include "vncore/fincat.hpp"

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle {

using Row = std::vector<mpq_class>;
using Rows = std::vector<Row>;

/// Q when p == 0, F_p otherwise.
struct Arith {
    unsigned long p = 0;

    mpq_class norm(mpq_class q) const
    {
        q.canonicalize();
        if (p == 0)
            return q;
        mpz_class m(p), num = q.get_num() % m, den = q.get_den() % m, inv;
        if (num < 0)
            num += m;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        return mpq_class(mpz_class((num * inv) % m));
    }
    mpq_class inv(const mpq_class& a) const { return norm(mpq_class(1) / a); }
};

inline Arith arith_of(const vncore::la::Field& k)
{
    return {static_cast<unsigned long>(k.characteristic())};
}

/// Rank by plain Gaussian elimination.
inline std::size_t rank(Rows rows, const Arith& a)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && a.norm(rows[piv][c]) == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        const mpq_class scale = a.inv(a.norm(rows[r][c]));
        for (auto& v : rows[r])
            v = a.norm(v * scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || a.norm(rows[i][c]) == 0)
                continue;
            const mpq_class f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = a.norm(rows[i][j] - f * rows[r][j]);
        }
        ++r;
    }
    return r;
}

/// Dimension of the coequalizer of U(-)* (x) U(-) over the generators,
/// built directly from the definition: for f : A -> B, phi in U(B)*, x in U(A),
/// the element (phi . U f) (x) x in block A equals phi (x) U(f) x in block B.
inline std::size_t coend_dim(const vncore::fincat::Instance& inst)
{
    const auto& cat = inst.cat;
    const auto& gens = inst.gen.generators;
    const Arith a = arith_of(cat.field());
    std::vector<std::size_t> offset;
    std::size_t ambient = 0;
    for (auto g : gens) {
        offset.push_back(ambient);
        ambient += cat.u_dim(g) * cat.u_dim(g);
    }
    Rows relations;
    for (std::size_t ia = 0; ia < gens.size(); ++ia)
        for (std::size_t ib = 0; ib < gens.size(); ++ib)
            for (auto f : cat.hom(gens[ia], gens[ib])) {
                const auto& Uf = inst.U.on_basis.at(f);
                const std::size_t na = cat.u_dim(gens[ia]), nb = cat.u_dim(gens[ib]);
                for (std::size_t phi = 0; phi < nb; ++phi)
                    for (std::size_t x = 0; x < na; ++x) {
                        Row r(ambient);
                        for (std::size_t psi = 0; psi < na; ++psi)
                            r[offset[ia] + psi * na + x] += Uf(phi, psi);
                        for (std::size_t y = 0; y < nb; ++y)
                            r[offset[ib] + phi * nb + y] -= Uf(y, x);
                        relations.push_back(std::move(r));
                    }
            }
    return ambient - rank(std::move(relations), a);
}

/// Density of C from the definition: the coend of C(-, C) (x) U(-) over the
/// generators and its image in U(C) under g (x) x |-> U(g) x.
struct Density {
    std::size_t coend_dim = 0;
    std::size_t image_rank = 0;
};

inline Density density(const vncore::fincat::Instance& inst, vncore::fincat::ObjectId c)
{
    const auto& cat = inst.cat;
    const auto& gens = inst.gen.generators;
    const Arith a = arith_of(cat.field());
    std::vector<std::size_t> offset;
    std::size_t ambient = 0;
    for (auto g : gens) {
        offset.push_back(ambient);
        ambient += cat.hom_dim(g, c) * cat.u_dim(g);
    }
    Rows relations;
    for (std::size_t ia = 0; ia < gens.size(); ++ia)
        for (std::size_t ib = 0; ib < gens.size(); ++ib)
            for (auto f : cat.hom(gens[ia], gens[ib])) {
                const auto& Uf = inst.U.on_basis.at(f);
                const std::size_t na = cat.u_dim(gens[ia]), nb = cat.u_dim(gens[ib]);
                const auto into_c = cat.hom(gens[ib], c);
                for (std::size_t t = 0; t < into_c.size(); ++t) {
                    auto gf = cat.compose(cat.basis_morphism(into_c[t]), cat.basis_morphism(f));
                    for (std::size_t x = 0; x < na; ++x) {
                        Row r(ambient);
                        for (std::size_t s = 0; s < gf.coeffs.size(); ++s)
                            r[offset[ia] + s * na + x] += gf.coeffs[s];
                        for (std::size_t y = 0; y < nb; ++y)
                            r[offset[ib] + t * nb + y] -= Uf(y, x);
                        relations.push_back(std::move(r));
                    }
                }
            }
    const std::size_t quotient = ambient - rank(relations, a);
    // The map to U(C) kills the relations, so its rank on the quotient is its
    // rank on the ambient.
    Rows image;
    for (std::size_t ia = 0; ia < gens.size(); ++ia) {
        const auto into_c = cat.hom(gens[ia], c);
        for (std::size_t t = 0; t < into_c.size(); ++t) {
            const auto& Ug = inst.U.on_basis.at(into_c[t]);
            for (std::size_t x = 0; x < cat.u_dim(gens[ia]); ++x) {
                Row col(cat.u_dim(c));
                for (std::size_t i = 0; i < col.size(); ++i)
                    col[i] = Ug(i, x);
                image.push_back(std::move(col));
            }
        }
    }
    return {quotient, image.empty() ? 0 : rank(std::move(image), a)};
}

/// Solves X * A = B for X given A (m x n) and B (q x n), as lists of rows.
/// Returns false when no solution exists.
inline bool solve_left(const Rows& A, const Rows& B, const Arith& a, Rows& X)
{
    const std::size_t m = A.size();
    const std::size_t n = m ? A.front().size() : 0;
    X.assign(B.size(), Row(m));
    // Transposed system A^T x = b for each row b of B, by elimination on [A^T | b].
    for (std::size_t q = 0; q < B.size(); ++q) {
        Rows aug(n, Row(m + 1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                aug[i][j] = A[j][i];
            aug[i][m] = B[q][i];
        }
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m && r < n; ++c) {
            std::size_t piv = r;
            while (piv < n && a.norm(aug[piv][c]) == 0)
                ++piv;
            if (piv == n)
                continue;
            std::swap(aug[piv], aug[r]);
            const mpq_class s = a.inv(a.norm(aug[r][c]));
            for (auto& v : aug[r])
                v = a.norm(v * s);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || a.norm(aug[i][c]) == 0)
                    continue;
                const mpq_class f = aug[i][c];
                for (std::size_t j = 0; j <= m; ++j)
                    aug[i][j] = a.norm(aug[i][j] - f * aug[r][j]);
            }
            pivots.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < n; ++i)
            if (a.norm(aug[i][m]) != 0)
                return false;
        for (std::size_t i = 0; i < r; ++i)
            X[q][pivots[i]] = aug[i][m];
    }
    return true;
}

/// Random matrix entries in [-bound, bound], mapped into the field.
inline vncore::la::Matrix random_matrix(const vncore::la::Field& k, std::size_t rows, std::size_t cols,
                                        std::mt19937& rng, int bound = 4)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    vncore::la::Matrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, k.from_int(d(rng)));
    return m;
}

} // namespace oracle
