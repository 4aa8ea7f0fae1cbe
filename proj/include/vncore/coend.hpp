#pragma once

// Coends over the finite generator category, computed as explicit quotients of
// a direct sum of diagonal blocks.

#include "vncore/exactla.hpp"
#include "vncore/fincat.hpp"
#include "vncore/report.hpp"

#include <map>
#include <vector>

namespace vncore::coend {

using fincat::CatPresentation;
using fincat::GeneratorData;
using fincat::ObjectId;
using fincat::UFunctorData;
using la::Field;
using la::Matrix;
using la::QuotientSpace;

/// The two actions of one basis morphism f : A -> B on a two-sided weight T:
/// left = T(f, 1) : T(B, A) -> T(A, A), right = T(1, f) : T(B, A) -> T(B, B).
struct WeightAction {
    std::size_t source = 0; // block of A
    std::size_t target = 0; // block of B
    std::size_t mixed_dim = 0;
    Matrix left;
    Matrix right;
};

struct Weight {
    std::vector<std::size_t> diagonal_dims;
    std::vector<WeightAction> actions;
};

struct GenericCoend {
    QuotientSpace quotient;
    std::vector<std::size_t> block_offsets;
    std::vector<std::size_t> block_dims;

    std::size_t dim() const noexcept { return quotient.dim; }
    /// Block inclusion followed by projection.
    Matrix cop(std::size_t block) const;
};

/// Coequalizer of the left and right actions; throws ActionMismatch on
/// inconsistent shapes.
GenericCoend compute_coend_generic(const Field& field, const Weight& weight);

/// End^v U: blocks U(A)* (x) U(A) for the generators, in generator order.
struct CoendSpace {
    GenericCoend coend;
    std::vector<ObjectId> generators;
    std::map<ObjectId, std::size_t> block_of;

    std::size_t dim() const noexcept { return coend.dim(); }
    const QuotientSpace& quotient() const noexcept { return coend.quotient; }
    /// cop_A : U(A)* (x) U(A) -> E for a generator A.
    Matrix cop(ObjectId a) const;
};

CoendSpace compute_endv(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen);

/// cop_A (U(f)^T (x) 1) == cop_B (1 (x) U(f)) for every generator basis
/// morphism, and the coprojections jointly span E.
Report check_dinaturality(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                          const CoendSpace& E);

/// The canonical map from the coend of C(-, C) (x) U(-) over the generators
/// into U(C), together with its rank.
struct DensityResult {
    std::size_t coend_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;

    bool dense() const noexcept { return coend_dim == target_dim && rank == target_dim; }
};

DensityResult density_map(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                          ObjectId c);
/// One "density.<object>" line; failures carry the NotDense rank deficit.
Report density_check(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId c);
Report density_check_all(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen);

/// cop_C : U(C)* (x) U(C) -> E through an explicit resolution of C:
/// sum_j cop_{A_j} (U(g_j)^T (x) lift_j).
Matrix cop_via(const CatPresentation& cat, const UFunctorData& U, const CoendSpace& E, ObjectId c,
               const fincat::Resolution& resolution);
/// Block coprojection for generators, the first supplied resolution
/// otherwise; throws NoResolution when C is not covered.
Matrix cop_general(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                   const CoendSpace& E, ObjectId c);
/// Applies cop_general to a single element of U(C)* (x) U(C).
Matrix cop_general(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen,
                   const CoendSpace& E, ObjectId c, const Matrix& element);

} // namespace vncore::coend
