#pragma once

// Builders producing finite presentations from groups with representations
// and from convolution structures on a discrete promonoidal base, plus the
// bundled examples and the mutation harness.

#include "vncore/core.hpp"
#include "vncore/error.hpp"
#include "vncore/exactla.hpp"
#include "vncore/fincat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vncore::instances {

using fincat::Instance;
using la::Field;
using la::Matrix;
using la::Scalar;

// ---------------------------------------------------------------- groups

struct GroupSpec {
    std::vector<std::string> elements;
    /// table[a][b] = index of a * b
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inverse;

    /// Throws InvalidArgument unless the table is a group with the given inverses.
    void check() const;
    std::size_t identity() const;
};

struct RepSpec {
    std::string name;
    /// One matrix per group element, in element order.
    std::vector<Matrix> matrices;

    std::size_t dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

/// Declares rep* = dual with u : U(dual) -> U(rep)*, for duals that are not
/// literally the contragredient of `rep` in the chosen bases.
struct DualWitness {
    std::string rep;
    std::string dual;
    Matrix u;
};

/// Generators are the listed representations; the category also tabulates
/// every ordered tensor pair of generators and each (A.A*).A, with
/// intertwiners as morphisms. Throws IntertwinerError on non-equivariant data
/// and ClosureError when a dual or a resolution is missing.
Instance build_group_instance(const GroupSpec& group, const std::vector<RepSpec>& reps, const Field& field,
                              const std::vector<DualWitness>& duals = {});

GroupSpec cyclic_group(std::size_t n);
GroupSpec symmetric_group_3();

// ---------------------------------------------------------------- promonoidal

/// One point z of a discrete base X. Only p(z,z,z) can be nonzero: it is a
/// retract of B(z,z) (x) B(z,z) = k.
struct PointSpec {
    std::string name;
    std::string dual;       // z*
    bool diagonal = true;   // p(z,z,z) = k, otherwise 0
    Scalar retract_i = 1;   // i_z : p(z,z,z) -> B(z,z) (x) B(z,z)
    Scalar retract_r = 1;   // r_z in the opposite direction
    Scalar composition = 1; // B(z (x) z, I) (x) p(z,z,z) -> B(z,I)
    Scalar unitor = 1;      // p(z,z,z) (x) B(z,I) -> k
};

struct PromonoidalSpec {
    std::vector<PointSpec> points;
};

struct PresheafSpec {
    std::string name;
    /// dim A(z) per point.
    std::vector<std::size_t> dims;
    /// chi_z : A(z*)* (x) A(z) -> B(z (x) z, I) = k, one row per point; empty
    /// entries mean the evaluation pairing.
    std::vector<std::optional<Matrix>> coupling;
};

struct PromonoidalOptions {
    /// Reject couplings whose e fails the tau/rho diagrams (CouplingError).
    bool verify_coupling = true;
};

/// Throws RetractError when r_z i_z != 1, CouplingError when the coupling is
/// unusable, ClosureError when A* has no matching generator.
Instance build_promonoidal_instance(const PromonoidalSpec& base, const std::vector<PresheafSpec>& presheaves,
                                    const Field& field, const PromonoidalOptions& options = {});

// ---------------------------------------------------------------- bundled examples

std::vector<std::string> example_names();
/// Throws InvalidArgument for unknown names.
Instance example(std::string_view name);

Instance z2_instance();
Instance z3_f7_instance();
Instance s3_instance();
Instance promonoidal_toy_instance();

// ---------------------------------------------------------------- mutations

enum class Mutation { BreakSplit, BreakUNaturality, ZeroS, ScaleCoupling, CorruptComposition };

const char* to_string(Mutation m);
std::optional<Mutation> mutation_from_string(std::string_view name);
std::vector<Mutation> all_mutations();
/// Validator or core check that must catch the mutation, and the report line it fails.
const char* designated_checker(Mutation m);
const char* expected_failure(Mutation m);

/// Applies one localized corruption and records it under META. ZeroS leaves
/// the presentation intact and is applied to the core when it is built.
Instance mutate_instance(const Instance& base, Mutation m);
/// ZeroS only: S replaced by 0.
vn::VNCoreData mutate_core(const vn::VNCoreData& core, Mutation m);

// ---------------------------------------------------------------- shared helpers

/// Adds the canonical resolution of every object the construction needs and,
/// when `alternative` is set, a second distinct one obtained by a different
/// right inverse and a change of basis among the legs.
void attach_resolutions(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                        fincat::GeneratorData& gen, bool alternative = true);

} // namespace vncore::instances
