#pragma once

// The semibialgebra structure on End^v U, the endomorphism S, and the axiom
// suite for VN-cores. Every check is an exact matrix identity.

#include "vncore/coend.hpp"
#include "vncore/exactla.hpp"
#include "vncore/fincat.hpp"
#include "vncore/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vncore::vn {

using la::Field;
using la::Matrix;

struct VNCoreData {
    Field field;
    std::size_t dim = 0;
    Matrix mu;    // dim x dim^2
    Matrix delta; // dim^2 x dim
    Matrix S;     // dim x dim
    bool has_unit = false;
    std::optional<Matrix> unit; // dim x 1
    /// Coprojections per generator, kept for serialization.
    std::vector<std::pair<std::string, Matrix>> cop_blocks;
};

/// Throws NotWellDefined when a structure map fails to descend to E.
Matrix build_mu(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                const fincat::GeneratorData& gen, const coend::CoendSpace& E);
Matrix build_delta(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                   const fincat::GeneratorData& gen, const coend::CoendSpace& E);
Matrix build_S(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
               const fincat::GeneratorData& gen, const coend::CoendSpace& E);
VNCoreData build_core(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                      const fincat::GeneratorData& gen, const coend::CoendSpace& E);

/// Shapes of mu, delta, S (and unit) against dim; the other checks assume it passed.
Report check_shapes(const VNCoreData& core);
Report check_semibialgebra(const VNCoreData& core);
Report check_vn_axiom(const VNCoreData& core);
/// Reported as INFO lines: antipodality is a property, not an axiom.
Report check_antipodal(const VNCoreData& core);

/// V = (mu (x) 1)(1 (x) delta) on E (x) E.
Matrix fusion_operator(const VNCoreData& core);
/// W = (mu (x) 1)(1 (x) S (x) 1)(1 (x) delta).
Matrix partial_inverse_operator(const VNCoreData& core);
/// Asserts V12 V23 = V23 V13 V12; the mirrored orientation is INFO only.
Report check_fusion_equation(const VNCoreData& core);
/// Asserts V W V = V; W V W = W is INFO only.
Report check_partial_inverse(const VNCoreData& core);

/// E' = E (+) k with the adjoined unit as the last basis vector.
VNCoreData complete_with_unit(const VNCoreData& core);
/// mu(1 (x) x) = mu(x (x) 1) = x, delta(1) = 1 (x) 1, S(1) = 1.
Report check_unitality(const VNCoreData& core);

} // namespace vncore::vn
