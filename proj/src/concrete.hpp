#pragma once

// Shared by the builders: a category whose morphisms are given concretely as
// matrices under a faithful U. Structure constants are recovered by solving
// in the hom bases.

#include "vncore/error.hpp"
#include "vncore/fincat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vncore::instances::detail {

using fincat::CatPresentation;
using fincat::ObjectId;
using fincat::UFunctorData;
using la::Field;
using la::Matrix;

struct ConcreteCategory {
    explicit ConcreteCategory(Field f) : field(f) {}

    Field field;
    std::vector<fincat::Object> objects;
    /// Basis of each nonzero hom space as U-images.
    std::map<std::pair<ObjectId, ObjectId>, std::vector<Matrix>> homs;
    std::map<std::pair<ObjectId, ObjectId>, ObjectId> tensor;
    std::map<std::pair<ObjectId, ObjectId>, Matrix> r;
    std::map<std::pair<ObjectId, ObjectId>, Matrix> i;
};

struct Presented {
    CatPresentation cat;
    UFunctorData U;
};

/// Tabulates identities, composition and tensor morphisms; `failure` is
/// raised when a U-image falls outside the expected hom space.
Presented present(const ConcreteCategory& c, ErrorCode failure);

/// The morphism source -> target whose U-image is `image`.
fincat::Morphism solve_morphism(const CatPresentation& cat, const UFunctorData& U, ObjectId source,
                                ObjectId target, const Matrix& image, ErrorCode failure, const std::string& what);

/// Row-major entries as a column.
Matrix vectorize(const Matrix& m);

std::string hom_name(const std::string& source, const std::string& target, std::size_t k);

} // namespace vncore::instances::detail
