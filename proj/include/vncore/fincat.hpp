#pragma once

// Finite presentations of k-linear, strictly associative, partially monoidal
// categories together with a split-semigroupal functor U to vector spaces and
// the generator data (antipode, u, e, resolutions) consumed by the coend
// construction.

#include "vncore/exactla.hpp"
#include "vncore/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vncore::fincat {

using la::Field;
using la::Matrix;
using la::Scalar;

using ObjectId = std::size_t;
using BasisId = std::size_t;

struct Object {
    std::string name;
    std::size_t u_dim = 0;
};

struct BasisMorphism {
    std::string name;
    ObjectId source = 0;
    ObjectId target = 0;
    std::size_t slot = 0; // position inside the hom basis
};

/// A linear combination of the basis of C(source, target).
struct Morphism {
    ObjectId source = 0;
    ObjectId target = 0;
    std::vector<Scalar> coeffs;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

class CatPresentation {
public:
    explicit CatPresentation(Field field) : field_(field) {}

    const Field& field() const noexcept { return field_; }

    ObjectId add_object(std::string name, std::size_t u_dim);
    /// Declares the basis of C(source, target); returns the first new id.
    BasisId set_hom(ObjectId source, ObjectId target, const std::vector<std::string>& names);
    /// Structure constants of g . f over C(source f, target g).
    void set_composition(BasisId g, BasisId f, std::vector<Scalar> coeffs);
    void set_identity(ObjectId a, std::vector<Scalar> coeffs);
    void set_tensor_object(ObjectId a, ObjectId b, ObjectId product);
    /// f (x) g expressed over C(f.source (x) g.source, f.target (x) g.target).
    void set_tensor_morphism(BasisId f, BasisId g, std::vector<Scalar> coeffs);

    const std::vector<Object>& objects() const noexcept { return objects_; }
    const Object& object(ObjectId id) const { return objects_.at(id); }
    std::optional<ObjectId> find_object(const std::string& name) const;
    /// Throws Malformed when the name is unknown.
    ObjectId object_id(const std::string& name) const;
    std::size_t u_dim(ObjectId id) const { return objects_.at(id).u_dim; }

    const std::vector<BasisMorphism>& basis() const noexcept { return basis_; }
    const BasisMorphism& basis(BasisId id) const { return basis_.at(id); }
    std::optional<BasisId> find_basis(const std::string& name) const;
    std::span<const BasisId> hom(ObjectId source, ObjectId target) const;
    std::size_t hom_dim(ObjectId source, ObjectId target) const { return hom(source, target).size(); }
    const std::map<std::pair<ObjectId, ObjectId>, std::vector<BasisId>>& homs() const noexcept { return homs_; }
    /// Basis ids grouped by source and by target.
    std::vector<BasisId> basis_from(ObjectId source) const;
    std::vector<BasisId> basis_into(ObjectId target) const;

    const std::vector<Scalar>* composition(BasisId g, BasisId f) const;
    const std::vector<Scalar>& identity_coeffs(ObjectId a) const;
    std::optional<ObjectId> tensor_object(ObjectId a, ObjectId b) const;
    const std::map<std::pair<ObjectId, ObjectId>, ObjectId>& tensor_objects() const noexcept { return tensor_objects_; }
    const std::vector<Scalar>* tensor_morphism(BasisId f, BasisId g) const;
    std::size_t composition_count() const noexcept { return composition_.size(); }
    std::size_t tensor_morphism_count() const noexcept { return tensor_morphisms_.size(); }
    const std::unordered_map<std::uint64_t, std::vector<Scalar>>& composition_table() const noexcept { return composition_; }
    const std::unordered_map<std::uint64_t, std::vector<Scalar>>& tensor_morphism_table() const noexcept { return tensor_morphisms_; }
    std::pair<BasisId, BasisId> unpack(std::uint64_t key) const;

    Morphism zero(ObjectId source, ObjectId target) const;
    Morphism basis_morphism(BasisId id) const;
    /// Throws Malformed when no identity is tabulated.
    Morphism identity(ObjectId a) const;
    Morphism add(const Morphism& a, const Morphism& b) const;
    Morphism scale(const Morphism& a, const Scalar& s) const;
    /// g . f, extended bilinearly; throws Malformed on a missing table entry.
    Morphism compose(const Morphism& g, const Morphism& f) const;
    /// f (x) g; both tensor objects must be tabulated.
    Morphism tensor(const Morphism& f, const Morphism& g) const;
    std::string describe(BasisId id) const;

private:
    std::uint64_t key(BasisId a, BasisId b) const { return (std::uint64_t{a} << 32) | b; }

    Field field_;
    std::vector<Object> objects_;
    std::map<std::string, ObjectId> object_index_;
    std::vector<BasisMorphism> basis_;
    std::map<std::string, BasisId> basis_index_;
    std::map<std::pair<ObjectId, ObjectId>, std::vector<BasisId>> homs_;
    std::unordered_map<std::uint64_t, std::vector<Scalar>> composition_;
    std::map<ObjectId, std::vector<Scalar>> identities_;
    std::map<std::pair<ObjectId, ObjectId>, ObjectId> tensor_objects_;
    std::unordered_map<std::uint64_t, std::vector<Scalar>> tensor_morphisms_;
};

/// U on basis morphisms plus the split-semigroupal maps
///   r_{A,B} : U(A) (x) U(B) -> U(A (x) B),   i_{A,B} : U(A (x) B) -> U(A) (x) U(B).
struct UFunctorData {
    std::map<BasisId, Matrix> on_basis;
    std::map<std::pair<ObjectId, ObjectId>, Matrix> r;
    std::map<std::pair<ObjectId, ObjectId>, Matrix> i;

    /// U applied to a linear combination; throws Malformed on missing data.
    Matrix apply(const CatPresentation& cat, const Morphism& m) const;
    const Matrix& r_at(ObjectId a, ObjectId b) const;
    const Matrix& i_at(ObjectId a, ObjectId b) const;
};

/// One leg g_j : A_j -> C of a resolution, with lift_j : U(C) -> U(A_j).
struct ResolutionTerm {
    ObjectId source;
    Morphism map;
    Matrix lift;
};

/// A family with sum_j U(g_j) lift_j = 1 on U(C).
struct Resolution {
    std::string label;
    std::vector<ResolutionTerm> terms;
};

struct GeneratorData {
    std::vector<ObjectId> generators;
    std::map<ObjectId, ObjectId> star_obj;
    /// f : A -> B between generators  |->  f* : B* -> A*.
    std::map<BasisId, Morphism> star_mor;
    /// u_A : U(A*) -> U(A)*.
    std::map<ObjectId, Matrix> u;
    /// e_A : (A (x) A*) (x) A -> A.
    std::map<ObjectId, Morphism> e;
    std::map<ObjectId, std::vector<Resolution>> resolutions;

    bool is_generator(ObjectId id) const;
};

struct Instance {
    CatPresentation cat;
    UFunctorData U;
    GeneratorData gen;
    std::map<std::string, std::string> meta;
};

/// Objects the construction needs resolutions for: tensor products of pairs
/// of generators and the triples (A (x) A*) (x) A, minus the generators.
std::vector<ObjectId> required_resolution_objects(const CatPresentation& cat, const GeneratorData& gen);

Report validate_category(const CatPresentation& cat);
Report validate_U(const CatPresentation& cat, const UFunctorData& U);
Report validate_generator_data(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen);
/// Convention self-test of ev / coev / double dual in dimension n.
Report check_E1_E2(const Field& field, std::size_t n);

/// r_3 = r_{A(x)A*, A} (r_{A,A*} (x) 1) and i_3 = (i_{A,A*} (x) 1) i_{A(x)A*, A}.
/// Throws Malformed when a needed tensor object or structure map is missing.
Matrix triple_r(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId a);
Matrix triple_i(const CatPresentation& cat, const UFunctorData& U, const GeneratorData& gen, ObjectId a);

} // namespace vncore::fincat
