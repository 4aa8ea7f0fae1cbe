#pragma once

// Exact dense linear algebra over the rationals or a prime field.
//
// Scalars are GMP rationals. Over a prime field F_p every stored scalar is an
// integer residue in [0, p); over Q every scalar is in lowest terms. Matrix
// methods keep entries canonical, so two matrices compare equal iff they
// represent the same linear map.
//
// Conventions shared by the whole engine:
//   * a linear map V -> W is a (dim W) x (dim V) matrix acting on columns;
//   * tensor bases are lexicographic, left factor major, so kron(a, b)
//     represents a (x) b;
//   * V* carries the dual basis, the dual of a map is its transpose and the
//     double-dual map V -> V** is the identity matrix.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vncore::la {

using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

class Field {
public:
    static Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is prime.
    static Field prime(std::uint64_t p);
    /// Parses the names produced by name(): "rationals" or "prime:<p>".
    static Field from_name(std::string_view name);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    /// Maps an arbitrary rational into the field; over F_p the denominator
    /// must be invertible.
    Scalar from_rational(const Scalar& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    /// acc += a * b
    void fma(Scalar& acc, const Scalar& a, const Scalar& b) const;
    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    /// "p/q" in lowest terms ("n" for integers) or the decimal residue.
    std::string format(const Scalar& a) const;
    Scalar parse(std::string_view text) const;

    bool operator==(const Field& other) const noexcept {
        return kind_ == other.kind_ && p_ == other.p_;
    }

private:
    Field() = default;
    void reduce(Scalar& a) const;

    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
};

class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    /// Entries are mapped into the field; size must equal rows * cols.
    Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, const std::vector<std::vector<long>>& rows);
    /// A column vector.
    static Matrix column(const Field& field, std::span<const Scalar> values);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_to(std::size_t r, std::size_t c, const Scalar& v);

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    Matrix transpose() const;
    Matrix scaled(const Scalar& s) const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& m);
    Matrix col(std::size_t c) const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the null space (one column per free variable).
Matrix kernel_basis(const Matrix& m);
/// Throws InvalidArgument when m is singular or not square.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/// A matrix g with m * g = identity; throws InvalidArgument unless m has full
/// row rank. `prefer_last` picks pivot columns scanning from the right, which
/// yields a different inverse when m has a nontrivial kernel.
Matrix right_inverse(const Matrix& m, bool prefer_last = false);

/// Expresses vectors in the column span of a fixed matrix.
class SpanSolver {
public:
    explicit SpanSolver(const Matrix& basis_columns);
    /// Writes the coordinates of the column v; false when v is not in the span.
    bool solve(const Matrix& v, Matrix& coords) const;
    std::size_t rank() const noexcept { return pivot_rows_.size(); }

private:
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
    Matrix pivot_inverse_;
};

/// Quotient of k^ambient_dim by a subspace, with a canonical basis given by
/// the non-pivot coordinates of the relation rows.
struct QuotientSpace {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    Matrix projection; // dim x ambient_dim
    Matrix section;    // ambient_dim x dim
};

/// Quotient by the row space of `relations` (ambient_dim columns).
QuotientSpace quotient_by(const Field& field, std::size_t ambient_dim, const Matrix& relations);
/// The identity quotient of k^n.
QuotientSpace trivial_quotient(const Field& field, std::size_t n);
/// Quotient of the tensor product of two ambients by the induced relations.
QuotientSpace tensor_quotient(const QuotientSpace& a, const QuotientSpace& b);

/// The unique f with f * src.projection == dst.projection * ambient_map;
/// throws NotWellDefined when no such map exists.
Matrix induced_on_quotient(const QuotientSpace& src, const QuotientSpace& dst,
                           const Matrix& ambient_map);

/// Tensor leg permutation P on a space whose legs have dimensions `dims`:
/// output leg k is input leg perm[k]. Returns, for every output index, the
/// input index it comes from.
std::vector<std::size_t> leg_permutation(std::span<const std::size_t> dims,
                                         std::span<const std::size_t> perm);
/// m * P, for m defined on the permuted space.
Matrix permute_input(const Matrix& m, std::span<const std::size_t> dims,
                     std::span<const std::size_t> perm);
/// P * m, for m landing in the space with legs `dims`.
Matrix permute_output(const Matrix& m, std::span<const std::size_t> dims,
                      std::span<const std::size_t> perm);
/// The permutation matrix itself; only for small spaces.
Matrix permutation_matrix(const Field& field, std::span<const std::size_t> dims,
                          std::span<const std::size_t> perm);

/// Evaluation V* (x) V -> k and coevaluation k -> V (x) V* for dim V = n.
Matrix evaluation(const Field& field, std::size_t n);
Matrix coevaluation(const Field& field, std::size_t n);

} // namespace vncore::la
