#include "vncore/exactla.hpp"

#include "vncore/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace vncore::la {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op)
{
    if (!(a.field() == b.field()))
        raise(ErrorCode::InvalidArgument, std::string(op) + ": matrices over different fields");
}

} // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t{1} << 62))
        raise(ErrorCode::InvalidArgument, "prime too large");
    Field f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

Field Field::from_name(std::string_view name)
{
    if (name == "rationals")
        return rationals();
    constexpr std::string_view prefix = "prime:";
    if (name.substr(0, prefix.size()) == prefix) {
        auto digits = name.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
            return prime(p);
    }
    raise(ErrorCode::Malformed, "unknown field '" + std::string(name) + "'");
}

std::string Field::name() const
{
    if (kind_ == FieldKind::Rationals)
        return "rationals";
    return "prime:" + std::to_string(p_);
}

void Field::reduce(Scalar& a) const
{
    if (kind_ == FieldKind::Rationals)
        return;
    mpz_class p(static_cast<unsigned long>(p_));
    if (a.get_den() != 1) {
        mpz_class den = a.get_den();
        mpz_class den_inv;
        if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            raise(ErrorCode::InvalidArgument, "denominator not invertible modulo " + std::to_string(p_));
        mpz_class num = a.get_num() * den_inv;
        a = num;
    }
    mpz_fdiv_r(a.get_num_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
}

Scalar Field::from_int(long v) const
{
    Scalar s(v);
    reduce(s);
    return s;
}

Scalar Field::from_rational(const Scalar& q) const
{
    Scalar s(q);
    reduce(s);
    return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    Scalar s = a + b;
    reduce(s);
    return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    Scalar s = a - b;
    reduce(s);
    return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    Scalar s = a * b;
    reduce(s);
    return s;
}

Scalar Field::neg(const Scalar& a) const
{
    Scalar s = -a;
    reduce(s);
    return s;
}

Scalar Field::inv(const Scalar& a) const
{
    if (is_zero(a))
        raise(ErrorCode::InvalidArgument, "division by zero");
    if (kind_ == FieldKind::Rationals)
        return Scalar(1) / a;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

void Field::fma(Scalar& acc, const Scalar& a, const Scalar& b) const
{
    if (kind_ == FieldKind::Rationals) {
        acc += a * b;
        return;
    }
    mpz_addmul(acc.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_fdiv_r_ui(acc.get_num_mpz_t(), acc.get_num_mpz_t(), static_cast<unsigned long>(p_));
}

std::string Field::format(const Scalar& a) const
{
    return a.get_str(10);
}

Scalar Field::parse(std::string_view text) const
{
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty())
            return false;
        std::size_t start = (t[0] == '-') ? 1 : 0;
        if (start == t.size())
            return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos ? !valid_int(s)
                                   : !valid_int(std::string_view(s).substr(0, slash)) ||
                                         !valid_int(std::string_view(s).substr(slash + 1)) ||
                                         s[slash + 1] == '-')
        raise(ErrorCode::Malformed, "bad scalar '" + s + "'");
    Scalar q;
    if (q.set_str(s, 10) != 0)
        raise(ErrorCode::Malformed, "bad scalar '" + s + "'");
    if (q.get_den() == 0)
        raise(ErrorCode::Malformed, "zero denominator in '" + s + "'");
    q.canonicalize();
    reduce(q);
    return q;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols)
{
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        raise(ErrorCode::InvalidArgument, "matrix entry count does not match shape");
    for (auto& e : data_)
        e = field_.from_rational(e);
}

Matrix Matrix::identity(const Field& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<long>>& rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            raise(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m.data_[i * c + j] = field.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const Field& field, std::span<const Scalar> values)
{
    return Matrix(field, values.size(), 1, std::vector<Scalar>(values.begin(), values.end()));
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v)
{
    data_[r * cols_ + c] = field_.from_rational(v);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v)
{
    auto& e = data_[r * cols_ + c];
    e = field_.add(e, v);
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != (i == j ? 1 : 0))
                return false;
    return true;
}

std::size_t Matrix::nonzeros() const
{
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) != 0; }));
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix m(field_, rows_, cols_);
    if (sgn(s) == 0)
        return m;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (sgn(data_[k]) != 0)
            m.data_[k] = field_.mul(data_[k], s);
    return m;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        raise(ErrorCode::InvalidArgument, "block out of range");
    Matrix m(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            m.data_[i * ncols + j] = data_[(row0 + i) * cols_ + col0 + j];
    return m;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m)
{
    if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_)
        raise(ErrorCode::InvalidArgument, "set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            data_[(row0 + i) * cols_ + col0 + j] = m.data_[i * m.cols_ + j];
}

Matrix Matrix::col(std::size_t c) const
{
    return block(0, c, rows_, 1);
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const
{
    Matrix m(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.data_[i * cols.size() + j] = data_[i * cols_ + cols[j]];
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const
{
    Matrix m(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.data_[i * cols_ + j] = data_[rows[i] * cols_ + j];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "add");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        raise(ErrorCode::InvalidArgument, "add: shape mismatch");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        m.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "sub");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        raise(ErrorCode::InvalidArgument, "sub: shape mismatch");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        m.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "mul");
    if (a.cols_ != b.rows_)
        raise(ErrorCode::InvalidArgument,
              "mul: shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                  " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    const Field& f = a.field_;
    Matrix m(f, a.rows_, b.cols_);
    // Sparse rows of b, gathered once.
    std::vector<std::vector<std::size_t>> b_nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (sgn(b.data_[k * b.cols_ + j]) != 0)
                b_nz[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Scalar* out = m.data_.data() + i * m.cols_;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.data_[i * a.cols_ + k];
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j : b_nz[k])
                f.fma(out[j], aik, b.data_[k * b.cols_ + j]);
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.field().format(m(i, j));
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "kron");
    const Field& f = a.field();
    Matrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (sgn(aij) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0)
                        m.set(i * b.rows() + k, j * b.cols() + l, f.mul(aij, b(k, l)));
        }
    return m;
}

Matrix hstack(const std::vector<Matrix>& blocks)
{
    if (blocks.empty())
        raise(ErrorCode::InvalidArgument, "hstack of nothing");
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            raise(ErrorCode::InvalidArgument, "hstack: row mismatch");
        cols += b.cols();
    }
    Matrix m(blocks.front().field(), rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        m.set_block(0, at, b);
        at += b.cols();
    }
    return m;
}

Matrix vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols() != bottom.cols())
        raise(ErrorCode::InvalidArgument, "vstack: column mismatch");
    Matrix m(top.field(), top.rows() + bottom.rows(), top.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// ---------------------------------------------------------------- elimination

namespace {

// In-place reduced row echelon form on a row-major scalar array.
std::vector<std::size_t> reduce_rows(const Field& f, std::vector<Scalar>& d, std::size_t rows,
                                     std::size_t cols, std::size_t col_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(d[i * cols + c]) != 0) {
                sel = i;
                break;
            }
        if (sel == rows)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(d[sel * cols + j], d[r * cols + j]);
        Scalar inv = f.inv(d[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(d[r * cols + j]) != 0)
                d[r * cols + j] = f.mul(d[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            Scalar factor = d[i * cols + c];
            if (sgn(factor) == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j) {
                const Scalar& rj = d[r * cols + j];
                if (sgn(rj) != 0)
                    d[i * cols + j] = f.sub(d[i * cols + j], f.mul(factor, rj));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RowEchelon rref(const Matrix& m)
{
    std::vector<Scalar> d = m.entries();
    auto pivots = reduce_rows(m.field(), d, m.rows(), m.cols(), m.cols());
    return {Matrix(m.field(), m.rows(), m.cols(), std::move(d)), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivot_columns.size();
}

Matrix kernel_basis(const Matrix& m)
{
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    const Field& f = m.field();
    Matrix k(f, m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.set(fc, t, f.one());
        for (std::size_t row = 0; row < pivots.size(); ++row)
            if (sgn(r(row, fc)) != 0)
                k.set(pivots[row], t, f.neg(r(row, fc)));
    }
    return k;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        raise(ErrorCode::InvalidArgument, "inverse of non-square matrix");
    std::size_t n = m.rows();
    const Field& f = m.field();
    std::vector<Scalar> d(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            d[i * 2 * n + j] = m(i, j);
        d[i * 2 * n + n + i] = 1;
    }
    auto pivots = reduce_rows(f, d, n, 2 * n, n);
    if (pivots.size() != n)
        raise(ErrorCode::InvalidArgument, "matrix is singular");
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.set(i, j, d[i * 2 * n + n + j]);
    return inv;
}

bool is_invertible(const Matrix& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix right_inverse(const Matrix& m, bool prefer_last)
{
    std::size_t n = m.rows();
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (prefer_last)
        std::reverse(order.begin(), order.end());
    auto pivots = rref(m.select_columns(order)).pivot_columns;
    if (pivots.size() != n)
        raise(ErrorCode::InvalidArgument, "right_inverse: matrix does not have full row rank");
    std::vector<std::size_t> chosen;
    for (auto p : pivots)
        chosen.push_back(order[p]);
    Matrix sub_inv = inverse(m.select_columns(chosen));
    Matrix g(m.field(), m.cols(), n);
    for (std::size_t t = 0; t < chosen.size(); ++t)
        for (std::size_t j = 0; j < n; ++j)
            g.set(chosen[t], j, sub_inv(t, j));
    return g;
}

SpanSolver::SpanSolver(const Matrix& basis_columns)
    : basis_(basis_columns), pivot_inverse_(basis_columns.field(), 0, 0)
{
    // Linearly independent rows of the basis matrix locate a square, invertible
    // submatrix when the columns are independent.
    auto pivots = rref(basis_columns.transpose()).pivot_columns;
    if (pivots.size() != basis_columns.cols())
        raise(ErrorCode::InvalidArgument, "SpanSolver: basis columns are linearly dependent");
    pivot_rows_ = pivots;
    pivot_inverse_ = inverse(basis_columns.select_rows(pivot_rows_));
}

bool SpanSolver::solve(const Matrix& v, Matrix& coords) const
{
    if (v.rows() != basis_.rows() || v.cols() != 1)
        raise(ErrorCode::InvalidArgument, "SpanSolver: vector has wrong shape");
    coords = pivot_inverse_ * v.select_rows(pivot_rows_);
    return basis_ * coords == v;
}

// ---------------------------------------------------------------- quotients

QuotientSpace quotient_by(const Field& field, std::size_t ambient_dim, const Matrix& relations)
{
    if (relations.cols() != ambient_dim)
        raise(ErrorCode::InvalidArgument, "quotient_by: relation width differs from ambient dimension");
    auto [r, pivots] = rref(relations);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    QuotientSpace q{ambient_dim, free_cols.size(), Matrix(field, free_cols.size(), ambient_dim),
                    Matrix(field, ambient_dim, free_cols.size())};
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        q.projection.set(t, free_cols[t], field.one());
        q.section.set(free_cols[t], t, field.one());
        // A pivot coordinate is congruent to minus the free part of its row.
        for (std::size_t row = 0; row < pivots.size(); ++row)
            if (sgn(r(row, free_cols[t])) != 0)
                q.projection.set(t, pivots[row], field.neg(r(row, free_cols[t])));
    }
    return q;
}

QuotientSpace trivial_quotient(const Field& field, std::size_t n)
{
    return {n, n, Matrix::identity(field, n), Matrix::identity(field, n)};
}

QuotientSpace tensor_quotient(const QuotientSpace& a, const QuotientSpace& b)
{
    return {a.ambient_dim * b.ambient_dim, a.dim * b.dim, kron(a.projection, b.projection),
            kron(a.section, b.section)};
}

Matrix induced_on_quotient(const QuotientSpace& src, const QuotientSpace& dst, const Matrix& ambient_map)
{
    if (ambient_map.rows() != dst.ambient_dim || ambient_map.cols() != src.ambient_dim)
        raise(ErrorCode::InvalidArgument, "induced_on_quotient: ambient map has wrong shape");
    Matrix pushed = dst.projection * ambient_map;
    Matrix f = pushed * src.section;
    if (!(f * src.projection == pushed))
        raise(ErrorCode::NotWellDefined,
              "ambient map does not carry source relations into target relations");
    return f;
}

// ---------------------------------------------------------------- tensor legs

std::vector<std::size_t> leg_permutation(std::span<const std::size_t> dims, std::span<const std::size_t> perm)
{
    std::size_t legs = dims.size();
    if (perm.size() != legs)
        raise(ErrorCode::InvalidArgument, "leg_permutation: arity mismatch");
    std::size_t total = 1;
    for (auto d : dims)
        total *= d;
    std::vector<std::size_t> in_stride(legs, 1);
    for (std::size_t k = legs; k-- > 1;)
        in_stride[k - 1] = in_stride[k] * dims[k];
    std::vector<std::size_t> out_dims(legs);
    for (std::size_t k = 0; k < legs; ++k)
        out_dims[k] = dims[perm[k]];

    std::vector<std::size_t> map(total);
    std::vector<std::size_t> digit(legs, 0);
    for (std::size_t out = 0; out < total; ++out) {
        std::size_t in = 0;
        for (std::size_t k = 0; k < legs; ++k)
            in += digit[k] * in_stride[perm[k]];
        map[out] = in;
        for (std::size_t k = legs; k-- > 0;) {
            if (++digit[k] < out_dims[k])
                break;
            digit[k] = 0;
        }
    }
    return map;
}

Matrix permute_input(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm)
{
    auto map = leg_permutation(dims, perm);
    if (map.size() != m.cols())
        raise(ErrorCode::InvalidArgument, "permute_input: dimension mismatch");
    Matrix r(m.field(), m.rows(), m.cols());
    for (std::size_t out = 0; out < map.size(); ++out)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (sgn(m(i, out)) != 0)
                r.set(i, map[out], m(i, out));
    return r;
}

Matrix permute_output(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm)
{
    auto map = leg_permutation(dims, perm);
    if (map.size() != m.rows())
        raise(ErrorCode::InvalidArgument, "permute_output: dimension mismatch");
    Matrix r(m.field(), m.rows(), m.cols());
    for (std::size_t out = 0; out < map.size(); ++out)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(map[out], j)) != 0)
                r.set(out, j, m(map[out], j));
    return r;
}

Matrix permutation_matrix(const Field& field, std::span<const std::size_t> dims,
                          std::span<const std::size_t> perm)
{
    auto map = leg_permutation(dims, perm);
    Matrix p(field, map.size(), map.size());
    for (std::size_t out = 0; out < map.size(); ++out)
        p.set(out, map[out], field.one());
    return p;
}

Matrix evaluation(const Field& field, std::size_t n)
{
    Matrix ev(field, 1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        ev.set(0, i * n + i, field.one());
    return ev;
}

Matrix coevaluation(const Field& field, std::size_t n)
{
    return evaluation(field, n).transpose();
}

} // namespace vncore::la
