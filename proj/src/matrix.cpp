#include "natq/matrix.hpp"

#include <algorithm>

#include "natq/error.hpp"

namespace natq {

Vec zero_vec(std::size_t n) { return Vec(n, 0); }

Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n, 0);
    v[k] = 1;
    return v;
}

bool is_zero(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

void axpy(const Field& f, Vec& y, Elem a, std::span<const Elem> x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] = f.add(y[i], f.mul(a, x[i]));
}

Vec add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vec scale(const Field& f, Elem a, std::span<const Elem> x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
    return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::from_columns(FieldPtr field, const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(std::move(field), rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) fail(ErrorKind::DimensionMismatch, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vec Matrix::col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "append_row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem a = (*this)(i, k);
            if (a == 0) continue;
            auto other_row = other.row(k);
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other_row[j] != 0) out_row[j] = f.add(out_row[j], f.mul(a, other_row[j]));
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], other.data_[i]);
    return out;
}

Matrix Matrix::scaled(Elem a) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->mul(a, data_[i]);
    return out;
}

Vec Matrix::apply(std::span<const Elem> v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "apply: vector length mismatch");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(*field_, row(r), v);
    return out;
}

Vec Matrix::apply_left(std::span<const Elem> v) const {
    if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "apply_left: vector length mismatch");
    Vec out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) axpy(*field_, out, v[r], row(r));
    return out;
}

bool Matrix::is_zero() const { return natq::is_zero(data_); }

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}, 0};
    Matrix& a = res.reduced;
    if (m.rows() == 0 || m.cols() == 0) return res;
    const Field& f = *m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(pivot_row, c));
        Elem inv = f.inv(a(pivot_row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) = f.mul(inv, a(pivot_row, c));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            Elem factor = a(r, col);
            if (factor == 0) continue;
            Elem neg = f.neg(factor);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(pivot_row, c) != 0) a(r, c) = f.add(a(r, c), f.mul(neg, a(pivot_row, c)));
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Matrix& m) {
    EchelonBasis basis(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.size();
}

Matrix kernel_basis(const Matrix& m) {
    const Field& f = *m.field();
    RrefResult res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t k = 0; k < res.pivots.size(); ++k) v[res.pivots[k]] = f.neg(res.reduced(k, free));
        rows.push_back(std::move(v));
    }
    Matrix out = Matrix::from_rows(m.field(), rows, m.cols());
    return rref(out).reduced;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b) {
    if (b.size() != m.rows()) fail(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
        aug(r, m.cols()) = b[r];
    }
    RrefResult res = rref(aug);
    Vec x(m.cols(), 0);
    for (std::size_t k = 0; k < res.pivots.size(); ++k) {
        if (res.pivots[k] == m.cols()) return std::nullopt;
        x[res.pivots[k]] = res.reduced(k, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RrefResult res = rref(aug);
    if (res.rank < n || res.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = res.reduced(r, n + c);
    return inv;
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t ambient_dim)
    : field_(std::move(field)), dim_(ambient_dim) {}

Vec EchelonBasis::reduce(std::span<const Elem> v) const {
    if (v.size() != dim_) fail(ErrorKind::DimensionMismatch, "echelon reduce: length mismatch");
    const Field& f = *field_;
    Vec w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Elem c = w[pivots_[k]];
        if (c != 0) axpy(f, w, f.neg(c), rows_[k]);
    }
    return w;
}

bool EchelonBasis::insert(std::span<const Elem> v) {
    Vec w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
    if (it == w.end()) return false;
    const Field& f = *field_;
    std::size_t pivot = std::size_t(it - w.begin());
    Elem inv = f.inv(w[pivot]);
    for (auto& e : w) e = f.mul(inv, e);
    for (auto& row : rows_) {
        Elem c = row[pivot];
        if (c != 0) axpy(f, row, f.neg(c), w);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
}

bool EchelonBasis::contains(std::span<const Elem> v) const { return natq::is_zero(reduce(v)); }

Vec EchelonBasis::coordinates(std::span<const Elem> v) const {
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Matrix EchelonBasis::matrix() const { return Matrix::from_rows(field_, rows_, dim_); }

}  // namespace natq
