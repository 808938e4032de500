#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "natq/field.hpp"

namespace natq {

// Dense vector helpers. All vectors live over the field passed alongside them.
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(std::span<const Elem> v);
/// y += a * x
void axpy(const Field& f, Vec& y, Elem a, std::span<const Elem> x);
Vec add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec scale(const Field& f, Elem a, std::span<const Elem> x);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

/// Row-major dense matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(FieldPtr field, const std::vector<Vec>& columns, std::size_t rows);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
    Vec col_vec(std::size_t c) const;
    std::vector<Vec> row_list() const;
    const std::vector<Elem>& data() const noexcept { return data_; }

    void append_row(std::span<const Elem> r);

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(Elem a) const;
    /// M * v for a column vector v.
    Vec apply(std::span<const Elem> v) const;
    /// v * M for a row vector v.
    Vec apply_left(std::span<const Elem> v) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& other) const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom, so `reduced` has the
/// same shape as the input.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows form the reduced echelon basis of {x : M x = 0}.
Matrix kernel_basis(const Matrix& m);
/// Some x with M x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n kept in fully reduced echelon form while vectors are inserted.
class EchelonBasis {
public:
    EchelonBasis() = default;
    EchelonBasis(FieldPtr field, std::size_t ambient_dim);

    /// Returns true if v was not already in the span.
    bool insert(std::span<const Elem> v);
    Vec reduce(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;
    /// Coefficients of v along rows(); v must lie in the span.
    Vec coordinates(std::span<const Elem> v) const;

    std::size_t size() const noexcept { return rows_.size(); }
    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<Vec>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Matrix matrix() const;
    const FieldPtr& field() const noexcept { return field_; }

private:
    FieldPtr field_;
    std::size_t dim_ = 0;
    std::vector<Vec> rows_;  // sorted by pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace natq
