#include "natq/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "natq/error.hpp"
#include "natq/poly.hpp"

namespace natq {

namespace {

std::vector<std::size_t> support_of(const Vec& v) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) s.push_back(k);
    return s;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* what) {
    if (!same_field(a, b)) fail(ErrorKind::FieldMismatch, std::string(what) + ": ground fields differ");
}

}  // namespace

Algebra::Algebra(FieldPtr field, std::vector<std::string> labels, Vec unit, std::vector<Vec> table)
    : field_(std::move(field)), dim_(unit.size()), labels_(std::move(labels)), unit_(std::move(unit)),
      table_(std::move(table)) {
    if (dim_ == 0) fail(ErrorKind::DimensionMismatch, "algebra must have positive dimension");
    if (labels_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (labels_.size() != dim_) fail(ErrorKind::DimensionMismatch, "label count differs from dimension");
    if (table_.size() != dim_ * dim_) fail(ErrorKind::DimensionMismatch, "multiplication table has wrong size");
    support_.reserve(table_.size());
    for (auto& v : table_) {
        if (v.size() != dim_) fail(ErrorKind::DimensionMismatch, "product vector has wrong length");
        for (Elem c : v)
            if (c >= field_->order()) fail(ErrorKind::DimensionMismatch, "coefficient is not a field element");
        support_.push_back(support_of(v));
    }
    validate_algebra(*this);
}

Vec Algebra::multiply(std::span<const Elem> x, std::span<const Elem> y) const {
    const Field& f = *field_;
    Vec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Elem c = f.mul(x[i], y[j]);
            const Vec& p = table_[i * dim_ + j];
            for (std::size_t k : support_[i * dim_ + j]) out[k] = f.add(out[k], f.mul(c, p[k]));
        }
    }
    return out;
}

Matrix Algebra::left_matrix(std::span<const Elem> x) const {
    Matrix m(field_, dim_, dim_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vec& p = table_[i * dim_ + j];
            for (std::size_t k : support_[i * dim_ + j]) m(k, j) = f.add(m(k, j), f.mul(x[i], p[k]));
        }
    }
    return m;
}

Matrix Algebra::right_matrix(std::span<const Elem> x) const {
    Matrix m(field_, dim_, dim_);
    const Field& f = *field_;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < dim_; ++i) {
            const Vec& p = table_[i * dim_ + j];
            for (std::size_t k : support_[i * dim_ + j]) m(k, i) = f.add(m(k, i), f.mul(x[j], p[k]));
        }
    }
    return m;
}

Vec Algebra::power(std::span<const Elem> x, std::uint64_t e) const {
    Vec result = unit_;
    Vec base(x.begin(), x.end());
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

bool Algebra::is_idempotent(std::span<const Elem> e) const {
    Vec sq = multiply(e, e);
    return std::equal(sq.begin(), sq.end(), e.begin(), e.end());
}

bool Algebra::is_central(std::span<const Elem> z) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec b = basis_vector(i);
        if (multiply(z, b) != multiply(b, z)) return false;
    }
    return true;
}

bool Algebra::same_table(const Algebra& other) const {
    return same_field(field_, other.field_) && unit_ == other.unit_ && table_ == other.table_;
}

void validate_algebra(const Algebra& a) {
    const Field& f = *a.field();
    std::size_t n = a.dim();
    std::vector<std::vector<std::size_t>> supp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) supp[i * n + j] = support_of(a.product(i, j));
    Vec lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (std::size_t l : supp[i * n + j]) {
                    const Vec& lk = a.product(l, k);
                    for (std::size_t m : supp[l * n + k]) lhs[m] = f.add(lhs[m], f.mul(ij[l], lk[m]));
                }
                const Vec& jk = a.product(j, k);
                for (std::size_t l : supp[j * n + k]) {
                    const Vec& il = a.product(i, l);
                    for (std::size_t m : supp[i * n + l]) rhs[m] = f.add(rhs[m], f.mul(jk[l], il[m]));
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails on basis triple (" << i << ", " << j << ", " << k << ")";
                    fail(ErrorKind::NotAssociative, os.str());
                }
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        Vec b = a.basis_vector(i);
        if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b)
            fail(ErrorKind::BadUnit, "unit law fails for basis element " + std::to_string(i));
    }
}

Algebra from_structure_constants(FieldPtr field, std::size_t dim, std::vector<std::string> labels, Vec unit,
                                 const std::vector<StructureTerm>& terms) {
    if (dim == 0) fail(ErrorKind::DimensionMismatch, "algebra must have positive dimension");
    if (unit.size() != dim) fail(ErrorKind::DimensionMismatch, "unit vector has wrong length");
    if (!labels.empty() && labels.size() != dim) fail(ErrorKind::DimensionMismatch, "label count differs from dimension");
    std::vector<Vec> table(dim * dim, Vec(dim, 0));
    for (auto& t : terms) {
        if (t.i >= dim || t.j >= dim) fail(ErrorKind::DimensionMismatch, "product index out of range");
        for (auto& [k, c] : t.coeffs) {
            if (k >= dim) fail(ErrorKind::DimensionMismatch, "coefficient index out of range");
            if (c >= field->order()) fail(ErrorKind::DimensionMismatch, "coefficient is not a field element");
            Vec& v = table[t.i * dim + t.j];
            v[k] = field->add(v[k], c);
        }
    }
    return Algebra(std::move(field), std::move(labels), std::move(unit), std::move(table));
}

// ---------------------------------------------------------------------------

Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(std::move(field), ambient);
    for (auto& v : vectors) s.insert(v);
    return s;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) fail(ErrorKind::DimensionMismatch, "subspace sum: ambient dims differ");
    Subspace s = u;
    for (auto& r : v.rows()) s.insert(r);
    return s;
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        fail(ErrorKind::DimensionMismatch, "subspace intersection: ambient dims differ");
    std::size_t n = u.ambient_dim();
    Subspace out(u.field(), n);
    if (u.size() == 0 || v.size() == 0) return out;
    // Solve sum a_i u_i - sum b_j v_j = 0.
    std::vector<Vec> cols;
    for (auto& r : u.rows()) cols.push_back(r);
    for (auto& r : v.rows()) cols.push_back(scale(*u.field(), u.field()->neg(1), r));
    Matrix m = Matrix::from_columns(u.field(), cols, n);
    Matrix k = kernel_basis(m);
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Vec x(n, 0);
        for (std::size_t i = 0; i < u.size(); ++i) axpy(*u.field(), x, k(r, i), u.rows()[i]);
        out.insert(x);
    }
    return out;
}

bool contains(const Subspace& big, const Subspace& small) {
    for (auto& r : small.rows())
        if (!big.contains(r)) return false;
    return true;
}

bool equal(const Subspace& u, const Subspace& v) { return u.size() == v.size() && contains(u, v); }

Subspace product(const Algebra& a, const Subspace& u, const Subspace& v) {
    Subspace out(a.field(), a.dim());
    for (auto& x : u.rows()) {
        if (out.size() == a.dim()) break;
        Matrix l = a.left_matrix(x);
        for (auto& y : v.rows()) out.insert(l.apply(y));
    }
    return out;
}

Subspace power(const Algebra& a, const Subspace& u, unsigned k) {
    if (k == 0) return whole_space(a);
    Subspace p = u;
    for (unsigned i = 1; i < k; ++i) p = product(a, p, u);
    return p;
}

Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& generators) {
    Subspace out(a.field(), a.dim());
    std::deque<Vec> queue;
    for (auto& g : generators)
        if (out.insert(g)) queue.push_back(g);
    std::vector<Matrix> lefts, rights;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        lefts.push_back(a.left_matrix(a.basis_vector(i)));
        rights.push_back(a.right_matrix(a.basis_vector(i)));
    }
    while (!queue.empty()) {
        Vec x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec y = lefts[i].apply(x);
            if (out.insert(y)) queue.push_back(std::move(y));
            Vec z = rights[i].apply(x);
            if (out.insert(z)) queue.push_back(std::move(z));
        }
    }
    return out;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& u) {
    for (auto& x : u.rows())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec b = a.basis_vector(i);
            if (!u.contains(a.multiply(b, x)) || !u.contains(a.multiply(x, b))) return false;
        }
    return true;
}

Subspace whole_space(const Algebra& a) {
    Subspace s(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) s.insert(a.basis_vector(i));
    return s;
}

// ---------------------------------------------------------------------------

QuotientData quotient_algebra(const Algebra& a, const Subspace& ideal) {
    if (!is_two_sided_ideal(a, ideal)) fail(ErrorKind::NotAnIdeal, "quotient by a subspace that is not an ideal");
    std::size_t n = a.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> lift;
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) {
            position[i] = lift.size();
            lift.push_back(i);
        }
    std::size_t q = lift.size();
    if (q == 0) fail(ErrorKind::DimensionMismatch, "quotient by the whole algebra is the zero algebra");
    Matrix proj(a.field(), q, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = ideal.reduce(a.basis_vector(i));
        for (std::size_t k = 0; k < n; ++k)
            if (r[k] != 0) proj(position[k], i) = r[k];
    }
    std::vector<Vec> table;
    table.reserve(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) table.push_back(proj.apply(a.product(lift[i], lift[j])));
    std::vector<std::string> labels;
    for (auto i : lift) labels.push_back(a.labels()[i]);
    Algebra qa(a.field(), std::move(labels), proj.apply(a.unit()), std::move(table));
    return {std::move(qa), std::move(proj), std::move(lift)};
}

CornerData corner_algebra(const Algebra& a, std::span<const Elem> e) {
    if (!a.is_idempotent(e)) fail(ErrorKind::NotIdempotent, "corner algebra requires an idempotent");
    Matrix le = a.left_matrix(e), re = a.right_matrix(e);
    Subspace s(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) s.insert(le.apply(re.apply(a.basis_vector(i))));
    std::size_t m = s.size();
    if (m == 0) fail(ErrorKind::NotIdempotent, "corner of the zero idempotent is the zero algebra");
    std::vector<Vec> table;
    table.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table.push_back(s.coordinates(a.multiply(s.rows()[i], s.rows()[j])));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("c" + std::to_string(i));
    Algebra c(a.field(), std::move(labels), s.coordinates(e), std::move(table));
    return {std::move(c), s.rows(), s};
}

Algebra opposite_algebra(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(a.product(j, i));
    return Algebra(a.field(), a.labels(), a.unit(), std::move(table));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
    require_same_field(a.field(), b.field(), "tensor product");
    const Field& f = *a.field();
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& pa = a.product(i / nb, j / nb);
            const Vec& pb = b.product(i % nb, j % nb);
            Vec v(n, 0);
            for (std::size_t x = 0; x < na; ++x) {
                if (pa[x] == 0) continue;
                for (std::size_t y = 0; y < nb; ++y)
                    if (pb[y] != 0) v[x * nb + y] = f.mul(pa[x], pb[y]);
            }
            table.push_back(std::move(v));
        }
    Vec unit(n, 0);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) unit[x * nb + y] = f.mul(a.unit()[x], b.unit()[y]);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) labels.push_back(a.labels()[x] + "⊗" + b.labels()[y]);
    return Algebra(a.field(), std::move(labels), std::move(unit), std::move(table));
}

Algebra tensor_with_opposite(const Algebra& aj, const Algebra& ai) {
    require_same_field(aj.field(), ai.field(), "tensor with opposite");
    return tensor_product(aj, opposite_algebra(ai));
}

std::vector<Matrix> bimodule_as_left_module(const std::vector<Matrix>& left_j, const std::vector<Matrix>& right_i) {
    std::vector<Matrix> out;
    out.reserve(left_j.size() * right_i.size());
    for (auto& l : left_j)
        for (auto& r : right_i) out.push_back(l * r);
    return out;
}

std::vector<std::size_t> direct_product_offsets(const std::vector<Algebra>& parts) {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (auto& p : parts) {
        off.push_back(o);
        o += p.dim();
    }
    return off;
}

Algebra direct_product(const std::vector<Algebra>& parts) {
    if (parts.empty()) fail(ErrorKind::DimensionMismatch, "direct product of no algebras");
    for (auto& p : parts) require_same_field(parts[0].field(), p.field(), "direct product");
    auto off = direct_product_offsets(parts);
    std::size_t n = off.back() + parts.back().dim();
    std::vector<Vec> table(n * n, Vec(n, 0));
    Vec unit(n, 0);
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const Algebra& p = parts[b];
        std::size_t o = off[b];
        for (std::size_t i = 0; i < p.dim(); ++i) {
            unit[o + i] = p.unit()[i];
            labels.push_back(parts.size() > 1 ? std::to_string(b) + ":" + p.labels()[i] : p.labels()[i]);
            for (std::size_t j = 0; j < p.dim(); ++j) {
                const Vec& v = p.product(i, j);
                std::copy(v.begin(), v.end(), table[(o + i) * n + o + j].begin() + std::ptrdiff_t(o));
            }
        }
    }
    return Algebra(parts[0].field(), std::move(labels), std::move(unit), std::move(table));
}

void check_automorphism(const Algebra& a, const Matrix& sigma) {
    std::size_t n = a.dim();
    if (sigma.rows() != n || sigma.cols() != n) fail(ErrorKind::NotAutomorphism, "automorphism matrix has wrong shape");
    if (!inverse(sigma)) fail(ErrorKind::NotAutomorphism, "automorphism matrix is singular");
    if (sigma.apply(a.unit()) != a.unit()) fail(ErrorKind::NotAutomorphism, "map does not fix the unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = sigma.apply(a.product(i, j));
            Vec rhs = a.multiply(sigma.col_vec(i), sigma.col_vec(j));
            if (lhs != rhs)
                fail(ErrorKind::NotAutomorphism,
                     "map is not multiplicative on (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
}

Algebra skew_group_algebra(const Algebra& a, const Matrix& sigma, int m) {
    if (m < 1) fail(ErrorKind::NotAutomorphism, "group order must be positive");
    if (m % a.field()->p() == 0)
        fail(ErrorKind::CharacteristicDividesOrder, "characteristic divides the group order " + std::to_string(m));
    check_automorphism(a, sigma);
    std::size_t n = a.dim();
    std::vector<Matrix> powers{Matrix::identity(a.field(), n)};
    for (int t = 1; t <= m; ++t) powers.push_back(powers.back() * sigma);
    if (!powers[std::size_t(m)].is_identity()) fail(ErrorKind::NotAutomorphism, "sigma^m is not the identity");
    std::size_t total = n * std::size_t(m);
    std::vector<Vec> table;
    table.reserve(total * total);
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y) {
            std::size_t t = x / n, i = x % n, u = y / n, j = y % n;
            Vec prod = a.multiply(a.basis_vector(i), powers[t].col_vec(j));
            Vec v(total, 0);
            std::size_t g = (t + u) % std::size_t(m);
            std::copy(prod.begin(), prod.end(), v.begin() + std::ptrdiff_t(g * n));
            table.push_back(std::move(v));
        }
    Vec unit(total, 0);
    std::copy(a.unit().begin(), a.unit().end(), unit.begin());
    std::vector<std::string> labels;
    for (int t = 0; t < m; ++t)
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(t == 0 ? a.labels()[i] : a.labels()[i] + "·g" + (t > 1 ? "^" + std::to_string(t) : ""));
    return Algebra(a.field(), std::move(labels), std::move(unit), std::move(table));
}

Algebra extension_field_algebra(FieldPtr base, int e) {
    if (e < 1) fail(ErrorKind::BadDecoration, "extension degree must be positive");
    Poly f = smallest_irreducible(base, e);
    std::size_t n = std::size_t(e);
    std::vector<Vec> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly r = Poly::monomial(base, 1, i + j) % f;
            Vec v(n, 0);
            for (std::size_t k = 0; k < n; ++k) v[k] = r[k];
            table.push_back(std::move(v));
        }
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "w" : "w^" + std::to_string(k));
    return Algebra(base, std::move(labels), unit_vec(n, 0), std::move(table));
}

Algebra matrix_algebra(FieldPtr base, int n, int e) {
    if (n < 1) fail(ErrorKind::BadDecoration, "matrix size must be positive");
    Algebra k = extension_field_algebra(base, e);
    std::size_t nn = std::size_t(n), ee = std::size_t(e), dim = nn * nn * ee;
    std::vector<Vec> table;
    table.reserve(dim * dim);
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            std::size_t r = x / ee / nn, s = x / ee % nn, kx = x % ee;
            std::size_t r2 = y / ee / nn, s2 = y / ee % nn, ky = y % ee;
            Vec v(dim, 0);
            if (s == r2) {
                const Vec& c = k.product(kx, ky);
                for (std::size_t t = 0; t < ee; ++t) v[(r * nn + s2) * ee + t] = c[t];
            }
            table.push_back(std::move(v));
        }
    Vec unit(dim, 0);
    for (std::size_t r = 0; r < nn; ++r) unit[(r * nn + r) * ee] = 1;
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t t = 0; t < ee; ++t) {
                std::string l = "E" + std::to_string(r + 1) + std::to_string(s + 1);
                if (t > 0) l += "·" + k.labels()[t];
                labels.push_back(l);
            }
    return Algebra(std::move(base), std::move(labels), std::move(unit), std::move(table));
}

Algebra group_algebra(FieldPtr field, const std::vector<std::vector<int>>& group_table) {
    std::size_t n = group_table.size();
    std::vector<Vec> table;
    std::optional<std::size_t> identity;
    for (std::size_t g = 0; g < n && !identity; ++g) {
        bool ok = true;
        for (std::size_t h = 0; h < n; ++h) ok = ok && group_table[g][h] == int(h) && group_table[h][g] == int(h);
        if (ok) identity = g;
    }
    if (!identity) fail(ErrorKind::BadUnit, "group table has no identity element");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) table.push_back(unit_vec(n, std::size_t(group_table[g][h])));
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
    return Algebra(std::move(field), std::move(labels), unit_vec(n, *identity), std::move(table));
}

Algebra truncated_polynomial(FieldPtr field, int k) {
    std::size_t n = std::size_t(k);
    std::vector<Vec> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(i + j < n ? unit_vec(n, i + j) : zero_vec(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    return Algebra(std::move(field), std::move(labels), unit_vec(n, 0), std::move(table));
}

Algebra upper_triangular(FieldPtr field, int n) {
    std::vector<std::pair<int, int>> idx;
    for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) idx.emplace_back(r, s);
    std::size_t dim = idx.size();
    auto find = [&](int r, int s) {
        return std::size_t(std::find(idx.begin(), idx.end(), std::make_pair(r, s)) - idx.begin());
    };
    std::vector<Vec> table;
    for (auto [r, s] : idx)
        for (auto [r2, s2] : idx) table.push_back(s == r2 ? unit_vec(dim, find(r, s2)) : zero_vec(dim));
    Vec unit(dim, 0);
    std::vector<std::string> labels;
    for (auto [r, s] : idx) {
        if (r == s) unit[find(r, s)] = 1;
        labels.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1));
    }
    return Algebra(std::move(field), std::move(labels), std::move(unit), std::move(table));
}

bool is_nilpotent_element(const Algebra& a, std::span<const Elem> x) {
    // x^dim = 0 iff x is nilpotent.
    Vec p = a.power(x, a.dim());
    return is_zero(p);
}

}  // namespace natq

namespace natq {

Bimodule regular_bimodule(const Algebra& a, const Matrix& twist) {
    Bimodule m;
    m.dim = a.dim();
    for (std::size_t b = 0; b < a.dim(); ++b) {
        m.left.push_back(a.left_matrix(a.basis_vector(b)));
        Vec rb = twist.rows() ? twist.col_vec(b) : a.basis_vector(b);
        m.right.push_back(a.right_matrix(rb));
    }
    return m;
}

Bimodule free_bimodule(const Algebra& a1, const Algebra& a2) {
    if (!same_field(a1.field(), a2.field())) fail(ErrorKind::FieldMismatch, "bimodule factors over different fields");
    Bimodule m;
    std::size_t n1 = a1.dim(), n2 = a2.dim();
    m.dim = n1 * n2;
    for (std::size_t b = 0; b < n1; ++b) {
        Matrix l(a1.field(), m.dim, m.dim);
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t k = 0; k < n1; ++k)
                for (std::size_t y = 0; y < n2; ++y) l(k * n2 + y, x * n2 + y) = a1.product(b, x)[k];
        m.left.push_back(std::move(l));
    }
    for (std::size_t b = 0; b < n2; ++b) {
        Matrix r(a1.field(), m.dim, m.dim);
        for (std::size_t y = 0; y < n2; ++y)
            for (std::size_t k = 0; k < n2; ++k)
                for (std::size_t x = 0; x < n1; ++x) r(x * n2 + k, x * n2 + y) = a2.product(y, b)[k];
        m.right.push_back(std::move(r));
    }
    return m;
}

Bimodule column_bimodule(FieldPtr base, int n, int e) {
    Algebra k = extension_field_algebra(base, e);
    std::size_t nn = std::size_t(n), ee = std::size_t(e);
    Bimodule m;
    m.dim = nn * ee;
    for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t kx = 0; kx < ee; ++kx) {
                // E_rs x^kx sends (s, x^t) to (r, x^kx x^t).
                Matrix l(base, m.dim, m.dim);
                for (std::size_t t = 0; t < ee; ++t) {
                    const Vec& c = k.product(kx, t);
                    for (std::size_t u = 0; u < ee; ++u) l(r * ee + u, s * ee + t) = c[u];
                }
                m.left.push_back(std::move(l));
            }
    for (std::size_t kx = 0; kx < ee; ++kx) {
        Matrix rm(base, m.dim, m.dim);
        for (std::size_t r = 0; r < nn; ++r)
            for (std::size_t t = 0; t < ee; ++t) {
                const Vec& c = k.product(t, kx);
                for (std::size_t u = 0; u < ee; ++u) rm(r * ee + u, r * ee + t) = c[u];
            }
        m.right.push_back(std::move(rm));
    }
    return m;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (a.left.size() != b.left.size() || a.right.size() != b.right.size())
        fail(ErrorKind::DimensionMismatch, "bimodules over different algebras");
    auto block = [](const Matrix& x, const Matrix& y) {
        std::size_t n = x.rows() + y.rows();
        Matrix out(x.field(), n, n);
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = x(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) out(x.rows() + r, x.cols() + c) = y(r, c);
        return out;
    };
    Bimodule m;
    m.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.left.size(); ++i) m.left.push_back(block(a.left[i], b.left[i]));
    for (std::size_t i = 0; i < a.right.size(); ++i) m.right.push_back(block(a.right[i], b.right[i]));
    return m;
}

Algebra triangular_algebra(const Algebra& a1, const Algebra& a2, const Bimodule& m) {
    if (!same_field(a1.field(), a2.field())) fail(ErrorKind::FieldMismatch, "triangular blocks over different fields");
    if (m.left.size() != a1.dim() || m.right.size() != a2.dim())
        fail(ErrorKind::DimensionMismatch, "bimodule action count does not match the block dimensions");
    std::size_t n1 = a1.dim(), dm = m.dim, n2 = a2.dim(), n = n1 + dm + n2;
    std::vector<Vec> table(n * n, Vec(n, 0));
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) table[i * n + j][k] = a1.product(i, j)[k];
        for (std::size_t c = 0; c < dm; ++c)
            for (std::size_t k = 0; k < dm; ++k) table[i * n + n1 + c][n1 + k] = m.left[i](k, c);
    }
    for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t c = 0; c < dm; ++c)
            for (std::size_t k = 0; k < dm; ++k) table[(n1 + c) * n + n1 + dm + j][n1 + k] = m.right[j](k, c);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) table[(n1 + dm + i) * n + n1 + dm + j][n1 + dm + k] = a2.product(i, j)[k];
    Vec unit(n, 0);
    for (std::size_t k = 0; k < n1; ++k) unit[k] = a1.unit()[k];
    for (std::size_t k = 0; k < n2; ++k) unit[n1 + dm + k] = a2.unit()[k];
    std::vector<std::string> labels;
    for (auto& l : a1.labels()) labels.push_back("L:" + l);
    for (std::size_t c = 0; c < dm; ++c) labels.push_back("m" + std::to_string(c));
    for (auto& l : a2.labels()) labels.push_back("R:" + l);
    return Algebra(a1.field(), std::move(labels), std::move(unit), std::move(table));
}

}  // namespace natq
