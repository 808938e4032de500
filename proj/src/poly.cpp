#include "natq/poly.hpp"

#include <algorithm>
#include <random>

#include "natq/error.hpp"

namespace natq {

Poly::Poly(FieldPtr field, Vec coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), Vec{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    Vec v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Elem inv = field_->inv(lead());
    Vec v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(inv, coeffs_[i]);
    return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    Vec v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = field_->mul(field_->from_int((long long)i), coeffs_[i]);
    return Poly(field_, std::move(v));
}

Elem Poly::evaluate(Elem a) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), coeffs_[i]);
    return acc;
}

bool Poly::operator<(const Poly& other) const {
    if (degree() != other.degree()) return degree() < other.degree();
    return coeffs_ < other.coeffs_;
}

Poly operator+(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field() ? a.field() : b.field();
    Vec v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->add(a[i], b[i]);
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field() ? a.field() : b.field();
    Vec v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(a[i], b[i]);
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field() ? a.field() : b.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    Vec v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] = f->add(v[i + j], f->mul(a[i], b[j]));
    }
    return Poly(f, std::move(v));
}

Poly operator*(Elem c, const Poly& a) { return Poly::constant(a.field(), c) * a; }

PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    const Field& f = *b.field();
    Vec rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly(b.field()), a};
    Vec quo(std::size_t(a.degree() - db + 1), 0);
    Elem inv = f.inv(b.lead());
    for (int k = a.degree(); k >= db; --k) {
        Elem c = f.mul(rem[k], inv);
        if (c == 0) continue;
        quo[k - db] = c;
        for (int i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b[i]));
    }
    return {Poly(b.field(), std::move(quo)), Poly(b.field(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem inv = f->inv(r0.lead());
    return {inv * r0, inv * s0, inv * t0};
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
    Poly result = Poly::constant(modulus.field(), 1) % modulus;
    Poly b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        exponent >>= 1;
    }
    return result;
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result = Poly::constant(base.field(), 1);
    for (unsigned k = 0; k < exponent; ++k) result = result * base;
    return result;
}

namespace {

/// g(x) with g(x)^p = f(x); f must have f' = 0.
Poly pth_root_poly(const Poly& f) {
    const Field& fld = *f.field();
    int p = fld.p();
    Vec v(std::size_t(f.degree() / p + 1), 0);
    for (int k = 0; k <= f.degree(); k += p) v[k / p] = fld.pth_root(f[k]);
    return Poly(f.field(), std::move(v));
}

std::vector<PolyFactor> squarefree_split(const Poly& f) {
    // Yun-style decomposition adapted to characteristic p.
    std::vector<PolyFactor> out;
    const FieldPtr& field = f.field();
    int p = field->p();
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto& pf : squarefree_split(pth_root_poly(f))) out.push_back({pf.factor, pf.multiplicity * p});
        return out;
    }
    Poly c = gcd(f, fd);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& pf : squarefree_split(pth_root_poly(c.monic()))) out.push_back({pf.factor, pf.multiplicity * p});
    }
    return out;
}

/// Pairs (product of all irreducible factors of degree d, d) for a square-free monic f.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const FieldPtr& field = f.field();
    auto q = std::uint64_t(field->order());
    Poly x = Poly::x(field);
    Poly h = x % f;
    int d = 1;
    while (f.degree() >= 2 * d) {
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
        ++d;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

Poly random_poly(const FieldPtr& field, int max_degree, std::mt19937_64& rng) {
    Vec v(std::size_t(max_degree + 1));
    for (auto& c : v) c = Elem(rng() % std::uint64_t(field->order()));
    return Poly(field, std::move(v));
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& field = f.field();
    auto q = std::uint64_t(field->order());
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Poly a = random_poly(field, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        Poly b(field);
        if (field->p() == 2) {
            // Absolute trace map a + a^2 + ... + a^{2^{k d - 1}}.
            int steps = field->degree() * d;
            Poly term = a % f;
            b = term;
            for (int j = 1; j < steps; ++j) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            Poly norm = a % f;
            Poly frob = a % f;
            for (int j = 1; j < d; ++j) {
                frob = powmod(frob, q, f);
                norm = (norm * frob) % f;
            }
            b = powmod(norm, (q - 1) / 2, f) - Poly::constant(field, 1);
        }
        Poly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
    fail(ErrorKind::Internal, "equal-degree factorization did not converge");
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    for (auto& sf : squarefree_split(f.monic())) {
        for (auto& [part, d] : distinct_degree(sf.factor)) {
            std::vector<Poly> irreducibles;
            equal_degree(part, d, rng, irreducibles);
            for (auto& g : irreducibles) out.push_back({g, sf.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    // Merge repeated irreducibles coming from different square-free layers.
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    Poly g = f.monic();
    if (gcd(g, g.derivative()).degree() > 0) return false;
    auto dd = distinct_degree(g);
    return dd.size() == 1 && dd[0].second == g.degree();
}

Poly smallest_irreducible(FieldPtr field, int degree) {
    if (degree < 1) fail(ErrorKind::Internal, "irreducible of degree < 1 requested");
    auto q = std::uint64_t(field->order());
    std::uint64_t count = 1;
    for (int k = 0; k < degree; ++k) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
        Vec v(std::size_t(degree + 1), 0);
        std::uint64_t c = code;
        for (int k = degree - 1; k >= 0; --k) {
            v[k] = Elem(c % q);
            c /= q;
        }
        v[degree] = 1;
        Poly f(field, std::move(v));
        if (is_irreducible(f)) return f;
    }
    fail(ErrorKind::Internal, "no irreducible polynomial found");
}

Poly minimal_polynomial_of_powers(FieldPtr field, std::size_t length, const std::function<Vec(const Vec&)>& next,
                                  Vec start) {
    const Field& f = *field;
    // Rows of `reduced` are power vectors reduced against earlier ones; `combo[k]`
    // records them as combinations of the raw powers.
    std::vector<Vec> reduced;
    std::vector<std::size_t> pivots;
    std::vector<Vec> combo;
    Vec current = std::move(start);
    for (std::size_t k = 0; k <= length; ++k) {
        Vec w = current;
        Vec c(k + 1, 0);
        c[k] = 1;
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            Elem a = w[pivots[r]];
            if (a == 0) continue;
            Elem na = f.neg(a);
            axpy(f, w, na, reduced[r]);
            for (std::size_t j = 0; j < combo[r].size(); ++j) c[j] = f.add(c[j], f.mul(na, combo[r][j]));
        }
        auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
        if (it == w.end()) return Poly(field, std::move(c)).monic();
        std::size_t piv = std::size_t(it - w.begin());
        Elem inv = f.inv(w[piv]);
        for (auto& e : w) e = f.mul(inv, e);
        for (auto& e : c) e = f.mul(inv, e);
        reduced.push_back(std::move(w));
        pivots.push_back(piv);
        combo.push_back(std::move(c));
        current = next(current);
    }
    fail(ErrorKind::Internal, "minimal polynomial search exceeded the ambient dimension");
}

Poly minimal_polynomial(const Matrix& x) {
    if (x.rows() != x.cols()) fail(ErrorKind::DimensionMismatch, "minimal polynomial of a non-square matrix");
    std::size_t n = x.rows();
    if (n == 0) return Poly::constant(x.field(), 1);
    Matrix id = Matrix::identity(x.field(), n);
    Matrix power = id;
    auto next = [&](const Vec&) {
        power = power * x;
        return power.data();
    };
    return minimal_polynomial_of_powers(x.field(), n * n, next, id.data());
}

Matrix evaluate(const Poly& f, const Matrix& x) {
    std::size_t n = x.rows();
    Matrix acc(x.field(), n, n);
    Matrix id = Matrix::identity(x.field(), n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + id.scaled(f[i]);
    return acc;
}

}  // namespace natq
