#include "natq/field.hpp"

#include <map>
#include <mutex>

#include "natq/error.hpp"

namespace natq {

namespace {

using IntPoly = std::vector<int>;  // constant term first

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly int_poly_mod(IntPoly a, const IntPoly& b, int p) {
    trim(a);
    int lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1) ++lead_inv;
    while (a.size() >= b.size()) {
        int shift = int(a.size() - b.size());
        int factor = (a.back() * lead_inv) % p;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

IntPoly int_poly_from_code(int code, int p, int degree) {
    // Digits of `code` in base p, most significant first, become c_0, c_1, ...
    IntPoly f(degree + 1, 0);
    for (int k = degree - 1; k >= 0; --k) {
        f[k] = code % p;
        code /= p;
    }
    f[degree] = 1;
    return f;
}

bool int_poly_irreducible(const IntPoly& f, int p) {
    int degree = int(f.size()) - 1;
    if (degree <= 1) return true;
    for (int dd = 1; dd <= degree / 2; ++dd) {
        int count = 1;
        for (int k = 0; k < dd; ++k) count *= p;
        for (int code = 0; code < count; ++code) {
            IntPoly g = int_poly_from_code(code, p, dd);
            if (int_poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> smallest_irreducible_over_prime(int p, int d) {
    int count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int code = 0; code < count; ++code) {
        IntPoly f = int_poly_from_code(code, p, d);
        if (int_poly_irreducible(f, p)) return f;
    }
    fail(ErrorKind::Internal, "no irreducible polynomial found");
}

Field::Field(int p, int d) : p_(p), d_(d), q_(1) {
    for (int k = 0; k < d; ++k) q_ *= p;
    modulus_ = smallest_irreducible_over_prime(p, d);
    if (d == 1) {
        inv_.assign(q_, 0);
        for (int a = 1; a < p; ++a)
            for (int b = 1; b < p; ++b)
                if ((a * b) % p == 1) inv_[a] = Elem(b);
        return;
    }
    add_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto da = digits(Elem(a));
        std::vector<int> dn(d);
        for (int k = 0; k < d; ++k) dn[k] = (p - da[k]) % p;
        neg_[a] = from_digits(dn);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(Elem(b));
            std::vector<int> ds(d);
            for (int k = 0; k < d; ++k) ds[k] = (da[k] + db[k]) % p;
            add_[std::size_t(a) * q_ + b] = from_digits(ds);
        }
    }
    auto poly_mul = [&](Elem a, Elem b) {
        auto da = digits(a);
        auto db = digits(b);
        IntPoly prod(2 * d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        IntPoly rem = int_poly_mod(prod, modulus_, p);
        rem.resize(d, 0);
        return from_digits(rem);
    };
    // Smallest encoding of a multiplicative generator.
    for (int g = 2; g < q_; ++g) {
        std::vector<Elem> powers;
        Elem x = 1;
        bool ok = true;
        for (int k = 0; k < q_ - 1; ++k) {
            if (k > 0 && x == 1) {
                ok = false;
                break;
            }
            powers.push_back(x);
            x = poly_mul(x, Elem(g));
        }
        if (!ok || x != 1) continue;
        exp_ = std::move(powers);
        break;
    }
    if (exp_.empty()) fail(ErrorKind::Internal, "no primitive element");
    log_.assign(q_, -1);
    for (int k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

FieldPtr Field::make(int p, int d) {
    if (!(p == 2 || p == 3 || p == 5 || p == 7) || d < 1 || d > 4) {
        fail(ErrorKind::InvalidField,
             "unsupported field F_" + std::to_string(p) + "^" + std::to_string(d) +
                 " (p must be 2, 3, 5 or 7 and 1 <= d <= 4)");
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, d}];
    if (!slot) slot = std::make_shared<const Field>(p, d);
    return slot;
}

std::string Field::name() const {
    if (d_ == 1) return "F_" + std::to_string(p_);
    return "F_{" + std::to_string(p_) + "^" + std::to_string(d_) + "}";
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(ErrorKind::Internal, "division by zero in " + name());
    if (d_ == 1) return inv_[a];
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::pth_root(Elem a) const {
    // Frobenius has order d, so its inverse is a -> a^{p^{d-1}}.
    Elem r = a;
    for (int k = 1; k < d_; ++k) r = frobenius(r);
    return r;
}

Elem Field::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return Elem(r);
}

std::vector<int> Field::digits(Elem a) const {
    std::vector<int> out(d_);
    int v = a;
    for (int k = 0; k < d_; ++k) {
        out[k] = v % p_;
        v /= p_;
    }
    return out;
}

Elem Field::from_digits(std::span<const int> ds) const {
    int v = 0;
    for (int k = int(ds.size()) - 1; k >= 0; --k) v = v * p_ + ((ds[k] % p_) + p_) % p_;
    return Elem(v);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a && b && a->same_as(*b); }

}  // namespace natq
