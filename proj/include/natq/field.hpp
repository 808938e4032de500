#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace natq {

/// Field element. Elements of F_{p^d} are encoded as sum_k c_k p^k, where c_k is the
/// coefficient of x^k in the residue modulo the field's defining polynomial.
using Elem = std::uint16_t;
using Vec = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^d} with p in {2,3,5,7} and 1 <= d <= 4.
///
/// The defining polynomial is the lexicographically smallest monic irreducible of
/// degree d over F_p, comparing coefficient vectors (constant term first). Fields are
/// interned: make() returns the same instance for the same (p, d).
class Field {
public:
    static FieldPtr make(int p, int d = 1);

    int p() const noexcept { return p_; }
    int degree() const noexcept { return d_; }
    int order() const noexcept { return q_; }
    /// Coefficients of the defining polynomial, constant term first, monic.
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    std::string name() const;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const noexcept {
        if (d_ == 1) {
            unsigned s = unsigned(a) + b;
            return Elem(s >= unsigned(p_) ? s - p_ : s);
        }
        return add_[std::size_t(a) * q_ + b];
    }
    Elem neg(Elem a) const noexcept {
        if (d_ == 1) return a == 0 ? 0 : Elem(p_ - a);
        return neg_[a];
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (d_ == 1) return Elem((unsigned(a) * b) % unsigned(p_));
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    /// a must be nonzero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^p.
    Elem frobenius(Elem a) const { return pow(a, std::uint64_t(p_)); }
    /// The unique b with b^p = a.
    Elem pth_root(Elem a) const;

    /// Image of an integer in the prime field.
    Elem from_int(long long v) const;
    /// Coordinates over F_p in the basis 1, x, ..., x^{d-1}.
    std::vector<int> digits(Elem a) const;
    Elem from_digits(std::span<const int> digits) const;

    bool same_as(const Field& other) const noexcept { return p_ == other.p_ && d_ == other.d_; }

    Field(int p, int d);

private:
    int p_;
    int d_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;
    std::vector<int> log_;
    std::vector<Elem> inv_;
};

/// Monic irreducible of degree d over F_p, lexicographically smallest by coefficient
/// vector (constant term first).
std::vector<int> smallest_irreducible_over_prime(int p, int d);

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace natq
