#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "natq/field.hpp"
#include "natq/matrix.hpp"

namespace natq {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr field, Vec coeffs = {});

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const Vec& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return int(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Elem lead() const noexcept { return coeffs_.empty() ? Elem(0) : coeffs_.back(); }
    Elem operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Elem(0); }

    Poly monic() const;
    Poly derivative() const;
    Elem evaluate(Elem a) const;

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
    bool operator<(const Poly& other) const;

private:
    void trim();

    FieldPtr field_;
    Vec coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Elem c, const Poly& a);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Bezout: returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
    Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);
Poly pow(const Poly& base, unsigned exponent);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

/// Full factorization into monic irreducibles: square-free split, distinct-degree,
/// then seeded equal-degree splitting. Factors are sorted by (degree, coefficients).
/// Throws ZeroPolynomial on f = 0.
std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed = 0);
bool is_irreducible(const Poly& f);
/// Lexicographically smallest monic irreducible of the given degree (coefficient
/// vectors compared constant term first).
Poly smallest_irreducible(FieldPtr field, int degree);

/// Minimal polynomial of a square matrix.
Poly minimal_polynomial(const Matrix& x);
/// Minimal monic relation among the vectors power(0), power(1), ... ; power(0) must
/// be nonzero. Used for matrices and for elements of algebras.
Poly minimal_polynomial_of_powers(FieldPtr field, std::size_t length, const std::function<Vec(const Vec&)>& next,
                                  Vec start);
Matrix evaluate(const Poly& f, const Matrix& x);

}  // namespace natq
