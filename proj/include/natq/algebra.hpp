#pragma once

#include <optional>
#include <string>
#include <vector>

#include "natq/field.hpp"
#include "natq/matrix.hpp"

namespace natq {

/// A finite-dimensional associative unital algebra given by structure constants:
/// product(i, j) is the coordinate vector of b_i * b_j.
class Algebra {
public:
    Algebra() = default;
    /// `table` has dim*dim entries, row-major in (i, j). Runs the full validation scan.
    Algebra(FieldPtr field, std::vector<std::string> labels, Vec unit, std::vector<Vec> table);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vec& unit() const noexcept { return unit_; }
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec multiply(std::span<const Elem> x, std::span<const Elem> y) const;
    Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i); }
    /// Matrix of y -> x y (acting on column vectors).
    Matrix left_matrix(std::span<const Elem> x) const;
    /// Matrix of y -> y x.
    Matrix right_matrix(std::span<const Elem> x) const;
    Vec power(std::span<const Elem> x, std::uint64_t e) const;

    bool is_idempotent(std::span<const Elem> e) const;
    bool is_central(std::span<const Elem> z) const;
    bool same_table(const Algebra& other) const;

private:
    FieldPtr field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    Vec unit_;
    std::vector<Vec> table_;
    // Nonzero positions of each product, used to skip work for sparse algebras.
    std::vector<std::vector<std::size_t>> support_;
};

/// Checks associativity on all basis triples and the unit laws. Throws NotAssociative
/// with the first failing triple (i, j, k) in lexicographic order, or BadUnit.
void validate_algebra(const Algebra& a);

/// Sparse description used by the JSON format: b_i b_j = sum c b_k.
struct StructureTerm {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Elem>> coeffs;
};
Algebra from_structure_constants(FieldPtr field, std::size_t dim, std::vector<std::string> labels, Vec unit,
                                 const std::vector<StructureTerm>& terms);

// ---------------------------------------------------------------------------
// Subspaces of an algebra (as coordinate subspaces of F^dim).

using Subspace = EchelonBasis;

Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
bool contains(const Subspace& big, const Subspace& small);
bool equal(const Subspace& u, const Subspace& v);
/// span{u v : u in U, v in V}.
Subspace product(const Algebra& a, const Subspace& u, const Subspace& v);
/// U^k for k >= 1.
Subspace power(const Algebra& a, const Subspace& u, unsigned k);
/// Two-sided ideal generated by the given elements.
Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& generators);
bool is_two_sided_ideal(const Algebra& a, const Subspace& u);
Subspace whole_space(const Algebra& a);

// ---------------------------------------------------------------------------
// Constructors.

struct QuotientData {
    Algebra algebra;
    /// dim(A/I) x dim(A): coordinates of the residue of x.
    Matrix projection;
    /// Quotient basis element k is the residue of A-basis element lift_index[k].
    std::vector<std::size_t> lift_index;
};
/// A/I for a two-sided ideal I; the quotient basis is the set of non-pivot basis
/// elements of I's echelon form. Throws NotAnIdeal if I is not an ideal.
QuotientData quotient_algebra(const Algebra& a, const Subspace& ideal);

struct CornerData {
    Algebra algebra;
    /// Corner basis vectors expressed in A-coordinates.
    std::vector<Vec> embedding;
    Subspace space;
};
/// eAe with unit e. Throws NotIdempotent.
CornerData corner_algebra(const Algebra& a, std::span<const Elem> e);

Algebra opposite_algebra(const Algebra& a);
/// A ⊗ B with basis index ia * dim(B) + ib.
Algebra tensor_product(const Algebra& a, const Algebra& b);
/// Aj ⊗ Ai^op; basis index ja * dim(Ai) + ib. Throws FieldMismatch.
Algebra tensor_with_opposite(const Algebra& aj, const Algebra& ai);
/// Action of Aj ⊗ Ai^op basis elements on an Aj-Ai-bimodule given by the left action
/// matrices of the Aj basis and the right action matrices (m -> m b) of the Ai basis.
std::vector<Matrix> bimodule_as_left_module(const std::vector<Matrix>& left_j, const std::vector<Matrix>& right_i);

Algebra direct_product(const std::vector<Algebra>& parts);
/// Basis positions of each factor inside direct_product(parts).
std::vector<std::size_t> direct_product_offsets(const std::vector<Algebra>& parts);

/// Skew group algebra A * <g> for an automorphism sigma of order dividing m (columns of
/// sigma are images of basis vectors). Basis index t * dim(A) + i stands for b_i ⊗ g^t.
Algebra skew_group_algebra(const Algebra& a, const Matrix& sigma, int m);
/// Throws NotAutomorphism unless sigma is a unital algebra automorphism.
void check_automorphism(const Algebra& a, const Matrix& sigma);

/// The field F_{q^e} as an algebra over F_q, basis 1, x, ..., x^{e-1} modulo the
/// smallest monic irreducible of degree e over F_q.
Algebra extension_field_algebra(FieldPtr base, int e);
/// M_n(F_{q^e}) over F_q; basis index (r * n + s) * e + k stands for E_rs x^k.
Algebra matrix_algebra(FieldPtr base, int n, int e = 1);
Algebra group_algebra(FieldPtr field, const std::vector<std::vector<int>>& group_table);
/// F[x]/(x^k).
Algebra truncated_polynomial(FieldPtr field, int k);
/// Upper-triangular n x n matrices; basis E_rs with r <= s in row-major order.
Algebra upper_triangular(FieldPtr field, int n);

/// An A1-A2-bimodule M given by the action matrices of the basis of A1 (m -> a m) and of
/// the basis of A2 (m -> m b).
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Matrix> left, right;
};
/// A as an A-A-bimodule, with the right action twisted by an automorphism (columns are
/// images): m . b = m sigma(b). Pass an empty matrix for no twist.
Bimodule regular_bimodule(const Algebra& a, const Matrix& twist = Matrix());
/// A1 ⊗_k A2 with A1 acting on the first factor and A2 on the second; index i1 * dim(A2) + i2.
Bimodule free_bimodule(const Algebra& a1, const Algebra& a2);
/// k^n ⊗ ... : the simple column module of M_n(F_{q^e}) = matrix_algebra(base, n, e) as an
/// M_n(F_{q^e})-F_{q^e} bimodule; index r * e + k stands for x^k in row r.
Bimodule column_bimodule(FieldPtr base, int n, int e);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
/// The triangular algebra [[A1, M], [0, A2]]; basis A1, then M, then A2. Throws NotAssociative
/// when M is not a bimodule.
Algebra triangular_algebra(const Algebra& a1, const Algebra& a2, const Bimodule& m);

/// Is every element of the subspace nilpotent-acting? (x nilpotent iff L(x) nilpotent.)
bool is_nilpotent_element(const Algebra& a, std::span<const Elem> x);

}  // namespace natq
