#pragma once

#include <vector>

#include "natq/algebra.hpp"

namespace natq {

struct RadicalData {
    Subspace radical;
    /// r, r^2, ..., r^s with r^s = 0 (just {0} when r = 0).
    std::vector<Subspace> powers;
    /// Minimal s with r^s = 0; 1 when r = 0.
    unsigned nilpotency_index = 1;
    /// A/r, with basis the non-pivot basis elements of r.
    QuotientData top;
};

/// Radical by iterated p-trace kernels of the left regular representation over F_p.
Subspace radical_subspace(const Algebra& a);
RadicalData jacobson_radical(const Algebra& a);

/// Lifts pairwise orthogonal idempotents of A/r (in top coordinates) to pairwise
/// orthogonal idempotents of A congruent to them modulo r. When the inputs sum to 1,
/// so do the outputs. Throws NotIdempotentModR.
std::vector<Vec> lift_idempotents(const Algebra& a, const RadicalData& rad, const std::vector<Vec>& idempotents);

/// Idempotent of A obtained from x with x^2 - x nilpotent (x ≡ idempotent mod r).
Vec refine_idempotent(const Algebra& a, Vec x);

struct SplittingData {
    /// dim(A) x dim(A/r); column c is the image of the c-th basis element of A/r.
    Matrix section;
    Subspace complement;
};

/// A subalgebra complement to r: an algebra section of A -> A/r.
SplittingData wedderburn_malcev_complement(const Algebra& a, const RadicalData& rad);

/// Restriction of scalars: the F_p-matrix of left multiplication by x.
Matrix regular_representation_over_prime(const Algebra& a, std::span<const Elem> x);

}  // namespace natq
