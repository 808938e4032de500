#pragma once

#include <cstdint>
#include <vector>

#include "natq/algebra.hpp"
#include "natq/poly.hpp"

namespace natq {

/// One simple block A_i ≅ M_n(D) of a semisimple algebra, D = F_{q^d} over the ground
/// field F_q.
struct WedderburnBlock {
    Vec central_idempotent;
    Subspace basis;
    int n = 1;
    int d = 1;
    Vec primitive_idempotent;

    std::size_t dim() const noexcept { return basis.size(); }
};

struct WedderburnData {
    /// Sorted by (n, d, echelonized block basis).
    std::vector<WedderburnBlock> blocks;
};

/// Center of an algebra, as a subspace.
Subspace center(const Algebra& s);
/// Primitive idempotents of the center of a semisimple algebra, deterministic.
std::vector<Vec> central_primitive_idempotents(const Algebra& s);

/// Throws NotSemisimple if S has a nonzero radical; SplitFailure if a primitive
/// idempotent cannot be found within the retry budget.
WedderburnData block_decomposition(const Algebra& s, std::uint64_t seed = 0);

/// (n, d) of the block cut out by a central primitive idempotent.
std::pair<int, int> block_parameters(const Algebra& s, std::span<const Elem> central_idempotent);

/// Idempotent e of the block with dim(e S e) = d.
Vec primitive_idempotent(const Algebra& s, std::span<const Elem> central_idempotent, int d, std::uint64_t seed = 0);

/// Left action of the block basis on the irreducible module S e; one matrix per block
/// basis vector, over the ground field.
std::vector<Matrix> irreducible_module(const Algebra& s, const WedderburnBlock& block);

/// Every block of A/r has d = 1.
bool is_splitting(const Algebra& a);

/// Value of f at x inside the corner algebra with unit `one`.
Vec evaluate_in_algebra(const Algebra& a, const Poly& f, std::span<const Elem> x, std::span<const Elem> one);
/// Minimal polynomial of x in the (corner) algebra whose unit is `one`.
Poly element_minimal_polynomial(const Algebra& a, std::span<const Elem> x, std::span<const Elem> one);

}  // namespace natq
