#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "natq/algebra.hpp"
#include "natq/presentation.hpp"
#include "natq/quivers.hpp"

namespace natq {

/// Basis element of a generalized path algebra: x_L a_L ... x_1 a_1 x_0, where a_1..a_L
/// is the path in traversal order and x_k indexes the basis of the algebra at the k-th
/// vertex on the path.
struct GpaBasisElement {
    QuiverPath path;
    std::vector<std::size_t> tuple;
};

/// k(Q, 𝒜) realized by structure constants.
struct GPAlgebra {
    QuiverPresentation quiver;
    std::vector<Algebra> blocks;
    std::optional<unsigned> truncation;
    Algebra realization;
    std::vector<GpaBasisElement> elements;
    /// Basis indices of each path length.
    std::vector<std::vector<std::size_t>> grading;

    std::size_t degree(std::size_t basis_index) const { return elements[basis_index].path.length(); }
    /// Span of the pieces of degree >= p (J^p for p >= 1).
    Subspace degree_at_least(unsigned p) const;
    Subspace arrow_space() const { return piece(1); }
    Subspace piece(unsigned p) const;
    /// Trivial path at v carrying block element x.
    Vec vertex_element(std::size_t v, std::span<const Elem> x) const;
};

/// Vertex algebras given explicitly (they must share the presentation's field).
GPAlgebra gpa_from_blocks(const QuiverPresentation& q, std::vector<Algebra> blocks,
                          std::optional<unsigned> truncation = std::nullopt);
/// Vertex algebras M_n(F_{q^e}) from the vertex decorations. Throws BadDecoration,
/// InfiniteDimensional (cyclic quiver without truncation).
GPAlgebra generalized_path_algebra(const QuiverPresentation& q, std::optional<unsigned> truncation = std::nullopt);

/// Dimension of the length-n piece by summing products of block dimensions over
/// composable arrow sequences (independent of the realization).
std::size_t graded_piece_dimension(const QuiverPresentation& q, const std::vector<std::size_t>& block_dims,
                                   unsigned length);

struct SurjectionReport {
    GPAlgebra gpa;
    QuiverMatrices quivers;
    /// dim(A) x dim(G).
    Matrix phi;
    std::size_t kernel_dim = 0;
    Subspace kernel;
    /// One generator in A per arrow of Δ_A (the lifts X_ij).
    std::vector<Vec> generators;
    unsigned truncation_s = 1;
    bool homomorphism = false;
    bool surjective = false;
    bool ker_in_J = false;
    bool ker_in_J2 = false;
    bool Js_in_ker = false;
    bool filtration = false;
    bool degree_zero_is_section = false;
};

/// φ: k(Δ_A, 𝒜) -> A with the blocks of A/r as vertex algebras, degree 0 mapped through
/// the Malcev section and arrows i -> j to bimodule generators of A_j (r/r^2) A_i.
SurjectionReport gabriel_surjection(const AlgebraAnalysis& an);

/// Vertex of G's Wedderburn order holding the unit of vertex algebra v, for every v.
std::vector<std::size_t> gpa_vertex_map(const GPAlgebra& g, const AlgebraAnalysis& gn);

struct GpaCheck {
    RelationReport report;
    std::optional<IntMatrix> g;
};

/// g = n_i n_j t and m <= g < m + n_i n_j, Δ_G = Δ_A, Γ_C = Δ_C = Γ_G for C the basic
/// algebra of G. Throws CyclicNaturalQuiver, NotSplitting.
GpaCheck verify_gpa_ext_quiver(const AlgebraAnalysis& an);

/// Hereditary algebras: Δ_A acyclic, and φ bijective when its kernel is admissible.
RelationReport verify_hereditary_isomorphism(const AlgebraAnalysis& an, SurjectionReport* out = nullptr);

/// rad(G / I) for an ideal J^s ⊆ I ⊆ J; throws NotAnIdeal, ContainmentViolated, and
/// Internal if the radical differs from J / I. Returned in G/I coordinates.
Subspace radical_of_gpa_quotient(const GPAlgebra& g, const Subspace& ideal, unsigned s);

}  // namespace natq
