#pragma once

// Shared algebra corpus, random generators and brute-force oracles for the unit and
// acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "natq/algebra.hpp"
#include "natq/gpa.hpp"
#include "natq/presentation.hpp"
#include "natq/quivers.hpp"

namespace natq::testing {

using Rng = std::mt19937_64;

struct NamedAlgebra {
    std::string name;
    Algebra algebra;
};

std::string fixture_path(const std::string& file);

/// Path algebra of the five-vertex fixture (two A_3 arms sharing a source) over F_3.
PathAlgebraData lambda_path_algebra();
/// Its skew group algebra under the arm swap.
Algebra lambda_g();
/// [[E, M], [0, E]] with E = F_4 over F_2 and M = E (tensor = false) or E ⊗_{F_2} E.
Algebra f4_triangular(bool tensor);
/// F_3 x M_2(F_3).
Algebra semisimple_sample();

/// Algebras of dimension <= 6 over F_2 and F_3 (at least 50).
std::vector<NamedAlgebra> small_corpus();
/// Non-splitting triangular algebras over F_2 with blocks among F_4, F_8, M_2(F_4).
std::vector<NamedAlgebra> triangular_corpus();
/// Hereditary fixtures: acyclic path algebras and generalized path algebras.
std::vector<NamedAlgebra> hereditary_corpus();

struct RandomQuiverOptions {
    std::size_t max_vertices = 4;
    int max_n = 2;
    std::vector<int> ext_degrees{1};
    std::size_t max_arrows = 4;
    bool acyclic = true;
};
QuiverPresentation random_decorated_quiver(Rng& rng, FieldPtr field, const RandomQuiverOptions& opt);
/// Dimension of the generalized path algebra of q truncated below `truncation`
/// (all lengths if none), via graded_piece_dimension.
std::size_t gpa_dimension(const QuiverPresentation& q, std::optional<unsigned> truncation);

struct RandomQuotient {
    QuotientData quotient;
    /// Does the ideal lie in J^2 (so the natural quiver is the GPA's)?
    bool admissible = false;
};
/// G / I for I generated by a few random elements of J (or J^2) plus J^s.
RandomQuotient random_gpa_quotient(Rng& rng, const GPAlgebra& g);

/// For each quiver vertex v of g, the block of A = quotient of g containing the image of
/// the unit of the vertex algebra at v.
std::vector<std::size_t> quotient_vertex_map(const GPAlgebra& g, const Matrix& projection,
                                             const AlgebraAnalysis& an);

// --- oracles ---------------------------------------------------------------

/// Enumerates the whole algebra: x is radical iff x y is nilpotent for every y.
/// Returns the radical's elements as coordinate vectors (requires q^dim <= 2^20).
std::vector<Vec> brute_force_radical_elements(const Algebra& a);
std::vector<Vec> enumerate_span(const Subspace& s);

/// Minimal number of generators of a module (action matrices of a basis of R, which must
/// contain a unit-acting element) found by breadth-first search over submodules, merging
/// submodules of equal dimension (valid for isotypic semisimple modules, where equal
/// dimension means conjugate under Aut(M)). `candidates` are elements whose cyclic
/// submodules cover all cyclic submodules.
int search_min_generators(const FieldPtr& f, const std::vector<Matrix>& action, const std::vector<Vec>& candidates);
/// Naive exhaustive search over unordered generator tuples drawn from `candidates`, up to
/// `max_k` generators; returns max_k + 1 when none generates.
int naive_min_generators(const FieldPtr& f, const std::vector<Matrix>& action, const std::vector<Vec>& candidates,
                         int max_k);
/// Column module L^m over M_n(F_p) = matrix_algebra(F_p, n): action matrices of the basis.
std::vector<Matrix> column_module_action(const FieldPtr& f, int n, int m);
/// All nonzero elements (when q^dim is small) or row-echelon representatives of the
/// GL_n-orbits of the n x m coefficient matrices of L^m.
std::vector<Vec> column_module_candidates(const FieldPtr& f, int n, int m, bool all_elements);

}  // namespace natq::testing
