#pragma once

#include <optional>
#include <string>
#include <vector>

#include "natq/algebra.hpp"

namespace natq {

struct QuiverVertex {
    std::string name;
    // Decoration M_n(F_{q^e}) used by generalized path algebras; (1, 1) means k.
    int n = 1;
    int ext_degree = 1;
};

struct QuiverArrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A path, arrows listed in traversal order. An empty arrow list is the trivial path
/// at `source`.
struct QuiverPath {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    bool operator==(const QuiverPath&) const = default;
};

struct PathTerm {
    Elem coeff = 1;
    QuiverPath path;
};

struct QuiverPresentation {
    FieldPtr field;
    std::vector<QuiverVertex> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<std::vector<PathTerm>> relations;

    std::size_t target(const QuiverPath& p) const;
    bool composable(const QuiverPath& p) const;
    std::string label(const QuiverPath& p) const;
    bool has_oriented_cycle() const;
    /// Arrow counts, [from][to].
    std::vector<std::vector<int>> adjacency() const;
};

/// Path ordering used for every path-indexed basis: by length, then by the arrow index
/// sequence in traversal order; trivial paths by vertex.
bool path_less(const QuiverPath& a, const QuiverPath& b);

/// All paths of length < truncation (all paths if none). Throws InfiniteDimensional for a
/// cyclic quiver without truncation.
std::vector<QuiverPath> enumerate_paths(const QuiverPresentation& q, std::optional<unsigned> truncation);

struct PathAlgebraData {
    Algebra algebra;
    /// Basis of the (truncated) path algebra before imposing relations.
    std::vector<QuiverPath> paths;
    /// dim(A) x paths.size(): residue coordinates of each path.
    Matrix projection;
    /// algebra basis element k is the residue of paths[basis_paths[k]].
    std::vector<std::size_t> basis_paths;
};

/// kQ (truncated at `truncation` if given) modulo the ideal generated by the relations.
///
/// Products use the functional convention: for paths p, q with q starting where p ends,
/// q · p is the path "p then q" (written p*q). Hence an arrow a: i -> j satisfies
/// a = e_j a e_i.
PathAlgebraData path_algebra(const QuiverPresentation& q, std::optional<unsigned> truncation = std::nullopt);

/// The algebra automorphism induced by a quiver automorphism (vertex and arrow
/// permutations), as a matrix whose columns are images of basis elements. Throws
/// NotAutomorphism if the permutations are not compatible with the quiver and the
/// relation ideal.
Matrix quiver_automorphism(const QuiverPresentation& q, const PathAlgebraData& pa,
                           const std::vector<std::size_t>& vertex_perm, const std::vector<std::size_t>& arrow_perm);

/// Number of paths (of all lengths) in an acyclic quiver, counted by dynamic programming
/// over the adjacency matrix; independent of enumerate_paths.
std::size_t count_paths_acyclic(const QuiverPresentation& q);

}  // namespace natq
