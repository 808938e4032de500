#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "natq/algebra.hpp"
#include "natq/radical.hpp"
#include "natq/wedderburn.hpp"

namespace natq {

using IntMatrix = std::vector<std::vector<int>>;

/// Everything derived once from A: radical, blocks of A/r, a Malcev section and the
/// lifted primitive idempotents ε_i (one per block, in block order).
struct AlgebraAnalysis {
    Algebra algebra;
    RadicalData rad;
    WedderburnData wedd;
    SplittingData split;
    std::vector<Vec> frame;
    /// Lifts in A of a basis of r/r^2 (reduced modulo r^2).
    Subspace top_radical;
    std::uint64_t seed = 0;

    std::size_t vertex_count() const noexcept { return wedd.blocks.size(); }
    const Subspace& r2() const { return rad.powers.size() > 1 ? rad.powers[1] : rad.powers[0]; }
    /// Image of an A/r vector under the section.
    Vec sigma(std::span<const Elem> x) const;
    /// Coordinates in r/r^2 of an element of r.
    Vec m_coords(std::span<const Elem> x) const;
    bool splitting() const;
};

AlgebraAnalysis analyze(const Algebra& a, std::uint64_t seed = 0);

/// r/r^2 as an A/r-bimodule, in the coordinates of AlgebraAnalysis::m_coords.
struct BimoduleData {
    std::size_t dim = 0;
    /// Action matrices of each A/r basis element: x -> b x and x -> x b.
    std::vector<Matrix> left, right;
    /// slices[i][j] = A_i (r/r^2) A_j.
    std::vector<std::vector<Subspace>> slices;
};
BimoduleData radical_bimodule(const AlgebraAnalysis& an);

struct QuiverMatrices {
    /// Number of vertices.
    std::size_t s = 0;
    int p = 2;
    /// Degree of the ground field over F_p.
    int base_degree = 1;
    /// (n_i, d_i) per vertex.
    std::vector<std::pair<int, int>> labels;
    // Entry [i][j] counts arrows from i to j.
    std::optional<IntMatrix> t, m, h, g;
};

/// Minimal number of generators of a module over a semisimple algebra R, given by the
/// action matrices of R's basis: max over blocks of ceil(mult / n).
int min_generators_semisimple_module(const Algebra& r, const std::vector<Matrix>& action, std::uint64_t seed = 0);

QuiverMatrices quiver_frame(const AlgebraAnalysis& an);
QuiverMatrices natural_quiver(const AlgebraAnalysis& an);
/// Throws NotSplitting unless every d_i = 1.
QuiverMatrices ext_quiver(const AlgebraAnalysis& an);
QuiverMatrices diagram(const AlgebraAnalysis& an);
/// t and h always, m when splitting.
QuiverMatrices all_quivers(const AlgebraAnalysis& an);

/// Natural-quiver entry through the bimodule over A_j ⊗ A_i^op directly, and through the
/// corner module over D_j ⊗ D_i^op; production picks by size, tests compare both.
int natural_entry_full(const AlgebraAnalysis& an, const BimoduleData& bm, std::size_t i, std::size_t j);
int natural_entry_corner(const AlgebraAnalysis& an, const BimoduleData& bm, std::size_t i, std::size_t j);

struct BasicAlgebraData {
    Algebra algebra;
    /// The frame ε_i in A-coordinates, and εAε's basis in A-coordinates.
    std::vector<Vec> frame;
    std::vector<Vec> embedding;
    /// vertex_map[i] = vertex of B corresponding to vertex i of A.
    std::vector<std::size_t> vertex_map;
};
BasicAlgebraData basic_algebra(const AlgebraAnalysis& an);
/// Vertex map from A's order to the order of an already analysed basic algebra B.
std::vector<std::size_t> basic_vertex_map(const AlgebraAnalysis& an, const BasicAlgebraData& b,
                                          const AlgebraAnalysis& bn);

/// result[i][j] = m[map[i]][map[j]].
IntMatrix pull_back(const IntMatrix& m, const std::vector<std::size_t>& map);

struct HereditaryReport {
    std::size_t radical_dim = 0;
    std::size_t projective_cover_dim = 0;
    bool hereditary = false;
    bool acyclic_diagram = true;
};
HereditaryReport is_hereditary(const AlgebraAnalysis& an);

/// No oriented cycle; self-loops count as cycles.
bool is_acyclic(const IntMatrix& m);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view check_status_name(CheckStatus s);

struct CheckResult {
    /// Verification target the check belongs to (the CLI filters on it).
    std::string group;
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct RelationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    void add(std::string group, std::string name, CheckStatus status, std::string detail = {});
    void append(const RelationReport& other);
};

/// Evaluates the inequalities and equalities relating t, m, h of A and of its basic
/// algebra B; each result names its witness entry on failure.
RelationReport verify_quiver_relations(const AlgebraAnalysis& an);

int ceil_div(int a, int b);

}  // namespace natq
