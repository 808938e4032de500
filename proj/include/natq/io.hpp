#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "natq/algebra.hpp"
#include "natq/gpa.hpp"
#include "natq/presentation.hpp"
#include "natq/quivers.hpp"

namespace natq {

using json = nlohmann::ordered_json;

/// Algebra file: {"field": {"p", "d"}, "dim", "basis", "unit", "mult", "metadata"?}.
/// "mult" holds sparse triples [i, j, [[k, c], ...]] for b_i * b_j = sum c b_k; products
/// not listed are zero. Field elements are integers sum c_k p^k (x^k encoded as p^k).
json algebra_to_json(const Algebra& a, const json& metadata = json());
/// GPA realization with its "grading" field (basis indices by path length).
json gpa_to_json(const GPAlgebra& g);
/// Stable layout: one top-level key per line, one "mult" triple per line.
std::string dump_algebra_file(const json& j);
/// Throws ParseError on schema violations; NotAssociative / BadUnit from validation.
Algebra algebra_from_json(const json& j);

/// Text presentation:
///   field p [d]
///   vertex <name> [block=matrix(n, e)]
///   arrow <name>: <vertex> -> <vertex>
///   relation [c] path {(+|-) [c] path}        paths a*b (a first), c an integer
/// '#' starts a comment. Errors carry "line L, column C". Throws ParseError,
/// UndeclaredSymbol, NonComposablePath.
QuiverPresentation parse_presentation(std::string_view text);

bool presentation_is_decorated(const QuiverPresentation& q);

/// Loads an algebra from a JSON algebra file or a presentation file (decorated
/// presentations give their generalized path algebra).
Algebra load_algebra(const std::string& path, std::optional<unsigned> truncation = std::nullopt);
std::string read_text_file(const std::string& path);

enum class QuiverKind { Natural, Ext, Diagram, Gpa };
std::string_view quiver_kind_name(QuiverKind k);
/// DOT digraph; vertex i labeled "i: M_{n}(F_{p^d})", parallel edges per multiplicity.
std::string emit_dot(const QuiverMatrices& q, QuiverKind which);

}  // namespace natq
