#include "natq/presentation.hpp"

#include <algorithm>
#include <map>

#include "natq/error.hpp"

namespace natq {

std::size_t QuiverPresentation::target(const QuiverPath& p) const {
    return p.arrows.empty() ? p.source : arrows[p.arrows.back()].target;
}

bool QuiverPresentation::composable(const QuiverPath& p) const {
    std::size_t at = p.source;
    for (auto a : p.arrows) {
        if (a >= arrows.size() || arrows[a].source != at) return false;
        at = arrows[a].target;
    }
    return p.source < vertices.size();
}

std::string QuiverPresentation::label(const QuiverPath& p) const {
    if (p.arrows.empty()) return "e_" + vertices[p.source].name;
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += "*";
        s += arrows[p.arrows[k]].name;
    }
    return s;
}

std::vector<std::vector<int>> QuiverPresentation::adjacency() const {
    std::vector<std::vector<int>> m(vertices.size(), std::vector<int>(vertices.size(), 0));
    for (auto& a : arrows) ++m[a.source][a.target];
    return m;
}

bool QuiverPresentation::has_oriented_cycle() const {
    // Kahn's algorithm; a self-loop leaves its vertex with positive in-degree.
    std::size_t n = vertices.size();
    std::vector<int> indeg(n, 0);
    for (auto& a : arrows) ++indeg[a.target];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto& a : arrows)
            if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
    return seen != n;
}

bool path_less(const QuiverPath& a, const QuiverPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.length() == 0) return a.source < b.source;
    return a.arrows < b.arrows;
}

std::vector<QuiverPath> enumerate_paths(const QuiverPresentation& q, std::optional<unsigned> truncation) {
    if (!truncation && q.has_oriented_cycle())
        fail(ErrorKind::InfiniteDimensional, "quiver has an oriented cycle; a truncation is required");
    std::vector<QuiverPath> out;
    std::vector<QuiverPath> layer;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) layer.push_back({v, {}});
    unsigned length = 0;
    while (!layer.empty() && (!truncation || length < *truncation)) {
        std::sort(layer.begin(), layer.end(), path_less);
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<QuiverPath> next;
        for (auto& p : layer) {
            std::size_t t = q.target(p);
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == t) {
                    QuiverPath np = p;
                    np.arrows.push_back(a);
                    next.push_back(std::move(np));
                }
        }
        layer = std::move(next);
        ++length;
    }
    return out;
}

namespace {

struct PathKey {
    bool operator()(const QuiverPath& a, const QuiverPath& b) const { return path_less(a, b); }
};

}  // namespace

PathAlgebraData path_algebra(const QuiverPresentation& q, std::optional<unsigned> truncation) {
    if (!q.field) fail(ErrorKind::ParseError, "presentation has no field");
    if (q.vertices.empty()) fail(ErrorKind::DimensionMismatch, "quiver has no vertices");
    for (auto& a : q.arrows)
        if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
            fail(ErrorKind::UndeclaredSymbol, "arrow " + a.name + " has an undeclared endpoint");
    if (truncation && *truncation < 1) fail(ErrorKind::InfiniteDimensional, "truncation must be at least 1");
    auto paths = enumerate_paths(q, truncation);
    std::map<QuiverPath, std::size_t, PathKey> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
    std::size_t n = paths.size();
    const Field& f = *q.field;

    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // paths[i] · paths[j] = paths[j] followed by paths[i].
            const QuiverPath& first = paths[j];
            const QuiverPath& second = paths[i];
            Vec v(n, 0);
            if (q.target(first) == second.source) {
                QuiverPath c = first;
                c.arrows.insert(c.arrows.end(), second.arrows.begin(), second.arrows.end());
                auto it = index.find(c);
                if (it != index.end()) v[it->second] = 1;
            }
            table.push_back(std::move(v));
        }
    Vec unit(n, 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) unit[v] = 1;  // trivial paths come first
    std::vector<std::string> labels;
    for (auto& p : paths) labels.push_back(q.label(p));
    Algebra kq(q.field, labels, unit, std::move(table));

    if (q.relations.empty()) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return {std::move(kq), std::move(paths), Matrix::identity(q.field, n), std::move(all)};
    }

    std::vector<Vec> gens;
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        if (rel.empty()) fail(ErrorKind::MalformedRelation, "relation " + std::to_string(r + 1) + " is empty");
        const QuiverPath& p0 = rel[0].path;
        Vec v(n, 0);
        for (auto& t : rel) {
            if (!q.composable(t.path))
                fail(ErrorKind::NonComposablePath, "relation " + std::to_string(r + 1) + " contains a non-composable path");
            if (t.path.length() == 0)
                fail(ErrorKind::MalformedRelation,
                     "relation " + std::to_string(r + 1) + " has a trivial path term; relations must lie in the arrow ideal");
            if (t.path.source != p0.source || q.target(t.path) != q.target(p0))
                fail(ErrorKind::MalformedRelation,
                     "relation " + std::to_string(r + 1) + " mixes paths with different endpoints");
            auto it = index.find(t.path);
            if (it != index.end()) v[it->second] = f.add(v[it->second], t.coeff);
        }
        gens.push_back(std::move(v));
    }
    Subspace ideal = ideal_generated(kq, gens);
    auto qd = quotient_algebra(kq, ideal);
    return {std::move(qd.algebra), std::move(paths), std::move(qd.projection), std::move(qd.lift_index)};
}

Matrix quiver_automorphism(const QuiverPresentation& q, const PathAlgebraData& pa,
                           const std::vector<std::size_t>& vertex_perm, const std::vector<std::size_t>& arrow_perm) {
    if (vertex_perm.size() != q.vertices.size() || arrow_perm.size() != q.arrows.size())
        fail(ErrorKind::NotAutomorphism, "permutation sizes do not match the quiver");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& src = q.arrows[a];
        const auto& img = q.arrows.at(arrow_perm[a]);
        if (img.source != vertex_perm[src.source] || img.target != vertex_perm[src.target])
            fail(ErrorKind::NotAutomorphism, "arrow permutation does not respect endpoints");
    }
    std::map<QuiverPath, std::size_t, PathKey> index;
    for (std::size_t i = 0; i < pa.paths.size(); ++i) index[pa.paths[i]] = i;
    std::size_t dim = pa.algebra.dim();
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < dim; ++k) {
        const QuiverPath& p = pa.paths[pa.basis_paths[k]];
        QuiverPath img{vertex_perm[p.source], {}};
        for (auto a : p.arrows) img.arrows.push_back(arrow_perm[a]);
        cols.push_back(pa.projection.col_vec(index.at(img)));
    }
    Matrix sigma = Matrix::from_columns(pa.algebra.field(), cols, dim);
    check_automorphism(pa.algebra, sigma);
    return sigma;
}

std::size_t count_paths_acyclic(const QuiverPresentation& q) {
    // paths ending at v = 1 + sum over arrows a: u -> v of paths ending at u.
    std::size_t n = q.vertices.size();
    std::vector<std::size_t> ending(n, 0);
    std::vector<bool> done(n, false);
    std::size_t finished = 0;
    while (finished < n) {
        bool progress = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v]) continue;
            bool ready = true;
            std::size_t total = 1;
            for (auto& a : q.arrows)
                if (a.target == v) {
                    if (!done[a.source]) ready = false;
                    total += ending[a.source];
                }
            if (ready) {
                ending[v] = total;
                done[v] = true;
                ++finished;
                progress = true;
            }
        }
        if (!progress) fail(ErrorKind::InfiniteDimensional, "quiver has an oriented cycle");
    }
    std::size_t s = 0;
    for (auto e : ending) s += e;
    return s;
}

}  // namespace natq
