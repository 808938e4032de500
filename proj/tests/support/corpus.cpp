#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "natq/error.hpp"
#include "natq/io.hpp"
#include "natq/radical.hpp"

#ifndef NATQ_FIXTURE_DIR
#define NATQ_FIXTURE_DIR "tests/fixtures"
#endif

namespace natq::testing {

std::string fixture_path(const std::string& file) { return std::string(NATQ_FIXTURE_DIR) + "/" + file; }

PathAlgebraData lambda_path_algebra() {
    return path_algebra(parse_presentation(read_text_file(fixture_path("lambda.pres"))));
}

Algebra lambda_g() {
    auto q = parse_presentation(read_text_file(fixture_path("lambda.pres")));
    auto pa = path_algebra(q);
    // vertices 1, 2, 3, 2', 3'; arrows alpha, beta, alpha', beta'
    Matrix sigma = quiver_automorphism(q, pa, {0, 3, 4, 1, 2}, {2, 3, 0, 1});
    return skew_group_algebra(pa.algebra, sigma, 2);
}

Algebra f4_triangular(bool tensor) {
    auto f2 = Field::make(2);
    Algebra e = extension_field_algebra(f2, 2);
    return triangular_algebra(e, e, tensor ? free_bimodule(e, e) : regular_bimodule(e));
}

Algebra semisimple_sample() {
    auto f3 = Field::make(3);
    return direct_product({truncated_polynomial(f3, 1), matrix_algebra(f3, 2)});
}

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[std::size_t(i)][std::size_t(j)] = (i + j) % n;
    return t;
}

std::vector<std::vector<int>> klein_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[std::size_t(i)][std::size_t(j)] = i ^ j;
    return t;
}

std::vector<std::vector<int>> s3_table() {
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][std::size_t(perms[j][k])];
            t[i][j] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

QuiverPresentation quiver(FieldPtr f, std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows) {
    QuiverPresentation q;
    q.field = std::move(f);
    for (std::size_t v = 0; v < vertices; ++v) q.vertices.push_back({std::to_string(v + 1)});
    for (std::size_t a = 0; a < arrows.size(); ++a)
        q.arrows.push_back({"a" + std::to_string(a + 1), arrows[a].first, arrows[a].second});
    return q;
}

Matrix frobenius_power(const Algebra& e, int times) {
    Matrix m = Matrix::identity(e.field(), e.dim());
    Matrix frob(e.field(), e.dim(), e.dim());
    for (std::size_t k = 0; k < e.dim(); ++k) {
        Vec sq = e.power(e.basis_vector(k), unsigned(e.field()->order()));
        for (std::size_t r = 0; r < e.dim(); ++r) frob(r, k) = sq[r];
    }
    for (int t = 0; t < times; ++t) m = frob * m;
    return m;
}

}  // namespace

std::vector<NamedAlgebra> small_corpus() {
    std::vector<NamedAlgebra> out;
    for (int p : {2, 3}) {
        auto f = Field::make(p);
        std::string fp = "F" + std::to_string(p);
        for (int k = 1; k <= 6; ++k) out.push_back({fp + "[x]/(x^" + std::to_string(k) + ")", truncated_polynomial(f, k)});
        out.push_back({fp + " upper triangular 2x2", upper_triangular(f, 2)});
        out.push_back({fp + " upper triangular 3x3", upper_triangular(f, 3)});
        out.push_back({fp + " M_2", matrix_algebra(f, 2)});
        for (int e = 2; e <= 4; ++e) out.push_back({fp + " field ext degree " + std::to_string(e), extension_field_algebra(f, e)});
        for (int n = 2; n <= 6; ++n) out.push_back({fp + " C_" + std::to_string(n), group_algebra(f, cyclic_table(n))});
        out.push_back({fp + " C2xC2", group_algebra(f, klein_table())});
        out.push_back({fp + " S3", group_algebra(f, s3_table())});
        out.push_back({fp + " path A2", path_algebra(quiver(f, 2, {{0, 1}})).algebra});
        out.push_back({fp + " path A3", path_algebra(quiver(f, 3, {{0, 1}, {1, 2}})).algebra});
        out.push_back({fp + " Kronecker", path_algebra(quiver(f, 2, {{0, 1}, {0, 1}})).algebra});
        out.push_back({fp + " two sinks", path_algebra(quiver(f, 3, {{0, 1}, {0, 2}})).algebra});
        {
            auto q = quiver(f, 3, {{0, 1}, {1, 2}});
            q.relations = {{{1, QuiverPath{0, {0, 1}}}}};
            out.push_back({fp + " A3 zero relation", path_algebra(q).algebra});
        }
        out.push_back({fp + " loop truncated 3", path_algebra(quiver(f, 1, {{0, 0}}), 3).algebra});
        out.push_back({fp + " two loops truncated 2", path_algebra(quiver(f, 1, {{0, 0}, {0, 0}}), 2).algebra});
        {
            auto q = quiver(f, 1, {{0, 0}, {0, 0}});
            // x y = y x inside the length < 3 truncation: k<x,y>/(xy - yx, length 3)
            q.relations = {{{1, QuiverPath{0, {0, 1}}}, {f->neg(1), QuiverPath{0, {1, 0}}}}};
            out.push_back({fp + " commutative two loops truncated 3", path_algebra(q, 3).algebra});
        }
        out.push_back({fp + " loop then arrow", path_algebra(quiver(f, 2, {{0, 0}, {0, 1}}), 2).algebra});
        out.push_back({fp + " k x k[x]/(x^2)", direct_product({truncated_polynomial(f, 1), truncated_polynomial(f, 2)})});
        out.push_back({fp + " M_2 x k", direct_product({matrix_algebra(f, 2), truncated_polynomial(f, 1)})});
        {
            Algebra k = truncated_polynomial(f, 1);
            out.push_back({fp + " triangular k, k^2", triangular_algebra(k, k, direct_sum(regular_bimodule(k), regular_bimodule(k)))});
        }
        Rng rng(std::uint64_t(100 + p));
        RandomQuiverOptions opt;
        opt.max_vertices = 3;
        opt.max_n = 1;
        opt.max_arrows = 3;
        int made = 0;
        while (made < 6) {
            opt.acyclic = made % 2 == 0;
            auto q = random_decorated_quiver(rng, f, opt);
            std::optional<unsigned> trunc;
            if (q.has_oriented_cycle()) trunc = 2 + unsigned(rng() % 2);
            if (gpa_dimension(q, trunc) > 8) continue;
            auto g = generalized_path_algebra(q, trunc);
            auto rq = random_gpa_quotient(rng, g);
            if (rq.quotient.algebra.dim() > 6) continue;
            out.push_back({fp + " random quotient " + std::to_string(++made), rq.quotient.algebra});
        }
    }
    return out;
}

std::vector<NamedAlgebra> triangular_corpus() {
    auto f2 = Field::make(2);
    Algebra e4 = extension_field_algebra(f2, 2), e8 = extension_field_algebra(f2, 3), m = matrix_algebra(f2, 2, 2);
    Bimodule col = column_bimodule(f2, 2, 2);
    std::vector<NamedAlgebra> out;
    auto add = [&](std::string name, const Algebra& a1, const Algebra& a2, const Bimodule& b) {
        out.push_back({std::move(name), triangular_algebra(a1, a2, b)});
    };
    add("F4 | F4 | F4", e4, e4, regular_bimodule(e4));
    add("F4 | F4 (x) F4 | F4", e4, e4, free_bimodule(e4, e4));
    add("F4 | F4 twisted | F4", e4, e4, regular_bimodule(e4, frobenius_power(e4, 1)));
    add("F4 | F4 + F4 twisted | F4", e4, e4, direct_sum(regular_bimodule(e4), regular_bimodule(e4, frobenius_power(e4, 1))));
    add("F4 | F4 + F4 (x) F4 | F4", e4, e4, direct_sum(regular_bimodule(e4), free_bimodule(e4, e4)));
    add("F4 | F4^2 | F4", e4, e4, direct_sum(regular_bimodule(e4), regular_bimodule(e4)));
    add("F8 | F8 | F8", e8, e8, regular_bimodule(e8));
    add("F8 | F8 twisted | F8", e8, e8, regular_bimodule(e8, frobenius_power(e8, 1)));
    add("F8 | F8 twisted twice | F8", e8, e8, regular_bimodule(e8, frobenius_power(e8, 2)));
    add("F8 | F8 (x) F8 | F8", e8, e8, free_bimodule(e8, e8));
    add("F8 | F8 + F8 twisted | F8", e8, e8, direct_sum(regular_bimodule(e8), regular_bimodule(e8, frobenius_power(e8, 1))));
    add("F4 | F4 (x) F8 | F8", e4, e8, free_bimodule(e4, e8));
    add("F8 | F8 (x) F4 | F4", e8, e4, free_bimodule(e8, e4));
    add("M2(F4) | column | F4", m, e4, col);
    add("M2(F4) | column^2 | F4", m, e4, direct_sum(col, col));
    add("M2(F4) | M2(F4) (x) F4 | F4", m, e4, free_bimodule(m, e4));
    add("F4 | F4 (x) M2(F4) | M2(F4)", e4, m, free_bimodule(e4, m));
    add("M2(F4) | M2(F4) (x) F8 | F8", m, e8, free_bimodule(m, e8));
    add("F8 | F8 (x) M2(F4) | M2(F4)", e8, m, free_bimodule(e8, m));

    // Generalized path algebras with field and matrix blocks, and a quotient.
    auto decorated = [&](std::vector<std::pair<int, int>> blocks, std::vector<std::pair<std::size_t, std::size_t>> arrows,
                         std::optional<unsigned> trunc = std::nullopt) {
        QuiverPresentation q = quiver(f2, blocks.size(), std::move(arrows));
        for (std::size_t v = 0; v < blocks.size(); ++v) {
            q.vertices[v].n = blocks[v].first;
            q.vertices[v].ext_degree = blocks[v].second;
        }
        return generalized_path_algebra(q, trunc);
    };
    out.push_back({"GPA F4 -> F4", decorated({{1, 2}, {1, 2}}, {{0, 1}}).realization});
    out.push_back({"GPA F4 -> F8 -> F4", decorated({{1, 2}, {1, 3}, {1, 2}}, {{0, 1}, {1, 2}}).realization});
    out.push_back({"GPA M2(F4) -> F4", decorated({{2, 2}, {1, 2}}, {{0, 1}}).realization});
    out.push_back({"GPA F4 loop truncated 3", decorated({{1, 2}}, {{0, 0}}, 3).realization});
    {
        auto g = decorated({{1, 2}, {1, 2}, {1, 2}}, {{0, 1}, {1, 2}, {0, 2}});
        Rng rng(54);
        for (int i = 0; i < 2; ++i)
            out.push_back({"GPA F4 triangle quotient " + std::to_string(i + 1), random_gpa_quotient(rng, g).quotient.algebra});
    }
    return out;
}

std::vector<NamedAlgebra> hereditary_corpus() {
    std::vector<NamedAlgebra> out;
    auto f2 = Field::make(2), f3 = Field::make(3);
    out.push_back({"F2 path A2", path_algebra(quiver(f2, 2, {{0, 1}})).algebra});
    out.push_back({"F3 path A3", path_algebra(quiver(f3, 3, {{0, 1}, {1, 2}})).algebra});
    out.push_back({"F3 Kronecker", path_algebra(quiver(f3, 2, {{0, 1}, {0, 1}})).algebra});
    out.push_back({"F2 D4 subspace orientation", path_algebra(quiver(f2, 4, {{0, 3}, {1, 3}, {2, 3}})).algebra});
    out.push_back({"F3 two A3 arms", lambda_path_algebra().algebra});
    out.push_back({"F2 A4 zigzag", path_algebra(quiver(f2, 4, {{0, 1}, {2, 1}, {2, 3}})).algebra});
    auto decorated = [&](FieldPtr f, std::vector<std::pair<int, int>> blocks,
                         std::vector<std::pair<std::size_t, std::size_t>> arrows) {
        QuiverPresentation q = quiver(std::move(f), blocks.size(), std::move(arrows));
        for (std::size_t v = 0; v < blocks.size(); ++v) {
            q.vertices[v].n = blocks[v].first;
            q.vertices[v].ext_degree = blocks[v].second;
        }
        return generalized_path_algebra(q).realization;
    };
    out.push_back({"F2 GPA M2 -> k", decorated(f2, {{2, 1}, {1, 1}}, {{0, 1}})});
    out.push_back({"F3 GPA k -> M2 -> k", decorated(f3, {{1, 1}, {2, 1}, {1, 1}}, {{0, 1}, {1, 2}})});
    out.push_back({"F2 GPA M2 => k", decorated(f2, {{2, 1}, {1, 1}}, {{0, 1}, {0, 1}})});
    out.push_back({"F2 GPA F4 -> F4", decorated(f2, {{1, 2}, {1, 2}}, {{0, 1}})});
    out.push_back({"F3 GPA M2 -> M2", decorated(f3, {{2, 1}, {2, 1}}, {{0, 1}})});
    return out;
}

QuiverPresentation random_decorated_quiver(Rng& rng, FieldPtr field, const RandomQuiverOptions& opt) {
    QuiverPresentation q;
    q.field = std::move(field);
    std::size_t nv = 1 + rng() % opt.max_vertices;
    for (std::size_t v = 0; v < nv; ++v) {
        int n = 1 + int(rng() % std::uint64_t(opt.max_n));
        int e = opt.ext_degrees[rng() % opt.ext_degrees.size()];
        q.vertices.push_back({std::to_string(v + 1), n, e});
    }
    std::size_t na = rng() % (opt.max_arrows + 1);
    for (std::size_t a = 0; a < na; ++a) {
        std::size_t s = rng() % nv, t = rng() % nv;
        if (opt.acyclic) {
            if (nv < 2) break;
            while (s == t) t = rng() % nv;
            if (s > t) std::swap(s, t);
        }
        q.arrows.push_back({"a" + std::to_string(a + 1), s, t});
    }
    return q;
}

std::size_t gpa_dimension(const QuiverPresentation& q, std::optional<unsigned> truncation) {
    std::vector<std::size_t> dims;
    for (auto& v : q.vertices) dims.push_back(std::size_t(v.n * v.n * v.ext_degree));
    if (!truncation && q.has_oriented_cycle()) fail(ErrorKind::InfiniteDimensional, "cyclic quiver");
    std::size_t total = 0;
    for (unsigned len = 0;; ++len) {
        if (truncation && len >= *truncation) break;
        std::size_t piece = graded_piece_dimension(q, dims, len);
        if (piece == 0) break;
        total += piece;
    }
    return total;
}

RandomQuotient random_gpa_quotient(Rng& rng, const GPAlgebra& g) {
    const Algebra& a = g.realization;
    const Field& f = *a.field();
    unsigned maxdeg = unsigned(g.grading.size()) - 1;
    unsigned s = maxdeg + 1;
    if (maxdeg >= 1) s = rng() % 10 == 0 ? 1 : 2 + unsigned(rng() % maxdeg);
    bool deep = rng() % 2 == 0;
    Subspace space = g.degree_at_least(deep ? 2 : 1);
    std::vector<Vec> gens;
    std::size_t k = rng() % 3;
    if (space.size() > 0)
        for (std::size_t i = 0; i < k; ++i) {
            Vec v(a.dim(), 0);
            for (auto& row : space.rows()) axpy(f, v, Elem(rng() % std::uint64_t(f.order())), row);
            gens.push_back(std::move(v));
        }
    Subspace ideal = sum(ideal_generated(a, gens), g.degree_at_least(s));
    RandomQuotient out{quotient_algebra(a, ideal), contains(g.degree_at_least(2), ideal)};
    return out;
}

std::vector<std::size_t> quotient_vertex_map(const GPAlgebra& g, const Matrix& projection, const AlgebraAnalysis& an) {
    const Algebra& top = an.rad.top.algebra;
    std::vector<std::size_t> map;
    for (std::size_t v = 0; v < g.blocks.size(); ++v) {
        Vec x = an.rad.top.projection.apply(projection.apply(g.vertex_element(v, g.blocks[v].unit())));
        std::size_t hit = an.vertex_count();
        for (std::size_t k = 0; k < an.vertex_count(); ++k)
            if (!is_zero(top.multiply(an.wedd.blocks[k].central_idempotent, x))) hit = k;
        map.push_back(hit);
    }
    return map;
}

// ---------------------------------------------------------------------------

namespace {

Vec decode(std::size_t index, std::size_t n, std::size_t q) {
    Vec v(n, 0);
    for (std::size_t k = 0; k < n; ++k, index /= q) v[k] = Elem(index % q);
    return v;
}

std::size_t encode(const Vec& v, std::size_t q) {
    std::size_t index = 0;
    for (std::size_t k = v.size(); k-- > 0;) index = index * q + v[k];
    return index;
}

}  // namespace

std::vector<Vec> brute_force_radical_elements(const Algebra& a) {
    std::size_t q = std::size_t(a.field()->order()), n = a.dim(), total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= q;
        if (total > (std::size_t(1) << 20)) fail(ErrorKind::Internal, "algebra too large to enumerate");
    }
    std::vector<Vec> elems;
    for (std::size_t i = 0; i < total; ++i) elems.push_back(decode(i, n, q));
    std::vector<bool> nilpotent(total, false);
    for (std::size_t i = 0; i < total; ++i) {
        Vec x = elems[i];
        for (std::size_t k = 1; k < n && !is_zero(x); ++k) x = a.multiply(x, elems[i]);
        nilpotent[i] = is_zero(x);
    }
    std::vector<Vec> rad;
    for (std::size_t i = 0; i < total; ++i) {
        if (!nilpotent[i]) continue;
        Matrix l = a.left_matrix(elems[i]);
        bool ok = true;
        for (std::size_t j = 0; j < total && ok; ++j) ok = nilpotent[encode(l.apply(elems[j]), q)];
        if (ok) rad.push_back(elems[i]);
    }
    return rad;
}

std::vector<Vec> enumerate_span(const Subspace& s) {
    std::size_t q = std::size_t(s.field()->order()), k = s.size(), total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    std::vector<Vec> out;
    for (std::size_t i = 0; i < total; ++i) {
        Vec c = decode(i, k, q), v(s.ambient_dim(), 0);
        for (std::size_t r = 0; r < k; ++r) axpy(*s.field(), v, c[r], s.rows()[r]);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

std::vector<Subspace> distinct_cyclic(const FieldPtr& f, const std::vector<Matrix>& action, const std::vector<Vec>& candidates) {
    std::size_t d = action.at(0).rows();
    std::set<std::vector<Vec>> seen;
    std::vector<Subspace> out;
    for (auto& x : candidates) {
        Subspace c(f, d);
        for (auto& m : action) c.insert(m.apply(x));
        if (seen.insert(c.rows()).second) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

int search_min_generators(const FieldPtr& f, const std::vector<Matrix>& action, const std::vector<Vec>& candidates) {
    std::size_t d = action.at(0).rows();
    if (d == 0) return 0;
    auto cyclic = distinct_cyclic(f, action, candidates);
    std::map<std::size_t, Subspace, std::greater<>> frontier{{0, Subspace(f, d)}};
    std::set<std::size_t> reached{0};
    for (int level = 1; level <= int(d); ++level) {
        std::map<std::size_t, Subspace, std::greater<>> next;
        for (auto& [dim, u] : frontier)
            for (auto& c : cyclic) {
                Subspace w = sum(u, c);
                if (w.size() == d) return level;
                if (reached.insert(w.size()).second) next.emplace(w.size(), std::move(w));
            }
        if (next.empty()) return -1;
        frontier = std::move(next);
    }
    return -1;
}

int naive_min_generators(const FieldPtr& f, const std::vector<Matrix>& action, const std::vector<Vec>& candidates,
                         int max_k) {
    std::size_t d = action.at(0).rows();
    if (d == 0) return 0;
    auto cyclic = distinct_cyclic(f, action, candidates);
    std::size_t n = cyclic.size();
    for (int k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        if (idx.size() > n) break;
        while (true) {
            Subspace w(f, d);
            for (auto i : idx)
                for (auto& r : cyclic[i].rows()) w.insert(r);
            if (w.size() == d) return k;
            // next combination
            std::size_t pos = idx.size();
            while (pos > 0 && idx[pos - 1] == n - idx.size() + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return max_k + 1;
}

std::vector<Matrix> column_module_action(const FieldPtr& f, int n, int m) {
    std::size_t nn = std::size_t(n), mm = std::size_t(m), d = nn * mm;
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t s = 0; s < nn; ++s) {
            Matrix a(f, d, d);
            for (std::size_t c = 0; c < mm; ++c) a(c * nn + r, c * nn + s) = 1;
            out.push_back(std::move(a));
        }
    return out;
}

std::vector<Vec> column_module_candidates(const FieldPtr& f, int n, int m, bool all_elements) {
    std::size_t nn = std::size_t(n), mm = std::size_t(m), d = nn * mm, q = std::size_t(f->order());
    std::vector<Vec> out;
    if (all_elements) {
        std::size_t total = 1;
        for (std::size_t k = 0; k < d; ++k) total *= q;
        for (std::size_t i = 1; i < total; ++i) out.push_back(decode(i, d, q));
        return out;
    }
    // Reduced row echelon n x m matrices of rank 1..min(n, m), padded with zero rows.
    for (std::size_t rank = 1; rank <= std::min(nn, mm); ++rank) {
        std::vector<std::size_t> piv(rank);
        for (std::size_t i = 0; i < rank; ++i) piv[i] = i;
        while (true) {
            // free positions: row i, column c > piv[i], c not a pivot
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t c = piv[i] + 1; c < mm; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({i, c});
            std::size_t count = 1;
            for (std::size_t k = 0; k < free.size(); ++k) count *= q;
            for (std::size_t code = 0; code < count; ++code) {
                Vec v(d, 0);
                for (std::size_t i = 0; i < rank; ++i) v[piv[i] * nn + i] = 1;
                Vec vals = decode(code, free.size(), q);
                for (std::size_t k = 0; k < free.size(); ++k) v[free[k].second * nn + free[k].first] = vals[k];
                out.push_back(std::move(v));
            }
            std::size_t pos = rank;
            while (pos > 0 && piv[pos - 1] == mm - rank + pos - 1) --pos;
            if (pos == 0) break;
            ++piv[pos - 1];
            for (std::size_t i = pos; i < rank; ++i) piv[i] = piv[i - 1] + 1;
        }
    }
    return out;
}

}  // namespace natq::testing
