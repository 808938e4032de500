#include "natq/quivers.hpp"

#include <functional>
#include <sstream>

#include "natq/error.hpp"

namespace natq {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

Vec AlgebraAnalysis::sigma(std::span<const Elem> x) const { return split.section.apply(x); }

Vec AlgebraAnalysis::m_coords(std::span<const Elem> x) const {
    return top_radical.coordinates(r2().reduce(x));
}

bool AlgebraAnalysis::splitting() const {
    for (auto& b : wedd.blocks)
        if (b.d != 1) return false;
    return true;
}

AlgebraAnalysis analyze(const Algebra& a, std::uint64_t seed) {
    AlgebraAnalysis an;
    an.algebra = a;
    an.seed = seed;
    an.rad = jacobson_radical(a);
    an.wedd = block_decomposition(an.rad.top.algebra, seed);
    an.split = wedderburn_malcev_complement(a, an.rad);
    std::vector<Vec> prims;
    for (auto& b : an.wedd.blocks) prims.push_back(b.primitive_idempotent);
    an.frame = lift_idempotents(a, an.rad, prims);
    an.top_radical = Subspace(a.field(), a.dim());
    for (auto& v : an.rad.radical.rows()) an.top_radical.insert(an.r2().reduce(v));
    if (an.rad.powers.size() == 1) an.top_radical = Subspace(a.field(), a.dim());
    return an;
}

namespace {

Matrix combine(const std::vector<Matrix>& mats, std::span<const Elem> coeffs, const FieldPtr& f, std::size_t n) {
    Matrix out(f, n, n);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) out = out + mats[k].scaled(coeffs[k]);
    return out;
}

/// Matrix of `m` restricted to the invariant subspace `s` (in s-coordinates).
Matrix restrict_to(const Matrix& m, const Subspace& s) {
    std::size_t k = s.size();
    Matrix out(m.field(), k, k);
    for (std::size_t c = 0; c < k; ++c) {
        Vec img = s.coordinates(m.apply(s.rows()[c]));
        for (std::size_t r = 0; r < k; ++r) out(r, c) = img[r];
    }
    return out;
}

Subspace image(const Matrix& m) {
    Subspace s(m.field(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.col_vec(c));
    return s;
}

/// (multiplicity, n) for every block of the semisimple algebra r acting on a module.
std::vector<std::pair<int, int>> block_multiplicities(const Algebra& r, const std::vector<Matrix>& action,
                                                      std::uint64_t seed) {
    auto wd = block_decomposition(r, seed);
    std::size_t dimm = action.empty() ? 0 : action[0].rows();
    std::vector<std::pair<int, int>> out;
    for (auto& b : wd.blocks) {
        Matrix f = combine(action, b.primitive_idempotent, r.field(), dimm);
        int rk = int(rank(f));
        if (rk % b.d != 0) fail(ErrorKind::NonIntegralDimension, "module multiplicity is not integral");
        out.emplace_back(rk / b.d, b.n);
    }
    return out;
}

}  // namespace

BimoduleData radical_bimodule(const AlgebraAnalysis& an) {
    BimoduleData bm;
    const Algebra& a = an.algebra;
    const Algebra& top = an.rad.top.algebra;
    bm.dim = an.top_radical.size();
    for (std::size_t b = 0; b < top.dim(); ++b) {
        Vec sb = an.sigma(top.basis_vector(b));
        Matrix l(a.field(), bm.dim, bm.dim), r(a.field(), bm.dim, bm.dim);
        for (std::size_t c = 0; c < bm.dim; ++c) {
            const Vec& w = an.top_radical.rows()[c];
            Vec lc = an.m_coords(a.multiply(sb, w));
            Vec rc = an.m_coords(a.multiply(w, sb));
            for (std::size_t k = 0; k < bm.dim; ++k) {
                l(k, c) = lc[k];
                r(k, c) = rc[k];
            }
        }
        bm.left.push_back(std::move(l));
        bm.right.push_back(std::move(r));
    }
    std::size_t s = an.vertex_count();
    bm.slices.assign(s, std::vector<Subspace>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Matrix li = combine(bm.left, an.wedd.blocks[i].central_idempotent, a.field(), bm.dim);
            Matrix rj = combine(bm.right, an.wedd.blocks[j].central_idempotent, a.field(), bm.dim);
            bm.slices[i][j] = image(li * rj);
        }
    return bm;
}

int min_generators_semisimple_module(const Algebra& r, const std::vector<Matrix>& action, std::uint64_t seed) {
    if (action.empty() || action[0].rows() == 0) return 0;
    int t = 0;
    for (auto [mult, n] : block_multiplicities(r, action, seed)) t = std::max(t, ceil_div(mult, n));
    return t;
}

int natural_entry_full(const AlgebraAnalysis& an, const BimoduleData& bm, std::size_t i, std::size_t j) {
    const Subspace& slice = bm.slices[j][i];
    if (slice.size() == 0) return 0;
    const Algebra& top = an.rad.top.algebra;
    auto ci = corner_algebra(top, an.wedd.blocks[i].central_idempotent);
    auto cj = corner_algebra(top, an.wedd.blocks[j].central_idempotent);
    std::vector<Matrix> lj, ri;
    for (auto& v : cj.embedding) lj.push_back(restrict_to(combine(bm.left, v, top.field(), bm.dim), slice));
    for (auto& v : ci.embedding) ri.push_back(restrict_to(combine(bm.right, v, top.field(), bm.dim), slice));
    Algebra r = tensor_with_opposite(cj.algebra, ci.algebra);
    return min_generators_semisimple_module(r, bimodule_as_left_module(lj, ri), an.seed);
}

int natural_entry_corner(const AlgebraAnalysis& an, const BimoduleData& bm, std::size_t i, std::size_t j) {
    const Algebra& top = an.rad.top.algebra;
    const auto& bi = an.wedd.blocks[i];
    const auto& bj = an.wedd.blocks[j];
    Matrix lej = combine(bm.left, bj.primitive_idempotent, top.field(), bm.dim);
    Matrix rei = combine(bm.right, bi.primitive_idempotent, top.field(), bm.dim);
    Subspace slice = image(lej * rei);
    if (slice.size() == 0) return 0;
    auto di = corner_algebra(top, bi.primitive_idempotent);
    auto dj = corner_algebra(top, bj.primitive_idempotent);
    std::vector<Matrix> lj, ri;
    for (auto& v : dj.embedding) lj.push_back(restrict_to(combine(bm.left, v, top.field(), bm.dim), slice));
    for (auto& v : di.embedding) ri.push_back(restrict_to(combine(bm.right, v, top.field(), bm.dim), slice));
    Algebra z = tensor_with_opposite(dj.algebra, di.algebra);
    int t = 0;
    for (auto [mult, n] : block_multiplicities(z, bimodule_as_left_module(lj, ri), an.seed)) {
        (void)n;  // D_j ⊗ D_i^op is commutative
        t = std::max(t, ceil_div(mult, bi.n * bj.n));
    }
    return t;
}

QuiverMatrices quiver_frame(const AlgebraAnalysis& an) {
    QuiverMatrices q;
    q.s = an.vertex_count();
    q.p = an.algebra.field()->p();
    q.base_degree = an.algebra.field()->degree();
    for (auto& b : an.wedd.blocks) q.labels.emplace_back(b.n, b.d);
    return q;
}

namespace {

IntMatrix zeros(std::size_t s) { return IntMatrix(s, std::vector<int>(s, 0)); }

IntMatrix natural_matrix(const AlgebraAnalysis& an, const BimoduleData& bm) {
    std::size_t s = an.vertex_count();
    IntMatrix t = zeros(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::size_t size = an.wedd.blocks[i].dim() * an.wedd.blocks[j].dim();
            t[i][j] = size <= 36 ? natural_entry_full(an, bm, i, j) : natural_entry_corner(an, bm, i, j);
        }
    return t;
}

/// dim_k(ε_j (r/r^2) ε_i) at [i][j].
IntMatrix corner_dims(const AlgebraAnalysis& an, const BimoduleData& bm) {
    std::size_t s = an.vertex_count();
    const FieldPtr& f = an.algebra.field();
    IntMatrix m = zeros(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Matrix lej = combine(bm.left, an.wedd.blocks[j].primitive_idempotent, f, bm.dim);
            Matrix rei = combine(bm.right, an.wedd.blocks[i].primitive_idempotent, f, bm.dim);
            m[i][j] = int(rank(lej * rei));
        }
    return m;
}

IntMatrix diagram_matrix(const AlgebraAnalysis& an, const IntMatrix& dims) {
    std::size_t s = an.vertex_count();
    IntMatrix h = zeros(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            int dj = an.wedd.blocks[j].d;
            if (dims[i][j] % dj != 0) fail(ErrorKind::NonIntegralDimension, "Ext dimension is not a multiple of d_j");
            h[i][j] = dims[i][j] / dj;
        }
    return h;
}

}  // namespace

QuiverMatrices natural_quiver(const AlgebraAnalysis& an) {
    QuiverMatrices q = quiver_frame(an);
    q.t = natural_matrix(an, radical_bimodule(an));
    return q;
}

QuiverMatrices ext_quiver(const AlgebraAnalysis& an) {
    if (!an.splitting()) fail(ErrorKind::NotSplitting, "algebra is not splitting over its ground field");
    QuiverMatrices q = quiver_frame(an);
    q.m = corner_dims(an, radical_bimodule(an));
    return q;
}

QuiverMatrices diagram(const AlgebraAnalysis& an) {
    QuiverMatrices q = quiver_frame(an);
    q.h = diagram_matrix(an, corner_dims(an, radical_bimodule(an)));
    return q;
}

QuiverMatrices all_quivers(const AlgebraAnalysis& an) {
    QuiverMatrices q = quiver_frame(an);
    BimoduleData bm = radical_bimodule(an);
    IntMatrix dims = corner_dims(an, bm);
    q.t = natural_matrix(an, bm);
    q.h = diagram_matrix(an, dims);
    if (an.splitting()) q.m = dims;
    return q;
}

BasicAlgebraData basic_algebra(const AlgebraAnalysis& an) {
    const Algebra& a = an.algebra;
    Vec eps(a.dim(), 0);
    for (auto& e : an.frame) eps = add(*a.field(), eps, e);
    auto corner = corner_algebra(a, eps);
    BasicAlgebraData out{std::move(corner.algebra), an.frame, std::move(corner.embedding), {}};
    return out;
}

std::vector<std::size_t> basic_vertex_map(const AlgebraAnalysis& an, const BasicAlgebraData& b,
                                          const AlgebraAnalysis& bn) {
    Subspace space = span(an.algebra.field(), an.algebra.dim(), b.embedding);
    const Algebra& btop = bn.rad.top.algebra;
    std::vector<std::size_t> map;
    std::vector<bool> used(bn.vertex_count(), false);
    for (auto& e : an.frame) {
        Vec xb = space.coordinates(e);
        Vec xt = bn.rad.top.projection.apply(xb);
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < bn.vertex_count(); ++k)
            if (!is_zero(btop.multiply(bn.wedd.blocks[k].central_idempotent, xt))) {
                if (hit) fail(ErrorKind::Internal, "lifted idempotent meets two blocks of the basic algebra");
                hit = k;
            }
        if (!hit || used[*hit]) fail(ErrorKind::Internal, "basic algebra vertex map is not a bijection");
        used[*hit] = true;
        map.push_back(*hit);
    }
    if (map.size() != bn.vertex_count()) fail(ErrorKind::Internal, "basic algebra has a different vertex count");
    return map;
}

IntMatrix pull_back(const IntMatrix& m, const std::vector<std::size_t>& map) {
    IntMatrix out = zeros(map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = 0; j < map.size(); ++j) out[i][j] = m[map[i]][map[j]];
    return out;
}

HereditaryReport is_hereditary(const AlgebraAnalysis& an) {
    HereditaryReport rep;
    const Algebra& a = an.algebra;
    rep.radical_dim = an.rad.radical.size();
    BimoduleData bm = radical_bimodule(an);
    for (std::size_t j = 0; j < an.vertex_count(); ++j) {
        const auto& blk = an.wedd.blocks[j];
        int top_dim = int(rank(combine(bm.left, blk.primitive_idempotent, a.field(), bm.dim)));
        if (top_dim % blk.d != 0) fail(ErrorKind::NonIntegralDimension, "top multiplicity is not integral");
        std::size_t proj = rank(a.right_matrix(an.frame[j]));
        rep.projective_cover_dim += std::size_t(top_dim / blk.d) * proj;
    }
    rep.hereditary = rep.projective_cover_dim == rep.radical_dim;
    rep.acyclic_diagram = is_acyclic(diagram_matrix(an, corner_dims(an, bm)));
    return rep;
}

bool is_acyclic(const IntMatrix& m) {
    std::size_t n = m.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (m[v][w] == 0) continue;
            if (state[w] == 1) return false;
            if (state[w] == 0 && !visit(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && !visit(v)) return false;
    return true;
}

std::string_view check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool RelationReport::ok() const {
    for (auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

void RelationReport::add(std::string group, std::string name, CheckStatus status, std::string detail) {
    checks.push_back({std::move(group), std::move(name), status, std::move(detail)});
}

void RelationReport::append(const RelationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

/// Runs pred on every entry; records the first failing (i, j) (1-based) as the witness.
void entrywise(RelationReport& rep, const std::string& group, const std::string& name, std::size_t s,
               const std::function<bool(std::size_t, std::size_t, std::string&)>& pred) {
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::string why;
            if (!pred(i, j, why)) {
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << "): " << why;
                rep.add(group, name, CheckStatus::Fail, os.str());
                return;
            }
        }
    rep.add(group, name, CheckStatus::Pass);
}

std::string fmt(std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

RelationReport verify_quiver_relations(const AlgebraAnalysis& an) {
    RelationReport rep;
    QuiverMatrices qa = all_quivers(an);
    BasicAlgebraData basic = basic_algebra(an);
    AlgebraAnalysis bn = analyze(basic.algebra, an.seed);
    QuiverMatrices qb = all_quivers(bn);
    auto map = basic_vertex_map(an, basic, bn);
    std::size_t s = qa.s;
    const IntMatrix& t = *qa.t;
    const IntMatrix& h = *qa.h;
    IntMatrix tb = pull_back(*qb.t, map);
    IntMatrix hb = pull_back(*qb.h, map);
    auto n = [&](std::size_t i) { return an.wedd.blocks[i].n; };
    auto d = [&](std::size_t i) { return an.wedd.blocks[i].d; };
    bool split = an.splitting();
    const char* not_split = "algebra is not splitting over its ground field";

    if (split) {
        const IntMatrix& m = *qa.m;
        IntMatrix mb = pull_back(*qb.m, map);
        entrywise(rep, "thm2.2", "natural count is ceil(ext count / n_i n_j)", s, [&](auto i, auto j, std::string& w) {
            w = fmt({{"t", t[i][j]}, {"m", m[i][j]}, {"n_i", n(i)}, {"n_j", n(j)}});
            return t[i][j] == ceil_div(m[i][j], n(i) * n(j));
        });
        entrywise(rep, "prop2.1", "natural quiver is dense in the Ext-quiver", s, [&](auto i, auto j, std::string& w) {
            w = fmt({{"t", t[i][j]}, {"m", m[i][j]}});
            return (t[i][j] != 0) == (m[i][j] != 0);
        });
        entrywise(rep, "prop2.1", "basic algebra has the same Ext-quiver", s, [&](auto i, auto j, std::string& w) {
            w = fmt({{"m_A", m[i][j]}, {"m_B", mb[i][j]}});
            return m[i][j] == mb[i][j];
        });
        entrywise(rep, "prop2.1", "basic algebra: natural quiver equals Ext-quiver", s,
                  [&](auto i, auto j, std::string& w) {
                      w = fmt({{"t_B", tb[i][j]}, {"m_B", mb[i][j]}});
                      return tb[i][j] == mb[i][j];
                  });
        entrywise(rep, "prop2.1", "splitting: diagram equals Ext-quiver", s, [&](auto i, auto j, std::string& w) {
            w = fmt({{"h", h[i][j]}, {"m", m[i][j]}});
            return h[i][j] == m[i][j];
        });
        bool basic = true;
        for (std::size_t i = 0; i < s; ++i) basic = basic && n(i) == 1;
        if (basic)
            entrywise(rep, "prop2.1", "basic splitting: t = m = h", s, [&](auto i, auto j, std::string& w) {
                w = fmt({{"t", t[i][j]}, {"m", m[i][j]}, {"h", h[i][j]}});
                return t[i][j] == m[i][j] && m[i][j] == h[i][j];
            });
        else
            rep.add("prop2.1", "basic splitting: t = m = h", CheckStatus::Skipped, "algebra is not basic");
    } else {
        for (auto [g, name] : {std::pair{"thm2.2", "natural count is ceil(ext count / n_i n_j)"},
                               {"prop2.1", "natural quiver is dense in the Ext-quiver"},
                               {"prop2.1", "basic algebra has the same Ext-quiver"},
                               {"prop2.1", "basic algebra: natural quiver equals Ext-quiver"},
                               {"prop2.1", "splitting: diagram equals Ext-quiver"},
                               {"prop2.1", "basic splitting: t = m = h"}})
            rep.add(g, name, CheckStatus::Skipped, not_split);
    }

    entrywise(rep, "lem5.2", "t <= h <= n_i n_j d_i t", s, [&](auto i, auto j, std::string& w) {
        w = fmt({{"t", t[i][j]}, {"h", h[i][j]}, {"n_i", n(i)}, {"n_j", n(j)}, {"d_i", d(i)}});
        return t[i][j] <= h[i][j] && h[i][j] <= n(i) * n(j) * d(i) * t[i][j];
    });
    entrywise(rep, "thm5.3", "t_A <= ceil(t_B / n_i n_j) <= t_B", s, [&](auto i, auto j, std::string& w) {
        int c = ceil_div(tb[i][j], n(i) * n(j));
        w = fmt({{"t_A", t[i][j]}, {"t_B", tb[i][j]}, {"n_i", n(i)}, {"n_j", n(j)}});
        return t[i][j] <= c && c <= tb[i][j];
    });
    entrywise(rep, "thm5.3", "t <= ceil(h / n_i n_j) <= t d_i", s, [&](auto i, auto j, std::string& w) {
        int c = ceil_div(h[i][j], n(i) * n(j));
        w = fmt({{"t", t[i][j]}, {"h", h[i][j]}, {"n_i", n(i)}, {"n_j", n(j)}, {"d_i", d(i)}});
        return t[i][j] <= c && c <= t[i][j] * d(i);
    });
    entrywise(rep, "thm5.3", "natural arrows of A bounded by those of B", s, [&](auto i, auto j, std::string& w) {
        w = fmt({{"t_A", t[i][j]}, {"t_B", tb[i][j]}});
        return t[i][j] <= tb[i][j];
    });
    entrywise(rep, "thm5.3", "natural quiver and diagram have the same support", s,
              [&](auto i, auto j, std::string& w) {
                  w = fmt({{"t", t[i][j]}, {"h", h[i][j]}});
                  return (t[i][j] != 0) == (h[i][j] != 0);
              });
    entrywise(rep, "thm5.3", "diagram is Morita invariant (A vs basic B)", s, [&](auto i, auto j, std::string& w) {
        w = fmt({{"h_A", h[i][j]}, {"h_B", hb[i][j]}});
        return h[i][j] == hb[i][j];
    });

    HereditaryReport hr = is_hereditary(an);
    if (hr.hereditary)
        rep.add("thm6.4", "hereditary algebra has acyclic natural quiver",
                is_acyclic(t) ? CheckStatus::Pass : CheckStatus::Fail);
    else
        rep.add("thm6.4", "hereditary algebra has acyclic natural quiver", CheckStatus::Skipped, "not hereditary");
    return rep;
}

}  // namespace natq
