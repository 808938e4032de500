#include "natq/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "natq/error.hpp"
#include "natq/radical.hpp"

namespace natq {

Vec evaluate_in_algebra(const Algebra& a, const Poly& f, std::span<const Elem> x, std::span<const Elem> one) {
    const Field& fld = *a.field();
    Vec acc(a.dim(), 0);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = a.multiply(acc, x);
        axpy(fld, acc, f[i], one);
    }
    return acc;
}

Poly element_minimal_polynomial(const Algebra& a, std::span<const Elem> x, std::span<const Elem> one) {
    Matrix lx = a.left_matrix(x);
    auto next = [&](const Vec& v) { return lx.apply(v); };
    return minimal_polynomial_of_powers(a.field(), a.dim(), next, Vec(one.begin(), one.end()));
}

Subspace center(const Algebra& s) {
    std::size_t n = s.dim();
    const Field& f = *s.field();
    // z central iff sum_j z_j (b_j b_i - b_i b_j) = 0 for all i.
    Matrix m(s.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& ji = s.product(j, i);
            const Vec& ij = s.product(i, j);
            for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = f.sub(ji[k], ij[k]);
        }
    Matrix ker = kernel_basis(m);
    return span(s.field(), n, ker.row_list());
}

std::vector<Vec> central_primitive_idempotents(const Algebra& s) {
    const Field& f = *s.field();
    std::size_t n = s.dim();
    Subspace z = center(s);
    // Berlekamp subalgebra {z : z^q = z} ≅ F_q^(number of blocks).
    std::size_t zd = z.size();
    auto q = std::uint64_t(f.order());
    Matrix frob(s.field(), n, zd);
    for (std::size_t c = 0; c < zd; ++c) {
        Vec img = sub(f, s.power(z.rows()[c], q), z.rows()[c]);
        for (std::size_t k = 0; k < n; ++k) frob(k, c) = img[k];
    }
    Matrix ker = kernel_basis(frob);
    std::vector<Vec> berlekamp;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vec v(n, 0);
        for (std::size_t c = 0; c < zd; ++c) axpy(f, v, ker(r, c), z.rows()[c]);
        berlekamp.push_back(std::move(v));
    }

    std::vector<Vec> parts{s.unit()};
    for (auto& x : berlekamp) {
        if (parts.size() == berlekamp.size()) break;
        std::vector<Vec> next;
        for (auto& e : parts) {
            Vec xe = s.multiply(x, e);
            Poly mu = element_minimal_polynomial(s, xe, e);
            if (mu.degree() <= 1) {
                next.push_back(e);
                continue;
            }
            // Every element of the Berlekamp algebra satisfies z^q = z, so mu splits into
            // distinct linear factors; take Lagrange idempotents.
            std::vector<Elem> roots;
            for (auto& pf : factor_poly(mu)) roots.push_back(f.neg(pf.factor[0]));
            for (std::size_t r = 0; r < roots.size(); ++r) {
                Poly l = Poly::constant(s.field(), 1);
                for (std::size_t t = 0; t < roots.size(); ++t) {
                    if (t == r) continue;
                    Elem inv = f.inv(f.sub(roots[r], roots[t]));
                    l = l * Poly(s.field(), Vec{f.mul(f.neg(roots[t]), inv), inv});
                }
                next.push_back(evaluate_in_algebra(s, l, xe, e));
            }
        }
        parts = std::move(next);
    }
    if (parts.size() != berlekamp.size())
        fail(ErrorKind::Internal, "central idempotent refinement did not reach the block count");
    return parts;
}

std::pair<int, int> block_parameters(const Algebra& s, std::span<const Elem> central_idempotent) {
    Matrix lc = s.left_matrix(central_idempotent);
    Subspace blk(s.field(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) blk.insert(lc.apply(s.basis_vector(i)));
    Subspace z = center(s);
    Subspace zc(s.field(), s.dim());
    for (auto& v : z.rows()) zc.insert(lc.apply(v));
    int d = int(zc.size());
    if (d == 0 || blk.size() % std::size_t(d) != 0) fail(ErrorKind::Internal, "block dimension is not a multiple of d");
    int nsq = int(blk.size()) / d;
    int n = int(std::lround(std::sqrt(double(nsq))));
    if (n * n != nsq) fail(ErrorKind::Internal, "block dimension is not n^2 d");
    return {n, d};
}

namespace {

Subspace corner_space(const Algebra& s, std::span<const Elem> e) {
    Matrix le = s.left_matrix(e), re = s.right_matrix(e);
    Subspace c(s.field(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) c.insert(le.apply(re.apply(s.basis_vector(i))));
    return c;
}

}  // namespace

Vec primitive_idempotent(const Algebra& s, std::span<const Elem> central_idempotent, int d, std::uint64_t seed) {
    const Field& f = *s.field();
    std::mt19937_64 rng(seed);
    Vec e(central_idempotent.begin(), central_idempotent.end());
    Subspace c = corner_space(s, e);
    int budget = 64;
    while (c.size() > std::size_t(d)) {
        if (budget-- == 0) fail(ErrorKind::SplitFailure, "no splitting element found within 64 attempts");
        Vec x(s.dim(), 0);
        for (auto& r : c.rows()) axpy(f, x, Elem(rng() % std::uint64_t(f.order())), r);
        Poly mu = element_minimal_polynomial(s, x, e);
        auto factors = factor_poly(mu, rng());
        if (factors.size() < 2) continue;
        // Primary idempotent u(x): u ≡ 1 mod f_1^a, u ≡ 0 mod mu / f_1^a.
        Poly prim = pow(factors[0].factor, unsigned(factors[0].multiplicity));
        Poly rest = mu / prim;
        auto eg = extended_gcd(rest, prim);  // s*rest + t*prim = 1
        Poly u = (eg.s * rest) % mu;
        Vec e1 = evaluate_in_algebra(s, u, x, e);
        Vec e2 = sub(f, e, e1);
        Subspace c1 = corner_space(s, e1), c2 = corner_space(s, e2);
        if (c1.size() <= c2.size()) {
            e = std::move(e1);
            c = std::move(c1);
        } else {
            e = std::move(e2);
            c = std::move(c2);
        }
    }
    if (c.size() != std::size_t(d)) fail(ErrorKind::SplitFailure, "corner dimension overshot d");
    return e;
}

WedderburnData block_decomposition(const Algebra& s, std::uint64_t seed) {
    if (radical_subspace(s).size() != 0) fail(ErrorKind::NotSemisimple, "algebra has a nonzero radical");
    WedderburnData out;
    auto cents = central_primitive_idempotents(s);
    for (auto& c : cents) {
        WedderburnBlock b;
        b.central_idempotent = c;
        Matrix lc = s.left_matrix(c);
        b.basis = Subspace(s.field(), s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) b.basis.insert(lc.apply(s.basis_vector(i)));
        std::tie(b.n, b.d) = block_parameters(s, c);
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const WedderburnBlock& x, const WedderburnBlock& y) {
        if (x.n != y.n) return x.n < y.n;
        if (x.d != y.d) return x.d < y.d;
        return x.basis.rows() < y.basis.rows();
    });
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        auto& b = out.blocks[i];
        b.primitive_idempotent = primitive_idempotent(s, b.central_idempotent, b.d, seed + i);
    }
    return out;
}

std::vector<Matrix> irreducible_module(const Algebra& s, const WedderburnBlock& block) {
    Matrix re = s.right_matrix(block.primitive_idempotent);
    Subspace mod(s.field(), s.dim());
    for (auto& v : block.basis.rows()) mod.insert(re.apply(v));
    std::size_t m = mod.size();
    std::vector<Matrix> out;
    for (auto& v : block.basis.rows()) {
        Matrix lv = s.left_matrix(v);
        Matrix act(s.field(), m, m);
        for (std::size_t c = 0; c < m; ++c) {
            Vec img = mod.coordinates(lv.apply(mod.rows()[c]));
            for (std::size_t r = 0; r < m; ++r) act(r, c) = img[r];
        }
        out.push_back(std::move(act));
    }
    return out;
}

bool is_splitting(const Algebra& a) {
    auto rad = jacobson_radical(a);
    auto cents = central_primitive_idempotents(rad.top.algebra);
    for (auto& c : cents)
        if (block_parameters(rad.top.algebra, c).second != 1) return false;
    return true;
}

}  // namespace natq
