#include "natq/radical.hpp"

#include <cstdint>

#include "natq/error.hpp"

namespace natq {

Matrix regular_representation_over_prime(const Algebra& a, std::span<const Elem> x) {
    const Field& f = *a.field();
    std::size_t d = std::size_t(f.degree()), n = a.dim(), big = n * d;
    FieldPtr fp = Field::make(f.p());
    Matrix lq = a.left_matrix(x);
    Matrix out(fp, big, big);
    std::vector<Elem> xk(d);
    Elem pk = 1;
    for (std::size_t k = 0; k < d; ++k) {
        xk[k] = pk;  // the encoding of x^k is p^k
        pk = Elem(pk * f.p());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem c = lq(i, j);
            if (c == 0) continue;
            for (std::size_t k = 0; k < d; ++k) {
                auto dig = f.digits(f.mul(c, xk[k]));
                for (std::size_t l = 0; l < d; ++l) out(i * d + l, j * d + k) = Elem(dig[l]);
            }
        }
    return out;
}

namespace {

using IntMatrix = std::vector<std::int64_t>;

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, std::size_t n, std::int64_t mod) {
    IntMatrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t x = a[i * n + k];
            if (x == 0) continue;
            const std::int64_t* brow = &b[k * n];
            std::int64_t* crow = &c[i * n];
            for (std::size_t j = 0; j < n; ++j) crow[j] += x * brow[j];
        }
    for (auto& v : c) v %= mod;
    return c;
}

IntMatrix mat_pow_mod(IntMatrix base, std::uint64_t e, std::size_t n, std::int64_t mod) {
    IntMatrix result(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % mod;
    while (e > 0) {
        if (e & 1) result = mat_mul_mod(result, base, n, mod);
        e >>= 1;
        if (e) base = mat_mul_mod(base, base, n, mod);
    }
    return result;
}

/// (Tr(x~^{p^i}) mod p^{i+1}) / p^i for an integer lift x~ of the F_p-matrix x.
Elem p_trace(const Matrix& x, int p, unsigned i) {
    std::size_t n = x.rows();
    std::int64_t pi = 1;
    for (unsigned k = 0; k < i; ++k) pi *= p;
    std::int64_t mod = pi * p;
    IntMatrix m(n * n);
    for (std::size_t k = 0; k < n * n; ++k) m[k] = x.data()[k];
    // x^{p^i} as i successive p-th powers.
    for (unsigned k = 0; k < i; ++k) m = mat_pow_mod(std::move(m), std::uint64_t(p), n, mod);
    std::int64_t tr = 0;
    for (std::size_t k = 0; k < n; ++k) tr += m[k * n + k];
    tr %= mod;
    if (tr % pi != 0) fail(ErrorKind::Internal, "p-trace is not divisible by p^i");
    return Elem(tr / pi);
}

Vec to_prime_coords(const Field& f, std::span<const Elem> v) {
    std::size_t d = std::size_t(f.degree());
    Vec out(v.size() * d, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto dig = f.digits(v[i]);
        for (std::size_t l = 0; l < d; ++l) out[i * d + l] = Elem(dig[l]);
    }
    return out;
}

Vec from_prime_coords(const Field& f, std::span<const Elem> v) {
    std::size_t d = std::size_t(f.degree());
    Vec out(v.size() / d, 0);
    std::vector<int> dig(d);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t l = 0; l < d; ++l) dig[l] = v[i * d + l];
        out[i] = f.from_digits(dig);
    }
    return out;
}

}  // namespace

Subspace radical_subspace(const Algebra& a) {
    const Field& f = *a.field();
    int p = f.p();
    std::size_t d = std::size_t(f.degree()), n = a.dim(), big = n * d;
    FieldPtr fp = Field::make(p);
    unsigned l = 0;
    for (std::size_t pw = std::size_t(p); pw <= big; pw *= std::size_t(p)) ++l;

    // F_p basis of A: b_j x^k at index j * d + k.
    std::vector<Vec> basis_q;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Vec v(n, 0);
            Elem pk = 1;
            for (std::size_t t = 0; t < k; ++t) pk = Elem(pk * p);
            v[j] = pk;
            basis_q.push_back(std::move(v));
        }

    EchelonBasis current(fp, big);
    for (std::size_t k = 0; k < big; ++k) current.insert(unit_vec(big, k));

    for (unsigned i = 0; i <= l && current.size() > 0; ++i) {
        const auto& rows = current.rows();
        std::size_t m = rows.size();
        // g_i is linear on the current ideal, so its values on a basis determine it there.
        Vec g(m);
        std::vector<Vec> elems_q(m);
        for (std::size_t r = 0; r < m; ++r) {
            elems_q[r] = from_prime_coords(f, rows[r]);
            g[r] = p_trace(regular_representation_over_prime(a, elems_q[r]), p, i);
        }
        // G[r][k] = g_i(a_r b_k); I_i = {sum c_r a_r : sum_r c_r G[r][k] = 0 for all k}.
        Matrix gt(fp, big, m);
        for (std::size_t r = 0; r < m; ++r) {
            Matrix lr = a.left_matrix(elems_q[r]);
            for (std::size_t k = 0; k < big; ++k) {
                Vec prod = to_prime_coords(f, lr.apply(basis_q[k]));
                if (!current.contains(prod)) fail(ErrorKind::Internal, "trace-kernel subspace is not an ideal");
                gt(k, r) = dot(*fp, current.coordinates(prod), g);
            }
        }
        Matrix ker = kernel_basis(gt);
        EchelonBasis next(fp, big);
        for (std::size_t s = 0; s < ker.rows(); ++s) {
            Vec v(big, 0);
            for (std::size_t r = 0; r < m; ++r) axpy(*fp, v, ker(s, r), rows[r]);
            next.insert(v);
        }
        current = std::move(next);
    }

    Subspace rad(a.field(), n);
    for (auto& v : current.rows()) rad.insert(from_prime_coords(f, v));
    if (rad.size() * d != current.size()) fail(ErrorKind::Internal, "radical is not closed under scalars");
    return rad;
}

RadicalData jacobson_radical(const Algebra& a) {
    RadicalData out;
    out.radical = radical_subspace(a);
    out.powers.push_back(out.radical);
    while (out.powers.back().size() > 0) out.powers.push_back(product(a, out.powers.back(), out.radical));
    out.nilpotency_index = unsigned(out.powers.size());
    out.top = quotient_algebra(a, out.radical);
    return out;
}

Vec refine_idempotent(const Algebra& a, Vec x) {
    const Field& f = *a.field();
    Elem three = f.from_int(3), two = f.from_int(2);
    for (std::size_t round = 0; round < 64; ++round) {
        Vec sq = a.multiply(x, x);
        if (sq == x) return x;
        Vec cube = a.multiply(sq, x);
        Vec next = scale(f, three, sq);
        axpy(f, next, f.neg(two), cube);
        x = std::move(next);
    }
    fail(ErrorKind::NotIdempotentModR, "idempotent refinement did not converge");
}

std::vector<Vec> lift_idempotents(const Algebra& a, const RadicalData& rad, const std::vector<Vec>& idempotents) {
    const Algebra& top = rad.top.algebra;
    const Field& f = *a.field();
    std::size_t m = top.dim();
    Vec total(m, 0);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Vec& e = idempotents[i];
        if (e.size() != m) fail(ErrorKind::DimensionMismatch, "idempotent has wrong length");
        if (!top.is_idempotent(e)) fail(ErrorKind::NotIdempotentModR, "input " + std::to_string(i) + " is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if (!is_zero(top.multiply(e, idempotents[j])) || !is_zero(top.multiply(idempotents[j], e)))
                fail(ErrorKind::NotIdempotentModR, "inputs " + std::to_string(j) + " and " + std::to_string(i) +
                                                       " are not orthogonal");
        total = add(f, total, e);
    }
    bool complete = !idempotents.empty() && total == top.unit();

    auto lift = [&](const Vec& e) {
        Vec x(a.dim(), 0);
        for (std::size_t k = 0; k < m; ++k) x[rad.top.lift_index[k]] = e[k];
        return x;
    };
    std::vector<Vec> out;
    Vec sum_so_far(a.dim(), 0);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        Vec complement = sub(f, a.unit(), sum_so_far);
        if (complete && i + 1 == idempotents.size()) {
            out.push_back(complement);
            break;
        }
        Vec x = a.multiply(a.multiply(complement, lift(idempotents[i])), complement);
        Vec e = refine_idempotent(a, std::move(x));
        out.push_back(e);
        sum_so_far = add(f, sum_so_far, e);
    }
    return out;
}

namespace {

/// Greedy generating set of a unital algebra, taken from its basis.
std::vector<std::size_t> algebra_generators(const Algebra& s) {
    std::vector<std::size_t> gens;
    Subspace sub(s.field(), s.dim());
    sub.insert(s.unit());
    auto close = [&]() {
        bool grown = true;
        while (grown) {
            grown = false;
            auto rows = sub.rows();
            for (auto& x : rows)
                for (auto& y : rows)
                    if (sub.insert(s.multiply(x, y))) grown = true;
        }
    };
    for (std::size_t i = 0; i < s.dim() && sub.size() < s.dim(); ++i) {
        if (sub.contains(s.basis_vector(i))) continue;
        gens.push_back(i);
        sub.insert(s.basis_vector(i));
        close();
    }
    return gens;
}

}  // namespace

SplittingData wedderburn_malcev_complement(const Algebra& a, const RadicalData& rad) {
    const Algebra& top = rad.top.algebra;
    const Field& f = *a.field();
    FieldPtr fld = a.field();
    std::size_t m = top.dim(), n = a.dim();
    std::vector<Vec> sigma(m);
    for (std::size_t c = 0; c < m; ++c) sigma[c] = a.basis_vector(rad.top.lift_index[c]);
    auto apply_sigma = [&](const Vec& x) {
        Vec out(n, 0);
        for (std::size_t c = 0; c < m; ++c)
            if (x[c] != 0) axpy(f, out, x[c], sigma[c]);
        return out;
    };

    // Multiplicativity on pairs (x, basis element) for x the unit and the algebra
    // generators implies it everywhere; the unit must be listed since the generator
    // search takes it for granted.
    std::vector<Vec> gens{top.unit()};
    for (std::size_t g : algebra_generators(top)) gens.push_back(top.basis_vector(g));
    for (std::size_t k = 1; k < rad.powers.size(); ++k) {
        const Subspace& rk = rad.powers[k - 1];
        const Subspace& rk1 = rad.powers[k];
        Subspace w(fld, n);
        for (auto& v : rk.rows()) w.insert(rk1.reduce(v));
        std::size_t wd = w.size();
        if (wd == 0) continue;
        auto coords = [&](const Vec& x) { return w.coordinates(rk1.reduce(x)); };

        std::size_t eq_rows = gens.size() * m * wd, unknowns = m * wd;
        Matrix sys(fld, eq_rows, unknowns);
        Vec rhs(eq_rows, 0);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const Vec& x = gens[gi];
            Vec sx = apply_sigma(x);
            for (std::size_t b = 0; b < m; ++b) {
                std::size_t row0 = (gi * m + b) * wd;
                Vec xb = top.multiply(x, top.basis_vector(b));
                Vec defect = sub(f, a.multiply(sx, sigma[b]), apply_sigma(xb));
                Vec dc = coords(defect);
                for (std::size_t t = 0; t < wd; ++t) rhs[row0 + t] = f.neg(dc[t]);
                for (std::size_t c = 0; c < m; ++c)
                    for (std::size_t l = 0; l < wd; ++l) {
                        // delta(q_c) = w_l contributes sigma(x) delta(b) + delta(x) sigma(b) - delta(xb).
                        const Vec& wl = w.rows()[l];
                        Vec contrib(n, 0);
                        if (c == b) contrib = add(f, contrib, a.multiply(sx, wl));
                        if (x[c] != 0) axpy(f, contrib, x[c], a.multiply(wl, sigma[b]));
                        if (xb[c] != 0) axpy(f, contrib, f.neg(xb[c]), wl);
                        if (is_zero(contrib)) continue;
                        Vec cc = coords(contrib);
                        for (std::size_t t = 0; t < wd; ++t) sys(row0 + t, c * wd + l) = cc[t];
                    }
            }
        }
        auto sol = solve(sys, rhs);
        if (!sol) fail(ErrorKind::Internal, "Malcev correction system is inconsistent");
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t l = 0; l < wd; ++l)
                if ((*sol)[c * wd + l] != 0) axpy(f, sigma[c], (*sol)[c * wd + l], w.rows()[l]);
    }

    SplittingData out;
    out.section = Matrix::from_columns(fld, sigma, n);
    out.complement = span(fld, n, sigma);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (a.multiply(sigma[i], sigma[j]) != apply_sigma(top.product(i, j)))
                fail(ErrorKind::Internal, "Malcev section is not multiplicative");
    return out;
}

}  // namespace natq
