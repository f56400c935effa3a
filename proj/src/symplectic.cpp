#include "metaplectic/symplectic.hpp"

#include <algorithm>
#include <cassert>

namespace metaplectic {

GSpElement make_gsp(const RatMat& m, const PadicContext& ctx) {
    (void)ctx;
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
        throw NotSimilitude("make_gsp: matrix must be 2n x 2n");
    std::size_t n = m.rows() / 2;
    RatMat j = RatMat::symplectic_form(n);
    RatMat gjgt = m * j * m.transpose();
    Rat lambda = gjgt(0, n); // J(0, n) = 1
    if (lambda == 0) throw NotSimilitude("make_gsp: zero similitude");
    if (gjgt != j.scaled(lambda)) throw NotSimilitude("make_gsp: g J g^t is not a multiple of J");
    return GSpElement(n, m, lambda);
}

GSpElement make_gsp_unchecked(const RatMat& m, const Rat& lambda) {
    return GSpElement(m.rows() / 2, m, lambda);
}

GSpElement GSpElement::operator*(const GSpElement& o) const {
    if (n_ != o.n_) throw ShapeMismatch("GSpElement: size mismatch");
    return GSpElement(n_, m_ * o.m_, lambda_ * o.lambda_);
}

GSpElement GSpElement::inverse() const {
    RatMat j = RatMat::symplectic_form(n_);
    // g^{-1} = lambda^{-1} J g^t J^{-1}, with J^{-1} = -J
    RatMat inv = (j * m_.transpose() * j).scaled(-Rat(1) / lambda_);
    return GSpElement(n_, inv, Rat(1) / lambda_);
}

GSpElement i_lambda(std::size_t n, const Rat& lambda) {
    if (lambda == 0) throw ZeroInput("i_lambda: zero similitude");
    RatMat m = RatMat::identity(2 * n);
    for (std::size_t k = 0; k < n; ++k) m(n + k, n + k) = lambda;
    return make_gsp_unchecked(m, lambda);
}

GSpElement levi_m(const RatMat& a) {
    std::size_t n = a.rows();
    RatMat m(2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(n, n, a.transpose().inverse());
    return make_gsp_unchecked(m, 1);
}

GSpElement shear_u(const RatMat& s) {
    if (s != s.transpose()) throw std::logic_error("shear_u: symmetric parameter required");
    std::size_t n = s.rows();
    RatMat m = RatMat::identity(2 * n);
    m.set_block(0, n, s);
    return make_gsp_unchecked(m, 1);
}

GSpElement shear_l(const RatMat& s) {
    if (s != s.transpose()) throw std::logic_error("shear_l: symmetric parameter required");
    std::size_t n = s.rows();
    RatMat m = RatMat::identity(2 * n);
    m.set_block(n, 0, s);
    return make_gsp_unchecked(m, 1);
}

GSpElement sp_identity(std::size_t n) { return make_gsp_unchecked(RatMat::identity(2 * n), 1); }

GSpElement tau_cell(std::size_t n, std::size_t j) {
    if (j > n) throw ShapeMismatch("tau_cell: j > n");
    RatMat m(2 * n, 2 * n);
    std::size_t k = n - j;
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = 1;         // A = diag(I_{n-j}, 0)
        m(n + i, n + i) = 1; // D = diag(I_{n-j}, 0)
    }
    for (std::size_t i = 0; i < j; ++i) {
        m(k + i, n + k + i) = 1;  // B = diag(0, I_j)
        m(n + k + i, k + i) = -1; // C = diag(0, -I_j)
    }
    return make_gsp_unchecked(m, 1);
}

GSpElement g_one(const GSpElement& g) { return i_lambda(g.n(), Rat(1) / g.lambda()) * g; }

GSpElement embed_i_rn(const GSpElement& h, std::size_t r, std::size_t n) {
    if (h.n() != r || r > n) throw ShapeMismatch("embed_i_rn: shape mismatch");
    std::size_t k = n - r;
    RatMat m(2 * n, 2 * n);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = 1;
        m(n + i, n + i) = h.lambda();
    }
    m.set_block(k, k, h.block_a());
    m.set_block(k, n + k, h.block_b());
    m.set_block(n + k, k, h.block_c());
    m.set_block(n + k, n + k, h.block_d());
    return make_gsp_unchecked(m, h.lambda());
}

GSpElement conj_i_lambda(const GSpElement& g, const Rat& lambda) {
    GSpElement il = i_lambda(g.n(), lambda);
    return il.inverse() * g * il;
}

std::size_t cell_rank(const GSpElement& g) {
    const GSpElement* s = &g;
    GSpElement tmp;
    if (!g.is_sp()) {
        tmp = g_one(g);
        s = &tmp;
    }
    return s->block_c().rank();
}

bool in_omega0(const GSpElement& g) { return cell_rank(g) == 0; }

namespace {

SquareClass det_class(const RatMat& a, const PadicContext& ctx) {
    return square_class(a.det(), ctx);
}

} // namespace

BruhatFactorization bruhat_factor(const GSpElement& g, const PadicContext& ctx,
                                  std::mt19937_64* rng) {
    if (!g.is_sp()) throw std::domain_error("bruhat_factor: element must lie in Sp");
    const std::size_t n = g.n();
    RatMat c = g.block_c();
    std::size_t j = c.rank();
    GSpElement tau = tau_cell(n, j);
    if (j == 0) {
        BruhatFactorization f{g, 0, sp_identity(n), tau, det_class(g.block_a(), ctx),
                              square_class(1, ctx)};
        return f;
    }

    GSpElement cur = g;
    GSpElement p1 = sp_identity(n);
    GSpElement p2 = sp_identity(n);
    auto apply_left = [&](const GSpElement& l) {
        cur = l * cur;
        p1 = p1 * l.inverse();
    };
    auto apply_right = [&](const GSpElement& r) {
        cur = cur * r;
        p2 = r.inverse() * p2;
    };

    // Step 1: row/column reduce the lower-left block to diag(0, -I_j).
    {
        RatMat work = c;
        RatMat P = RatMat::identity(n);
        RatMat Q = RatMat::identity(n);
        for (std::size_t k = 0; k < j; ++k) {
            std::vector<std::pair<std::size_t, std::size_t>> cand;
            for (std::size_t r = k; r < n; ++r)
                for (std::size_t cc = k; cc < n; ++cc)
                    if (work(r, cc) != 0) cand.emplace_back(r, cc);
            if (cand.empty()) throw std::logic_error("bruhat_factor: rank defect");
            auto [pr, pc] = rng ? cand[(*rng)() % cand.size()] : cand.front();
            if (pr != k)
                for (std::size_t t = 0; t < n; ++t) {
                    std::swap(work(pr, t), work(k, t));
                    std::swap(P(pr, t), P(k, t));
                }
            if (pc != k)
                for (std::size_t t = 0; t < n; ++t) {
                    std::swap(work(t, pc), work(t, k));
                    std::swap(Q(t, pc), Q(t, k));
                }
            Rat piv = work(k, k);
            for (std::size_t t = 0; t < n; ++t) {
                work(k, t) /= piv;
                P(k, t) /= piv;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == k || work(r, k) == 0) continue;
                Rat f = work(r, k);
                for (std::size_t t = 0; t < n; ++t) {
                    work(r, t) -= f * work(k, t);
                    P(r, t) -= f * P(k, t);
                }
            }
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == k || work(k, cc) == 0) continue;
                Rat f = work(k, cc);
                for (std::size_t t = 0; t < n; ++t) {
                    work(t, cc) -= f * work(t, k);
                    Q(t, cc) -= f * Q(t, k);
                }
            }
        }
        // Now P c Q = diag(I_j, 0); move the pivot block to the bottom-right corner
        // with sign -1: swap rows i <-> n-j+i, columns likewise, negate j columns.
        std::size_t k0 = n - j;
        if (k0 > 0) {
            RatMat perm(n, n);
            for (std::size_t i = 0; i < j; ++i) perm(k0 + i, i) = 1;
            for (std::size_t i = 0; i < k0; ++i) perm(i, j + i) = 1;
            // perm maps row i (pivot rows 0..j-1) to row k0+i.
            P = perm * P;
            Q = Q * perm.transpose();
        }
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t i = 0; i < j; ++i) Q(t, k0 + i) = -Q(t, k0 + i);
        apply_left(levi_m(P.transpose().inverse()));
        apply_right(levi_m(Q));
    }

    const std::size_t k0 = n - j;
    // The symplectic relations with C = diag(0, -I_j) force A21 = 0, A22 and D22
    // symmetric, D12 = 0, and A11 invertible.
    {
        RatMat a = cur.block_a();
        RatMat a11 = a.block(0, 0, k0, k0);
        if (k0 > 0) {
            RatMat l(n, n); // A -> l A with l = diag(A11^{-1}, I_j); keeps C = diag(0, -I_j)
            l.set_block(0, 0, a11.inverse());
            for (std::size_t i = 0; i < j; ++i) l(k0 + i, k0 + i) = 1;
            apply_left(levi_m(l));
        }
        a = cur.block_a();
        if (k0 > 0) {
            RatMat q = RatMat::identity(n);
            for (std::size_t r = 0; r < k0; ++r)
                for (std::size_t cidx = 0; cidx < j; ++cidx) q(r, k0 + cidx) = -a(r, k0 + cidx);
            apply_right(levi_m(q));
        }
        a = cur.block_a();
        RatMat s(n, n);
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t cidx = 0; cidx < j; ++cidx) s(k0 + r, k0 + cidx) = a(k0 + r, k0 + cidx);
        apply_left(shear_u(s));
    }
    // Step 3: one right shear clears B and D to the tau_j blocks.
    {
        RatMat b = cur.block_b();
        RatMat d = cur.block_d();
        RatMat s(n, n);
        RatMat b11(k0, k0), d21(j, k0), d22(j, j);
        for (std::size_t r = 0; r < k0; ++r)
            for (std::size_t cidx = 0; cidx < k0; ++cidx) b11(r, cidx) = b(r, cidx);
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t cidx = 0; cidx < k0; ++cidx) d21(r, cidx) = d(k0 + r, cidx);
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t cidx = 0; cidx < j; ++cidx) d22(r, cidx) = d(k0 + r, k0 + cidx);
        s.set_block(0, 0, -b11);
        s.set_block(0, k0, d21.transpose());
        s.set_block(k0, 0, d21);
        s.set_block(k0, k0, d22);
        apply_right(shear_u(s));
    }

    if (cur != tau) throw std::logic_error("bruhat_factor: reduction did not reach tau_j");
    if ((p1 * tau * p2) != g) throw std::logic_error("bruhat_factor: reconstruction mismatch");
    BruhatFactorization f{p1, j, p2, tau, det_class(p1.block_a(), ctx),
                          det_class(p2.block_a(), ctx)};
    return f;
}

SquareClass x_of(const GSpElement& g, const PadicContext& ctx, std::mt19937_64* rng) {
    if (!g.is_sp()) throw std::domain_error("x_of: element must lie in Sp");
    if (in_omega0(g)) return square_class(g.block_a().det(), ctx);
    BruhatFactorization f = bruhat_factor(g, ctx, rng);
    // x(tau_j) is calibrated to class((-1)^j): this is the choice that agrees with
    // Kubota's convention at n = 1.
    SquareClass x = f.x_p1 * f.x_p2;
    if (f.j % 2 == 1) x = x * square_class(-1, ctx);
    return x;
}

SquareClass x_kubota(const GSpElement& g, const PadicContext& ctx) {
    if (g.n() != 1) throw ShapeMismatch("x_kubota: n = 1 only");
    const Rat& c = g.mat()(1, 0);
    if (c != 0) return square_class(c, ctx);
    return square_class(g.mat()(1, 1), ctx);
}

namespace {

Rat small_rat(std::mt19937_64& rng, bool nonzero) {
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    long num = draw(-9, 9);
    while (nonzero && num == 0) num = draw(-9, 9);
    long den = draw(1, 9);
    return Rat(num, den);
}

} // namespace

GSpElement random_sp(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng) {
    (void)ctx;
    GSpElement g = sp_identity(n);
    std::size_t len = 4 + rng() % 9; // word length in [4, 12]
    for (std::size_t w = 0; w < len; ++w) {
        switch (rng() % 5) {
            case 0: { // elementary GL_n move
                RatMat a = RatMat::identity(n);
                if (n == 1) {
                    a(0, 0) = small_rat(rng, true);
                } else {
                    std::size_t i = rng() % n, jj = rng() % n;
                    if (i == jj) {
                        a(i, i) = small_rat(rng, true);
                    } else {
                        a(i, jj) = small_rat(rng, false);
                    }
                }
                g = g * levi_m(a);
                break;
            }
            case 1: { // upper shear
                RatMat s(n, n);
                std::size_t i = rng() % n, jj = rng() % n;
                Rat c = small_rat(rng, false);
                s(i, jj) = c;
                s(jj, i) = c;
                g = g * shear_u(s);
                break;
            }
            case 2: { // lower shear
                RatMat s(n, n);
                std::size_t i = rng() % n, jj = rng() % n;
                Rat c = small_rat(rng, false);
                s(i, jj) = c;
                s(jj, i) = c;
                g = g * shear_l(s);
                break;
            }
            case 3: { // embedded Weyl element
                std::size_t r = 1 + rng() % n;
                g = g * tau_cell(n, r);
                break;
            }
            default: { // diagonal torus element
                RatMat a(n, n);
                for (std::size_t i = 0; i < n; ++i) a(i, i) = small_rat(rng, true);
                g = g * levi_m(a);
                break;
            }
        }
    }
    return g;
}

GSpElement random_gsp(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng) {
    auto classes = all_classes(ctx);
    Rat lambda = classes[rng() % classes.size()].rep();
    Rat s = small_rat(rng, true);
    lambda *= s * s;
    return i_lambda(n, lambda) * random_sp(n, ctx, rng);
}

GSpElement random_omega0(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng) {
    (void)ctx;
    GSpElement g = sp_identity(n);
    std::size_t len = 2 + rng() % 5;
    for (std::size_t w = 0; w < len; ++w) {
        if (rng() % 2 == 0) {
            RatMat a = RatMat::identity(n);
            std::size_t i = rng() % n, jj = rng() % n;
            if (i == jj)
                a(i, i) = small_rat(rng, true);
            else
                a(i, jj) = small_rat(rng, false);
            g = g * levi_m(a);
        } else {
            RatMat s(n, n);
            std::size_t i = rng() % n, jj = rng() % n;
            Rat c = small_rat(rng, false);
            s(i, jj) = c;
            s(jj, i) = c;
            g = g * shear_u(s);
        }
    }
    return g;
}

} // namespace metaplectic
