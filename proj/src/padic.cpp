#include "metaplectic/padic.hpp"

#include <cmath>
#include <mutex>

namespace metaplectic {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

PadicContext::PadicContext(long prime, long depth, long terms)
    : p(prime), oracle_depth(depth), gauss_terms(terms) {
    if (!is_prime(p)) throw std::domain_error("PadicContext: p must be prime");
    if (oracle_depth < 3) throw std::domain_error("PadicContext: oracle_depth >= 3 required");
    if (gauss_terms < 4) throw std::domain_error("PadicContext: gauss_terms >= 4 required");
}

long least_nonresidue(long p) {
    for (long a = 2; a < p; ++a)
        if (legendre(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(p)) == -1) return a;
    throw std::logic_error("least_nonresidue: none found");
}

int class_count(long p) { return p == 2 ? 8 : 4; }

Rat SquareClass::rep() const {
    if (p_ == 2) {
        static const long reps[8] = {1, -1, 5, -5, 2, -2, 10, -10};
        return Rat(reps[idx_]);
    }
    long u = least_nonresidue(p_);
    switch (idx_) {
        case 0: return Rat(1);
        case 1: return Rat(u);
        case 2: return Rat(p_);
        default: return Rat(u * p_);
    }
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (p_ != o.p_) throw std::domain_error("SquareClass: mixed primes");
    PadicContext ctx(p_);
    return square_class(rep() * o.rep(), ctx);
}

std::vector<SquareClass> all_classes(const PadicContext& ctx) {
    std::vector<SquareClass> v;
    for (int i = 0; i < class_count(ctx.p); ++i) v.emplace_back(ctx.p, i);
    return v;
}

SquareClass square_class(const Rat& a, const PadicContext& ctx) {
    if (a == 0) throw ZeroInput("square_class: zero input");
    long v = val_p(a, ctx.p);
    Rat u = unit_part(a, ctx.p);
    if (ctx.p == 2) {
        std::uint64_t u8 = unit_mod_pk(u, 8);
        int unit_idx;
        switch (u8) {
            case 1: unit_idx = 0; break;
            case 7: unit_idx = 1; break; // -1
            case 5: unit_idx = 2; break;
            default: unit_idx = 3; break; // 3 = -5 mod 8
        }
        return SquareClass(2, ((v & 1) ? 4 : 0) + unit_idx);
    }
    int unit_idx =
        legendre(unit_mod_pk(u, static_cast<std::uint64_t>(ctx.p)), static_cast<std::uint64_t>(ctx.p)) == 1
            ? 0
            : 1;
    return SquareClass(ctx.p, ((v & 1) ? 2 : 0) + unit_idx);
}

int hilbert_symbol(const Rat& a, const Rat& b, const PadicContext& ctx) {
    if (a == 0 || b == 0) throw ZeroInput("hilbert_symbol: zero input");
    long alpha = val_p(a, ctx.p);
    long beta = val_p(b, ctx.p);
    Rat u = unit_part(a, ctx.p);
    Rat v = unit_part(b, ctx.p);
    if (ctx.p == 2) {
        auto eps = [](std::uint64_t x8) { return (x8 % 4 == 3) ? 1 : 0; };   // (x-1)/2 mod 2
        auto omg = [](std::uint64_t x8) { return (x8 == 3 || x8 == 5) ? 1 : 0; }; // (x^2-1)/8 mod 2
        std::uint64_t u8 = unit_mod_pk(u, 8);
        std::uint64_t v8 = unit_mod_pk(v, 8);
        long e = eps(u8) * eps(v8) + (alpha & 1) * omg(v8) + (beta & 1) * omg(u8);
        return (e & 1) ? -1 : 1;
    }
    std::uint64_t P = static_cast<std::uint64_t>(ctx.p);
    int lu = legendre(unit_mod_pk(u, P), P);
    int lv = legendre(unit_mod_pk(v, P), P);
    long e = 0;
    if ((alpha & 1) && (beta & 1) && ((ctx.p - 1) / 2) % 2 == 1) e ^= 1;
    if ((beta & 1) && lu == -1) e ^= 1;
    if ((alpha & 1) && lv == -1) e ^= 1;
    return e ? -1 : 1;
}

namespace {

// Squares-mod-p^d tables, shared across calls.
const std::vector<bool>& squares_table(long p, long d) {
    static std::map<std::pair<long, long>, std::vector<bool>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::uint64_t M = 1;
    for (long i = 0; i < d; ++i) M *= static_cast<std::uint64_t>(p);
    std::vector<bool> sq(M, false);
    std::uint64_t r = 0;
    for (std::uint64_t x = 0; x < M; ++x) {
        sq[r] = true;
        r += 2 * x + 1;
        if (r >= M) r %= M;
    }
    return cache.emplace(key, std::move(sq)).first->second;
}

// Reduce a nonzero rational to an integer of the same square class with val in {0,1}.
Rat squarefree_at_p(const Rat& a, long p) {
    long v = val_p(a, p);
    Rat u = unit_part(a, p);
    Int n = rat_num(u) * rat_den(u); // u * den^2, still the same class, now integral
    Rat r = Rat(n);
    if (v & 1) r *= p;
    return r;
}

std::uint64_t mod_pd(const Rat& a, long p, std::uint64_t M) {
    long v = val_p(a, p);
    Rat u = unit_part(a, p);
    std::uint64_t um = unit_mod_pk(u, M);
    std::uint64_t r = um % M;
    for (long i = 0; i < v; ++i) r = (r * static_cast<std::uint64_t>(p)) % M;
    return r;
}

} // namespace

int hilbert_oracle(const Rat& a, const Rat& b, const PadicContext& ctx) {
    if (a == 0 || b == 0) throw ZeroInput("hilbert_oracle: zero input");
    Rat ar = squarefree_at_p(a, ctx.p);
    Rat br = squarefree_at_p(b, ctx.p);
    long vab = val_p(ar, ctx.p) + val_p(br, ctx.p);
    long d = 2 * vab + 3;
    if (ctx.oracle_depth < d)
        throw DepthTooSmall("hilbert_oracle: oracle_depth " + std::to_string(ctx.oracle_depth) +
                            " < required " + std::to_string(d));
    std::uint64_t M = 1;
    for (long i = 0; i < d; ++i) M *= static_cast<std::uint64_t>(ctx.p);
    std::uint64_t am = mod_pd(ar, ctx.p, M);
    std::uint64_t bm = mod_pd(br, ctx.p, M);
    const std::vector<bool>& sq = squares_table(ctx.p, d);

    // A primitive solution of z^2 = a x^2 + b y^2 mod p^d has x or y a unit
    // (z alone a unit forces 1 = 0 mod p^2), and unit scaling normalizes it to 1.
    std::uint64_t r = 0; // x^2 mod M
    for (std::uint64_t x = 0; x < M; ++x) {
        if (sq[(am * (r % M) + bm) % M]) return 1; // y = 1
        if (sq[(bm * (r % M) + am) % M]) return 1; // x = 1
        r += 2 * x + 1;
        if (r >= M) r %= M;
    }
    return -1;
}

FourthRoot FourthRoot::pow(long e) const {
    e &= 3;
    FourthRoot r = one();
    for (long i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::string FourthRoot::str() const {
    if (re_ == 1) return "1";
    if (re_ == -1) return "-1";
    if (im_ == 1) return "i";
    return "-i";
}

FourthRoot FourthRoot::from_complex(const Cplx& z, double tol) {
    static const FourthRoot roots[4] = {FourthRoot(1, 0), FourthRoot(0, 1), FourthRoot(-1, 0),
                                        FourthRoot(0, -1)};
    for (const auto& r : roots)
        if (std::abs(z - r.value()) < tol) return r;
    throw NotStabilized("FourthRoot::from_complex: value not near a fourth root of unity");
}

namespace {

// Complete normalized sum S = sum_{x mod p^K} e(u x^2 / p^K), K = 2m - val(arg).
// This is the Riemann form of the Weil integral over p^{-m} Z_p; its normalized
// value is constant in m because K keeps a fixed parity.
Cplx gauss_norm(const Rat& arg, long p, long m) {
    long alpha = val_p(arg, p);
    long K = 2 * m - alpha;
    if (K < 2) throw NotStabilized("weil_gauss_oracle: increase gauss_terms");
    if (static_cast<double>(K) * std::log2(static_cast<double>(p)) > 31.0)
        throw NotStabilized("weil_gauss_oracle: gauss_terms too large for the 64-bit sum");
    std::uint64_t M = 1;
    for (long i = 0; i < K; ++i) M *= static_cast<std::uint64_t>(p);
    std::uint64_t um = unit_mod_pk(unit_part(arg, p), M);
    double re = 0.0, im = 0.0;
    const double w = 2.0 * kPi / static_cast<double>(M);
    // x and M - x give equal terms; fold the range.
    std::uint64_t r = 0; // x^2 mod M
    std::uint64_t half = M / 2;
    for (std::uint64_t x = 0; x <= half; ++x) {
        std::uint64_t ph = (um * r) % M;
        double ang = w * static_cast<double>(ph);
        double weight = (x == 0 || 2 * x == M) ? 1.0 : 2.0;
        re += weight * std::cos(ang);
        im += weight * std::sin(ang);
        r += 2 * x + 1;
        if (r >= M) r %= M;
    }
    double n = std::hypot(re, im);
    if (n < 1e-9) throw NotStabilized("weil_gauss_oracle: vanishing sum");
    return Cplx(re / n, im / n);
}

Cplx oracle_ratio(const PsiSpec& psi, const Rat& a, long m) {
    PadicContext ctx = psi.ctx;
    Rat num_arg = square_class(psi.shift.rep() * a, ctx).rep();
    Rat den_arg = psi.shift.rep();
    return gauss_norm(num_arg, ctx.p, m) / gauss_norm(den_arg, ctx.p, m);
}

} // namespace

Cplx weil_gauss_oracle(const PsiSpec& psi, const Rat& a) {
    if (a == 0) throw ZeroInput("weil_gauss_oracle: zero input");
    long m = psi.ctx.gauss_terms;
    Cplx g0 = oracle_ratio(psi, a, m);
    Cplx g1 = oracle_ratio(psi, a, m + 1);
    if (std::abs(g0 - g1) >= 1e-9)
        throw NotStabilized("weil_gauss_oracle: truncations m, m+1 disagree; increase gauss_terms");
    FourthRoot::from_complex(g1); // contract: near a fourth root
    return g1;
}

namespace {

// gamma_psi(p) for the base character, pinned once per prime by the oracle at a
// cheap stabilization depth (the weil suite re-verifies at full depth).
FourthRoot gamma_p_seed(long p) {
    static std::map<long, FourthRoot> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    Cplx g2 = gauss_norm(Rat(p), p, 2) / gauss_norm(Rat(1), p, 2);
    Cplx g3 = gauss_norm(Rat(p), p, 3) / gauss_norm(Rat(1), p, 3);
    if (std::abs(g2 - g3) >= 1e-9) throw NotStabilized("gamma_p_seed: not stabilized");
    FourthRoot r = FourthRoot::from_complex(g3);
    cache.emplace(p, r);
    return r;
}

} // namespace

FourthRoot weil_factor(const PsiSpec& psi, const Rat& a) {
    if (a == 0) throw ZeroInput("weil_factor: zero input");
    const PadicContext& ctx = psi.ctx;
    if (ctx.p == 2)
        throw UnsupportedPrime("weil_factor: exact mode requires p odd (use the oracle at p = 2)");
    SquareClass c = square_class(a, ctx);
    // Base table: gamma(1) = gamma(u) = 1, gamma(p) seeded, gamma(up) by (gammaprop).
    FourthRoot base;
    switch (c.index()) {
        case 0:
        case 1: base = FourthRoot::one(); break;
        case 2: base = gamma_p_seed(ctx.p); break;
        default: {
            long u = least_nonresidue(ctx.p);
            base = gamma_p_seed(ctx.p) * hilbert_symbol(Rat(u), Rat(ctx.p), ctx);
            break;
        }
    }
    // gamma_{psi_b} = eta_b . gamma_psi
    if (!psi.shift.is_trivial()) base = base * hilbert_symbol(psi.shift.rep(), a, ctx);
    return base;
}

WeilTable::WeilTable(const PsiSpec& psi) : psi_(psi) {
    for (const auto& c : all_classes(psi.ctx)) {
        if (psi.ctx.p == 2)
            table_.push_back(FourthRoot::from_complex(weil_gauss_oracle(psi, c.rep())));
        else
            table_.push_back(weil_factor(psi, c.rep()));
    }
}

FourthRoot WeilTable::gamma(const SquareClass& c) const { return table_.at(c.index()); }

FourthRoot WeilTable::gamma(const Rat& a) const { return gamma(square_class(a, psi_.ctx)); }

} // namespace metaplectic
