#pragma once

#include <memory>
#include <optional>

#include "metaplectic/center.hpp"

namespace metaplectic {

// Value of a character at the uniformizer: exact root of unity when of finite
// order, complex double otherwise. Equality uses exact data when available,
// 1e-12 tolerance otherwise.
class ZpVal {
  public:
    ZpVal() : v_(1.0, 0.0), exact_(true), num_(0), den_(1) {}

    static ZpVal root_of_unity(long num, long den); // e^{2 pi i num/den}
    static ZpVal from_complex(const Cplx& v);
    static ZpVal real_power(double x) { return from_complex(Cplx(x, 0.0)); }

    Cplx value() const { return v_; }
    bool exact() const { return exact_; }

    ZpVal operator*(const ZpVal& o) const;
    ZpVal inverse() const;
    ZpVal pow(long k) const;

    bool operator==(const ZpVal& o) const;
    bool is_one() const { return *this == ZpVal(); }
    bool is_unit() const { return exact_ || std::abs(std::abs(v_) - 1.0) < 1e-12; }
    std::optional<long> order() const;

  private:
    Cplx v_;
    bool exact_;
    long num_, den_;
};

// Tamely ramified character of Q_p^*: unit part through a fixed primitive root
// mod p (a character of (Z/8)^* for p = 2), plus the value at the uniformizer.
class Character {
  public:
    explicit Character(const PadicContext& ctx); // trivial

    static Character trivial(const PadicContext& ctx) { return Character(ctx); }
    static Character from_data(const PadicContext& ctx, long e, const ZpVal& zp);
    // p = 2: unit part given by values at -1 and 5.
    static Character from_data2(const PadicContext& ctx, int b_m1, int b_5, const ZpVal& zp);
    static Character abs_power(const PadicContext& ctx, double s); // |.|^s, zp = p^{-s}
    static Character eta_char(const PadicContext& ctx, const Rat& a);
    static Character unramified_order4(const PadicContext& ctx); // zp = i

    const PadicContext& ctx() const { return ctx_; }
    long unit_exp() const { return e_; }
    const ZpVal& zp() const { return zp_; }

    Cplx evaluate(const Rat& a) const;

    Character operator*(const Character& o) const;
    Character inverse() const;
    Character pow(long k) const;

    bool operator==(const Character& o) const;
    bool operator!=(const Character& o) const { return !(*this == o); }

    bool is_trivial() const;
    bool is_unitary() const { return zp_.is_unit(); }
    bool is_quadratic() const { return pow(2).is_trivial(); }
    std::optional<long> order() const;

    std::string str() const;

  private:
    PadicContext ctx_;
    long e_;          // p odd: exponent mod (p-1)
    int b_m1_, b_5_;  // p = 2: bits for chi(-1), chi(5)
    ZpVal zp_;
};

// Parse a symbolic character tag: "triv", "eta:<rat>", "abs:<real>", "ord4",
// or "e=<int>;zp=<re>,<im>".
Character parse_character(const std::string& tag, const PadicContext& ctx);

// Genuine character of the covered center Z(M+_t-bar):
// (g, eps) -> eps . eta_twist(x(g_1)) . gamma_psi(x(g_1)) . eta'(parameters),
// where eta' is one tame character per central parameter (a_1..a_r, b).
class GenuineCentralCharacter {
  public:
    GenuineCentralCharacter(const LeviShape& shape, std::vector<Character> eta_prime,
                            const PsiSpec& psi, const SquareClass& twist);

    const LeviShape& shape() const { return shape_; }
    const SquareClass& twist() const { return twist_; }
    const std::vector<Character>& eta_prime() const { return comps_; }
    const PsiSpec& psi() const { return psi_; }

    Cplx evaluate(const CentralElement& z) const;

    bool equals(const GenuineCentralCharacter& o) const;

  private:
    LeviShape shape_;
    std::vector<Character> comps_; // size r+1: a_1..a_r then b
    PsiSpec psi_;
    SquareClass twist_;
    std::shared_ptr<const WeilTable> wt_;
};

// The extension set Omega_chi of a genuine character of Z(M'_t-bar), eq. (the set):
// all eta_a twists, deduplicated. Size 4 (p odd, odd type), 8 (p = 2), 1 (even type).
std::vector<GenuineCentralCharacter> omega_set(const std::vector<Character>& eta_prime,
                                               const LeviShape& t, const PsiSpec& psi);

// chi^g(z, eps) = eta_{lambda(g)}(x(z_1)) chi(z, eps): a pure twist shift.
GenuineCentralCharacter conj_char(const GenuineCentralCharacter& w, const GSpElement& g);
GenuineCentralCharacter conj_char(const GenuineCentralCharacter& w, const Rat& lambda_of_g);

// (a I_2n, eps) -> eps eta'(a) gamma_psi(a^n) on Z(GSp+-bar).
GenuineCentralCharacter genuine_center_char(const Character& eta_prime, const PsiSpec& psi,
                                            long n);

// Central-character identity of the duality lemma: with omega = genuine_center_char
// and sigma of similitude -1, (eta'^{-1} o lambda) . omega^sigma = omega^{-1} on
// all probes. Checked for both parities of n.
bool dual_central_identity(const Character& eta_prime, const PsiSpec& psi, long n);

} // namespace metaplectic
