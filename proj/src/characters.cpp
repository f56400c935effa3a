#include "metaplectic/characters.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace metaplectic {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Smallest primitive root mod an odd prime.
long primitive_root(long p) {
    static std::map<long, long> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    long phi = p - 1;
    std::vector<long> primes;
    long m = phi;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    auto powm = [&](long b, long e) {
        long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : primes)
            if (powm(g, phi / q) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            cache.emplace(p, g);
            return g;
        }
    }
    throw std::logic_error("primitive_root: none found");
}

// Discrete log table base the fixed primitive root: dlog[residue] for residues 1..p-1.
const std::vector<long>& dlog_table(long p) {
    static std::map<long, std::vector<long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<long> t(p, -1);
    long g = primitive_root(p);
    long v = 1;
    for (long k = 0; k < p - 1; ++k) {
        t[v] = k;
        v = (v * g) % p;
    }
    return cache.emplace(p, std::move(t)).first->second;
}

// (Z/8)^* decomposition u = (-1)^s 5^t.
void decompose_mod8(std::uint64_t u8, int& s, int& t) {
    switch (u8) {
        case 1: s = 0; t = 0; break;
        case 7: s = 1; t = 0; break;
        case 5: s = 0; t = 1; break;
        default: s = 1; t = 1; break; // 3 = -5 mod 8
    }
}

} // namespace

ZpVal ZpVal::root_of_unity(long num, long den) {
    if (den <= 0) throw std::domain_error("ZpVal: positive denominator required");
    long g = std::gcd(mod_pos(num, den), den);
    ZpVal z;
    z.exact_ = true;
    z.den_ = den / g;
    z.num_ = mod_pos(num, den) / g;
    z.v_ = std::polar(1.0, 2.0 * kPi * static_cast<double>(z.num_) / static_cast<double>(z.den_));
    if (std::abs(z.v_.real()) < 1e-15) z.v_ = Cplx(0.0, z.v_.imag());
    if (std::abs(z.v_.imag()) < 1e-15) z.v_ = Cplx(z.v_.real(), 0.0);
    return z;
}

ZpVal ZpVal::from_complex(const Cplx& v) {
    // Recognize the exact fourth roots so products stay exact where possible.
    static const std::pair<Cplx, std::pair<long, long>> snaps[] = {
        {{1, 0}, {0, 1}}, {{-1, 0}, {1, 2}}, {{0, 1}, {1, 4}}, {{0, -1}, {3, 4}}};
    for (const auto& [w, nd] : snaps)
        if (std::abs(v - w) < 1e-15) return root_of_unity(nd.first, nd.second);
    ZpVal z;
    z.exact_ = false;
    z.num_ = 0;
    z.den_ = 1;
    z.v_ = v;
    return z;
}

ZpVal ZpVal::operator*(const ZpVal& o) const {
    if (exact_ && o.exact_)
        return root_of_unity(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return from_complex(v_ * o.v_);
}

ZpVal ZpVal::inverse() const {
    if (exact_) return root_of_unity(-num_, den_);
    return from_complex(Cplx(1.0, 0.0) / v_);
}

ZpVal ZpVal::pow(long k) const {
    if (exact_) return root_of_unity(num_ * mod_pos(k, den_), den_);
    return from_complex(std::pow(v_, static_cast<double>(k)));
}

bool ZpVal::operator==(const ZpVal& o) const {
    if (exact_ && o.exact_) return num_ == o.num_ && den_ == o.den_;
    return std::abs(v_ - o.v_) < 1e-12;
}

std::optional<long> ZpVal::order() const {
    if (exact_) return den_;
    if (std::abs(v_ - Cplx(1, 0)) < 1e-12) return 1;
    return std::nullopt;
}

Character::Character(const PadicContext& ctx)
    : ctx_(ctx), e_(0), b_m1_(0), b_5_(0), zp_() {}

Character Character::from_data(const PadicContext& ctx, long e, const ZpVal& zp) {
    Character c(ctx);
    if (ctx.p == 2) throw std::domain_error("Character::from_data: use from_data2 at p = 2");
    c.e_ = mod_pos(e, ctx.p - 1);
    c.zp_ = zp;
    return c;
}

Character Character::from_data2(const PadicContext& ctx, int b_m1, int b_5, const ZpVal& zp) {
    if (ctx.p != 2) throw std::domain_error("Character::from_data2: p = 2 only");
    Character c(ctx);
    c.b_m1_ = b_m1 & 1;
    c.b_5_ = b_5 & 1;
    c.zp_ = zp;
    return c;
}

Character Character::abs_power(const PadicContext& ctx, double s) {
    Character c(ctx);
    c.zp_ = (s == 0.0) ? ZpVal() : ZpVal::real_power(std::pow(static_cast<double>(ctx.p), -s));
    return c;
}

Character Character::eta_char(const PadicContext& ctx, const Rat& a) {
    Character c(ctx);
    if (ctx.p == 2) {
        c.b_m1_ = hilbert_symbol(a, Rat(-1), ctx) == 1 ? 0 : 1;
        c.b_5_ = hilbert_symbol(a, Rat(5), ctx) == 1 ? 0 : 1;
        c.zp_ = hilbert_symbol(a, Rat(2), ctx) == 1 ? ZpVal() : ZpVal::root_of_unity(1, 2);
        return c;
    }
    long g = primitive_root(ctx.p);
    c.e_ = hilbert_symbol(a, Rat(g), ctx) == 1 ? 0 : (ctx.p - 1) / 2;
    c.zp_ = hilbert_symbol(a, Rat(ctx.p), ctx) == 1 ? ZpVal() : ZpVal::root_of_unity(1, 2);
    return c;
}

Character Character::unramified_order4(const PadicContext& ctx) {
    Character c(ctx);
    c.zp_ = ZpVal::root_of_unity(1, 4);
    return c;
}

Cplx Character::evaluate(const Rat& a) const {
    if (a == 0) throw ZeroInput("Character::evaluate: zero input");
    long v = val_p(a, ctx_.p);
    Rat u = unit_part(a, ctx_.p);
    Cplx unit_val;
    if (ctx_.p == 2) {
        int s, t;
        decompose_mod8(unit_mod_pk(u, 8), s, t);
        int sign = ((b_m1_ * s + b_5_ * t) % 2) ? -1 : 1;
        unit_val = Cplx(sign, 0);
    } else {
        long k = dlog_table(ctx_.p)[unit_mod_pk(u, static_cast<std::uint64_t>(ctx_.p))];
        unit_val = std::polar(1.0, 2.0 * kPi * static_cast<double>(mod_pos(e_ * k, ctx_.p - 1)) /
                                       static_cast<double>(ctx_.p - 1));
    }
    return unit_val * zp_.pow(v).value();
}

Character Character::operator*(const Character& o) const {
    if (ctx_.p != o.ctx_.p) throw std::domain_error("Character: mixed primes");
    Character c(ctx_);
    c.e_ = (ctx_.p == 2) ? 0 : mod_pos(e_ + o.e_, ctx_.p - 1);
    c.b_m1_ = (b_m1_ + o.b_m1_) & 1;
    c.b_5_ = (b_5_ + o.b_5_) & 1;
    c.zp_ = zp_ * o.zp_;
    return c;
}

Character Character::inverse() const {
    Character c(ctx_);
    c.e_ = (ctx_.p == 2) ? 0 : mod_pos(-e_, ctx_.p - 1);
    c.b_m1_ = b_m1_;
    c.b_5_ = b_5_;
    c.zp_ = zp_.inverse();
    return c;
}

Character Character::pow(long k) const {
    Character c(ctx_);
    c.e_ = (ctx_.p == 2) ? 0 : mod_pos(e_ * k, ctx_.p - 1);
    c.b_m1_ = static_cast<int>(mod_pos(b_m1_ * k, 2));
    c.b_5_ = static_cast<int>(mod_pos(b_5_ * k, 2));
    c.zp_ = zp_.pow(k);
    return c;
}

bool Character::operator==(const Character& o) const {
    if (ctx_.p != o.ctx_.p) return false;
    if (ctx_.p == 2) return b_m1_ == o.b_m1_ && b_5_ == o.b_5_ && zp_ == o.zp_;
    return e_ == o.e_ && zp_ == o.zp_;
}

bool Character::is_trivial() const {
    if (ctx_.p == 2) return b_m1_ == 0 && b_5_ == 0 && zp_.is_one();
    return e_ == 0 && zp_.is_one();
}

std::optional<long> Character::order() const {
    auto zo = zp_.order();
    if (!zo) return std::nullopt;
    long uo;
    if (ctx_.p == 2)
        uo = (b_m1_ || b_5_) ? 2 : 1;
    else
        uo = (ctx_.p - 1) / std::gcd(e_, ctx_.p - 1);
    return std::lcm(uo, *zo);
}

std::string Character::str() const {
    std::ostringstream os;
    if (ctx_.p == 2)
        os << "chi(p=2; m1=" << b_m1_ << ", f5=" << b_5_;
    else
        os << "chi(p=" << ctx_.p << "; e=" << e_;
    Cplx z = zp_.value();
    os << "; zp=" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    return os.str();
}

Character parse_character(const std::string& tag, const PadicContext& ctx) {
    if (tag == "triv" || tag.empty()) return Character::trivial(ctx);
    if (tag == "ord4") return Character::unramified_order4(ctx);
    auto colon = tag.find(':');
    std::string head = colon == std::string::npos ? tag : tag.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : tag.substr(colon + 1);
    if (head == "eta") return Character::eta_char(ctx, parse_rat(rest));
    if (head == "abs") return Character::abs_power(ctx, std::stod(rest));
    if (head == "level")
        throw UnsupportedRamification("parse_character: only tame characters are supported");
    // "e=<int>;zp=<re>,<im>"
    long e = 0;
    double re = 1.0, im = 0.0;
    std::stringstream ss(tag);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) continue;
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "e") e = std::stol(val);
        if (key == "zp") {
            auto comma = val.find(',');
            re = std::stod(val.substr(0, comma));
            im = comma == std::string::npos ? 0.0 : std::stod(val.substr(comma + 1));
        }
    }
    return Character::from_data(ctx, e, ZpVal::from_complex(Cplx(re, im)));
}

GenuineCentralCharacter::GenuineCentralCharacter(const LeviShape& shape,
                                                 std::vector<Character> eta_prime,
                                                 const PsiSpec& psi, const SquareClass& twist)
    : shape_(shape), comps_(std::move(eta_prime)), psi_(psi), twist_(twist),
      wt_(std::make_shared<WeilTable>(psi)) {
    if (comps_.size() != shape_.parts.size() + 1)
        throw ShapeMismatch("GenuineCentralCharacter: one character per central parameter");
}

Cplx GenuineCentralCharacter::evaluate(const CentralElement& z) const {
    if (!(z.shape == shape_)) throw ShapeMismatch("GenuineCentralCharacter: shape mismatch");
    SquareClass x = x_on_center(z, psi_.ctx);
    Cplx val(static_cast<double>(z.eps), 0.0);
    val *= static_cast<double>(hilbert_symbol(twist_.rep(), x.rep(), psi_.ctx));
    val *= wt_->gamma(x).value();
    for (std::size_t k = 0; k < shape_.parts.size(); ++k) val *= comps_[k].evaluate(z.a[k]);
    val *= comps_.back().evaluate(z.b);
    return val;
}

bool GenuineCentralCharacter::equals(const GenuineCentralCharacter& o) const {
    if (!(shape_ == o.shape_)) return false;
    // Characters of the center agree iff they agree on single-parameter sweeps
    // over class representatives and a square probe (separating |.|^s-type data).
    PadicContext ctx = psi_.ctx;
    std::vector<Rat> probes;
    for (const auto& c : all_classes(ctx)) probes.push_back(c.rep());
    probes.push_back(Rat(4));
    probes.push_back(Rat(9));
    std::size_t r = shape_.parts.size();
    for (std::size_t slot = 0; slot <= r; ++slot) {
        for (const Rat& t : probes) {
            CentralElement z = central_identity(shape_);
            if (slot < r)
                z.a[slot] = t;
            else
                z.b = t;
            if (std::abs(evaluate(z) - o.evaluate(z)) > 1e-9) return false;
        }
    }
    return true;
}

std::vector<GenuineCentralCharacter> omega_set(const std::vector<Character>& eta_prime,
                                               const LeviShape& t, const PsiSpec& psi) {
    std::vector<GenuineCentralCharacter> out;
    for (const auto& a : all_classes(psi.ctx)) {
        GenuineCentralCharacter cand(t, eta_prime, psi, a);
        bool dup = false;
        for (const auto& w : out)
            if (w.equals(cand)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(cand));
    }
    return out;
}

GenuineCentralCharacter conj_char(const GenuineCentralCharacter& w, const Rat& lambda_of_g) {
    SquareClass twist = w.twist() * square_class(lambda_of_g, w.psi().ctx);
    return GenuineCentralCharacter(w.shape(), w.eta_prime(), w.psi(), twist);
}

GenuineCentralCharacter conj_char(const GenuineCentralCharacter& w, const GSpElement& g) {
    return conj_char(w, g.lambda());
}

GenuineCentralCharacter genuine_center_char(const Character& eta_prime, const PsiSpec& psi,
                                            long n) {
    LeviShape t{{}, n};
    return GenuineCentralCharacter(t, {eta_prime}, psi, square_class(1, psi.ctx));
}

bool dual_central_identity(const Character& eta_prime, const PsiSpec& psi, long n) {
    const PadicContext& ctx = psi.ctx;
    GenuineCentralCharacter omega = genuine_center_char(eta_prime, psi, n);
    GenuineCentralCharacter omega_sigma = conj_char(omega, Rat(-1)); // lambda(sigma) = -1
    LeviShape t{{}, n};
    std::vector<Rat> probes;
    for (const auto& c : all_classes(ctx)) probes.push_back(c.rep());
    probes.push_back(Rat(4));
    probes.push_back(Rat(-9, 2));
    probes.push_back(Rat(ctx.p * ctx.p * 3));
    for (const Rat& a : probes) {
        for (int eps : {1, -1}) {
            CentralElement z{t, {}, a, eps};
            Cplx lhs = eta_prime.inverse().evaluate(a * a) * omega_sigma.evaluate(z);
            Cplx rhs = Cplx(1.0, 0.0) / omega.evaluate(z);
            if (std::abs(lhs - rhs) > 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
                return false;
        }
    }
    return true;
}

} // namespace metaplectic
