#include "metaplectic/center.hpp"

#include <sstream>

namespace metaplectic {

LeviType levi_type(const LeviShape& t) {
    if (t.tail % 2 != 0) return LeviType::Odd;
    for (long p : t.parts)
        if (p % 2 != 0) return LeviType::Odd;
    return LeviType::Even;
}

LeviShape parse_shape(const std::string& s) {
    LeviShape t;
    auto semi = s.find(';');
    std::string head = semi == std::string::npos ? s : s.substr(0, semi);
    std::string tail = semi == std::string::npos ? "" : s.substr(semi + 1);
    std::stringstream ss(head);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        long v = std::stol(tok);
        if (v < 0) throw std::domain_error("parse_shape: negative part");
        if (v > 0) t.parts.push_back(v);
    }
    t.tail = tail.empty() ? 0 : std::stol(tail);
    if (t.tail < 0) throw std::domain_error("parse_shape: negative tail");
    if (t.n() == 0) throw std::domain_error("parse_shape: empty shape");
    return t;
}

std::string shape_str(const LeviShape& t) {
    std::string s;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.parts[i]);
    }
    s += ";" + std::to_string(t.tail);
    return s;
}

GSpElement CentralElement::to_gsp() const {
    long n = shape.n();
    RatMat m(2 * n, 2 * n);
    Rat lambda = b * b;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < shape.parts.size(); ++k)
        for (long i = 0; i < shape.parts[k]; ++i, ++pos) {
            m(pos, pos) = a[k];
            m(n + pos, n + pos) = lambda / a[k];
        }
    for (long i = 0; i < shape.tail; ++i, ++pos) {
        m(pos, pos) = b;
        m(n + pos, n + pos) = b;
    }
    return make_gsp_unchecked(m, lambda);
}

CentralElement central_identity(const LeviShape& t) {
    return CentralElement{t, std::vector<Rat>(t.parts.size(), Rat(1)), Rat(1), 1};
}

SquareClass x_on_center(const CentralElement& c, const PadicContext& ctx) {
    Rat x = 1;
    if (c.shape.tail % 2 != 0) x *= c.b;
    for (std::size_t k = 0; k < c.shape.parts.size(); ++k)
        if (c.shape.parts[k] % 2 != 0) x *= c.a[k];
    return square_class(x, ctx);
}

std::vector<SquareClass> center_image(const LeviShape& t, const PadicContext& ctx) {
    std::set<int> seen;
    std::vector<SquareClass> out;
    auto classes = all_classes(ctx);
    // Sweep every parameter over class representatives; x depends only on classes.
    std::size_t r = t.parts.size();
    std::vector<std::size_t> idx(r + 1, 0);
    while (true) {
        CentralElement c{t, {}, classes[idx[r]].rep(), 1};
        for (std::size_t k = 0; k < r; ++k) c.a.push_back(classes[idx[k]].rep());
        SquareClass x = x_on_center(c, ctx);
        if (seen.insert(x.index()).second) out.push_back(x);
        std::size_t k = 0;
        for (; k <= r; ++k) {
            if (++idx[k] < classes.size()) break;
            idx[k] = 0;
        }
        if (k > r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CentralElement> z_t_reps(const LeviShape& t, const PadicContext& ctx) {
    if (levi_type(t) == LeviType::Even) return {central_identity(t)};
    std::vector<CentralElement> reps;
    // Vary one odd-sized slot over class representatives; x(g_1) then runs over all classes.
    long odd_part = -1;
    for (std::size_t k = 0; k < t.parts.size(); ++k)
        if (t.parts[k] % 2 != 0) {
            odd_part = static_cast<long>(k);
            break;
        }
    for (const auto& c : all_classes(ctx)) {
        CentralElement z = central_identity(t);
        if (odd_part >= 0)
            z.a[odd_part] = c.rep();
        else
            z.b = c.rep(); // tail odd
        reps.push_back(z);
    }
    return reps;
}

CentralElement center_mul(const CentralElement& c1, const CentralElement& c2,
                          const PadicContext& ctx) {
    if (!(c1.shape == c2.shape)) throw ShapeMismatch("center_mul: shape mismatch");
    CentralElement r{c1.shape, {}, c1.b * c2.b, 0};
    for (std::size_t k = 0; k < c1.a.size(); ++k) r.a.push_back(c1.a[k] * c2.a[k]);
    int sign =
        hilbert_symbol(x_on_center(c1, ctx).rep(), x_on_center(c2, ctx).rep(), ctx);
    r.eps = c1.eps * c2.eps * sign;
    return r;
}

GSpElement make_torus(const std::vector<Rat>& entries, const Rat& lambda) {
    std::size_t n = entries.size();
    RatMat m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i] == 0) throw ZeroInput("make_torus: zero entry");
        m(i, i) = entries[i];
        m(n + i, n + i) = lambda / entries[i];
    }
    return make_gsp_unchecked(m, lambda);
}

} // namespace metaplectic
