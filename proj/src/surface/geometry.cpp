#include "arecip/surface/geometry.hpp"

#include <algorithm>
#include <set>

#include "arecip/error.hpp"
#include "arecip/exact_arith/integer.hpp"

namespace arecip::surface {

namespace {

std::uint64_t parse_prime(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(start, "expected a prime");
    mpz_class p(s);
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63) throw Error(ErrorKind::InvalidArgument, "prime must be below 2^63");
    if (!arith::is_probable_prime(p)) throw Error(ErrorKind::InvalidArgument, s + " is not prime");
    return arith::to_u64(p);
}

IntPoly t_poly() { return IntPoly{0, 1}; }

}  // namespace

Curve Curve::vertical(std::uint64_t p) {
    if (!arith::is_probable_prime(arith::to_mpz(p))) throw Error(ErrorKind::InvalidArgument, "vertical curve needs a prime");
    Curve c;
    c.kind = Kind::Vertical;
    c.p = p;
    return c;
}

Curve Curve::horizontal(const IntPoly& h) {
    if (h.degree() < 1) throw Error(ErrorKind::NonIrreducibleBase, "horizontal curve needs positive degree");
    auto [content, prim] = normalize_base(h);
    check_irreducible(prim);
    Curve c;
    c.kind = Kind::Horizontal;
    c.h = std::move(prim);
    return c;
}

Curve Curve::infinity() {
    Curve c;
    c.kind = Kind::InfinitySection;
    return c;
}

std::string Curve::to_string() const {
    switch (kind) {
        case Kind::Vertical: return "V:" + std::to_string(p);
        case Kind::Horizontal: return "H:" + h.to_string();
        case Kind::InfinitySection: return "INF";
    }
    return "?";
}

bool operator<(const Curve& a, const Curve& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.kind == Curve::Kind::Vertical) return a.p < b.p;
    return arith::canonical_less(a.h, b.h);
}

ClosedPoint ClosedPoint::affine(const ModPPoly& pi) {
    if (pi.degree() < 1 || pi.leading() != 1 || !arith::is_irreducible(pi))
        throw Error(ErrorKind::InvalidArgument, "closed point needs a monic irreducible polynomial");
    ClosedPoint x;
    x.p = pi.prime();
    x.pi = pi;
    return x;
}

ClosedPoint ClosedPoint::at_infinity(std::uint64_t p) {
    ClosedPoint x;
    x.p = p;
    return x;
}

std::string ClosedPoint::to_string() const {
    return std::to_string(p) + ":" + (pi ? pi->to_string() : std::string("inf"));
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    if (a.is_infinity()) return false;
    return arith::canonical_less(*a.pi, *b.pi);
}

Curve parse_curve(std::string_view text) {
    std::string s(text);
    if (s == "INF") return Curve::infinity();
    if (s.size() >= 2 && s[1] == ':') {
        if (s[0] == 'V') return Curve::vertical(parse_prime(std::string_view(s).substr(2)));
        if (s[0] == 'H') {
            try {
                return Curve::horizontal(arith::parse_int_poly(std::string_view(s).substr(2)));
            } catch (const ParseError& e) {
                throw ParseError(2 + e.position(), "bad curve polynomial");
            }
        }
    }
    throw ParseError(0, "expected V:<prime>, H:<polynomial> or INF");
}

ClosedPoint parse_point(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(0, "expected <prime>:<polynomial>");
    const std::uint64_t p = parse_prime(text.substr(0, colon));
    std::string rest(text.substr(colon + 1));
    rest.erase(std::remove_if(rest.begin(), rest.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               rest.end());
    if (rest == "inf") return ClosedPoint::at_infinity(p);
    IntPoly f;
    try {
        f = arith::parse_int_poly(rest);
    } catch (const ParseError& e) {
        throw ParseError(colon + 1 + e.position(), "bad point polynomial");
    }
    const ModPPoly pi = ModPPoly::from_int(f, p);
    if (pi.degree() < 1) throw Error(ErrorKind::InvalidArgument, "point polynomial is constant mod p");
    return ClosedPoint::affine(pi.monic());
}

bool incidence(const Curve& c, const ClosedPoint& x) {
    switch (c.kind) {
        case Curve::Kind::Vertical: return c.p == x.p;
        case Curve::Kind::InfinitySection: return x.is_infinity();
        case Curve::Kind::Horizontal: {
            if (x.is_infinity()) return mpz_divisible_ui_p(c.h.leading().get_mpz_t(), x.p) != 0;
            const ModPPoly hp = ModPPoly::from_int(c.h, x.p);
            return arith::rem(hp, *x.pi).is_zero();
        }
    }
    return false;
}

std::vector<ClosedPoint> points_on_curve(const Curve& c, std::uint64_t p) {
    switch (c.kind) {
        case Curve::Kind::Vertical:
            throw Error(ErrorKind::InvalidArgument, "a vertical curve has infinitely many closed points");
        case Curve::Kind::InfinitySection: return {ClosedPoint::at_infinity(p)};
        case Curve::Kind::Horizontal: {
            std::vector<ClosedPoint> out;
            const ModPPoly hp = ModPPoly::from_int(c.h, p);
            if (hp.degree() >= 1)
                for (const auto& f : arith::factor_mod_p(hp, p).factors) out.push_back(ClosedPoint::affine(f.poly));
            if (hp.degree() < c.h.degree()) out.push_back(ClosedPoint::at_infinity(p));
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return {};
}

int horizontal_order(const FactoredRationalFunction& f, const Curve& c) {
    switch (c.kind) {
        case Curve::Kind::Vertical: return vertical_order(f, c.p);
        case Curve::Kind::Horizontal: return f.exponent(c.h);
        case Curve::Kind::InfinitySection: {
            int total = 0;
            for (const auto& [b, e] : f.factors()) total -= e * b.degree();
            return total;
        }
    }
    return 0;
}

std::vector<Curve> curves_through_point(const ClosedPoint& x, const FactoredRationalFunction& f,
                                        const FactoredRationalFunction& g) {
    std::vector<Curve> out{Curve::vertical(x.p)};
    std::set<IntPoly, bool (*)(const IntPoly&, const IntPoly&)> bases(arith::canonical_less);
    for (const auto& [b, e] : f.factors()) bases.insert(b);
    for (const auto& [b, e] : g.factors()) bases.insert(b);
    for (const auto& b : bases) {
        Curve c;
        c.kind = Curve::Kind::Horizontal;
        c.h = b;
        if (incidence(c, x)) out.push_back(std::move(c));
    }
    const Curve inf = Curve::infinity();
    if (x.is_infinity() && (horizontal_order(f, inf) != 0 || horizontal_order(g, inf) != 0)) out.push_back(inf);
    std::sort(out.begin(), out.end());
    return out;
}

Curve chart_swap(const Curve& c) {
    switch (c.kind) {
        case Curve::Kind::Vertical: return c;
        case Curve::Kind::InfinitySection: {
            Curve out;
            out.kind = Curve::Kind::Horizontal;
            out.h = t_poly();
            return out;
        }
        case Curve::Kind::Horizontal: {
            if (c.h == t_poly()) return Curve::infinity();
            IntPoly r = c.h.reversed();
            if (r.leading() < 0) r = -r;
            Curve out;
            out.kind = Curve::Kind::Horizontal;
            out.h = std::move(r);
            return out;
        }
    }
    return c;
}

ClosedPoint chart_swap(const ClosedPoint& x) {
    if (x.is_infinity()) return ClosedPoint::affine(ModPPoly::x(x.p));
    if (*x.pi == ModPPoly::x(x.p)) return ClosedPoint::at_infinity(x.p);
    std::vector<arith::u64> rev(x.pi->coeffs().rbegin(), x.pi->coeffs().rend());
    ClosedPoint out;
    out.p = x.p;
    out.pi = ModPPoly(x.p, std::move(rev)).monic();
    return out;
}

}  // namespace arecip::surface
