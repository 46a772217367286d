#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arecip/exact_arith/int_poly.hpp"
#include "arecip/exact_arith/mod_poly.hpp"
#include "arecip/surface/function.hpp"

namespace arecip::surface {

using arith::ModPPoly;

// Irreducible curves on the arithmetic surface P^1 over Z.
struct Curve {
    enum class Kind { Vertical, Horizontal, InfinitySection };
    Kind kind = Kind::Vertical;
    std::uint64_t p = 0;  // Vertical only
    IntPoly h;            // Horizontal only: primitive irreducible, lc > 0

    static Curve vertical(std::uint64_t p);
    // Normalizes h to its primitive part and checks irreducibility.
    static Curve horizontal(const IntPoly& h);
    static Curve infinity();

    std::string to_string() const;  // "V:5", "H:t^2 + 1", "INF"
    friend bool operator==(const Curve& a, const Curve& b) {
        return a.kind == b.kind && a.p == b.p && a.h == b.h;
    }
};

bool operator<(const Curve& a, const Curve& b);

// Closed point of the surface: a prime p and either a monic irreducible
// polynomial pi over F_p or the point at infinity of the fiber.
struct ClosedPoint {
    std::uint64_t p = 2;
    std::optional<ModPPoly> pi;  // empty: fiber infinity

    static ClosedPoint affine(const ModPPoly& pi);
    static ClosedPoint at_infinity(std::uint64_t p);

    bool is_infinity() const { return !pi.has_value(); }
    int degree() const { return pi ? pi->degree() : 1; }
    std::string to_string() const;  // "5:t + 2", "5:inf"
    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
        return a.p == b.p && a.pi == b.pi;
    }
};

bool operator<(const ClosedPoint& a, const ClosedPoint& b);

Curve parse_curve(std::string_view text);
ClosedPoint parse_point(std::string_view text);

bool incidence(const Curve& c, const ClosedPoint& x);

// Closed points of c over p. Vertical curves have infinitely many and are
// rejected.
std::vector<ClosedPoint> points_on_curve(const Curve& c, std::uint64_t p);

// Curves through x that can carry a nonzero symbol for (f, g): the fiber
// V(p) (always listed), horizontal curves of the bases of f and g, and the
// infinity section when x lies on it and f or g has order along it.
std::vector<Curve> curves_through_point(const ClosedPoint& x, const FactoredRationalFunction& f,
                                        const FactoredRationalFunction& g);

// Order of f along a horizontal curve or the infinity section; for a
// vertical curve this is vertical_order.
int horizontal_order(const FactoredRationalFunction& f, const Curve& c);

// Images under the chart change t = 1/s.
Curve chart_swap(const Curve& c);
ClosedPoint chart_swap(const ClosedPoint& x);

}  // namespace arecip::surface
