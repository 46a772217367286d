#include "arecip/centext/group.hpp"

#include <algorithm>
#include <cmath>

#include "arecip/error.hpp"

namespace arecip::centext {

namespace {

Operator identity_like(const Operator& like) {
    if (like.is_multiplication()) return Operator::multiplication(LaurentPoly::constant(1), like.window());
    return Operator::matrix(QMatrix::identity(like.dim()));
}

}  // namespace

ArGLElement lift(const Operator& g, const MetrizedSubspace& a, const RootScalar& c) {
    if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "line element must be nonzero");
    return ArGLElement{g, LineElement{make_line(a, g.image(a)), c}};
}

ArGLElement central(const Operator& like, const MetrizedSubspace& a, const RootScalar& c) {
    return lift(identity_like(like), a, c);
}

ArGLElement group_mul(const ArGLElement& u, const ArGLElement& v, ContractionMode mode) {
    return ArGLElement{u.g.compose(v.g), contract(u.a, pushforward(u.g, v.a), mode)};
}

ArGLElement group_inverse(const ArGLElement& u, ContractionMode mode) {
    const Operator gi = u.g.inverse();
    return ArGLElement{gi, pushforward(gi, inverse(u.a, mode))};
}

bool same_element(const ArGLElement& u, const ArGLElement& v) {
    if (u.g.is_multiplication() != v.g.is_multiplication()) return false;
    if (!u.g.compose(v.g.inverse()).is_identity()) return false;
    if (!same_subspace(u.a.line.a, v.a.line.a) || !same_subspace(u.a.line.b, v.a.line.b)) return false;
    // Compare coordinates against a common wedge basis.
    const QMatrix& xa = u.a.line.a.basis();
    const QMatrix& xb = u.a.line.b.basis();
    return u.a.coord * RootScalar(wedge_factor(u.a.line, xa, xb)) ==
           v.a.coord * RootScalar(wedge_factor(v.a.line, xa, xb));
}

RootScalar commutator_scalar(const ArGLElement& u, const ArGLElement& v, ContractionMode mode) {
    const ArGLElement c =
        group_mul(group_mul(group_mul(u, v, mode), group_inverse(u, mode), mode), group_inverse(v, mode), mode);
    if (!c.g.is_identity()) throw Error(ErrorKind::NonCommuting, "commutator does not cover the identity");
    return scalar_value(c.a);
}

RootScalar commutator_pairing(const Operator& g, const Operator& h, const MetrizedSubspace& a,
                              const RootScalar& scale_a, const RootScalar& scale_b, ContractionMode mode) {
    if (!g.commutes_with(h)) throw Error(ErrorKind::NonCommuting, "operators do not commute");
    const LineElement la{make_line(a, g.image(a)), scale_a};
    const LineElement lb{make_line(a, h.image(a)), scale_b};
    LineElement chain = contract(lb, pushforward(h, la), mode);
    chain = contract(chain, pushforward(g, inverse(lb, mode)), mode);
    chain = contract(chain, inverse(la, mode), mode);
    return scalar_value(chain);
}

PropBResult prop_b_check(const Operator& g, const Operator& h, const MetrizedSubspace& a,
                         const MetrizedSubspace& b) {
    PropBResult r;
    r.lhs = commutator_pairing(g, h, a) * commutator_pairing(g, h, b);
    r.rhs = commutator_pairing(g, h, intersect(a, b)) * commutator_pairing(g, h, sum(a, b));
    const long double l = r.lhs.to_long_double(), rr = r.rhs.to_long_double();
    r.pass = std::fabs(l - rr) <= 1e-9L * std::max(1.0L, std::fabs(l));
    return r;
}

Window minimal_window(const LaurentPoly& f, const LaurentPoly& g, bool with_inverses) {
    const int a = f.order(), b = g.order();
    std::vector<int> orders{0, a, b, a + b};
    if (with_inverses) {
        orders.push_back(-a);
        orders.push_back(-b);
    }
    return Window{*std::min_element(orders.begin(), orders.end()), *std::max_element(orders.begin(), orders.end())};
}

num::BigFloat nu_arch_oracle(const LaurentPoly& f, const LaurentPoly& g, std::optional<Window> window, int bits) {
    const Window need = minimal_window(f, g);
    const Window w = window.value_or(need);
    if (w.low > need.low || w.high < need.high)
        throw WindowTooSmall(std::min(w.low, need.low), std::max(w.high, need.high));
    const Operator mf = Operator::multiplication(f, w);
    const Operator mg = Operator::multiplication(g, w);
    return commutator_pairing(mf, mg, standard_lattice(w)).log_abs(bits);
}

num::BigFloat nu_arch_closed_form(const LaurentPoly& f, const LaurentPoly& g, int bits) {
    const num::BigFloat lf = num::log(num::abs(num::BigFloat(f.leading_low(), bits)));
    const num::BigFloat lg = num::log(num::abs(num::BigFloat(g.leading_low(), bits)));
    return num::BigFloat(static_cast<long>(g.order()), bits) * lf - num::BigFloat(static_cast<long>(f.order()), bits) * lg;
}

}  // namespace arecip::centext
