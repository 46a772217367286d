#pragma once

#include <optional>

#include "arecip/centext/laurent.hpp"
#include "arecip/centext/lines.hpp"
#include "arecip/centext/operators.hpp"
#include "arecip/numeric/bigfloat.hpp"

namespace arecip::centext {

// (g, a) with a a nonzero element of (A|gA). Multiplication is
// (g, a)(g', a') = (gg', a o g_*(a')).
struct ArGLElement {
    Operator g;
    LineElement a;
};

// (g, c * wedge basis of (A|gA)).
ArGLElement lift(const Operator& g, const MetrizedSubspace& a, const RootScalar& c = RootScalar(1));
// (e, c) with e the identity of the same kind and size as `like`.
ArGLElement central(const Operator& like, const MetrizedSubspace& a, const RootScalar& c = RootScalar(1));

ArGLElement group_mul(const ArGLElement& u, const ArGLElement& v, ContractionMode mode = ContractionMode::Metrized);
ArGLElement group_inverse(const ArGLElement& u, ContractionMode mode = ContractionMode::Metrized);
// True when both elements cover the same operator and their line elements
// agree exactly.
bool same_element(const ArGLElement& u, const ArGLElement& v);

// u v u^-1 v^-1 computed literally through the group law. Throws
// NonCommuting unless the covered operator is the identity.
RootScalar commutator_scalar(const ArGLElement& u, const ArGLElement& v,
                             ContractionMode mode = ContractionMode::Metrized);

// <g, h>_A for commuting g, h: the chain b o h_*(a) o g_*(b^-1) o a^-1 through
// (A|hA), (hA|hgA), (ghA|gA), (gA|A), with a in (A|gA), b in (A|hA) scaled by
// the given factors. Equals commutator_scalar of the lifts of h and g; for
// multiplication operators |<f, g>| = |f_0(0)|^ord(g) / |g_0(0)|^ord(f).
RootScalar commutator_pairing(const Operator& g, const Operator& h, const MetrizedSubspace& a,
                              const RootScalar& scale_a = RootScalar(1), const RootScalar& scale_b = RootScalar(1),
                              ContractionMode mode = ContractionMode::Metrized);

struct PropBResult {
    RootScalar lhs;  // <g,h>_A <g,h>_B
    RootScalar rhs;  // <g,h>_{A n B} <g,h>_{A + B}
    bool pass = false;
};
PropBResult prop_b_check(const Operator& g, const Operator& h, const MetrizedSubspace& a, const MetrizedSubspace& b);

// Smallest window holding A, fA, gA and fgA (and their inverses when
// `with_inverses`).
Window minimal_window(const LaurentPoly& f, const LaurentPoly& g, bool with_inverses = false);

// log |<f, g>| computed through window lattices.
num::BigFloat nu_arch_oracle(const LaurentPoly& f, const LaurentPoly& g, std::optional<Window> window = std::nullopt,
                             int bits = 128);
// ord(g) log|f_0(0)| - ord(f) log|g_0(0)|.
num::BigFloat nu_arch_closed_form(const LaurentPoly& f, const LaurentPoly& g, int bits = 128);

}  // namespace arecip::centext
