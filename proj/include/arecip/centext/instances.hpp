#pragma once

// Seeded random instances for the property suites.

#include <random>

#include "arecip/centext/gamma.hpp"
#include "arecip/centext/group.hpp"
#include "arecip/centext/laurent.hpp"
#include "arecip/centext/lines.hpp"
#include "arecip/centext/operators.hpp"

namespace arecip::centext::instances {

// Sum of up to `max_terms` monomials c t^e with c in [-10, 10], e in
// [min_exp, max_exp]; never zero.
LaurentPoly random_laurent(std::mt19937_64& rng, int min_exp, int max_exp, int max_terms);

// Integer entries in [-range, range].
QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range = 3);
QMatrix random_invertible(std::mt19937_64& rng, int n);
// (I - S)(I + S)^-1 for a random rational skew matrix S.
QMatrix cayley_orthogonal(std::mt19937_64& rng, int n);
MetrizedSubspace random_subspace(std::mt19937_64& rng, int n, int k);

// A lattice between span(t^k1 .. t^high) and span(t^k0 .. t^high).
MetrizedSubspace sandwiched_lattice(std::mt19937_64& rng, Window w, int k0, int k1);

struct PairingInstance {
    Operator g, h;
    MetrizedSubspace a, b;
};

// Commuting operators with two subspaces, ambient dimension <= 8. Even
// draws: diagonal matrices conjugated by a rational rotation acting on
// rotated coordinate subspaces. Odd draws: multiplication by Laurent
// polynomials of order in [-1, 1] on sandwiched window lattices.
PairingInstance random_pairing_instance(std::mt19937_64& rng, bool window_kind);

// Three random elements over a common subspace A, all of matrix kind
// (dimension 4) or all of window kind.
struct GroupTriple {
    MetrizedSubspace a;
    ArGLElement u, v, w;
    RootScalar c;  // a central scalar
};
GroupTriple random_group_triple(std::mt19937_64& rng, bool window_kind);

// Exact sequence with random metrics and a random splitting basis.
ExactSequenceData random_exact_sequence(std::mt19937_64& rng, int max_dim = 3);

}  // namespace arecip::centext::instances
