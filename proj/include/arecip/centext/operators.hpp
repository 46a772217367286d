#pragma once

#include "arecip/centext/laurent.hpp"
#include "arecip/centext/lines.hpp"
#include "arecip/centext/rational_matrix.hpp"

namespace arecip::centext {

// Exponent range [low, high] of the window span(t^low .. t^high). A lattice L
// of Q((t)) with t^(high+1) Q[[t]] in L in t^low Q[[t]] is represented by its
// image in the window; (t^i, t^j) = delta_ij.
struct Window {
    int low = 0;
    int high = 0;
    int dim() const { return high - low + 1; }
    friend bool operator==(const Window& a, const Window& b) { return a.low == b.low && a.high == b.high; }
};

// Coordinates of the terms of f of exponent <= high. Throws WindowTooSmall
// when f has terms below the window.
QMatrix window_vector(const LaurentPoly& f, Window w);
// span(t^from .. t^high); from = 0 gives the image of Q[[t]].
MetrizedSubspace standard_lattice(Window w, int from = 0);

// An invertible operator on the window: either a matrix on Q^n (finite
// dimensional GL(V)) or multiplication by a Laurent series acting on lattices
// through the window.
class Operator {
public:
    static Operator matrix(QMatrix g);
    static Operator multiplication(const LaurentPoly& f, Window w);

    bool is_multiplication() const { return multiplication_; }
    int dim() const;
    const QMatrix& matrix() const { return matrix_; }
    // The series, exact through exponent 2 * (high - low).
    const LaurentPoly& series() const { return series_; }
    Window window() const { return window_; }

    // Images of window vectors, truncated above the window.
    QMatrix apply(const QMatrix& vectors) const;
    // Image of a lattice. For multiplication by f of order v this adds
    // f t^i for i = high+1 .. high-v and checks that the image lattice still
    // sits inside the window.
    MetrizedSubspace image(const MetrizedSubspace& l) const;

    Operator compose(const Operator& o) const;  // this after o
    Operator inverse() const;
    bool is_identity() const;
    bool commutes_with(const Operator& o) const;

private:
    bool multiplication_ = false;
    QMatrix matrix_;
    LaurentPoly series_;
    Window window_;
};

// g_*: (A|B) -> (gA|gB), induced by g on representatives of the quotients.
LineElement pushforward(const Operator& g, const LineElement& x);

// f * Q[[t]] seen in the window, together with the reference lattice
// A = span(t^0 .. t^high).
struct WindowLattice {
    MetrizedSubspace image;
    MetrizedSubspace reference;
};
WindowLattice window_lattice(const LaurentPoly& f, Window w);

}  // namespace arecip::centext
