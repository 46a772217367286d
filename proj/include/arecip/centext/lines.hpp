#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "arecip/centext/rational_matrix.hpp"
#include "arecip/numeric/bigfloat.hpp"

namespace arecip::centext {

// sign * sqrt(square) with square rational. Closed under products and
// quotients, which is all the determinant-line calculus needs; metric
// corrections are square roots of Gram determinant ratios.
class RootScalar {
public:
    RootScalar() = default;  // zero
    RootScalar(const mpq_class& q);  // NOLINT: exact rational
    RootScalar(long v) : RootScalar(mpq_class(v)) {}  // NOLINT
    static RootScalar sqrt_of(const mpq_class& s);

    int sign() const { return sign_; }
    const mpq_class& square() const { return square_; }
    bool is_zero() const { return sign_ == 0; }

    RootScalar abs() const;
    RootScalar inverse() const;
    RootScalar operator-() const;
    friend RootScalar operator*(const RootScalar& a, const RootScalar& b);
    friend RootScalar operator/(const RootScalar& a, const RootScalar& b);
    friend bool operator==(const RootScalar& a, const RootScalar& b) {
        return a.sign_ == b.sign_ && a.square_ == b.square_;
    }

    long double to_long_double() const;
    num::BigFloat to_bigfloat(int bits) const;
    num::BigFloat log_abs(int bits) const;
    std::string to_string() const;

private:
    int sign_ = 0;
    mpq_class square_ = 0;
};

// A subspace of Q^n with a metric. The window model uses the ambient
// standard product; an explicit Gram matrix on the basis coordinates may be
// supplied instead.
class MetrizedSubspace {
public:
    MetrizedSubspace() = default;
    // Span of the columns; dependent columns are dropped.
    static MetrizedSubspace span(const QMatrix& vectors);
    static MetrizedSubspace zero(int n);
    // Span of the standard basis vectors with the given indices.
    static MetrizedSubspace coordinate(int n, const std::vector<int>& idx);
    // Independent columns and a positive definite Gram matrix on them.
    static MetrizedSubspace with_metric(const QMatrix& basis, const QMatrix& gram);

    int ambient_dim() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    const QMatrix& basis() const { return basis_; }
    const QMatrix& gram() const { return gram_; }
    bool has_ambient_metric() const { return ambient_; }
    bool contains(const QMatrix& vectors) const;
    // Gram matrix of vectors of the subspace under its metric.
    QMatrix gram_of(const QMatrix& vectors) const;
    // Same subspace with the ambient metric.
    MetrizedSubspace with_ambient_metric() const { return span(basis_); }

private:
    QMatrix basis_;
    QMatrix gram_;
    bool ambient_ = true;
};

bool same_subspace(const MetrizedSubspace& a, const MetrizedSubspace& b);
// Intersection and sum carry the ambient metric.
MetrizedSubspace intersect(const MetrizedSubspace& a, const MetrizedSubspace& b);
MetrizedSubspace sum(const MetrizedSubspace& a, const MetrizedSubspace& b);

// Orthogonal projection of the columns of x off span(k) in the ambient
// product.
QMatrix project_off(const QMatrix& x, const QMatrix& k);

// (A|B) = det(A/(A n B))^* (x) det(B/(A n B)). The wedge basis element is
// (wedge ua)^* (x) (wedge ub) with ua, ub representatives orthogonal to A n B.
struct RelativeDetLine {
    MetrizedSubspace a;
    MetrizedSubspace b;
    QMatrix k;   // basis of A n B
    QMatrix ua;  // representatives of A/(A n B)
    QMatrix ub;  // representatives of B/(A n B)
};

RelativeDetLine make_line(const MetrizedSubspace& a, const MetrizedSubspace& b);

// Quotient metrics are induced inside A and B by their own metrics.
mpq_class line_norm_squared(const RelativeDetLine& line);
RootScalar line_norm(const RelativeDetLine& line);

// r with wedge basis element = r * (wedge xa)^* (x) (wedge xb), for any bases
// xa of A and xb of B. Uses the identification (A|B) = det(A)^* (x) det(B)
// through adapted bases [k, ua] and [k, ub].
mpq_class wedge_factor(const RelativeDetLine& line, const QMatrix& xa, const QMatrix& xb);

// coord times the wedge basis element of `line`.
struct LineElement {
    RelativeDetLine line;
    RootScalar coord;
    RootScalar norm() const { return coord.abs() * line_norm(line); }
};

LineElement unit_element(const RelativeDetLine& line);

// Metrized contraction rescales the algebraic one by gamma so that norms
// multiply. Rigid keeps the pure basis-change determinants (gamma forced
// to 1).
enum class ContractionMode { Metrized, Rigid };

// (A|B) (x) (B|C) -> (A|C). Throws InvalidArgument when the middle spaces
// differ.
LineElement contract(const LineElement& x, const LineElement& y, ContractionMode mode = ContractionMode::Metrized);

// gamma = |x| |y| / |alpha(x (x) y)| for the lines (A|B), (B|C).
RootScalar contraction_gamma(const RelativeDetLine& ab, const RelativeDetLine& bc);

// The element of (B|A) contracting with x to 1.
LineElement inverse(const LineElement& x, ContractionMode mode = ContractionMode::Metrized);

// Scalar of an element of (A|A).
RootScalar scalar_value(const LineElement& x);

// beta: (A|B) (x) (A'|B') -> (A n A'|B n B') (x) (A + A'|B + B'), induced by
// the sequences 0 -> A n A' -> A + A' -> (A + A')/(A n A'), wedge-wise
// (wedge [k,u]) (x) (wedge [k,u']) -> (wedge k) (x) (wedge [k,u,u']).
struct BetaImage {
    RelativeDetLine meet;
    RelativeDetLine join;
    RootScalar coord;  // times the tensor of the two wedge basis elements
    RootScalar norm() const { return coord.abs() * line_norm(meet) * line_norm(join); }
};

BetaImage beta_map(const LineElement& x, const LineElement& y, ContractionMode mode = ContractionMode::Metrized);

}  // namespace arecip::centext
