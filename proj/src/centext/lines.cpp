#include "arecip/centext/lines.hpp"

#include "arecip/error.hpp"

namespace arecip::centext {

// RootScalar

RootScalar::RootScalar(const mpq_class& q) : sign_(sgn(q)), square_(q) {
    square_.canonicalize();
    square_ *= square_;
}

RootScalar RootScalar::sqrt_of(const mpq_class& s) {
    if (s < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative rational");
    RootScalar r;
    r.sign_ = s > 0 ? 1 : 0;
    r.square_ = s;
    r.square_.canonicalize();
    return r;
}

RootScalar RootScalar::abs() const {
    RootScalar r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

RootScalar RootScalar::inverse() const {
    if (sign_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    RootScalar r;
    r.sign_ = sign_;
    r.square_ = 1 / square_;
    return r;
}

RootScalar RootScalar::operator-() const {
    RootScalar r = *this;
    r.sign_ = -r.sign_;
    return r;
}

RootScalar operator*(const RootScalar& a, const RootScalar& b) {
    RootScalar r;
    r.sign_ = a.sign_ * b.sign_;
    r.square_ = a.square_ * b.square_;
    return r;
}

RootScalar operator/(const RootScalar& a, const RootScalar& b) { return a * b.inverse(); }

num::BigFloat RootScalar::to_bigfloat(int bits) const {
    num::BigFloat v = num::sqrt(num::BigFloat(square_, bits));
    return sign_ < 0 ? -v : v;
}

long double RootScalar::to_long_double() const { return to_bigfloat(128).to_long_double(); }

num::BigFloat RootScalar::log_abs(int bits) const {
    if (sign_ == 0) throw Error(ErrorKind::EvaluationAtZero, "log of zero");
    return num::log(num::BigFloat(square_, bits)) * num::BigFloat(0.5, bits);
}

std::string RootScalar::to_string() const {
    if (sign_ == 0) return "0";
    const std::string sg = sign_ < 0 ? "-" : "";
    mpz_class n = square_.get_num(), d = square_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        mpq_class q(rn, rd);
        q.canonicalize();
        return sg + q.get_str();
    }
    return sg + "sqrt(" + square_.get_str() + ")";
}

// MetrizedSubspace

MetrizedSubspace MetrizedSubspace::span(const QMatrix& vectors) {
    MetrizedSubspace s;
    s.basis_ = column_basis(vectors);
    s.gram_ = s.basis_.transpose() * s.basis_;
    s.ambient_ = true;
    return s;
}

MetrizedSubspace MetrizedSubspace::zero(int n) { return span(QMatrix(n, 0)); }

MetrizedSubspace MetrizedSubspace::coordinate(int n, const std::vector<int>& idx) {
    QMatrix b(n, static_cast<int>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) b(idx[j], static_cast<int>(j)) = 1;
    return span(b);
}

MetrizedSubspace MetrizedSubspace::with_metric(const QMatrix& basis, const QMatrix& gram) {
    const int k = basis.cols();
    if (rank(basis) != k) throw Error(ErrorKind::InvalidArgument, "metrized subspace basis is dependent");
    if (gram.rows() != k || gram.cols() != k || !(gram == gram.transpose()))
        throw Error(ErrorKind::InvalidArgument, "Gram matrix must be symmetric of the basis size");
    for (int i = 1; i <= k; ++i)
        if (det(gram.block(0, 0, i, i)) <= 0) throw Error(ErrorKind::InvalidArgument, "Gram matrix not positive definite");
    MetrizedSubspace s;
    s.basis_ = basis;
    s.gram_ = gram;
    s.ambient_ = false;
    return s;
}

bool MetrizedSubspace::contains(const QMatrix& vectors) const {
    return rank(hcat(basis_, vectors)) == dim();
}

QMatrix MetrizedSubspace::gram_of(const QMatrix& vectors) const {
    if (ambient_) return vectors.transpose() * vectors;
    const QMatrix s = solve(basis_, vectors);
    return s.transpose() * gram_ * s;
}

bool same_subspace(const MetrizedSubspace& a, const MetrizedSubspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b.basis());
}

MetrizedSubspace intersect(const MetrizedSubspace& a, const MetrizedSubspace& b) {
    const int n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return MetrizedSubspace::zero(n);
    const QMatrix ker = kernel(hcat(a.basis(), mpq_class(-1) * b.basis()));
    return MetrizedSubspace::span(a.basis() * ker.block(0, 0, a.dim(), ker.cols()));
}

MetrizedSubspace sum(const MetrizedSubspace& a, const MetrizedSubspace& b) {
    return MetrizedSubspace::span(hcat(a.basis(), b.basis()));
}

QMatrix project_off(const QMatrix& x, const QMatrix& k) {
    if (k.cols() == 0 || x.cols() == 0) return x;
    const QMatrix kt = k.transpose();
    return x - k * (inverse(kt * k) * (kt * x));
}

// Lines

namespace {

// Columns of `space` completing k to a basis, projected off k.
QMatrix complement(const QMatrix& k, const QMatrix& space) {
    const Echelon e = rref(hcat(k, space));
    std::vector<int> extra;
    for (int p : e.pivots)
        if (p >= k.cols()) extra.push_back(p - k.cols());
    return project_off(space.select_cols(extra), k);
}

mpq_class quotient_volume_squared(const MetrizedSubspace& s, const QMatrix& k, const QMatrix& u) {
    return det(s.gram_of(hcat(k, u))) / det(s.gram_of(k));
}

}  // namespace

RelativeDetLine make_line(const MetrizedSubspace& a, const MetrizedSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::InvalidArgument, "ambient dimensions differ");
    RelativeDetLine line;
    line.a = a;
    line.b = b;
    line.k = intersect(a, b).basis();
    line.ua = complement(line.k, a.basis());
    line.ub = complement(line.k, b.basis());
    return line;
}

mpq_class line_norm_squared(const RelativeDetLine& line) {
    return quotient_volume_squared(line.b, line.k, line.ub) / quotient_volume_squared(line.a, line.k, line.ua);
}

RootScalar line_norm(const RelativeDetLine& line) { return RootScalar::sqrt_of(line_norm_squared(line)); }

mpq_class wedge_factor(const RelativeDetLine& line, const QMatrix& xa, const QMatrix& xb) {
    const QMatrix sa = solve(xa, hcat(line.k, line.ua));
    const QMatrix sb = solve(xb, hcat(line.k, line.ub));
    return det(sb) / det(sa);
}

LineElement unit_element(const RelativeDetLine& line) { return LineElement{line, RootScalar(1)}; }

namespace {

struct ContractionData {
    RelativeDetLine ac;
    mpq_class factor;  // alpha(w_ab (x) w_bc) = factor * w_ac
    mpq_class gamma_squared;
};

ContractionData contraction_data(const RelativeDetLine& ab, const RelativeDetLine& bc) {
    if (!same_subspace(ab.b, bc.a)) throw Error(ErrorKind::InvalidArgument, "contraction needs (A|B) and (B|C)");
    ContractionData d;
    d.ac = make_line(ab.a, bc.b);
    const QMatrix& xa = ab.a.basis();
    const QMatrix& xb = ab.b.basis();
    const QMatrix& xc = bc.b.basis();
    d.factor = wedge_factor(ab, xa, xb) * wedge_factor(bc, xb, xc) / wedge_factor(d.ac, xa, xc);
    d.gamma_squared =
        line_norm_squared(ab) * line_norm_squared(bc) / (d.factor * d.factor * line_norm_squared(d.ac));
    return d;
}

}  // namespace

LineElement contract(const LineElement& x, const LineElement& y, ContractionMode mode) {
    const ContractionData d = contraction_data(x.line, y.line);
    RootScalar c = x.coord * y.coord * RootScalar(d.factor);
    if (mode == ContractionMode::Metrized) c = c * RootScalar::sqrt_of(d.gamma_squared);
    return LineElement{d.ac, c};
}

RootScalar contraction_gamma(const RelativeDetLine& ab, const RelativeDetLine& bc) {
    return RootScalar::sqrt_of(contraction_data(ab, bc).gamma_squared);
}

LineElement inverse(const LineElement& x, ContractionMode mode) {
    const RelativeDetLine back = make_line(x.line.b, x.line.a);
    const RootScalar s = scalar_value(contract(x, unit_element(back), mode));
    return LineElement{back, s.inverse()};
}

RootScalar scalar_value(const LineElement& x) {
    if (!same_subspace(x.line.a, x.line.b)) throw Error(ErrorKind::InvalidArgument, "not an element of (A|A)");
    return x.coord;
}

BetaImage beta_map(const LineElement& x, const LineElement& y, ContractionMode mode) {
    const auto& a = x.line.a;
    const auto& b = x.line.b;
    const auto& a2 = y.line.a;
    const auto& b2 = y.line.b;
    if (a.ambient_dim() != a2.ambient_dim()) throw Error(ErrorKind::InvalidArgument, "ambient dimensions differ");

    struct Adapted {
        QMatrix k, first, second, whole;
    };
    auto adapt = [](const MetrizedSubspace& s, const MetrizedSubspace& t) {
        Adapted r;
        r.k = intersect(s, t).basis();
        const QMatrix u = complement(r.k, s.basis());
        const QMatrix v = complement(r.k, t.basis());
        r.first = hcat(r.k, u);
        r.second = hcat(r.k, v);
        r.whole = hcat(hcat(r.k, u), v);
        return r;
    };
    const Adapted sa = adapt(a, a2);
    const Adapted sb = adapt(b, b2);

    BetaImage out;
    out.meet = make_line(intersect(a, a2), intersect(b, b2));
    out.join = make_line(sum(a, a2), sum(b, b2));
    const mpq_class rx = wedge_factor(x.line, sa.first, sb.first);
    const mpq_class ry = wedge_factor(y.line, sa.second, sb.second);
    const mpq_class rm = wedge_factor(out.meet, sa.k, sb.k);
    const mpq_class rj = wedge_factor(out.join, sa.whole, sb.whole);
    const mpq_class factor = rx * ry / (rm * rj);
    out.coord = x.coord * y.coord * RootScalar(factor);
    if (mode == ContractionMode::Metrized) {
        const mpq_class g2 = line_norm_squared(x.line) * line_norm_squared(y.line) /
                             (factor * factor * line_norm_squared(out.meet) * line_norm_squared(out.join));
        out.coord = out.coord * RootScalar::sqrt_of(g2);
    }
    return out;
}

}  // namespace arecip::centext
