#include "arecip/centext/operators.hpp"

#include <algorithm>

#include "arecip/error.hpp"

namespace arecip::centext {

QMatrix window_vector(const LaurentPoly& f, Window w) {
    QMatrix v(w.dim(), 1);
    for (const auto& [k, c] : f.terms()) {
        if (k > w.high) break;
        if (k < w.low) throw WindowTooSmall(k, w.high);
        v(k - w.low, 0) = c;
    }
    return v;
}

MetrizedSubspace standard_lattice(Window w, int from) {
    std::vector<int> idx;
    for (int k = std::max(from, w.low); k <= w.high; ++k) idx.push_back(k - w.low);
    return MetrizedSubspace::coordinate(w.dim(), idx);
}

Operator Operator::matrix(QMatrix g) {
    if (g.rows() != g.cols() || det(g) == 0) throw Error(ErrorKind::InvalidArgument, "operator must be invertible");
    Operator op;
    op.matrix_ = std::move(g);
    return op;
}

Operator Operator::multiplication(const LaurentPoly& f, Window w) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplication by zero");
    if (w.high < w.low) throw Error(ErrorKind::InvalidArgument, "empty window");
    Operator op;
    op.multiplication_ = true;
    op.window_ = w;
    // Exact through 2 * (high - low) so that products and inverses of series
    // with order >= low - high stay exact through high - low.
    op.series_ = f.truncated(2 * (w.high - w.low));
    if (op.series_.truncated(w.high - w.low).is_zero()) throw WindowTooSmall(w.low, f.order() + w.low);
    return op;
}

int Operator::dim() const { return multiplication_ ? window_.dim() : matrix_.rows(); }

QMatrix Operator::apply(const QMatrix& vectors) const {
    if (!multiplication_) return matrix_ * vectors;
    const Window w = window_;
    QMatrix out(w.dim(), vectors.cols());
    for (int j = 0; j < vectors.cols(); ++j)
        for (int i = 0; i < w.dim(); ++i) {
            const mpq_class& v = vectors(i, j);
            if (v == 0) continue;
            for (const auto& [k, c] : series_.terms()) {
                const int e = w.low + i + k;
                if (e > w.high) break;
                if (e < w.low) throw WindowTooSmall(e, w.high);
                out(e - w.low, j) += v * c;
            }
        }
    return out;
}

MetrizedSubspace Operator::image(const MetrizedSubspace& l) const {
    if (!multiplication_) return MetrizedSubspace::span(matrix_ * l.basis());
    const Window w = window_;
    const int nu = series_.order();
    if (nu > 0) {
        // f l contains t^(high+1) Q[[t]] only if l contains the top nu slots.
        if (w.high + 1 - nu < w.low) throw WindowTooSmall(w.low, w.low + nu - 1);
        if (!l.contains(standard_lattice(w, w.high + 1 - nu).basis()))
            throw WindowTooSmall(w.low, w.high + nu);
    }
    QMatrix family = apply(l.basis());
    for (int i = w.high + 1; i <= w.high - nu; ++i) {
        QMatrix v(w.dim(), 1);
        for (const auto& [k, c] : series_.terms()) {
            const int e = i + k;
            if (e > w.high) break;
            if (e < w.low) throw WindowTooSmall(e, w.high);
            v(e - w.low, 0) = c;
        }
        family = hcat(family, v);
    }
    MetrizedSubspace img = MetrizedSubspace::span(family);
    if (img.dim() != l.dim() - nu) throw WindowTooSmall(w.low + std::min(0, nu), w.high + std::abs(nu));
    return img;
}

Operator Operator::compose(const Operator& o) const {
    if (multiplication_ != o.multiplication_) throw Error(ErrorKind::InvalidArgument, "mixed operator kinds");
    if (!multiplication_) return matrix(matrix_ * o.matrix_);
    if (!(window_ == o.window_)) throw Error(ErrorKind::InvalidArgument, "operators on different windows");
    return multiplication(series_ * o.series_, window_);
}

Operator Operator::inverse() const {
    if (!multiplication_) return matrix(centext::inverse(matrix_));
    return multiplication(series_.series_inverse(2 * (window_.high - window_.low)), window_);
}

bool Operator::is_identity() const {
    if (!multiplication_) return matrix_ == QMatrix::identity(matrix_.rows());
    return series_.truncated(window_.high - window_.low) == LaurentPoly::constant(1);
}

bool Operator::commutes_with(const Operator& o) const {
    if (multiplication_ != o.multiplication_) return false;
    if (multiplication_) return window_ == o.window_;
    return matrix_ * o.matrix_ == o.matrix_ * matrix_;
}

LineElement pushforward(const Operator& g, const LineElement& x) {
    const RelativeDetLine target = make_line(g.image(x.line.a), g.image(x.line.b));
    const QMatrix va = hcat(target.k, g.apply(x.line.ua));
    const QMatrix vb = hcat(target.k, g.apply(x.line.ub));
    // x = c (wedge ua)^* (x) (wedge ub) maps to c (wedge va)^* (x) (wedge vb),
    // and that element is r times the target wedge basis element.
    const mpq_class r = wedge_factor(target, va, vb);
    return LineElement{target, x.coord / RootScalar(r)};
}

WindowLattice window_lattice(const LaurentPoly& f, Window w) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "window lattice of zero");
    const int nu = f.order();
    const int need_low = std::min(0, nu), need_high = std::max(0, nu);
    if (w.low > need_low || w.high < need_high)
        throw WindowTooSmall(std::min(w.low, need_low), std::max(w.high, need_high));
    WindowLattice out;
    out.reference = standard_lattice(w);
    out.image = Operator::multiplication(f, w).image(out.reference);
    return out;
}

}  // namespace arecip::centext
