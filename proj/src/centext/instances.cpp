#include "arecip/centext/instances.hpp"

namespace arecip::centext::instances {

namespace {

mpq_class ratio(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

long draw(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

LaurentPoly random_laurent(std::mt19937_64& rng, int min_exp, int max_exp, int max_terms) {
    LaurentPoly f;
    while (f.is_zero()) {
        const long n = draw(rng, 1, max_terms);
        for (long i = 0; i < n; ++i)
            f = f + LaurentPoly::monomial(mpq_class(draw(rng, -10, 10)), static_cast<int>(draw(rng, min_exp, max_exp)));
    }
    return f;
}

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = draw(rng, -range, range);
    return m;
}

QMatrix random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        QMatrix m = random_matrix(rng, n, n);
        if (det(m) != 0) return m;
    }
}

QMatrix cayley_orthogonal(std::mt19937_64& rng, int n) {
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = ratio(draw(rng, -2, 2), 3);
            s(j, i) = -s(i, j);
        }
    const QMatrix id = QMatrix::identity(n);
    return (id - s) * inverse(id + s);
}

MetrizedSubspace random_subspace(std::mt19937_64& rng, int n, int k) {
    return MetrizedSubspace::span(random_matrix(rng, n, k));
}

MetrizedSubspace sandwiched_lattice(std::mt19937_64& rng, Window w, int k0, int k1) {
    const QMatrix top = standard_lattice(w, k1).basis();
    if (k1 <= k0) return standard_lattice(w, k1);
    const long extra_count = draw(rng, 0, k1 - k0);
    QMatrix extra(w.dim(), static_cast<int>(extra_count));
    for (int j = 0; j < extra.cols(); ++j)
        for (int e = k0; e < k1; ++e) extra(e - w.low, j) = draw(rng, -3, 3);
    return MetrizedSubspace::span(hcat(top, extra));
}

PairingInstance random_pairing_instance(std::mt19937_64& rng, bool window_kind) {
    if (window_kind) {
        const LaurentPoly f = random_laurent(rng, -1, 1, 3), g = random_laurent(rng, -1, 1, 3);
        const Window mw = minimal_window(f, g);
        const Window w{mw.low - 1, mw.high + 2};
        const int k0 = w.low - mw.low, k1 = w.high + 1 - mw.high;
        return PairingInstance{Operator::multiplication(f, w), Operator::multiplication(g, w),
                               sandwiched_lattice(rng, w, k0, k1), sandwiched_lattice(rng, w, k0, k1)};
    }
    const int n = static_cast<int>(draw(rng, 2, 8));
    std::vector<int> ia, ib;
    for (int k = 0; k < n; ++k) {
        if (draw(rng, 0, 1)) ia.push_back(k);
        if (draw(rng, 0, 1)) ib.push_back(k);
    }
    QMatrix g = QMatrix::identity(n), h = QMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        g(k, k) = ratio(draw(rng, 1, 9) * (draw(rng, 0, 1) ? 1 : -1), draw(rng, 1, 4));
        h(k, k) = ratio(draw(rng, 1, 5) * (draw(rng, 0, 1) ? 1 : -1), draw(rng, 1, 3));
    }
    const QMatrix q = cayley_orthogonal(rng, n), qi = inverse(q);
    return PairingInstance{Operator::matrix(q * g * qi), Operator::matrix(q * h * qi),
                           MetrizedSubspace::span(q * MetrizedSubspace::coordinate(n, ia).basis()),
                           MetrizedSubspace::span(q * MetrizedSubspace::coordinate(n, ib).basis())};
}

GroupTriple random_group_triple(std::mt19937_64& rng, bool window_kind) {
    auto scalar = [&rng] { return RootScalar(ratio(draw(rng, 1, 9) * (draw(rng, 0, 1) ? 1 : -1), draw(rng, 1, 5))); };
    if (window_kind) {
        const LaurentPoly f1 = random_laurent(rng, -1, 1, 2), f2 = random_laurent(rng, -1, 1, 2),
                          f3 = random_laurent(rng, -1, 1, 2);
        // Room for every partial product and inverse.
        int lo = 0, hi = 0;
        for (int o : {f1.order(), f2.order(), f3.order()}) {
            lo -= std::abs(o);
            hi += std::abs(o);
        }
        const Window w{lo - 1, hi + 1};
        const MetrizedSubspace a = standard_lattice(w);
        return GroupTriple{a,
                           lift(Operator::multiplication(f1, w), a, scalar()),
                           lift(Operator::multiplication(f2, w), a, scalar()),
                           lift(Operator::multiplication(f3, w), a, scalar()),
                           scalar()};
    }
    const int n = 4;
    const MetrizedSubspace a = random_subspace(rng, n, static_cast<int>(draw(rng, 1, 3)));
    return GroupTriple{a,
                       lift(Operator::matrix(random_invertible(rng, n)), a, scalar()),
                       lift(Operator::matrix(random_invertible(rng, n)), a, scalar()),
                       lift(Operator::matrix(random_invertible(rng, n)), a, scalar()),
                       scalar()};
}

ExactSequenceData random_exact_sequence(std::mt19937_64& rng, int max_dim) {
    std::normal_distribution<double> nd;
    const int d1 = static_cast<int>(draw(rng, 1, max_dim)), d3 = static_cast<int>(draw(rng, 1, max_dim));
    const int d2 = d1 + d3;
    auto spd = [&](int d) {
        RealMatrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = nd(rng);
        return RealMatrix(m * m.transpose() + RealMatrix::Identity(d, d));
    };
    ExactSequenceData s;
    s.g1 = spd(d1);
    s.g2 = spd(d2);
    s.g3 = spd(d3);
    RealMatrix basis(d2, d2);
    do {
        for (int r = 0; r < d2; ++r)
            for (int c = 0; c < d2; ++c) basis(r, c) = nd(rng);
    } while (std::abs(basis.determinant()) < 0.1L);
    s.inj = basis.leftCols(d1);
    s.surj = basis.inverse().bottomRows(d3);
    return s;
}

}  // namespace arecip::centext::instances
