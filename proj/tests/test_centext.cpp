#include <cmath>
#include <random>

#include "arecip/centext/gamma.hpp"
#include "arecip/centext/group.hpp"
#include "arecip/centext/laurent.hpp"
#include "arecip/centext/lines.hpp"
#include "arecip/centext/operators.hpp"
#include "arecip/error.hpp"
#include "doctest.h"

using namespace arecip;
using namespace arecip::centext;

namespace {

mpq_class q(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

QMatrix cols(int n, const std::vector<std::vector<long>>& vs) {
    QMatrix m(n, static_cast<int>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = vs[j][static_cast<std::size_t>(i)];
    return m;
}

QMatrix random_matrix(std::mt19937_64& rng, int r, int c, int range = 3) {
    std::uniform_int_distribution<long> d(-range, range);
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

QMatrix random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        QMatrix m = random_matrix(rng, n, n);
        if (det(m) != 0) return m;
    }
}

MetrizedSubspace random_subspace(std::mt19937_64& rng, int n, int k) {
    return MetrizedSubspace::span(random_matrix(rng, n, k));
}

// Rational orthogonal matrix (I - S)(I + S)^-1 from a random skew matrix S.
QMatrix cayley(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> d(-2, 2);
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = q(d(rng), 3);
            s(j, i) = -s(i, j);
        }
    const QMatrix id = QMatrix::identity(n);
    return (id - s) * inverse(id + s);
}

LaurentPoly random_laurent(std::mt19937_64& rng, int min_exp, int max_exp, int max_terms) {
    std::uniform_int_distribution<int> e(min_exp, max_exp), c(-10, 10), nt(1, max_terms);
    LaurentPoly f;
    while (f.is_zero()) {
        const int n = nt(rng);
        for (int i = 0; i < n; ++i) f = f + LaurentPoly::monomial(c(rng), e(rng));
    }
    return f;
}

// Closed formula evaluated independently in double precision.
double closed_formula(const LaurentPoly& f, const LaurentPoly& g) {
    return g.order() * std::log(std::fabs(f.leading_low().get_d())) -
           f.order() * std::log(std::fabs(g.leading_low().get_d()));
}

// A lattice sandwiched between span(t^k1..t^high) and span(t^k0..t^high).
MetrizedSubspace sandwiched(std::mt19937_64& rng, Window w, int k0, int k1) {
    QMatrix top = standard_lattice(w, k1).basis();
    const int band = k1 - k0;
    if (band <= 0) return standard_lattice(w, k1);
    std::uniform_int_distribution<int> kd(0, band);
    const int k = kd(rng);
    QMatrix extra(w.dim(), k);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int j = 0; j < k; ++j)
        for (int e = k0; e < k1; ++e) extra(e - w.low, j) = d(rng);
    return MetrizedSubspace::span(hcat(top, extra));
}

// Exact gamma^2 for a sequence: vol^2 of the image of V1 relative to g1 times
// vol^2 of the quotient relative to g3, both from arbitrary bases.
long double gamma_oracle(const ExactSequenceData& s) {
    const RealMatrix gi = s.inj.transpose() * s.g2 * s.inj;
    const RealMatrix pre = s.surj.completeOrthogonalDecomposition().solve(RealMatrix::Identity(s.g3.rows(), s.g3.rows()));
    RealMatrix y = pre;
    if (s.inj.cols() > 0) y -= s.inj * gi.ldlt().solve(s.inj.transpose() * s.g2 * pre);
    const RealMatrix gq = y.transpose() * s.g2 * y;
    return std::sqrt(gi.determinant() / s.g1.determinant() * gq.determinant() / s.g3.determinant());
}

}  // namespace

TEST_CASE("rational matrices") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const QMatrix m = random_matrix(rng, 5, 7, 2);
        const QMatrix k = kernel(m);
        CHECK((m * k).is_zero());
        CHECK(rank(m) + k.cols() == 7);
        const QMatrix a = random_invertible(rng, 4), b = random_invertible(rng, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(a * inverse(a) == QMatrix::identity(4));
        const QMatrix x = random_matrix(rng, 4, 2);
        CHECK(a * solve(a, x) == x);
    }
    CHECK_THROWS_AS(solve(cols(3, {{1, 0, 0}}), cols(3, {{0, 1, 0}})), Error);
}

TEST_CASE("laurent parsing and series") {
    const LaurentPoly f = parse_laurent("t*(3+t)");
    CHECK(f.order() == 1);
    CHECK(f.leading_low() == 3);
    CHECK(f.coeff(2) == 1);
    const LaurentPoly g = parse_laurent("5*t^2");
    CHECK(g.order() == 2);
    CHECK(g.leading_low() == 5);
    const LaurentPoly h = parse_laurent("0.5 - t^-1");
    CHECK(h.order() == -1);
    CHECK(h.coeff(0) == mpq_class(1, 2));
    CHECK(parse_laurent("2/4").coeff(0) == mpq_class(1, 2));
    CHECK(parse_laurent("(1+t)*(1-t)") == parse_laurent("1 - t^2"));
    CHECK_THROWS_AS(parse_laurent("t*("), ParseError);
    CHECK_THROWS_AS(parse_laurent("3 t"), ParseError);
    CHECK_THROWS_AS(parse_laurent("t^"), ParseError);

    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly p = random_laurent(rng, -3, 4, 4);
        const LaurentPoly q = p.series_inverse(12);
        // p * q = 1 through exponent 12 - ... terms of q are exact through 12.
        const LaurentPoly prod = (p * q).truncated(12 + p.order());
        CHECK(prod == LaurentPoly::constant(1));
    }
}

TEST_CASE("line norms") {
    const MetrizedSubspace e1 = MetrizedSubspace::span(cols(2, {{1, 0}}));
    CHECK(line_norm(make_line(e1, e1)) == RootScalar(1));
    CHECK(line_norm(make_line(e1, MetrizedSubspace::span(cols(2, {{0, 2}})))) == RootScalar(2));
    CHECK(line_norm(make_line(e1, MetrizedSubspace::span(cols(2, {{1, 1}})))) == RootScalar::sqrt_of(2));
    // Dual factor: (span(2 e2) | span(e1)) has norm 1/2.
    CHECK(line_norm(make_line(MetrizedSubspace::span(cols(2, {{0, 2}})), e1)) == RootScalar(mpq_class(1, 2)));
}

TEST_CASE("contraction examples") {
    std::mt19937_64 rng(3);
    const MetrizedSubspace a = random_subspace(rng, 4, 2);
    const RelativeDetLine aa = make_line(a, a);
    const auto z = contract(LineElement{aa, RootScalar(3)}, LineElement{aa, RootScalar(mpq_class(-2, 5))});
    CHECK(scalar_value(z) == RootScalar(mpq_class(-6, 5)));

    // Unit-norm inputs give a unit-norm output.
    for (int i = 0; i < 30; ++i) {
        const auto x = random_subspace(rng, 5, 3), y = random_subspace(rng, 5, 2), w = random_subspace(rng, 5, 4);
        const RelativeDetLine l1 = make_line(x, y), l2 = make_line(y, w);
        const LineElement u1{l1, line_norm(l1).inverse()}, u2{l2, line_norm(l2).inverse()};
        CHECK(contract(u1, u2).norm() == RootScalar(1));
    }

    // Nested monomial lattices: triangular basis change, coordinates multiply.
    const Window win{-2, 3};
    const auto la = standard_lattice(win, -2), lb = standard_lattice(win, 0), lc = standard_lattice(win, 2);
    const auto r = contract(LineElement{make_line(la, lb), RootScalar(2)}, LineElement{make_line(lb, lc), RootScalar(7)},
                            ContractionMode::Rigid);
    CHECK(r.coord == RootScalar(14));
}

TEST_CASE("metrized contraction is associative and gamma accounts for rigidity") {
    std::mt19937_64 rng(4);
    int nontrivial_gamma = 0;
    for (int i = 0; i < 40; ++i) {
        const int n = 5;
        std::vector<MetrizedSubspace> s;
        for (int j = 0; j < 4; ++j) {
            MetrizedSubspace v = random_subspace(rng, n, 1 + static_cast<int>(rng() % 4));
            if (i % 2 == 1) {
                // Scaled metric on some spaces.
                const mpq_class c = q(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 2));
                v = MetrizedSubspace::with_metric(v.basis(), c * v.gram());
            }
            s.push_back(v);
        }
        const LineElement x{make_line(s[0], s[1]), RootScalar(q(static_cast<long>(rng() % 7) + 1, 3))};
        const LineElement y{make_line(s[1], s[2]), RootScalar(-2)};
        const LineElement z{make_line(s[2], s[3]), RootScalar(5)};
        for (auto mode : {ContractionMode::Metrized, ContractionMode::Rigid}) {
            const auto left = contract(contract(x, y, mode), z, mode);
            const auto right = contract(x, contract(y, z, mode), mode);
            CHECK(left.coord == right.coord);
        }
        // Metrized and rigid differ exactly by gamma.
        const auto m = contract(x, y, ContractionMode::Metrized);
        const auto r = contract(x, y, ContractionMode::Rigid);
        const RootScalar g = contraction_gamma(x.line, y.line);
        CHECK(m.coord == r.coord * g);
        CHECK(m.norm() == x.norm() * y.norm());
        if (i % 2 == 0) CHECK(g == RootScalar(1));  // ambient metrics: contraction is already isometric
        if (!(g == RootScalar(1))) ++nontrivial_gamma;
    }
    CHECK(nontrivial_gamma > 0);
}

TEST_CASE("inverse elements") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_subspace(rng, 5, 2), b = random_subspace(rng, 5, 3);
        const LineElement x{make_line(a, b), RootScalar(mpq_class(3, 7))};
        CHECK(scalar_value(contract(x, inverse(x))) == RootScalar(1));
        CHECK(scalar_value(contract(inverse(x), x)) == RootScalar(1));
    }
}

TEST_CASE("beta map") {
    std::mt19937_64 rng(6);
    // A = A', B = B': squaring.
    const auto a = random_subspace(rng, 4, 2), b = random_subspace(rng, 4, 2);
    const LineElement x{make_line(a, b), RootScalar(3)};
    const BetaImage sq = beta_map(x, x, ContractionMode::Rigid);
    CHECK(same_subspace(sq.meet.a, a));
    CHECK(same_subspace(sq.join.b, b));
    CHECK(sq.coord == RootScalar(9) * RootScalar(wedge_factor(x.line, a.basis(), b.basis())).inverse() *
                          RootScalar(wedge_factor(x.line, a.basis(), b.basis())).inverse() *
                          RootScalar(wedge_factor(sq.meet, a.basis(), b.basis())) *
                          RootScalar(wedge_factor(sq.join, a.basis(), b.basis())));
    // Disjoint supports: A = span(e1), A' = span(e2), B = B' = 0.
    const auto e1 = MetrizedSubspace::coordinate(2, {0}), e2 = MetrizedSubspace::coordinate(2, {1});
    const auto zero = MetrizedSubspace::zero(2);
    const BetaImage d = beta_map(LineElement{make_line(e1, zero), RootScalar(2)},
                                 LineElement{make_line(e2, zero), RootScalar(5)}, ContractionMode::Rigid);
    CHECK(d.coord == RootScalar(10));
    // Unit-norm inputs give unit-norm output.
    for (int i = 0; i < 30; ++i) {
        const auto p = random_subspace(rng, 5, 2), q = random_subspace(rng, 5, 3);
        const auto r = random_subspace(rng, 5, 3), s = random_subspace(rng, 5, 1);
        const RelativeDetLine l1 = make_line(p, q), l2 = make_line(r, s);
        const auto out = beta_map(LineElement{l1, line_norm(l1).inverse()}, LineElement{l2, line_norm(l2).inverse()});
        CHECK(out.norm() == RootScalar(1));
    }
}

TEST_CASE("window lattices") {
    const Window w{-4, 4};
    const auto one = window_lattice(parse_laurent("1"), w);
    CHECK(same_subspace(one.image, one.reference));
    const auto shift = window_lattice(parse_laurent("t"), w);
    CHECK(same_subspace(shift.image, standard_lattice(w, 1)));
    CHECK(shift.image.dim() == 4);
    // (2 + t) is a unit of Q[[t]]: the image is the whole reference lattice.
    const auto unit = window_lattice(parse_laurent("2+t"), w);
    CHECK(unit.image.dim() == 5);
    CHECK(same_subspace(unit.image, unit.reference));
    const auto pole = window_lattice(parse_laurent("t^-2*(1+t)"), w);
    CHECK(same_subspace(pole.image, standard_lattice(w, -2)));
    try {
        window_lattice(parse_laurent("t^-6"), w);
        FAIL("expected WindowTooSmall");
    } catch (const WindowTooSmall& e) {
        CHECK(e.min_low() == -6);
        CHECK(e.min_high() == 4);
    }
}

TEST_CASE("commutator pairing examples") {
    const Window w{-2, 3};
    const auto a = standard_lattice(w);
    const Operator t = Operator::multiplication(parse_laurent("t"), w);
    const Operator two = Operator::multiplication(parse_laurent("2"), w);
    CHECK(commutator_pairing(t, two, a) == RootScalar(mpq_class(1, 2)));
    CHECK(commutator_pairing(two, t, a) == RootScalar(2));
    CHECK(commutator_pairing(t, t, a) == RootScalar(1));

    // Unitary maps preserving A.
    std::mt19937_64 rng(7);
    const QMatrix q = cayley(rng, 3);
    QMatrix big = QMatrix::identity(5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) big(i, j) = q(i, j);
    const auto a3 = MetrizedSubspace::coordinate(5, {0, 1, 2});
    QMatrix diag = QMatrix::identity(5);
    diag(3, 3) = 4;
    diag(4, 4) = -1;
    CHECK(commutator_pairing(Operator::matrix(big), Operator::matrix(diag), a3) == RootScalar(1));

    CHECK_THROWS_AS(commutator_pairing(Operator::matrix(random_invertible(rng, 3)),
                                       Operator::matrix(random_invertible(rng, 3)), MetrizedSubspace::coordinate(3, {0})),
                    Error);
}

TEST_CASE("pairing is independent of lifts, antisymmetric and matches the literal commutator") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly f = random_laurent(rng, -1, 2, 3), g = random_laurent(rng, -1, 2, 3);
        const Window w = minimal_window(f, g, true);
        const Operator mf = Operator::multiplication(f, w), mg = Operator::multiplication(g, w);
        const auto a = standard_lattice(w);
        const RootScalar base = commutator_pairing(mf, mg, a);
        const RootScalar sa(q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1));
        const RootScalar sb(q(-static_cast<long>(rng() % 7) - 1, 3));
        CHECK(commutator_pairing(mf, mg, a, sa, sb) == base);
        CHECK(base * commutator_pairing(mg, mf, a) == RootScalar(1));
        CHECK(commutator_scalar(lift(mg, a, sb), lift(mf, a, sa)) == base);
        CHECK(std::fabs(static_cast<double>(base.log_abs(128).to_double()) - closed_formula(f, g)) < 1e-9);
    }
}

TEST_CASE("group axioms on finite and window elements") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const int n = 4;
        const auto a = random_subspace(rng, n, 2);
        const ArGLElement u = lift(Operator::matrix(random_invertible(rng, n)), a, RootScalar(2));
        const ArGLElement v = lift(Operator::matrix(random_invertible(rng, n)), a, RootScalar(mpq_class(-1, 3)));
        const ArGLElement x = lift(Operator::matrix(random_invertible(rng, n)), a, RootScalar(5));
        CHECK(same_element(group_mul(group_mul(u, v), x), group_mul(u, group_mul(v, x))));
        const ArGLElement e = central(u.g, a);
        CHECK(same_element(group_mul(e, u), u));
        CHECK(same_element(group_mul(u, e), u));
        const ArGLElement prod = group_mul(u, group_inverse(u));
        CHECK(prod.g.is_identity());
        CHECK(scalar_value(prod.a) == RootScalar(1));
        const ArGLElement c = central(u.g, a, RootScalar(mpq_class(7, 2)));
        CHECK(same_element(group_mul(c, u), group_mul(u, c)));
    }
    for (int i = 0; i < 20; ++i) {
        const LaurentPoly f = random_laurent(rng, -1, 1, 2), g = random_laurent(rng, -1, 1, 2);
        Window w = minimal_window(f, g, true);
        w.low -= 1;
        w.high += 1;
        const auto a = standard_lattice(w);
        const ArGLElement u = lift(Operator::multiplication(f, w), a, RootScalar(3));
        const ArGLElement v = lift(Operator::multiplication(g, w), a, RootScalar(-1));
        const ArGLElement c = central(u.g, a, RootScalar(mpq_class(2, 9)));
        CHECK(same_element(group_mul(group_mul(u, c), v), group_mul(u, group_mul(c, v))));
        CHECK(same_element(group_mul(c, u), group_mul(u, c)));
    }
}

TEST_CASE("pairing reciprocity on random instances") {
    std::mt19937_64 rng(10);
    // A = B and g = h.
    const Window w{-2, 4};
    const Operator mf = Operator::multiplication(parse_laurent("t*(3+t)"), w);
    const Operator mg = Operator::multiplication(parse_laurent("2 - t"), w);
    const auto a = standard_lattice(w);
    CHECK(prop_b_check(mf, mg, a, a).pass);
    const auto same = prop_b_check(mf, mf, a, standard_lattice(w, 1));
    CHECK(same.pass);
    CHECK(same.lhs == RootScalar(1));

    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<int> ia, ib;
        for (int k = 0; k < n; ++k) {
            if (rng() % 2) ia.push_back(k);
            if (rng() % 2) ib.push_back(k);
        }
        QMatrix g = QMatrix::identity(n), h = QMatrix::identity(n);
        for (int k = 0; k < n; ++k) {
            g(k, k) = q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
            h(k, k) = -mpq_class(static_cast<long>(rng() % 5) + 1, 1);
        }
        auto sa = MetrizedSubspace::coordinate(n, ia), sb = MetrizedSubspace::coordinate(n, ib);
        if (i % 2 == 1) {
            const QMatrix q = cayley(rng, n);
            const QMatrix qi = inverse(q);
            g = q * g * qi;
            h = q * h * qi;
            sa = MetrizedSubspace::span(q * sa.basis());
            sb = MetrizedSubspace::span(q * sb.basis());
        }
        const auto r = prop_b_check(Operator::matrix(g), Operator::matrix(h), sa, sb);
        CHECK(r.pass);
        CHECK(r.lhs == r.rhs);
    }
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly f = random_laurent(rng, -1, 1, 3), g = random_laurent(rng, -1, 1, 3);
        const Window mw = minimal_window(f, g);
        const Window win{mw.low - 1, mw.high + 2};
        const int k0 = win.low - mw.low, k1 = win.high + 1 - mw.high;
        const auto la = sandwiched(rng, win, k0, k1), lb = sandwiched(rng, win, k0, k1);
        const auto r = prop_b_check(Operator::multiplication(f, win), Operator::multiplication(g, win), la, lb);
        CAPTURE(f.to_string());
        CAPTURE(g.to_string());
        CHECK(r.pass);
        CHECK(r.lhs == r.rhs);
    }
}

TEST_CASE("oracle against the closed formula") {
    CHECK(nu_arch_oracle(parse_laurent("t"), parse_laurent("t")).to_double() == doctest::Approx(0.0));
    CHECK(nu_arch_oracle(parse_laurent("2"), parse_laurent("t")).to_double() == doctest::Approx(std::log(2.0)));
    CHECK(nu_arch_oracle(parse_laurent("t*(3+t)"), parse_laurent("5*t^2")).to_double() ==
          doctest::Approx(2 * std::log(3.0) - std::log(5.0)));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly f = random_laurent(rng, -2, 5, 4), g = random_laurent(rng, -2, 5, 4);
        const double oracle = nu_arch_oracle(f, g).to_double();
        CHECK(std::fabs(oracle - closed_formula(f, g)) <= 1e-9);
        CHECK(std::fabs(oracle - nu_arch_closed_form(f, g).to_double()) <= 1e-9);
        Window w = minimal_window(f, g);
        w.low -= 2;
        w.high += 3;
        CHECK(nu_arch_oracle(f, g, w).to_double() == doctest::Approx(oracle).epsilon(1e-12));
    }
    CHECK_THROWS_AS(nu_arch_oracle(parse_laurent("t^-3"), parse_laurent("t"), Window{-1, 2}), WindowTooSmall);
}

TEST_CASE("gamma_sequence") {
    ExactSequenceData split;
    split.g1 = RealMatrix::Identity(1, 1);
    split.g2 = RealMatrix::Identity(2, 2);
    split.g3 = RealMatrix::Identity(1, 1);
    split.inj = RealMatrix::Zero(2, 1);
    split.inj(0, 0) = 1;
    split.surj = RealMatrix::Zero(1, 2);
    split.surj(0, 1) = 1;
    CHECK(static_cast<double>(gamma_sequence(split)) == doctest::Approx(1.0));

    ExactSequenceData half = split;
    half.g1(0, 0) = 4;  // basis vector of length 2
    CHECK(static_cast<double>(gamma_sequence(half)) == doctest::Approx(0.5));

    ExactSequenceData scaled = split;
    scaled.g2 *= 9;  // c = 3
    CHECK(static_cast<double>(gamma_sequence(scaled)) == doctest::Approx(9.0));

    ExactSequenceData broken = split;
    broken.surj(0, 0) = 1;
    CHECK_THROWS_AS(gamma_sequence(broken), Error);

    std::mt19937_64 rng(12);
    std::normal_distribution<double> nd;
    for (int i = 0; i < 20; ++i) {
        const int d1 = 1 + static_cast<int>(rng() % 3), d3 = 1 + static_cast<int>(rng() % 3), d2 = d1 + d3;
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
        for (int r = 0; r < d2; ++r)
            for (int c = 0; c < d2; ++c) basis(r, c) = nd(rng);
        s.inj = basis.leftCols(d1);
        s.surj = basis.inverse().bottomRows(d3);
        const long double ref = gamma_oracle(s);
        long double lo = gamma_sequence(s), hi = lo;
        for (int k = 0; k < 20; ++k) {
            const long double v = gamma_sequence(s, &rng);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(static_cast<double>((hi - lo) / ref) <= 1e-12);
        CHECK(static_cast<double>(gamma_sequence(s)) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
    }
}
