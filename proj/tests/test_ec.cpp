#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracle/naive_curve.hpp"
#include "test_util.hpp"
#include "zariski/ec.hpp"
#include "zariski/sampling.hpp"

using namespace zariski;
using testutil::expect_error;

namespace {

oracle::Pt to_oracle(const CurvePoint& p) {
    if (p.is_infinity()) return oracle::Pt::at_infinity();
    return oracle::Pt::affine(static_cast<std::int64_t>(p.x().value()), static_cast<std::int64_t>(p.y().value()));
}

CurvePoint from_oracle(const Curve& c, const oracle::Pt& p) {
    return p.inf ? CurvePoint::infinity() : c.point(p.x, p.y);
}

const Curve& f5_curve() {
    static const Curve c(-1, 0, Modulus(5));
    return c;
}

}  // namespace

TEST(Curve, RejectsSingular) {
    expect_error(ErrorCode::SingularCurve, [] { Curve(0, 0, Modulus(7)); });
    // 4(-3)^3 + 27(2)^2 = 0: y^2 = (x - 1)^2 (x + 2)
    expect_error(ErrorCode::SingularCurve, [] { Curve(-3, 2, Modulus(11)); });
}

TEST(Curve, F5AdditionExamples) {
    const auto& E = f5_curve();
    const auto o = CurvePoint::infinity();
    EXPECT_EQ(E.add(E.point(2, 1), o), E.point(2, 1));
    EXPECT_EQ(E.add(E.point(2, 1), E.point(2, 4)), o);
    EXPECT_EQ(E.add(E.point(2, 1), E.point(3, 3)), E.point(4, 0));
    EXPECT_EQ(E.scalar_mul(E.point(2, 1), 2), E.point(0, 0));
    EXPECT_EQ(E.scalar_mul(E.point(2, 1), 0), o);
    EXPECT_EQ(E.neg(o), o);
    EXPECT_EQ(E.sub(E.point(3, 2), E.point(3, 2)), o);
}

TEST(Curve, PointOffCurve) {
    const auto& E = f5_curve();
    expect_error(ErrorCode::PointOffCurve, [&] { E.point(1, 1); });
    const CurvePoint bad(E.element(1), E.element(1));
    expect_error(ErrorCode::PointOffCurve, [&] { E.add(bad, CurvePoint::infinity()); });
    expect_error(ErrorCode::PointOffCurve, [&] { E.is_inflection(bad); });
}

// Chord-tangent table from the line-enumeration oracle, compared pointwise.
TEST(Curve, AdditionMatchesLineEnumerationOracle) {
    const std::vector<std::array<std::int64_t, 3>> curves{{5, -1, 0}, {5, 1, 1}, {7, 3, 4}, {11, 1, 6},
                                                          {13, -1, 0}, {17, 2, 3}, {23, 7, 11}};
    for (const auto& [p, a, b] : curves) {
        const Curve E(a, b, Modulus(static_cast<std::uint64_t>(p)));
        const oracle::NaiveCurve naive(p, a, b);
        const auto pts = E.points();
        ASSERT_EQ(pts.size(), naive.points().size()) << p;
        for (const auto& P : pts) {
            ASSERT_EQ(to_oracle(E.neg(P)), naive.neg(to_oracle(P)));
            for (const auto& Q : pts) {
                ASSERT_EQ(to_oracle(E.add(P, Q)), naive.add(to_oracle(P), to_oracle(Q)))
                    << P << " + " << Q << " on " << p << ":" << a << ":" << b;
            }
        }
    }
}

TEST(Curve, F5GroupHasEightPoints) {
    const oracle::NaiveCurve naive(5, -1, 0);
    EXPECT_EQ(naive.points().size(), 8u);
    EXPECT_EQ(f5_curve().order(), 8u);
    EXPECT_EQ(from_oracle(f5_curve(), naive.add(oracle::Pt::affine(2, 1), oracle::Pt::affine(3, 3))),
              f5_curve().point(4, 0));
}

TEST(Curve, GroupAxiomsRandomized) {
    sampling::Rng rng(2024);
    int curves = 0;
    while (curves < 12) {
        const Modulus m(sampling::random_prime(rng, 5, 1 << 14));
        std::uniform_int_distribution<std::uint64_t> dist(0, m.value() - 1);
        std::optional<Curve> E;
        try {
            E.emplace(FieldElement::from_unsigned(dist(rng), m), FieldElement::from_unsigned(dist(rng), m));
        } catch (const Error&) {
            continue;
        }
        ++curves;
        for (int i = 0; i < 300; ++i) {
            const auto P = sampling::random_point(rng, *E);
            const auto Q = sampling::random_point(rng, *E);
            const auto R = sampling::random_point(rng, *E);
            ASSERT_EQ(E->add(E->add(P, Q), R), E->add(P, E->add(Q, R)));
            ASSERT_EQ(E->add(P, Q), E->add(Q, P));
            ASSERT_EQ(E->add(P, CurvePoint::infinity()), P);
            ASSERT_TRUE(E->add(P, E->neg(P)).is_infinity());
            ASSERT_EQ(E->scalar_mul(P, 5), E->add(E->dbl(E->dbl(P)), P));
        }
    }
}

TEST(TwoTorsion, Examples) {
    const auto t = f5_curve().two_torsion();
    EXPECT_EQ(t[0], f5_curve().point(0, 0));
    EXPECT_EQ(t[1], f5_curve().point(1, 0));
    EXPECT_EQ(t[2], f5_curve().point(4, 0));
    expect_error(ErrorCode::TorsionNotRational, [] { Curve(0, 1, Modulus(5)).two_torsion(); });
    expect_error(ErrorCode::TorsionNotRational, [] { Curve(1, 1, Modulus(7)).two_torsion(); });
}

TEST(TwoTorsion, KleinFourAndExactlyTheYZeroPoints) {
    for (std::uint64_t p = 5; p <= 61; ++p) {
        if (!is_prime(p)) continue;
        const Modulus m(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; b += 3) {
                std::optional<Curve> E;
                try {
                    E.emplace(FieldElement::from_unsigned(a, m), FieldElement::from_unsigned(b, m));
                } catch (const Error&) {
                    continue;
                }
                std::vector<CurvePoint> y_zero;
                for (const auto& P : E->points()) {
                    if (!P.is_infinity() && P.y().is_zero()) y_zero.push_back(P);
                }
                if (y_zero.size() != 3) {
                    expect_error(ErrorCode::TorsionNotRational, [&] { E->two_torsion(); });
                    continue;
                }
                const auto t = E->two_torsion();
                ASSERT_EQ(std::vector<CurvePoint>(t.points.begin(), t.points.end()), y_zero);
                for (int i = 0; i < 3; ++i) {
                    ASSERT_TRUE(E->dbl(t[i]).is_infinity());
                    ASSERT_EQ(E->add(t[i], t[(i + 1) % 3]), t[(i + 2) % 3]);
                }
            }
        }
    }
}

TEST(Inflection, Examples) {
    EXPECT_TRUE(f5_curve().is_inflection(CurvePoint::infinity()));
    EXPECT_FALSE(f5_curve().is_inflection(f5_curve().point(0, 0)));
}

// is_inflection against the 3-division polynomial, and point orders against
// the exhaustively counted group order, for every curve with p <= 101.
TEST(Inflection, AgreesWithDivisionPolynomialAndOrdersDivide) {
    std::uint64_t curves = 0;
    for (std::uint64_t p = 5; p <= 101; ++p) {
        if (!is_prime(p)) continue;
        const Modulus m(p);
        // Every a, and b on a stride, keeps this exhaustive in points yet quick.
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; b += (p > 40 ? 7 : 1)) {
                std::optional<Curve> E;
                try {
                    E.emplace(FieldElement::from_unsigned(a, m), FieldElement::from_unsigned(b, m));
                } catch (const Error&) {
                    continue;
                }
                ++curves;
                const auto psi3 = E->third_division_polynomial();
                const auto order = E->order();
                for (const auto& P : E->points()) {
                    ASSERT_TRUE(E->scalar_mul(P, order).is_infinity());
                    if (P.is_infinity()) continue;
                    ASSERT_EQ(E->is_inflection(P), psi3(P.x()).is_zero()) << P;
                }
            }
        }
    }
    EXPECT_GT(curves, 1000u);
}
