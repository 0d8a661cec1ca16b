#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "zariski/ff.hpp"
#include "zariski/poly.hpp"

namespace zariski {

// Either the zero element O (point at infinity) or an affine point.
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(FieldElement x, FieldElement y);

    bool is_infinity() const noexcept { return !coords_.has_value(); }
    // Only valid for affine points.
    const FieldElement& x() const;
    const FieldElement& y() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    // Canonical order: O first, then affine points by (x, y) representatives.
    friend std::strong_ordering operator<=>(const CurvePoint& lhs, const CurvePoint& rhs);

private:
    CurvePoint() = default;

    struct Affine {
        FieldElement x;
        FieldElement y;
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    std::optional<Affine> coords_;
};

std::ostream& operator<<(std::ostream& os, const CurvePoint& p);

struct TwoTorsionSet {
    std::array<CurvePoint, 3> points;  // T1, T2, T3 sorted by x

    const CurvePoint& operator[](std::size_t i) const { return points.at(i); }
    // 0, 1 or 2 for T1, T2, T3; nullopt if t is not in the set.
    std::optional<std::size_t> index_of(const CurvePoint& t) const;

    friend bool operator==(const TwoTorsionSet&, const TwoTorsionSet&) = default;
};

// y^2 = x^3 + ax + b over F_p with p > 3, 4a^3 + 27b^2 != 0. The zero element
// is the point at infinity, an inflection point of the projective model, so
// collinear triples sum to O.
class Curve {
public:
    Curve(FieldElement a, FieldElement b);
    Curve(std::int64_t a, std::int64_t b, Modulus modulus);

    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }
    Modulus modulus() const noexcept { return a_.modulus(); }
    std::uint64_t p() const noexcept { return a_.p(); }

    FieldElement element(std::int64_t v) const { return FieldElement(v, modulus()); }
    CurvePoint point(std::int64_t x, std::int64_t y) const;  // throws PointOffCurve

    // x^3 + ax + b
    Poly rhs_polynomial() const;
    FieldElement rhs(const FieldElement& x) const;
    bool contains(const CurvePoint& p) const;

    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint neg(const CurvePoint& p) const;
    CurvePoint sub(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint dbl(const CurvePoint& p) const { return add(p, p); }
    CurvePoint scalar_mul(const CurvePoint& p, std::uint64_t n) const;

    // Throws TorsionNotRational unless x^3 + ax + b has three roots in F_p.
    TwoTorsionSet two_torsion() const;
    bool has_rational_two_torsion() const;

    bool is_inflection(const CurvePoint& p) const;

    // 3x^4 + 6ax^2 + 12bx - a^2
    Poly third_division_polynomial() const;

    // Every point of E(F_p) in canonical order, O included. Exhaustive in p.
    std::vector<CurvePoint> points() const;
    std::uint64_t order() const;

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    void require_on_curve(const CurvePoint& p) const;

    FieldElement a_;
    FieldElement b_;
};

}  // namespace zariski
