#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "zariski/ec.hpp"

namespace zariski {

// ux + vy + w = 0 in the projective plane, scaled so the first nonzero
// coefficient is 1. The line at infinity is (0, 0, 1).
class Line {
public:
    Line(FieldElement u, FieldElement v, FieldElement w);

    const FieldElement& u() const noexcept { return u_; }
    const FieldElement& v() const noexcept { return v_; }
    const FieldElement& w() const noexcept { return w_; }

    bool contains(const CurvePoint& p) const;

    friend bool operator==(const Line&, const Line&) = default;

private:
    FieldElement u_, v_, w_;
};

std::ostream& operator<<(std::ostream& os, const Line& l);

// Three lines share a projective point iff their coefficient determinant vanishes.
bool concurrent(const Line& l1, const Line& l2, const Line& l3);

// E restricted to a non-vertical line, as a cubic in x; for a vertical line
// x = c, the quadratic in y. The roots are the affine intersection points.
Poly restrict_to_line(const Curve& curve, const Line& line);

// Unordered pair {first, second} of distinct indices in 1..4, stored sorted.
class IndexPair {
public:
    IndexPair(int i, int j);  // throws BadIndexPair

    int first() const noexcept { return first_; }
    int second() const noexcept { return second_; }
    bool contains(int i) const noexcept { return first_ == i || second_ == i; }
    IndexPair complement() const;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;

    static const std::array<IndexPair, 6>& all();

private:
    int first_;
    int second_;
};

std::ostream& operator<<(std::ostream& os, const IndexPair& pair);

// Four tangent lines through a non-inflection base point P, labeled so that
// Q1 - Q2 = T1, Q1 - Q3 = T2, Q1 - Q4 = T3. Indices into the arrays are
// zero-based; the public numbering 1..4 goes through IndexPair.
struct TangentFan {
    Curve curve;
    CurvePoint base;
    std::array<Line, 4> lines;
    std::array<CurvePoint, 4> tangent_points;
    TwoTorsionSet torsion;

    const Line& line(int index) const { return lines.at(static_cast<std::size_t>(index - 1)); }
    const CurvePoint& tangent_point(int index) const {
        return tangent_points.at(static_cast<std::size_t>(index - 1));
    }
};

// All Q in E(F_p) with 2Q = R, canonical order. R must be affine and on E.
std::vector<CurvePoint> halve(const Curve& curve, const CurvePoint& r);

// The tangent line to E at q; requires P + 2q = O with q affine and q != P.
Line line_through_tangent(const Curve& curve, const CurvePoint& p, const CurvePoint& q);

TangentFan tangent_fan(const Curve& curve, const CurvePoint& p);

// Labels a fan from an explicit list of the halves of -P (any order).
TangentFan label_fan(const Curve& curve, const CurvePoint& p, std::span<const CurvePoint> halves);

// P + Qi + Qj.
CurvePoint associated_torsion(const TangentFan& fan, IndexPair pair);
// Position (0, 1, 2) of the associated torsion within fan.torsion.
std::size_t associated_torsion_index(const TangentFan& fan, IndexPair pair);

// Affine points that are not inflections and whose four tangent points are
// all rational and distinct. Exhaustive; requires p <= 2^20.
inline constexpr std::uint64_t kMaxScanModulus = std::uint64_t{1} << 20;
std::vector<CurvePoint> admissible_points(const Curve& curve);
bool is_admissible(const Curve& curve, const CurvePoint& p);

}  // namespace zariski
