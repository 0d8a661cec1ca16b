#include "zariski/tangency.hpp"

#include <algorithm>
#include <sstream>

#include "zariski/error.hpp"

namespace zariski {

Line::Line(FieldElement u, FieldElement v, FieldElement w) : u_(u), v_(v), w_(w) {
    const FieldElement* lead = !u_.is_zero() ? &u_ : !v_.is_zero() ? &v_ : !w_.is_zero() ? &w_ : nullptr;
    if (lead == nullptr) throw Error(ErrorCode::DegenerateInput, "line with all coefficients zero");
    const auto scale = lead->inv();
    u_ *= scale;
    v_ *= scale;
    w_ *= scale;
}

bool Line::contains(const CurvePoint& p) const {
    if (p.is_infinity()) return v_.is_zero();  // O = [0:1:0]
    return (u_ * p.x() + v_ * p.y() + w_).is_zero();
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << "(" << l.u() << "," << l.v() << "," << l.w() << ")";
}

bool concurrent(const Line& l1, const Line& l2, const Line& l3) {
    const auto det = l1.u() * (l2.v() * l3.w() - l2.w() * l3.v()) -
                     l1.v() * (l2.u() * l3.w() - l2.w() * l3.u()) +
                     l1.w() * (l2.u() * l3.v() - l2.v() * l3.u());
    return det.is_zero();
}

Poly restrict_to_line(const Curve& curve, const Line& line) {
    const auto m = curve.modulus();
    if (!line.v().is_zero()) {
        // y = s x + t
        const auto s = -line.u() / line.v();
        const auto t = -line.w() / line.v();
        const Poly y({t, s}, m);
        return curve.rhs_polynomial() - y * y;
    }
    if (!line.u().is_zero()) {
        const auto c = -line.w();
        return Poly({-curve.rhs(c), FieldElement(0, m), FieldElement(1, m)}, m);
    }
    throw Error(ErrorCode::DegenerateInput, "the line at infinity meets E only at O");
}

IndexPair::IndexPair(int i, int j) : first_(std::min(i, j)), second_(std::max(i, j)) {
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
        throw Error(ErrorCode::BadIndexPair,
                    "index pair must be two distinct values in 1..4, got {" + std::to_string(i) + "," +
                        std::to_string(j) + "}");
    }
}

IndexPair IndexPair::complement() const {
    int rest[2];
    int k = 0;
    for (int i = 1; i <= 4; ++i) {
        if (!contains(i)) rest[k++] = i;
    }
    return IndexPair(rest[0], rest[1]);
}

const std::array<IndexPair, 6>& IndexPair::all() {
    static const std::array<IndexPair, 6> pairs{IndexPair(1, 2), IndexPair(1, 3), IndexPair(1, 4),
                                                IndexPair(2, 3), IndexPair(2, 4), IndexPair(3, 4)};
    return pairs;
}

std::ostream& operator<<(std::ostream& os, const IndexPair& pair) {
    return os << "{" << pair.first() << "," << pair.second() << "}";
}

std::vector<CurvePoint> halve(const Curve& curve, const CurvePoint& r) {
    if (r.is_infinity() || !curve.contains(r)) {
        std::ostringstream msg;
        msg << "halving needs an affine point on the curve, got " << r;
        throw Error(ErrorCode::PointOffCurve, msg.str());
    }
    const auto& a = curve.a();
    const auto& b = curve.b();
    const auto& xr = r.x();
    auto k = [&](std::int64_t v) { return curve.element(v); };
    // x(2Q) = x_R  <=>  (x^2 - a)^2 - 8bx - 4 x_R (x^3 + ax + b) = 0
    const Poly quartic({a * a - k(4) * b * xr, -(k(8) * b + k(4) * a * xr), -(k(2) * a), -(k(4) * xr), k(1)},
                       curve.modulus());

    auto xs = roots(quartic);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<CurvePoint> out;
    for (const auto& x : xs) {
        for (const auto& y : sqrt(curve.rhs(x))) {
            CurvePoint q(x, y);
            if (curve.dbl(q) == r) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Line line_through_tangent(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
    if (!curve.contains(p) || !curve.contains(q)) throw Error(ErrorCode::PointOffCurve, "tangent configuration off the curve");
    if (q.is_infinity() || q == p || !curve.add(p, curve.dbl(q)).is_infinity()) {
        std::ostringstream msg;
        msg << "no tangent at " << q << " passes through " << p << " (need P + 2Q = O, Q affine, Q != P)";
        throw Error(ErrorCode::NotTangentConfiguration, msg.str());
    }
    if (q.y().is_zero()) {
        return Line(curve.element(1), curve.element(0), -q.x());
    }
    const auto slope = (curve.element(3) * q.x() * q.x() + curve.a()) / (curve.element(2) * q.y());
    // slope x - y + (y_Q - slope x_Q) = 0
    return Line(slope, curve.element(-1), q.y() - slope * q.x());
}

TangentFan label_fan(const Curve& curve, const CurvePoint& p, std::span<const CurvePoint> halves) {
    std::vector<CurvePoint> sorted(halves.begin(), halves.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::DegenerateFan, "repeated tangent point");
    }
    if (sorted.size() != 4) {
        std::ostringstream msg;
        msg << "only " << sorted.size() << " of the 4 tangent points through " << p << " are rational over F_"
            << curve.p();
        throw Error(ErrorCode::FanNotRational, msg.str());
    }
    const auto minus_p = curve.neg(p);
    for (const auto& q : sorted) {
        if (q == p) throw Error(ErrorCode::DegenerateFan, "tangent point coincides with the base point");
        if (curve.dbl(q) != minus_p) throw Error(ErrorCode::NotTangentConfiguration, "supplied point is not a half of -P");
    }

    const auto torsion = curve.two_torsion();
    std::array<CurvePoint, 4> q{sorted[0], sorted[0], sorted[0], sorted[0]};
    for (std::size_t i = 0; i < 3; ++i) {
        // Q1 - Q_{i+2} = T_{i+1}
        q[i + 1] = curve.sub(q[0], torsion[i]);
        if (!std::binary_search(sorted.begin(), sorted.end(), q[i + 1])) {
            throw Error(ErrorCode::DegenerateFan, "halves of -P do not form a 2-torsion coset");
        }
    }

    std::array<Line, 4> lines{line_through_tangent(curve, p, q[0]), line_through_tangent(curve, p, q[1]),
                              line_through_tangent(curve, p, q[2]), line_through_tangent(curve, p, q[3])};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (lines[i] == lines[j]) throw Error(ErrorCode::DegenerateFan, "two tangent lines coincide");
        }
    }
    return TangentFan{curve, p, lines, q, torsion};
}

TangentFan tangent_fan(const Curve& curve, const CurvePoint& p) {
    if (!curve.contains(p)) {
        std::ostringstream msg;
        msg << "base point " << p << " is not on the curve";
        throw Error(ErrorCode::PointOffCurve, msg.str());
    }
    if (curve.is_inflection(p)) {
        std::ostringstream msg;
        msg << "base point " << p << " is an inflection point (3P = O)";
        throw Error(ErrorCode::InflectionBasePoint, msg.str());
    }
    curve.two_torsion();  // TorsionNotRational before any halving work
    const auto halves = halve(curve, curve.neg(p));
    return label_fan(curve, p, halves);
}

CurvePoint associated_torsion(const TangentFan& fan, IndexPair pair) {
    const auto& c = fan.curve;
    return c.add(c.add(fan.base, fan.tangent_point(pair.first())), fan.tangent_point(pair.second()));
}

std::size_t associated_torsion_index(const TangentFan& fan, IndexPair pair) {
    const auto t = associated_torsion(fan, pair);
    const auto idx = fan.torsion.index_of(t);
    if (!idx) {
        std::ostringstream msg;
        msg << "P + Q_i + Q_j = " << t << " is not a nontrivial 2-torsion point";
        throw Error(ErrorCode::DegenerateFan, msg.str());
    }
    return *idx;
}

bool is_admissible(const Curve& curve, const CurvePoint& p) {
    if (p.is_infinity() || !curve.contains(p) || curve.is_inflection(p)) return false;
    const auto halves = halve(curve, curve.neg(p));
    return halves.size() == 4 && std::find(halves.begin(), halves.end(), p) == halves.end();
}

std::vector<CurvePoint> admissible_points(const Curve& curve) {
    if (curve.p() > kMaxScanModulus) {
        throw Error(ErrorCode::DegenerateInput, "exhaustive point scan is limited to p <= 2^20");
    }
    curve.two_torsion();
    std::vector<CurvePoint> out;
    for (const auto& p : curve.points()) {
        if (is_admissible(curve, p)) out.push_back(p);
    }
    return out;
}

}  // namespace zariski
