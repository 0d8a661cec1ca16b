#include "zariski/ec.hpp"

#include <algorithm>
#include <sstream>

#include "zariski/error.hpp"

namespace zariski {

CurvePoint::CurvePoint(FieldElement x, FieldElement y) : coords_(Affine{x, y}) {
    if (x.modulus() != y.modulus()) throw Error(ErrorCode::ModulusMismatch, "point coordinates from different fields");
}

const FieldElement& CurvePoint::x() const {
    if (!coords_) throw Error(ErrorCode::DegenerateInput, "the point at infinity has no affine coordinates");
    return coords_->x;
}

const FieldElement& CurvePoint::y() const {
    if (!coords_) throw Error(ErrorCode::DegenerateInput, "the point at infinity has no affine coordinates");
    return coords_->y;
}

std::strong_ordering operator<=>(const CurvePoint& lhs, const CurvePoint& rhs) {
    if (lhs.is_infinity() || rhs.is_infinity()) return !lhs.is_infinity() <=> !rhs.is_infinity();
    if (auto c = lhs.x() <=> rhs.x(); c != 0) return c;
    return lhs.y() <=> rhs.y();
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) {
    if (p.is_infinity()) return os << "O";
    return os << "(" << p.x() << "," << p.y() << ")";
}

std::optional<std::size_t> TwoTorsionSet::index_of(const CurvePoint& t) const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == t) return i;
    }
    return std::nullopt;
}

Curve::Curve(FieldElement a, FieldElement b) : a_(a), b_(b) {
    if (a.modulus() != b.modulus()) throw Error(ErrorCode::ModulusMismatch, "curve coefficients from different fields");
    const auto disc = element(4) * a * a * a + element(27) * b * b;
    if (disc.is_zero()) {
        std::ostringstream msg;
        msg << "y^2 = x^3 + " << a << "x + " << b << " is singular over F_" << p();
        throw Error(ErrorCode::SingularCurve, msg.str());
    }
}

Curve::Curve(std::int64_t a, std::int64_t b, Modulus modulus)
    : Curve(FieldElement(a, modulus), FieldElement(b, modulus)) {}

CurvePoint Curve::point(std::int64_t x, std::int64_t y) const {
    CurvePoint pt(element(x), element(y));
    require_on_curve(pt);
    return pt;
}

Poly Curve::rhs_polynomial() const { return Poly({b_, a_, element(0), element(1)}, modulus()); }

FieldElement Curve::rhs(const FieldElement& x) const { return (x * x + a_) * x + b_; }

bool Curve::contains(const CurvePoint& p) const {
    if (p.is_infinity()) return true;
    if (p.x().modulus() != modulus()) return false;
    return p.y() * p.y() == rhs(p.x());
}

void Curve::require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) {
        std::ostringstream msg;
        msg << "point " << p << " is not on y^2 = x^3 + " << a_ << "x + " << b_ << " over F_" << this->p();
        throw Error(ErrorCode::PointOffCurve, msg.str());
    }
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
    require_on_curve(p);
    require_on_curve(q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    FieldElement slope = element(0);
    if (p.x() == q.x()) {
        // Vertical chord, or tangent at a point with y = 0.
        if (p.y() != q.y() || p.y().is_zero()) return CurvePoint::infinity();
        slope = (element(3) * p.x() * p.x() + a_) / (element(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    const auto x3 = slope * slope - p.x() - q.x();
    const auto y3 = slope * (p.x() - x3) - p.y();
    return CurvePoint(x3, y3);
}

CurvePoint Curve::neg(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.is_infinity()) return p;
    return CurvePoint(p.x(), -p.y());
}

CurvePoint Curve::sub(const CurvePoint& p, const CurvePoint& q) const { return add(p, neg(q)); }

CurvePoint Curve::scalar_mul(const CurvePoint& p, std::uint64_t n) const {
    require_on_curve(p);
    CurvePoint result = CurvePoint::infinity();
    CurvePoint addend = p;
    while (n > 0) {
        if (n & 1) result = add(result, addend);
        addend = dbl(addend);
        n >>= 1;
    }
    return result;
}

TwoTorsionSet Curve::two_torsion() const {
    auto xs = roots(rhs_polynomial());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() != 3) {
        std::ostringstream msg;
        msg << "x^3 + " << a_ << "x + " << b_ << " has " << xs.size() << " distinct root(s) in F_" << p()
            << ", need 3";
        throw Error(ErrorCode::TorsionNotRational, msg.str());
    }
    const auto zero = element(0);
    return TwoTorsionSet{{CurvePoint(xs[0], zero), CurvePoint(xs[1], zero), CurvePoint(xs[2], zero)}};
}

bool Curve::has_rational_two_torsion() const {
    auto xs = roots(rhs_polynomial());
    return xs.size() == 3;
}

bool Curve::is_inflection(const CurvePoint& p) const { return scalar_mul(p, 3).is_infinity(); }

Poly Curve::third_division_polynomial() const {
    return Poly({-(a_ * a_), element(12) * b_, element(6) * a_, element(0), element(3)}, modulus());
}

std::vector<CurvePoint> Curve::points() const {
    std::vector<CurvePoint> out{CurvePoint::infinity()};
    const auto m = modulus();
    for (std::uint64_t xv = 0; xv < p(); ++xv) {
        const auto x = FieldElement::from_unsigned(xv, m);
        for (const auto& y : sqrt(rhs(x))) out.emplace_back(x, y);
    }
    return out;
}

std::uint64_t Curve::order() const {
    std::uint64_t count = 1;
    const auto m = modulus();
    for (std::uint64_t xv = 0; xv < p(); ++xv) {
        const auto r = rhs(FieldElement::from_unsigned(xv, m));
        count += r.is_zero() ? 1 : (is_square(r) ? 2 : 0);
    }
    return count;
}

}  // namespace zariski
