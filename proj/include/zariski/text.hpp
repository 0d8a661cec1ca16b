#pragma once

#include <string>
#include <string_view>

#include "zariski/ec.hpp"
#include "zariski/tangency.hpp"

namespace zariski::text {

// "p:a:b" with decimal integers; a and b may be negative and are reduced mod p.
Curve parse_curve(std::string_view s);
std::string format_curve(const Curve& curve);

// "x,y" or "O". Parsed points are checked against the curve.
CurvePoint parse_point(const Curve& curve, std::string_view s);
std::string format_point(const CurvePoint& p);

}  // namespace zariski::text
