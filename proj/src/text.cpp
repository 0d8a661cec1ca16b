#include "zariski/text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "zariski/error.hpp"

namespace zariski::text {

namespace {

template <typename Int>
Int parse_integer(std::string_view s, std::string_view what) {
    Int value{};
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorCode::BadInput, "invalid " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::int64_t parse_residue(std::string_view s, std::uint64_t p, std::string_view what) {
    // Accept any signed decimal; reduce before narrowing so large p still works.
    if (!s.empty() && s.front() == '-') {
        const auto mag = parse_integer<std::uint64_t>(s.substr(1), what) % p;
        return mag == 0 ? 0 : static_cast<std::int64_t>(p - mag);
    }
    return static_cast<std::int64_t>(parse_integer<std::uint64_t>(s, what) % p);
}

}  // namespace

Curve parse_curve(std::string_view s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw Error(ErrorCode::BadInput, "curve must look like p:a:b, got '" + std::string(s) + "'");
    const Modulus m(parse_integer<std::uint64_t>(parts[0], "modulus"));
    return Curve(parse_residue(parts[1], m.value(), "coefficient a"), parse_residue(parts[2], m.value(), "coefficient b"),
                 m);
}

std::string format_curve(const Curve& curve) {
    std::ostringstream os;
    os << curve.p() << ":" << curve.a() << ":" << curve.b();
    return os.str();
}

CurvePoint parse_point(const Curve& curve, std::string_view s) {
    if (s == "O") return CurvePoint::infinity();
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw Error(ErrorCode::BadInput, "point must look like x,y or O, got '" + std::string(s) + "'");
    return curve.point(parse_residue(parts[0], curve.p(), "x coordinate"),
                       parse_residue(parts[1], curve.p(), "y coordinate"));
}

std::string format_point(const CurvePoint& p) {
    if (p.is_infinity()) return "O";
    std::ostringstream os;
    os << p.x() << "," << p.y();
    return os.str();
}

}  // namespace zariski::text
