#include "zariski/classify.hpp"

#include <sstream>

namespace zariski {

PartitionList enumerate_partitions(std::uint64_t n) {
    PartitionList list{n, {}};
    for (std::uint64_t m1 = n + 1; m1-- > (n + 2) / 3;) {
        const std::uint64_t rest = n - m1;
        for (std::uint64_t m2 = std::min(m1, rest) + 1; m2-- > (rest + 1) / 2;) {
            list.partitions.push_back(Partition3{m1, m2, rest - m2});
        }
    }
    return list;
}

std::uint64_t count_partitions(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t m1 = (n + 2) / 3; m1 <= n; ++m1) {
        const std::uint64_t rest = n - m1;
        const std::uint64_t hi = std::min(m1, rest);
        const std::uint64_t lo = (rest + 1) / 2;
        if (hi >= lo) count += hi - lo + 1;
    }
    return count;
}

std::uint64_t y(std::uint64_t n) {
    const auto w = static_cast<unsigned __int128>(n);
    unsigned __int128 numerator = 0;
    switch (n % 6) {
        case 0: numerator = w * w + 6 * w + 12; break;
        case 1:
        case 5: numerator = (w + 1) * (w + 5); break;
        case 2:
        case 4: numerator = (w + 2) * (w + 4); break;
        case 3: numerator = (w + 3) * (w + 3); break;
    }
    return static_cast<std::uint64_t>(numerator / 12);
}

IndexPair representative_pair(std::size_t torsion_index) {
    switch (torsion_index) {
        case 0: return IndexPair(1, 2);
        case 1: return IndexPair(1, 3);
        case 2: return IndexPair(1, 4);
    }
    throw Error(ErrorCode::IndexOutOfRange, "torsion index must be 0, 1 or 2");
}

Arrangement realize_partition(const Curve& curve, std::span<const CurvePoint> points, const Partition3& target) {
    const auto checked = Partition3::make(target.m1, target.m2, target.m3);
    if (checked.total() != points.size()) {
        std::ostringstream msg;
        msg << "partition " << checked << " sums to " << checked.total() << " but " << points.size()
            << " points were given";
        throw Error(ErrorCode::BadPartition, msg.str());
    }
    const std::array<std::size_t, 3> sizes{checked.m1, checked.m2, checked.m3};
    std::vector<MemberSpec> specs;
    specs.reserve(points.size());
    std::size_t next = 0;
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t k = 0; k < sizes[t]; ++k) specs.push_back(MemberSpec{points[next++], representative_pair(t)});
    }
    return build_arrangement(curve, specs);
}

std::vector<Arrangement> zariski_nple(const Curve& curve, std::span<const CurvePoint> points, std::uint64_t n) {
    if (points.size() < n) {
        throw Error(ErrorCode::InsufficientPoints, "need " + std::to_string(n) + " base points, got " +
                                                       std::to_string(points.size()));
    }
    const auto used = points.first(n);
    std::vector<Arrangement> out;
    for (const auto& target : enumerate_partitions(n).partitions) out.push_back(realize_partition(curve, used, target));
    return out;
}

namespace {

struct FanLines {
    std::size_t fan;
    const Line* line;
};

bool compatible(const std::vector<TangentFan>& chosen, const TangentFan& candidate) {
    std::vector<FanLines> lines;
    for (std::size_t f = 0; f < chosen.size(); ++f) {
        for (const auto& l : chosen[f].lines) lines.push_back({f, &l});
    }
    for (const auto& nl : candidate.lines) {
        for (const auto& old : lines) {
            if (*old.line == nl) return false;
        }
    }
    const std::size_t fresh = chosen.size();
    for (const auto& l : candidate.lines) lines.push_back({fresh, &l});
    // Only triples touching the candidate are new.
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            for (std::size_t c = b + 1; c < lines.size(); ++c) {
                if (lines[c].fan != fresh) continue;
                if (lines[a].fan == lines[b].fan && lines[b].fan == lines[c].fan) continue;
                if (concurrent(*lines[a].line, *lines[b].line, *lines[c].line)) return false;
            }
        }
    }
    return true;
}

template <typename Visit>
void for_each_affine_point(const Curve& curve, Visit&& visit) {
    const auto m = curve.modulus();
    for (std::uint64_t xv = 0; xv < curve.p(); ++xv) {
        const auto x = FieldElement::from_unsigned(xv, m);
        for (const auto& y : sqrt(curve.rhs(x))) {
            if (!visit(CurvePoint(x, y))) return;
        }
    }
}

}  // namespace

std::vector<CurvePoint> generic_points(const Curve& curve, std::span<const CurvePoint> candidates, std::size_t n) {
    std::vector<TangentFan> chosen;
    for (const auto& p : candidates) {
        if (chosen.size() == n) break;
        if (!is_admissible(curve, p)) continue;
        bool repeated = false;
        for (const auto& f : chosen) repeated = repeated || f.base == p;
        if (repeated) continue;
        auto fan = tangent_fan(curve, p);
        if (compatible(chosen, fan)) chosen.push_back(std::move(fan));
    }
    if (chosen.size() < n) {
        throw Error(ErrorCode::InsufficientPoints, "found only " + std::to_string(chosen.size()) + " of " +
                                                       std::to_string(n) + " generic base points over F_" +
                                                       std::to_string(curve.p()));
    }
    std::vector<CurvePoint> out;
    for (const auto& f : chosen) out.push_back(f.base);
    return out;
}

std::vector<CurvePoint> generic_points(const Curve& curve, std::size_t n) {
    curve.two_torsion();
    std::vector<TangentFan> chosen;
    if (n > 0) {
        for_each_affine_point(curve, [&](const CurvePoint& p) {
            if (!is_admissible(curve, p)) return true;
            auto fan = tangent_fan(curve, p);
            if (compatible(chosen, fan)) chosen.push_back(std::move(fan));
            return chosen.size() < n;
        });
    }
    if (chosen.size() < n) {
        throw Error(ErrorCode::InsufficientPoints, "found only " + std::to_string(chosen.size()) + " of " +
                                                       std::to_string(n) + " generic base points over F_" +
                                                       std::to_string(curve.p()));
    }
    std::vector<CurvePoint> out;
    for (const auto& f : chosen) out.push_back(f.base);
    return out;
}

}  // namespace zariski
