#include "zariski/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zariski {

Partition3 Partition3::make(std::size_t m1, std::size_t m2, std::size_t m3) {
    if (m1 < m2 || m2 < m3) {
        std::ostringstream msg;
        msg << "partition entries must be non-increasing, got (" << m1 << "," << m2 << "," << m3 << ")";
        throw Error(ErrorCode::BadPartition, msg.str());
    }
    return Partition3{m1, m2, m3};
}

Partition3 Partition3::from_counts(std::array<std::size_t, 3> counts) {
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return Partition3{counts[0], counts[1], counts[2]};
}

std::ostream& operator<<(std::ostream& os, const Partition3& p) {
    return os << "(" << p.m1 << "," << p.m2 << "," << p.m3 << ")";
}

namespace {

void validate(const Curve& curve, const std::vector<Member>& members) {
    if (members.empty()) throw Error(ErrorCode::DegenerateInput, "an arrangement needs at least one member");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!(members[i].fan.curve == curve)) {
            throw Error(ErrorCode::DegenerateInput, "member " + std::to_string(i) + " has a fan on another curve");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (members[i].fan.base == members[j].fan.base) {
                std::ostringstream msg;
                msg << "members " << j << " and " << i << " share base point " << members[i].fan.base;
                throw Error(ErrorCode::DuplicateBasePoint, msg.str());
            }
        }
    }

    std::vector<std::pair<LineRef, const Line*>> lines;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& m = members[i];
        lines.push_back({LineRef{i, m.pair.first()}, &m.first_line()});
        lines.push_back({LineRef{i, m.pair.second()}, &m.second_line()});
    }
    auto describe = [&](const LineRef& r) {
        std::ostringstream os;
        os << "[member " << r.member << ", line " << r.line << "]";
        return os.str();
    };
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            if (*lines[a].second == *lines[b].second) {
                throw Error(ErrorCode::DuplicateLine,
                            "lines " + describe(lines[a].first) + " and " + describe(lines[b].first) + " coincide");
            }
        }
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            for (std::size_t c = b + 1; c < lines.size(); ++c) {
                if (concurrent(*lines[a].second, *lines[b].second, *lines[c].second)) {
                    throw ConcurrentLinesError({lines[a].first, lines[b].first, lines[c].first},
                                               "lines " + describe(lines[a].first) + ", " + describe(lines[b].first) +
                                                   ", " + describe(lines[c].first) + " are concurrent");
                }
            }
        }
    }
}

}  // namespace

Arrangement build_arrangement(const Curve& curve, const std::vector<Member>& members) {
    validate(curve, members);
    return Arrangement(curve, members);
}

Arrangement build_arrangement(const Curve& curve, const std::vector<MemberSpec>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (members[i].base == members[j].base) {
                std::ostringstream msg;
                msg << "members " << j << " and " << i << " share base point " << members[i].base;
                throw Error(ErrorCode::DuplicateBasePoint, msg.str());
            }
        }
    }
    std::vector<Member> built;
    built.reserve(members.size());
    for (const auto& spec : members) built.push_back(Member{tangent_fan(curve, spec.base), spec.pair});
    return build_arrangement(curve, built);
}

namespace {

const Member& member_at(const Arrangement& arrangement, std::size_t i) {
    if (i >= arrangement.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "member index " + std::to_string(i) + " out of range for n = " +
                                                    std::to_string(arrangement.size()));
    }
    return arrangement.members()[i];
}

}  // namespace

CurvePoint phi(const Arrangement& arrangement, std::size_t i) {
    const auto& m = member_at(arrangement, i);
    return associated_torsion(m.fan, m.pair);
}

std::size_t phi_index(const Arrangement& arrangement, std::size_t i) {
    const auto& m = member_at(arrangement, i);
    return associated_torsion_index(m.fan, m.pair);
}

int splitting_predicate(const Arrangement& arrangement, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorCode::SamePairQuery, "splitting number needs two distinct members");
    return phi(arrangement, i) == phi(arrangement, j) ? 2 : 1;
}

int parity_criterion(IndexPair pair1, IndexPair pair2) {
    const int common = static_cast<int>(pair1.contains(pair2.first())) + static_cast<int>(pair1.contains(pair2.second()));
    return common % 2 == 0 ? 2 : 1;
}

std::array<std::size_t, 3> torsion_fibers(const Arrangement& arrangement) {
    std::array<std::size_t, 3> counts{0, 0, 0};
    for (std::size_t i = 0; i < arrangement.size(); ++i) ++counts[phi_index(arrangement, i)];
    return counts;
}

Partition3 partition_invariant(const Arrangement& arrangement) {
    return Partition3::from_counts(torsion_fibers(arrangement));
}

Distinction distinguish(const Arrangement& lhs, const Arrangement& rhs) {
    return partition_invariant(lhs) == partition_invariant(rhs) ? Distinction::Undetermined
                                                                : Distinction::Distinguished;
}

}  // namespace zariski
