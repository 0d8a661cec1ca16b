#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "zariski/error.hpp"
#include "zariski/tangency.hpp"

namespace zariski {

// Sorted fiber sizes m1 >= m2 >= m3 of the torsion map.
struct Partition3 {
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::size_t m3 = 0;

    // Throws BadPartition unless m1 >= m2 >= m3.
    static Partition3 make(std::size_t m1, std::size_t m2, std::size_t m3);
    static Partition3 from_counts(std::array<std::size_t, 3> counts);

    std::size_t total() const noexcept { return m1 + m2 + m3; }

    friend bool operator==(const Partition3&, const Partition3&) = default;
    friend auto operator<=>(const Partition3&, const Partition3&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition3& p);

struct MemberSpec {
    CurvePoint base;
    IndexPair pair;
};

struct Member {
    TangentFan fan;
    IndexPair pair;

    const Line& first_line() const { return fan.line(pair.first()); }
    const Line& second_line() const { return fan.line(pair.second()); }
};

// Reference to one of the 2n lines: member index and fan line index (1..4).
struct LineRef {
    std::size_t member;
    int line;

    friend bool operator==(const LineRef&, const LineRef&) = default;
};

class ConcurrentLinesError : public Error {
public:
    ConcurrentLinesError(std::array<LineRef, 3> lines, const std::string& message)
        : Error(ErrorCode::ConcurrentLines, message), lines_(lines) {}

    const std::array<LineRef, 3>& lines() const noexcept { return lines_; }

private:
    std::array<LineRef, 3> lines_;
};

// E + sum of chosen tangent pairs, validated: distinct base points, distinct
// lines, and no three of the 2n lines through a common point.
class Arrangement {
public:
    const Curve& curve() const noexcept { return curve_; }
    const std::vector<Member>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    friend Arrangement build_arrangement(const Curve& curve, const std::vector<Member>& members);

private:
    Arrangement(Curve curve, std::vector<Member> members)
        : curve_(std::move(curve)), members_(std::move(members)) {}

    Curve curve_;
    std::vector<Member> members_;
};

Arrangement build_arrangement(const Curve& curve, const std::vector<MemberSpec>& members);
Arrangement build_arrangement(const Curve& curve, const std::vector<Member>& members);

// Associated torsion of member i.
CurvePoint phi(const Arrangement& arrangement, std::size_t i);
std::size_t phi_index(const Arrangement& arrangement, std::size_t i);

// Splitting number of E for the double cover branched along the four lines
// of members i and j: 2 when their associated torsion points agree, else 1.
int splitting_predicate(const Arrangement& arrangement, std::size_t i, std::size_t j);

// The same number read off the labels alone: 2 iff |pair1 ∩ pair2| is even.
int parity_criterion(IndexPair pair1, IndexPair pair2);

// Fiber sizes over (T1, T2, T3) in canonical order.
std::array<std::size_t, 3> torsion_fibers(const Arrangement& arrangement);
Partition3 partition_invariant(const Arrangement& arrangement);

// Differing partitions prove that no homeomorphism of the plane carries one
// arrangement to the other. Equal partitions prove nothing.
enum class Distinction { Distinguished, Undetermined };
Distinction distinguish(const Arrangement& lhs, const Arrangement& rhs);

}  // namespace zariski
