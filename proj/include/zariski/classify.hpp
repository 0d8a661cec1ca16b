#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zariski/arrangement.hpp"

namespace zariski {

struct PartitionList {
    std::uint64_t n = 0;
    std::vector<Partition3> partitions;  // lexicographically descending
};

PartitionList enumerate_partitions(std::uint64_t n);

// Length of enumerate_partitions(n) without materializing it: walks the same
// rows (fixed m1) and counts each row's admissible m2 values.
std::uint64_t count_partitions(std::uint64_t n);

// Closed-form number of 3-partitions of n.
std::uint64_t y(std::uint64_t n);

// Pairs realizing each torsion point under the canonical labeling.
IndexPair representative_pair(std::size_t torsion_index);

Arrangement realize_partition(const Curve& curve, std::span<const CurvePoint> points,
                              const Partition3& target);

// One arrangement per 3-partition of n, in enumerate_partitions order.
std::vector<Arrangement> zariski_nple(const Curve& curve, std::span<const CurvePoint> points,
                                      std::uint64_t n);

// Greedily picks n admissible points such that any choice of pairs at those
// points yields a valid arrangement: no three of all 4n fan lines are
// concurrent unless they share a base point. Throws InsufficientPoints.
std::vector<CurvePoint> generic_points(const Curve& curve, std::span<const CurvePoint> candidates,
                                       std::size_t n);
std::vector<CurvePoint> generic_points(const Curve& curve, std::size_t n);

}  // namespace zariski
