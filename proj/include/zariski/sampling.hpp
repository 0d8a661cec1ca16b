#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zariski/ec.hpp"

namespace zariski::sampling {

using Rng = std::mt19937_64;

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi);

// Curve (x - r1)(x - r2)(x - r3) with distinct roots summing to zero, so that
// all three nontrivial 2-torsion points are rational.
Curve random_split_curve(Rng& rng, Modulus modulus);

// Uniform-ish random point (O excluded).
CurvePoint random_point(Rng& rng, const Curve& curve);

// A random admissible base point; nullopt after max_tries misses.
std::optional<CurvePoint> random_admissible_point(Rng& rng, const Curve& curve, int max_tries = 256);

struct Instance {
    Curve curve;
    std::vector<CurvePoint> points;
};

// Random prime in [lo, hi], split curve and `count` distinct admissible
// points; when `generic`, the points also pass the concurrency screen of
// generic_points().
Instance random_instance(Rng& rng, std::uint64_t lo, std::uint64_t hi, std::size_t count,
                         bool generic);

}  // namespace zariski::sampling
