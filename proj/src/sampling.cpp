#include "zariski/sampling.hpp"

#include "zariski/classify.hpp"
#include "zariski/error.hpp"
#include "zariski/tangency.hpp"

namespace zariski::sampling {

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (int tries = 0; tries < 100000; ++tries) {
        const auto candidate = dist(rng);
        if (candidate > 3 && is_prime(candidate)) return candidate;
    }
    throw Error(ErrorCode::DegenerateInput, "no prime found in the requested range");
}

Curve random_split_curve(Rng& rng, Modulus modulus) {
    std::uniform_int_distribution<std::uint64_t> dist(0, modulus.value() - 1);
    for (;;) {
        const auto r1 = FieldElement::from_unsigned(dist(rng), modulus);
        const auto r2 = FieldElement::from_unsigned(dist(rng), modulus);
        const auto r3 = -(r1 + r2);
        if (r1 == r2 || r2 == r3 || r1 == r3) continue;
        // (x - r1)(x - r2)(x - r3) = x^3 + (r1 r2 + r1 r3 + r2 r3) x - r1 r2 r3
        return Curve(r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3));
    }
}

CurvePoint random_point(Rng& rng, const Curve& curve) {
    std::uniform_int_distribution<std::uint64_t> dist(0, curve.p() - 1);
    for (;;) {
        const auto x = FieldElement::from_unsigned(dist(rng), curve.modulus());
        const auto ys = sqrt(curve.rhs(x));
        if (ys.empty()) continue;
        return CurvePoint(x, ys[dist(rng) % ys.size()]);
    }
}

std::optional<CurvePoint> random_admissible_point(Rng& rng, const Curve& curve, int max_tries) {
    for (int i = 0; i < max_tries; ++i) {
        auto p = random_point(rng, curve);
        if (is_admissible(curve, p)) return p;
    }
    return std::nullopt;
}

namespace {

std::optional<Instance> try_instance(Rng& rng, const Curve& curve, std::size_t count, bool generic) {
    std::vector<CurvePoint> candidates;
    // A handful of spare candidates so the concurrency screen has room to reject.
    const std::size_t wanted = generic ? 4 * count + 8 : count;
    for (int misses = 0; candidates.size() < wanted && misses < 64;) {
        auto p = random_admissible_point(rng, curve, 64);
        if (!p) return std::nullopt;
        bool seen = false;
        for (const auto& c : candidates) seen = seen || c == *p;
        if (seen) {
            ++misses;
            continue;
        }
        candidates.push_back(*p);
    }
    if (!generic) {
        if (candidates.size() < count) return std::nullopt;
        return Instance{curve, candidates};
    }
    try {
        return Instance{curve, generic_points(curve, candidates, count)};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientPoints) throw;
        return std::nullopt;
    }
}

}  // namespace

Instance random_instance(Rng& rng, std::uint64_t lo, std::uint64_t hi, std::size_t count, bool generic) {
    for (;;) {
        const Modulus m(random_prime(rng, lo, hi));
        const auto curve = random_split_curve(rng, m);
        if (auto inst = try_instance(rng, curve, count, generic)) return *inst;
    }
}

}  // namespace zariski::sampling
