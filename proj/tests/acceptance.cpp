// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/naive_curve.hpp"
#include "zariski/arrangement.hpp"
#include "zariski/classify.hpp"
#include "zariski/error.hpp"
#include "zariski/sampling.hpp"

using namespace zariski;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::uint64_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok || !pass) {
            pass = pass && ok;
            return;
        }
        pass = false;
        detail = what;
    }
};

template <typename T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Closed form against enumeration for every n in [0, 10000], < 5 s.
Outcome counting_formula() {
    Outcome out;
    const auto start = Clock::now();
    constexpr std::uint64_t kMax = 10000;
    // Coefficients of 1 / ((1 - x)(1 - x^2)(1 - x^3)): partitions into parts
    // of size <= 3, conjugate to partitions into at most three parts.
    std::vector<std::uint64_t> series(kMax + 1, 0);
    series[0] = 1;
    for (std::uint64_t part : {1, 2, 3}) {
        for (std::uint64_t n = part; n <= kMax; ++n) series[n] += series[n - part];
    }
    for (std::uint64_t n = 0; n <= kMax; ++n) {
        const auto closed = y(n);
        out.expect(closed == count_partitions(n), "y(" + std::to_string(n) + ") != enumerated row count");
        out.expect(closed == series[n], "y(" + std::to_string(n) + ") != generating-function count");
        // Materializing every list up to 10000 would mean ~2.8e10 triples;
        // full lists are built for n <= 1000 and for n = 10000.
        if (n <= 1000 || n == kMax) {
            out.expect(closed == enumerate_partitions(n).partitions.size(),
                       "y(" + std::to_string(n) + ") != |enumerate_partitions|");
        }
    }
    out.expect(y(1) == 1 && y(2) == 2 && y(3) == 3 && y(6) == 7, "spot values y(1), y(2), y(3), y(6)");
    const double t = seconds_since(start);
    out.expect(t < 5.0, "runtime " + std::to_string(t) + " s exceeds 5 s");
    return out;
}

// 2. The F_5 fixture against the line-enumeration oracle.
Outcome worked_fixture() {
    Outcome out;
    const Curve E(-1, 0, Modulus(5));
    const oracle::NaiveCurve naive(5, -1, 0);
    auto lift = [&](const oracle::Pt& p) { return p.inf ? CurvePoint::infinity() : E.point(p.x, p.y); };

    const auto pts = E.points();
    out.expect(pts.size() == 8 && naive.points().size() == 8, "E(F_5) has 8 points");
    for (const auto& p : naive.points()) {
        for (const auto& q : naive.points()) {
            out.expect(E.add(lift(p), lift(q)) == lift(naive.add(p, q)), "addition table mismatch");
        }
    }

    const auto P = E.point(0, 0);
    const auto fan = tangent_fan(E, P);
    const std::array<CurvePoint, 4> expected_q{E.point(2, 1), E.point(2, 4), E.point(3, 3), E.point(3, 2)};
    out.expect(fan.tangent_points == expected_q, "tangent points Q1..Q4");
    out.expect(fan.torsion[0] == E.point(0, 0) && fan.torsion[1] == E.point(1, 0) && fan.torsion[2] == E.point(4, 0),
               "T1, T2, T3");

    // Oracle fan: lines through P with divisor P + 2Q.
    const auto tangents = naive.tangents_through(oracle::Pt::affine(0, 0));
    out.expect(tangents.size() == 4, "oracle finds four tangent lines");
    for (const auto& [coeffs, q] : tangents) {
        const auto Q = lift(q);
        const auto it = std::find(fan.tangent_points.begin(), fan.tangent_points.end(), Q);
        out.expect(it != fan.tangent_points.end(), "oracle tangent point " + show(Q) + " missing");
        if (it == fan.tangent_points.end()) continue;
        const auto& L = fan.lines[static_cast<std::size_t>(it - fan.tangent_points.begin())];
        out.expect(L == Line(E.element(coeffs[0]), E.element(coeffs[1]), E.element(coeffs[2])), "line at " + show(Q));
    }

    // Pair table: {1,2},{3,4} -> T1; {1,3},{2,4} -> T2; {1,4},{2,3} -> T3,
    // recomputed with the oracle's group law.
    const std::map<std::pair<int, int>, std::size_t> table{{{1, 2}, 0}, {{3, 4}, 0}, {{1, 3}, 1},
                                                           {{2, 4}, 1}, {{1, 4}, 2}, {{2, 3}, 2}};
    for (const auto& [ij, t] : table) {
        const IndexPair pair(ij.first, ij.second);
        out.expect(associated_torsion(fan, pair) == fan.torsion[t], "library table at " + show(pair));
        auto as_oracle = [](const CurvePoint& c) {
            return oracle::Pt::affine(static_cast<std::int64_t>(c.x().value()), static_cast<std::int64_t>(c.y().value()));
        };
        const auto sum = naive.add(naive.add(as_oracle(P), as_oracle(fan.tangent_point(ij.first))),
                                   as_oracle(fan.tangent_point(ij.second)));
        out.expect(lift(sum) == fan.torsion[t], "oracle table at " + show(pair));
    }
    return out;
}

struct RandomInstances {
    std::vector<sampling::Instance> instances;
};

const RandomInstances& criterion_instances() {
    static const RandomInstances inst = [] {
        RandomInstances r;
        sampling::Rng rng(20190101);
        for (int i = 0; i < 120; ++i) {
            // 5 < p < 2^14
            r.instances.push_back(sampling::random_instance(rng, 7, (1u << 14) - 1, 2, true));
        }
        return r;
    }();
    return inst;
}

// 3. Splitting predicate against the parity criterion, all 36 combinations, < 10 s.
Outcome criterion_equivalence() {
    Outcome out;
    const auto start = Clock::now();
    const auto& all = criterion_instances().instances;
    out.expect(all.size() >= 100, "at least 100 instances");
    for (const auto& inst : all) {
        out.expect(inst.curve.p() > 5 && inst.curve.p() < (1u << 14), "prime range");
        out.expect(inst.points[0] != inst.points[1], "distinct base points");
        const auto f1 = tangent_fan(inst.curve, inst.points[0]);
        const auto f2 = tangent_fan(inst.curve, inst.points[1]);
        for (const auto& a : IndexPair::all()) {
            for (const auto& b : IndexPair::all()) {
                const auto arr = build_arrangement(inst.curve, std::vector<Member>{{f1, a}, {f2, b}});
                out.expect(splitting_predicate(arr, 0, 1) == parity_criterion(a, b),
                           "p=" + std::to_string(inst.curve.p()) + " pairs " + show(a) + " " + show(b));
            }
        }
    }
    const double t = seconds_since(start);
    out.expect(t < 10.0, "runtime " + std::to_string(t) + " s exceeds 10 s");
    return out;
}

// 4. Tangent point relations on the same instances.
Outcome lemma_relations() {
    Outcome out;
    for (const auto& inst : criterion_instances().instances) {
        const auto& E = inst.curve;
        for (const auto& P : inst.points) {
            const auto fan = tangent_fan(E, P);
            for (int i = 1; i <= 4; ++i) {
                out.expect(E.add(P, E.dbl(fan.tangent_point(i))).is_infinity(), "P + 2Q_i = O");
                for (int j = 1; j <= 4; ++j) {
                    if (i == j) continue;
                    const auto d = E.sub(fan.tangent_point(i), fan.tangent_point(j));
                    out.expect(!d.is_infinity() && E.dbl(d).is_infinity() && fan.torsion.index_of(d).has_value(),
                               "Q_i - Q_j nontrivial 2-torsion");
                }
            }
            std::array<int, 3> hits{0, 0, 0};
            for (const auto& pair : IndexPair::all()) {
                const auto t = associated_torsion(fan, pair);
                out.expect(t == associated_torsion(fan, pair.complement()), "complementary pairs share torsion");
                const auto idx = fan.torsion.index_of(t);
                out.expect(idx.has_value(), "associated torsion in T");
                if (idx) ++hits[*idx];
            }
            out.expect(hits == std::array<int, 3>{2, 2, 2}, "pair map exactly 2-to-1");
        }
    }
    return out;
}

// 5. Group law: 10^4 randomized checks on >= 10 curves, and point orders
// dividing the group order on every admissible curve (nonsingular, rational
// 2-torsion) with p <= 101.
Outcome group_law() {
    Outcome out;
    sampling::Rng rng(77);
    int curves = 0;
    std::uint64_t random_checks = 0;
    while (curves < 10) {
        const Modulus m(sampling::random_prime(rng, 7, 1 << 16));
        std::optional<Curve> E;
        E.emplace(sampling::random_split_curve(rng, m));
        ++curves;
        for (int i = 0; i < 250; ++i) {
            const auto P = sampling::random_point(rng, *E);
            const auto Q = sampling::random_point(rng, *E);
            const auto R = sampling::random_point(rng, *E);
            out.expect(E->add(E->add(P, Q), R) == E->add(P, E->add(Q, R)), "associativity");
            out.expect(E->add(P, Q) == E->add(Q, P), "commutativity");
            out.expect(E->add(P, CurvePoint::infinity()) == P, "identity");
            out.expect(E->add(P, E->neg(P)).is_infinity(), "inverse");
            random_checks += 4;
        }
    }
    out.expect(random_checks >= 10000, "at least 10^4 randomized checks");

    std::uint64_t exhaustive_curves = 0;
    for (std::uint64_t p = 5; p <= 101; ++p) {
        if (!is_prime(p)) continue;
        const Modulus m(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; ++b) {
                std::optional<Curve> E;
                try {
                    E.emplace(FieldElement::from_unsigned(a, m), FieldElement::from_unsigned(b, m));
                } catch (const Error&) {
                    continue;
                }
                if (!E->has_rational_two_torsion()) continue;
                ++exhaustive_curves;
                const auto order = E->order();
                for (const auto& P : E->points()) {
                    out.expect(E->scalar_mul(P, order).is_infinity(),
                               "order of " + show(P) + " divides |E| on " + std::to_string(p));
                }
            }
        }
    }
    out.expect(exhaustive_curves > 0, "exhaustive curves visited");
    return out;
}

// 6. Partition invariant under member permutation and pair complementation.
Outcome invariance() {
    Outcome out;
    sampling::Rng rng(4242);
    std::uniform_int_distribution<std::size_t> size(1, 8), pick(0, 5);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = size(rng);
        const auto inst = sampling::random_instance(rng, 7, (1u << 14) - 1, n, true);
        std::vector<Member> members;
        for (const auto& p : inst.points) members.push_back(Member{tangent_fan(inst.curve, p), IndexPair::all()[pick(rng)]});
        const auto base = partition_invariant(build_arrangement(inst.curve, members));
        out.expect(base.total() == n, "sum of entries equals n");
        auto shuffled = members;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        out.expect(partition_invariant(build_arrangement(inst.curve, shuffled)) == base, "permutation");
        auto complemented = members;
        for (auto& m : complemented) m.pair = m.pair.complement();
        out.expect(partition_invariant(build_arrangement(inst.curve, complemented)) == base, "complementation");
    }
    return out;
}

// 7. realize_partition round trip and zariski_nple sizes, two curves, n <= 6.
Outcome realization() {
    Outcome out;
    const std::vector<Curve> curves{Curve(-1, 0, Modulus(10007)), Curve(-7, 6, Modulus(8191))};
    for (const auto& E : curves) {
        const auto points = generic_points(E, 6);
        for (std::uint64_t n = 1; n <= 6; ++n) {
            const std::span<const CurvePoint> used(points.data(), n);
            for (const auto& target : enumerate_partitions(n).partitions) {
                out.expect(partition_invariant(realize_partition(E, used, target)) == target,
                           "round trip " + show(target) + " over F_" + std::to_string(E.p()));
            }
            const auto nple = zariski_nple(E, points, n);
            out.expect(nple.size() == y(n), "n-ple size y(" + std::to_string(n) + ")");
            std::set<Partition3> seen;
            for (const auto& a : nple) seen.insert(partition_invariant(a));
            out.expect(seen.size() == nple.size(), "pairwise-distinct invariants for n = " + std::to_string(n));
        }
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 counting formula y(n), n in [0, 10000]", counting_formula},
        {"2 worked F_5 fixture", worked_fixture},
        {"3 splitting predicate == parity criterion", criterion_equivalence},
        {"4 tangent point relations", lemma_relations},
        {"5 group law", group_law},
        {"6 partition invariance", invariance},
        {"7 realization round trip", realization},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Outcome result;
        try {
            result = run();
        } catch (const Error& e) {
            result.pass = false;
            result.detail = std::string(to_string(e.code())) + ": " + e.what();
        }
        const double t = seconds_since(start);
        std::printf("[%s] criterion %s  (%llu checks, %.2f s)%s%s\n", result.pass ? "PASS" : "FAIL", name.c_str(),
                    static_cast<unsigned long long>(result.checks), t, result.pass ? "" : "  -- ",
                    result.detail.c_str());
        failures += !result.pass;
    }
    std::printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed");
    return failures == 0 ? 0 : 1;
}
