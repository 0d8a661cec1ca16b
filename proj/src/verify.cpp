#include "zariski/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zariski/arrangement.hpp"
#include "zariski/classify.hpp"
#include "zariski/error.hpp"
#include "zariski/sampling.hpp"

namespace zariski::verify {

bool Report::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failures == 0; });
}

namespace {

using sampling::Rng;

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 14) - 1;

class Checker {
public:
    explicit Checker(PropertyResult& result, std::uint64_t trial) : result_(result), trial_(trial) {}

    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (result_.first_failure.empty()) result_.first_failure = "trial " + std::to_string(trial_) + ": " + what;
    }

private:
    PropertyResult& result_;
    std::uint64_t trial_;
};

template <typename T>
std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

void group_axioms(Rng& rng, Checker& c) {
    const Modulus m(sampling::random_prime(rng, 5, kMaxPrime));
    std::uniform_int_distribution<std::uint64_t> coeff(0, m.value() - 1);
    std::optional<Curve> curve;
    while (!curve) {
        try {
            curve.emplace(FieldElement::from_unsigned(coeff(rng), m), FieldElement::from_unsigned(coeff(rng), m));
        } catch (const Error&) {
        }
    }
    const auto o = CurvePoint::infinity();
    for (int k = 0; k < 10; ++k) {
        const auto p = sampling::random_point(rng, *curve);
        const auto q = sampling::random_point(rng, *curve);
        const auto r = sampling::random_point(rng, *curve);
        c.check(curve->add(curve->add(p, q), r) == curve->add(p, curve->add(q, r)), "associativity at " + show(p));
        c.check(curve->add(p, q) == curve->add(q, p), "commutativity at " + show(p));
        c.check(curve->add(p, o) == p, "identity at " + show(p));
        c.check(curve->add(p, curve->neg(p)).is_infinity(), "inverse at " + show(p));
    }
}

void lemma_relations(Rng& rng, Checker& c) {
    const auto inst = sampling::random_instance(rng, 7, kMaxPrime, 1, false);
    const auto& curve = inst.curve;
    const auto fan = tangent_fan(curve, inst.points[0]);
    for (int i = 1; i <= 4; ++i) {
        c.check(curve.add(fan.base, curve.dbl(fan.tangent_point(i))).is_infinity(), "P + 2Q_i = O");
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            const auto diff = curve.sub(fan.tangent_point(i), fan.tangent_point(j));
            c.check(fan.torsion.index_of(diff).has_value(), "Q_i - Q_j nontrivial 2-torsion");
        }
    }
    c.check(curve.sub(fan.tangent_point(1), fan.tangent_point(2)) == fan.torsion[0], "Q1 - Q2 = T1");
    c.check(curve.sub(fan.tangent_point(1), fan.tangent_point(3)) == fan.torsion[1], "Q1 - Q3 = T2");
    c.check(curve.sub(fan.tangent_point(1), fan.tangent_point(4)) == fan.torsion[2], "Q1 - Q4 = T3");
    std::array<int, 3> hits{0, 0, 0};
    for (const auto& pair : IndexPair::all()) {
        const auto t = associated_torsion(fan, pair);
        c.check(curve.dbl(t).is_infinity() && !t.is_infinity(), "associated torsion has order 2");
        c.check(t == associated_torsion(fan, pair.complement()), "complementary pairs agree for " + show(pair));
        if (auto idx = fan.torsion.index_of(t)) ++hits[*idx];
    }
    c.check(hits == std::array<int, 3>{2, 2, 2}, "pair map is 2-to-1 onto the 2-torsion");
}

void criterion_equivalence(Rng& rng, Checker& c) {
    const auto inst = sampling::random_instance(rng, 7, kMaxPrime, 2, true);
    const Member first{tangent_fan(inst.curve, inst.points[0]), IndexPair(1, 2)};
    const Member second{tangent_fan(inst.curve, inst.points[1]), IndexPair(1, 2)};
    for (const auto& a : IndexPair::all()) {
        for (const auto& b : IndexPair::all()) {
            const auto arr = build_arrangement(inst.curve, std::vector<Member>{{first.fan, a}, {second.fan, b}});
            c.check(splitting_predicate(arr, 0, 1) == parity_criterion(a, b),
                    "splitting vs parity for " + show(a) + " " + show(b));
            c.check(splitting_predicate(arr, 0, 1) == splitting_predicate(arr, 1, 0), "splitting symmetry");
        }
    }
}

void partition_invariance(Rng& rng, Checker& c) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    const std::size_t n = size(rng);
    const auto inst = sampling::random_instance(rng, 7, kMaxPrime, n, true);
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    std::vector<Member> members;
    for (const auto& p : inst.points) members.push_back(Member{tangent_fan(inst.curve, p), IndexPair::all()[pick(rng)]});
    const auto base = partition_invariant(build_arrangement(inst.curve, members));
    c.check(base.total() == n, "partition sums to n");

    auto shuffled = members;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    c.check(partition_invariant(build_arrangement(inst.curve, shuffled)) == base, "invariant under permutation");

    auto complemented = members;
    for (auto& m : complemented) m.pair = m.pair.complement();
    c.check(partition_invariant(build_arrangement(inst.curve, complemented)) == base, "invariant under complement");
}

void counting_formula(std::uint64_t trial, Checker& c) {
    const std::uint64_t n = trial % 256;
    c.check(y(n) == enumerate_partitions(n).partitions.size(), "y(" + std::to_string(n) + ") vs enumeration");
}

}  // namespace

Report run(std::uint64_t seed, std::uint64_t trials) {
    Report report{seed, trials, {}};
    const std::vector<std::pair<std::string, std::function<void(Rng&, std::uint64_t, Checker&)>>> suite{
        {"group_axioms", [](Rng& rng, std::uint64_t, Checker& c) { group_axioms(rng, c); }},
        {"lemma_relations", [](Rng& rng, std::uint64_t, Checker& c) { lemma_relations(rng, c); }},
        {"criterion_equivalence", [](Rng& rng, std::uint64_t, Checker& c) { criterion_equivalence(rng, c); }},
        {"partition_invariance", [](Rng& rng, std::uint64_t, Checker& c) { partition_invariance(rng, c); }},
        {"counting_formula", [](Rng&, std::uint64_t t, Checker& c) { counting_formula(t, c); }},
    };
    for (std::size_t k = 0; k < suite.size(); ++k) {
        PropertyResult result{suite[k].first, 0, 0, {}};
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(trial),
                              static_cast<std::uint32_t>(trial >> 32)};
            Rng rng(seq);
            Checker checker(result, trial);
            try {
                suite[k].second(rng, trial, checker);
            } catch (const Error& e) {
                checker.check(false, std::string(to_string(e.code())) + ": " + e.what());
            }
        }
        report.properties.push_back(std::move(result));
    }
    return report;
}

}  // namespace zariski::verify
