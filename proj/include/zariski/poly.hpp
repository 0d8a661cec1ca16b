#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "zariski/ff.hpp"

namespace zariski {

// Dense univariate polynomial over F_p, lowest degree first, trimmed so the
// leading coefficient is nonzero. The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Modulus modulus) : modulus_(modulus) {}
    Poly(std::vector<FieldElement> coefficients, Modulus modulus);
    Poly(std::initializer_list<std::int64_t> coefficients, Modulus modulus);

    static Poly monomial(FieldElement coefficient, std::size_t degree);
    static Poly linear_factor(const FieldElement& root);  // x - root

    Modulus modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
    FieldElement coefficient(std::size_t i) const;
    FieldElement leading() const;

    FieldElement operator()(const FieldElement& x) const;

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& lhs, const Poly& rhs);
    friend Poly operator-(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Poly& lhs, const FieldElement& c);

    // Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    friend Poly operator%(const Poly& lhs, const Poly& rhs) { return lhs.divmod(rhs).second; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    void check_same_field(const Poly& other) const;

    Modulus modulus_;
    std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

// base^exp mod modulus.
Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& modulus);

// All roots of f in F_p with multiplicity, sorted ascending. Requires
// 1 <= deg f <= 4; the zero polynomial throws DegenerateInput.
std::vector<FieldElement> roots(const Poly& f);

// The two routes behind roots(): exhaustive evaluation over F_p, and
// gcd with x^p - x followed by equal-degree splitting.
std::vector<FieldElement> roots_by_scan(const Poly& f);
std::vector<FieldElement> roots_by_splitting(const Poly& f);

}  // namespace zariski
