#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace zariski {

bool is_prime(std::uint64_t n) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// A validated prime modulus p > 3, p < 2^63.
class Modulus {
public:
    explicit Modulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(Modulus, Modulus) = default;

private:
    struct Unchecked {};
    Modulus(std::uint64_t p, Unchecked) noexcept : p_(p) {}

    std::uint64_t p_;

    friend class FieldElement;
};

// Residue in F_p. Mixing residues of different moduli throws ModulusMismatch.
class FieldElement {
public:
    FieldElement(std::int64_t value, Modulus modulus);
    static FieldElement from_unsigned(std::uint64_t value, Modulus modulus);

    std::uint64_t value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return Modulus(modulus_, Modulus::Unchecked{}); }
    std::uint64_t p() const noexcept { return modulus_; }

    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t exp) const;

    // Same-modulus comparison; elements of different fields are never equal.
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs);

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value_; }

private:
    FieldElement(std::uint64_t value, std::uint64_t p, int) : value_(value), modulus_(p) {}
    void check_same_field(const FieldElement& other) const;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

// Moduli at or below this bound use exhaustive scans for square roots and
// polynomial roots; larger moduli use Tonelli-Shanks and Cantor-Zassenhaus.
inline constexpr std::uint64_t kScanThreshold = std::uint64_t{1} << 12;

// Square roots of a in canonical order (smaller representative first).
// Empty when a is a non-residue; a single {0} when a is zero.
std::vector<FieldElement> sqrt(const FieldElement& a);
std::vector<FieldElement> sqrt_by_scan(const FieldElement& a);
std::vector<FieldElement> sqrt_tonelli_shanks(const FieldElement& a);

bool is_square(const FieldElement& a);

}  // namespace zariski
