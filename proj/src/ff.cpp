#include "zariski/ff.hpp"

#include <algorithm>
#include <string>

#include "zariski/error.hpp"

namespace zariski {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Modulus::Modulus(std::uint64_t p) : p_(p) {
    if (p <= 3 || p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
        throw Error(ErrorCode::InvalidModulus,
                    "modulus must be a prime with 3 < p < 2^63, got " + std::to_string(p));
    }
}

FieldElement::FieldElement(std::int64_t value, Modulus modulus) : modulus_(modulus.value()) {
    const auto p = static_cast<std::int64_t>(modulus_);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
}

FieldElement FieldElement::from_unsigned(std::uint64_t value, Modulus modulus) {
    return FieldElement(value % modulus.value(), modulus.value(), 0);
}

void FieldElement::check_same_field(const FieldElement& other) const {
    if (modulus_ != other.modulus_) {
        throw Error(ErrorCode::ModulusMismatch, "operands live in F_" + std::to_string(modulus_) +
                                                    " and F_" + std::to_string(other.modulus_));
    }
}

FieldElement FieldElement::operator-() const {
    return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_, 0);
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    // p < 2^63, so the sum cannot overflow.
    value_ += rhs.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = mul_mod(value_, rhs.value_, modulus_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inv();
}

FieldElement FieldElement::inv() const {
    if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(modulus_));
    // Extended Euclid on signed 128-bit to stay exact for p near 2^63.
    __int128 r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s0 < 0) s0 += modulus_;
    return FieldElement(static_cast<std::uint64_t>(s0), modulus_, 0);
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
    return FieldElement(pow_mod(value_, exp, modulus_), modulus_, 0);
}

std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs) {
    if (auto c = lhs.modulus_ <=> rhs.modulus_; c != 0) return c;
    return lhs.value_ <=> rhs.value_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inv(); }

bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    return a.pow((a.p() - 1) / 2).value() == 1;
}

namespace {

std::vector<FieldElement> canonical_pair(const FieldElement& r) {
    if (r.is_zero()) return {r};
    std::vector<FieldElement> out{r, -r};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FieldElement> sqrt_by_scan(const FieldElement& a) {
    const auto m = a.modulus();
    // y and p - y give the same square, so scanning to (p - 1) / 2 suffices.
    for (std::uint64_t y = 0; y <= (a.p() - 1) / 2; ++y) {
        if (mul_mod(y, y, a.p()) == a.value()) return canonical_pair(FieldElement::from_unsigned(y, m));
    }
    return {};
}

std::vector<FieldElement> sqrt_tonelli_shanks(const FieldElement& a) {
    if (a.is_zero()) return {a};
    if (!is_square(a)) return {};
    const std::uint64_t p = a.p();
    const auto m = a.modulus();

    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    if (s == 1) return canonical_pair(a.pow((p + 1) / 4));

    // Least quadratic non-residue: deterministic, so results never depend on a seed.
    std::uint64_t z = 2;
    while (is_square(FieldElement::from_unsigned(z, m))) ++z;

    auto c = FieldElement::from_unsigned(z, m).pow(q);
    auto x = a.pow((q + 1) / 2);
    auto t = a.pow(q);
    std::uint64_t e = s;
    const auto one = FieldElement::from_unsigned(1, m);
    while (t != one) {
        std::uint64_t i = 0;
        auto t2 = t;
        while (t2 != one) {
            t2 *= t2;
            ++i;
        }
        auto b = c;
        for (std::uint64_t k = 0; k + 1 < e - i; ++k) b *= b;
        x *= b;
        c = b * b;
        t *= c;
        e = i;
    }
    return canonical_pair(x);
}

std::vector<FieldElement> sqrt(const FieldElement& a) {
    return a.p() <= kScanThreshold ? sqrt_by_scan(a) : sqrt_tonelli_shanks(a);
}

}  // namespace zariski
