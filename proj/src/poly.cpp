#include "zariski/poly.hpp"

#include <algorithm>
#include <random>

#include "zariski/error.hpp"

namespace zariski {

Poly::Poly(std::vector<FieldElement> coefficients, Modulus modulus)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.modulus() != modulus_) throw Error(ErrorCode::ModulusMismatch, "polynomial coefficient from another field");
    }
    trim();
}

Poly::Poly(std::initializer_list<std::int64_t> coefficients, Modulus modulus) : modulus_(modulus) {
    coeffs_.reserve(coefficients.size());
    for (auto c : coefficients) coeffs_.emplace_back(c, modulus);
    trim();
}

Poly Poly::monomial(FieldElement coefficient, std::size_t degree) {
    const auto m = coefficient.modulus();
    std::vector<FieldElement> c(degree + 1, FieldElement(0, m));
    c[degree] = coefficient;
    return Poly(std::move(c), m);
}

Poly Poly::linear_factor(const FieldElement& root) {
    const auto m = root.modulus();
    return Poly({-root, FieldElement(1, m)}, m);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
    if (modulus_ != other.modulus_) throw Error(ErrorCode::ModulusMismatch, "polynomials over different fields");
}

FieldElement Poly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement(0, modulus_);
}

FieldElement Poly::leading() const { return is_zero() ? FieldElement(0, modulus_) : coeffs_.back(); }

FieldElement Poly::operator()(const FieldElement& x) const {
    FieldElement acc(0, modulus_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const auto scale = leading().inv();
    return *this * scale;
}

Poly Poly::derivative() const {
    std::vector<FieldElement> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * FieldElement(static_cast<std::int64_t>(i), modulus_));
    }
    return Poly(std::move(d), modulus_);
}

Poly operator+(const Poly& lhs, const Poly& rhs) {
    lhs.check_same_field(rhs);
    const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<FieldElement> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(lhs.coefficient(i) + rhs.coefficient(i));
    return Poly(std::move(c), lhs.modulus_);
}

Poly operator-(const Poly& lhs, const Poly& rhs) {
    lhs.check_same_field(rhs);
    const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<FieldElement> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(lhs.coefficient(i) - rhs.coefficient(i));
    return Poly(std::move(c), lhs.modulus_);
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    lhs.check_same_field(rhs);
    if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.modulus_);
    std::vector<FieldElement> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, FieldElement(0, lhs.modulus_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(c), lhs.modulus_);
}

Poly operator*(const Poly& lhs, const FieldElement& k) {
    std::vector<FieldElement> c = lhs.coeffs_;
    for (auto& e : c) e *= k;
    return Poly(std::move(c), lhs.modulus_);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<FieldElement> rem = coeffs_;
    if (rem.size() < divisor.coeffs_.size()) return {Poly(modulus_), *this};

    const std::size_t dd = divisor.coeffs_.size() - 1;
    const auto lead_inv = divisor.leading().inv();
    std::vector<FieldElement> quot(rem.size() - dd, FieldElement(0, modulus_));
    for (std::size_t k = rem.size(); k-- > dd;) {
        const auto q = rem[k] * lead_inv;
        quot[k - dd] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dd), rem.end());
    return {Poly(std::move(quot), modulus_), Poly(std::move(rem), modulus_)};
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        const auto& c = f.coefficients()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c.value() != 1) os << c;
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& modulus) {
    Poly result = Poly({1}, base.modulus()) % modulus;
    Poly b = base % modulus;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        exp >>= 1;
    }
    return result;
}

namespace {

void require_root_finding_input(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "roots of the zero polynomial");
    if (f.degree() < 1 || f.degree() > 4) {
        throw Error(ErrorCode::DegenerateInput, "root finding supports degree 1..4, got " + std::to_string(f.degree()));
    }
}

std::vector<FieldElement> with_multiplicity(const Poly& f, const std::vector<FieldElement>& distinct) {
    std::vector<FieldElement> out;
    for (const auto& r : distinct) {
        Poly g = f;
        const Poly factor = Poly::linear_factor(r);
        for (;;) {
            auto [q, rem] = g.divmod(factor);
            if (!rem.is_zero()) break;
            out.push_back(r);
            g = std::move(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// g is monic, squarefree and splits into linear factors.
void split_linear_factors(const Poly& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
    const auto m = g.modulus();
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        out.push_back(-g.coefficient(0));
        return;
    }
    const std::uint64_t p = m.value();
    const Poly one({1}, m);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    for (;;) {
        // (x + c)^((p-1)/2) - 1 vanishes exactly at roots r with r + c a nonzero square.
        const Poly shifted({FieldElement::from_unsigned(pick(rng), m), FieldElement(1, m)}, m);
        const Poly w = pow_mod(shifted, (p - 1) / 2, g) - one;
        const Poly d = gcd(g, w);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear_factors(d, rng, out);
            split_linear_factors(g.divmod(d).first.monic(), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElement> roots_by_scan(const Poly& f) {
    require_root_finding_input(f);
    const auto m = f.modulus();
    std::vector<FieldElement> distinct;
    for (std::uint64_t x = 0; x < m.value(); ++x) {
        const auto e = FieldElement::from_unsigned(x, m);
        if (f(e).is_zero()) distinct.push_back(e);
    }
    return with_multiplicity(f, distinct);
}

std::vector<FieldElement> roots_by_splitting(const Poly& f) {
    require_root_finding_input(f);
    const auto m = f.modulus();
    const Poly x({0, 1}, m);
    const Poly monic = f.monic();
    // Product of the distinct linear factors of f.
    const Poly g = gcd(monic, pow_mod(x, m.value(), monic) - x);
    std::vector<FieldElement> distinct;
    std::mt19937_64 rng(m.value());
    split_linear_factors(g, rng, distinct);
    return with_multiplicity(f, distinct);
}

std::vector<FieldElement> roots(const Poly& f) {
    return f.modulus().value() <= kScanThreshold ? roots_by_scan(f) : roots_by_splitting(f);
}

}  // namespace zariski
