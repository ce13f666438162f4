#include "polya/finite_field.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace polya {

PrimeField::PrimeField(long long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

long long PrimeField::reduce(long long x) const {
    long long r = x % p_;
    return r < 0 ? r + p_ : r;
}

long long PrimeField::pow(long long a, unsigned long long e) const {
    long long result = 1 % p_;
    long long base = reduce(a);
    while (e > 0) {
        if (e & 1ull) result = mul(result, base);
        e >>= 1ull;
        base = mul(base, base);
    }
    return result;
}

int quadratic_character(const PrimeField& field, long long a) {
    if (field.p() % 2 == 0)
        throw std::invalid_argument("quadratic_character: requires odd characteristic");
    long long r = field.reduce(a);
    if (r == 0) return 0;
    for (long long x = 1; x < field.p(); ++x)
        if (field.mul(x, x) == r) return 1;
    return -1;
}

namespace {

// Remainder of a polynomial (coefficients low to high) modulo a monic
// divisor over F_p.
std::vector<long long> poly_mod(std::vector<long long> a,
                                const std::vector<long long>& divisor_low,  // a_0..a_{d-1}
                                const PrimeField& f) {
    std::size_t d = divisor_low.size();
    while (a.size() > d) {
        long long lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, divisor_low[i]));
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Divisibility of a monic polynomial (low-to-high coefficients incl. leading
// 1) by a monic divisor given by its low coefficients.
bool divides(const std::vector<long long>& poly, const std::vector<long long>& divisor_low,
             const PrimeField& f) {
    return poly_mod(poly, divisor_low, f).empty();
}

bool is_irreducible(const std::vector<long long>& low, const PrimeField& f) {
    int r = static_cast<int>(low.size());
    if (r == 1) return true;  // every monic linear polynomial
    // root test covers all degree-1 factors
    for (long long x = 0; x < f.p(); ++x) {
        long long v = 1;  // leading coefficient of x^r
        for (int i = r - 1; i >= 0; --i)
            v = f.add(f.mul(v, x), low[static_cast<std::size_t>(i)]);
        if (v == 0) return false;
    }
    if (r <= 3) return true;
    // trial division by all monic polynomials of degree 2..r/2
    std::vector<long long> full = low;
    full.push_back(1);
    for (int d = 2; 2 * d <= r; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(f.p());
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<long long> div(static_cast<std::size_t>(d));
            std::uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                div[static_cast<std::size_t>(i)] = static_cast<long long>(v % static_cast<std::uint64_t>(f.p()));
                v /= static_cast<std::uint64_t>(f.p());
            }
            if (divides(full, div, f)) return false;
        }
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(PrimeField base, int degree)
    : base_(base), deg_(degree) {
    if (degree < 1) throw std::invalid_argument("ExtensionField: degree must be >= 1");
    // scan candidates ordered by (a_0, a_1, ...), smallest first
    std::uint64_t count = size();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<long long> low(static_cast<std::size_t>(deg_));
        std::uint64_t v = idx;
        for (int i = deg_ - 1; i >= 0; --i) {
            low[static_cast<std::size_t>(i)] =
                static_cast<long long>(v % static_cast<std::uint64_t>(base_.p()));
            v /= static_cast<std::uint64_t>(base_.p());
        }
        if (is_irreducible(low, base_)) {
            modulus_ = std::move(low);
            return;
        }
    }
    throw std::logic_error("ExtensionField: no irreducible modulus found");
}

std::uint64_t ExtensionField::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < deg_; ++i) s *= static_cast<std::uint64_t>(base_.p());
    return s;
}

ExtensionField::Elem ExtensionField::one() const {
    Elem e = zero();
    e[0] = 1 % base_.p();
    return e;
}

ExtensionField::Elem ExtensionField::from_index(std::uint64_t index) const {
    Elem e = zero();
    for (int i = 0; i < deg_; ++i) {
        e[static_cast<std::size_t>(i)] =
            static_cast<long long>(index % static_cast<std::uint64_t>(base_.p()));
        index /= static_cast<std::uint64_t>(base_.p());
    }
    return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (int i = 0; i < deg_; ++i)
        out[static_cast<std::size_t>(i)] = base_.add(a[static_cast<std::size_t>(i)],
                                                     b[static_cast<std::size_t>(i)]);
    return out;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
    std::vector<long long> prod(static_cast<std::size_t>(2 * deg_ - 1), 0);
    for (int i = 0; i < deg_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < deg_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                base_.add(prod[static_cast<std::size_t>(i + j)],
                          base_.mul(a[static_cast<std::size_t>(i)],
                                    b[static_cast<std::size_t>(j)]));
    }
    // reduce modulo the monic modulus
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
        long long c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(k)] = 0;
        for (int i = 0; i < deg_; ++i)
            prod[static_cast<std::size_t>(k - deg_ + i)] =
                base_.sub(prod[static_cast<std::size_t>(k - deg_ + i)],
                          base_.mul(c, modulus_[static_cast<std::size_t>(i)]));
    }
    prod.resize(static_cast<std::size_t>(deg_));
    return prod;
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, unsigned long long e) const {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1ull) result = mul(result, base);
        e >>= 1ull;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

ExtensionField::Elem ExtensionField::scalar(long long c) const {
    Elem e = zero();
    e[0] = base_.reduce(c);
    return e;
}

}  // namespace polya
