#ifndef POLYA_FINITE_FIELD_HPP
#define POLYA_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "polya/config.hpp"

namespace polya {

// F_p for a prime p, elements 0..p-1.  Primality is checked by trial
// division; the whole layer targets desk-scale parameters.
class PrimeField {
public:
    explicit PrimeField(long long p);
    long long p() const { return p_; }

    long long reduce(long long x) const;
    long long add(long long a, long long b) const { return (a + b) % p_; }
    long long sub(long long a, long long b) const { return (a - b + p_) % p_; }
    long long mul(long long a, long long b) const { return (a * b) % p_; }
    long long neg(long long a) const { return (p_ - a) % p_; }
    long long pow(long long a, unsigned long long e) const;

private:
    long long p_;
};

// Legendre-style quadratic character on F_p, odd p: 0 at zero, +1 on nonzero
// squares, -1 otherwise.  Decided by exhaustive squaring.
int quadratic_character(const PrimeField& field, long long a);

// F_{p^r} as residue polynomials modulo a fixed monic irreducible of degree
// r: the first irreducible in the scan ordered by (a_0, a_1, ..., a_{r-1}),
// coefficients low to high.  Elements are coefficient vectors of length r.
class ExtensionField {
public:
    using Elem = std::vector<long long>;

    ExtensionField(PrimeField base, int degree);

    const PrimeField& base() const { return base_; }
    int degree() const { return deg_; }
    std::uint64_t size() const;
    // a_0..a_{r-1}; the leading coefficient of x^r is implicitly 1.
    const std::vector<long long>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(deg_), 0); }
    Elem one() const;
    Elem from_index(std::uint64_t index) const;  // base-p digits, a_0 first
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, unsigned long long e) const;
    Elem scalar(long long c) const;

private:
    PrimeField base_;
    int deg_;
    std::vector<long long> modulus_;
};

}  // namespace polya

#endif
