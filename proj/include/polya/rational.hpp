#ifndef POLYA_RATIONAL_HPP
#define POLYA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace polya {

using BigInt = mpz_class;

// Exact rational number.  Always kept in lowest terms with a positive
// denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(int n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d);

    // Accepts "p", "-p" or "p/q" with q > 0.
    static Rational parse(const std::string& text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q" in lowest terms, "p" when q = 1, sign on the numerator.
    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polya

#endif
