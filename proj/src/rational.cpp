#include "polya/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    // base was canonical, so powers of num/den stay coprime
    return Rational(out);
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&](bool allow_sign) -> std::string {
        std::string out;
        if (allow_sign && i < n && (text[i] == '-' || text[i] == '+')) out.push_back(text[i++]);
        std::size_t digits = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
            ++digits;
        }
        if (digits == 0) throw ParseError("Rational: expected digits in '" + text + "'");
        return out;
    };

    skip_ws();
    std::string num = read_int(true);
    skip_ws();
    std::string den = "1";
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        den = read_int(false);
        skip_ws();
    }
    if (i != n) throw ParseError("Rational: trailing characters in '" + text + "'");
    BigInt nz(num), dz(den);
    if (dz == 0) throw ParseError("Rational: zero denominator in '" + text + "'");
    return Rational(nz, dz);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polya
