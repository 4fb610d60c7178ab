#include "metrocap/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace metrocap {

double log_big(const BigInt &x) {
    if (sgn(x) <= 0) {
        throw std::domain_error("log_big: argument must be positive");
    }
    long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * kLn2;
}

double log_rational(const Rational &q) {
    if (sgn(q) <= 0) {
        throw std::domain_error("log_rational: argument must be positive");
    }
    return log_big(q.get_num()) - log_big(q.get_den());
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

std::string to_decimal(const BigInt &x) { return x.get_str(10); }

std::string to_fraction(const Rational &q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Rational parse_fraction(const std::string &text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace metrocap
