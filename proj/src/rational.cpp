#include "waring/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace waring {

Rational rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational rational_from_decimal(const std::string& text) {
    std::string digits;
    digits.reserve(text.size());
    bool negative = false;
    bool seen_dot = false;
    bool seen_digit = false;
    unsigned long frac_digits = 0;

    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad decimal literal: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + text);

    Integer num(digits, 10);
    if (negative) num = -num;
    Integer den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    return rat(num, den);
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_rational(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace waring
