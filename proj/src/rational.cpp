#include "sdstable/rational.hpp"

#include <cctype>
#include <ostream>

namespace sdstable {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw InputError("rational denominator must be nonzero");
    }
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // Validate before handing to GMP: mpq_set_str is permissive about
    // whitespace and silently accepts some junk we want to reject.
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    std::size_t pos = 0;
    auto digits_run = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        return i;
    };
    if (text[pos] == '+' || text[pos] == '-') {
        ++pos;
    }
    std::size_t num_end = digits_run(pos);
    if (num_end == pos) {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    if (num_end != text.size()) {
        if (text[num_end] != '/') {
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        }
        std::size_t den_end = digits_run(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) {
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        }
    }
    std::string cleaned(text[0] == '+' ? text.substr(1) : text);  // GMP rejects '+'
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), cleaned.c_str(), 10) != 0) {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    if (v.get_den() == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::power_of(long base, long exponent) {
    if (base == 0 && exponent < 0) {
        throw InputError("0 cannot be raised to a negative power");
    }
    mpz_class mag;
    mpz_class b(static_cast<signed long>(base));
    mpz_pow_ui(mag.get_mpz_t(), b.get_mpz_t(),
               static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class out = exponent < 0 ? mpq_class(1, 1) / mpq_class(mag) : mpq_class(mag);
    out.canonicalize();
    return Rational(std::move(out));
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::round_nearest_ties_toward_zero() const {
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    mpz_class fl, rem;
    // den > 0, so fdiv gives floor and 0 <= rem < den.
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int twice = cmp(rem * 2, den);
    if (twice < 0) {
        return Rational(mpq_class(fl));
    }
    if (twice > 0) {
        return Rational(mpq_class(fl + 1));
    }
    // Exactly halfway: floor >= 0 means the value is positive, keep floor.
    return Rational(mpq_class(sgn(fl) >= 0 ? fl : fl + 1));
}

Rational Rational::round_to_scale(long base, long digits) const {
    const Rational scale = power_of(base, digits);
    const Rational scaled = (*this * scale).round_nearest_ties_toward_zero();
    return scaled / scale;
}

long Rational::to_long() const {
    if (!is_integer()) {
        throw InputError("to_long on a non-integer rational");
    }
    const mpz_class& num = v_.get_num();
    if (!num.fits_slong_p()) {
        throw InputError("integer out of long range");
    }
    return num.get_si();
}

std::string Rational::str() const {
    return num_str() + "/" + den_str();
}

std::string Rational::num_str() const {
    return v_.get_num().get_str();
}

std::string Rational::den_str() const {
    return v_.get_den().get_str();
}

std::string Rational::decimal_str() const {
    mpz_class den = v_.get_den();
    long twos = 0;
    long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
        ++fives;
    }
    const long places = twos > fives ? twos : fives;
    if (den != 1 || places > 256) {
        return str();  // not a finite decimal (or absurdly long); stay exact
    }
    mpz_class ten_k;
    mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class scaled = v_.get_num() * ten_k / v_.get_den();
    const bool neg = sgn(scaled) < 0;
    mpz_class magnitude;
    mpz_abs(magnitude.get_mpz_t(), scaled.get_mpz_t());
    std::string digits = magnitude.get_str();
    std::string frac;
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        frac = digits.substr(digits.size() - static_cast<std::size_t>(places));
        digits.erase(digits.size() - static_cast<std::size_t>(places));
        while (frac.size() > 1 && frac.back() == '0') {
            frac.pop_back();
        }
    } else {
        frac = "0";
    }
    return (neg ? "-" : "") + digits + "." + frac;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw MathError("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace sdstable
