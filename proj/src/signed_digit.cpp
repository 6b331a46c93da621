#include "sdstable/signed_digit.hpp"

#include <algorithm>
#include <cstdlib>

namespace sdstable::sdrep {

SignedDigitNumber::SignedDigitNumber(DigitSet digit_set, long msd_exponent,
                                     std::vector<long> digits)
    : digit_set_(digit_set), msd_exponent_(msd_exponent), digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw InputError("signed-digit number needs at least one digit");
    }
    for (long d : digits_) {
        if (!digit_set_.allows(d)) {
            throw InputError("digit magnitude exceeds gamma");
        }
    }
    if (frac_digit_count() < 0) {
        throw InputError("incomplete integer part: need at least msd_exponent + 1 digits");
    }
}

SignedDigitNumber SignedDigitNumber::prefix(std::size_t len) const {
    if (len < 1 || len > digits_.size()) {
        throw InputError("prefix length out of range");
    }
    return SignedDigitNumber(digit_set_, msd_exponent_,
                             std::vector<long>(digits_.begin(),
                                               digits_.begin() + static_cast<long>(len)));
}

Rational value_of(const SignedDigitNumber& num) {
    const long r = num.digit_set().radix();
    Rational weight = Rational::power_of(r, num.msd_exponent());
    const Rational inv_r(1, r);
    Rational sum(0);
    for (long d : num.digits()) {
        sum += Rational(d) * weight;
        weight *= inv_r;
    }
    return sum;
}

OpenInterval representation_interval(const SignedDigitNumber& num) {
    if (!num.digit_set().maximally_redundant()) {
        throw NotMaximallyRedundant(
            "representation interval requires gamma = radix - 1");
    }
    const Rational v = value_of(num);
    const Rational radius =
        Rational::power_of(num.digit_set().radix(), -num.frac_digit_count());
    return OpenInterval(v - radius, v + radius);
}

namespace detail {

GreedyTail greedy_tail(const DigitSet& digit_set, long first_weight_exp, Rational delta,
                       std::size_t min_digits, std::size_t max_digits) {
    const long r = digit_set.radix();
    const long gamma = digit_set.gamma();
    const Rational inv_r(1, r);
    Rational weight = Rational::power_of(r, first_weight_exp);
    GreedyTail out;
    out.digits.reserve(min_digits);
    while (out.digits.size() < max_digits) {
        if (delta.is_zero() && out.digits.size() >= min_digits) {
            break;
        }
        long d = (delta / weight).round_nearest_ties_toward_zero().to_long();
        d = std::clamp(d, -gamma, gamma);
        out.digits.push_back(d);
        delta -= Rational(d) * weight;
        weight *= inv_r;
    }
    out.residual = std::move(delta);
    return out;
}

}  // namespace detail

SignedDigitNumber append_digits(const SignedDigitNumber& num, const Rational& target,
                                std::size_t max_extra) {
    if (max_extra < 1) {
        throw InputError("append_digits needs max_extra >= 1");
    }
    if (!representation_interval(num).contains(target)) {
        throw TargetOutsideInterval(
            "target is not strictly inside the representation interval");
    }
    Rational delta = target - value_of(num);
    // The next appended position has weight r^(e - n).
    const long next_exp =
        num.msd_exponent() - static_cast<long>(num.size());
    auto tail = detail::greedy_tail(num.digit_set(), next_exp, std::move(delta),
                                    /*min_digits=*/1, max_extra);
    std::vector<long> digits = num.digits();
    digits.insert(digits.end(), tail.digits.begin(), tail.digits.end());
    return SignedDigitNumber(num.digit_set(), num.msd_exponent(), std::move(digits));
}

bool exact_extension_exists(const SignedDigitNumber& num, const Rational& target,
                            std::size_t k) {
    if (k < 1) {
        throw InputError("exact_extension_exists needs k >= 1");
    }
    if (!num.digit_set().maximally_redundant()) {
        throw NotMaximallyRedundant("exact extension test requires gamma = radix - 1");
    }
    const long r = num.digit_set().radix();
    const long d_count = num.frac_digit_count();
    const Rational delta = target - value_of(num);
    // Reachable with k digits: delta = m * r^-(D+k), |m| <= r^k - 1.
    const Rational scaled = delta * Rational::power_of(r, d_count + static_cast<long>(k));
    if (!scaled.is_integer()) {
        return false;
    }
    const Rational bound = Rational::power_of(r, -d_count) *
                           (Rational(1) - Rational::power_of(r, -static_cast<long>(k)));
    return delta.abs() <= bound;
}

SignedDigitNumber to_nonredundant(const SignedDigitNumber& num) {
    const long r = num.digit_set().radix();
    const std::size_t n = num.size();
    // value * r^(n-1-e) is an integer by construction; its base-r digits,
    // signed uniformly, are the conventional representation.
    const Rational scaled =
        value_of(num) *
        Rational::power_of(r, static_cast<long>(n) - 1 - num.msd_exponent());
    mpz_class m = scaled.raw().get_num();
    const int sign = sgn(m);
    mpz_class mag = abs(m);
    std::vector<long> digits(n, 0);
    const mpz_class radix(static_cast<signed long>(r));
    for (std::size_t i = n; i-- > 0 && mag != 0;) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), radix.get_mpz_t());
        digits[i] = sign * rem.get_si();
        mag = q;
    }
    return SignedDigitNumber(DigitSet::maximal(r), num.msd_exponent(), std::move(digits));
}

std::size_t common_prefix_len(const SignedDigitNumber& a, const SignedDigitNumber& b) {
    if (!(a.digit_set() == b.digit_set()) || a.msd_exponent() != b.msd_exponent()) {
        throw MismatchedFormat("common prefix needs matching digit set and exponent");
    }
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t p = 0;
    while (p < limit && a.digits()[p] == b.digits()[p]) {
        ++p;
    }
    return p;
}

long preferred_msd_exponent(const Rational& value, long radix) {
    const Rational mag = value.abs();
    long e = 0;
    Rational limit(radix);
    while (!(mag < limit)) {
        ++e;
        limit *= Rational(radix);
    }
    return e;
}

SignedDigitNumber encode_value(const Rational& value, const DigitSet& digit_set,
                               std::size_t max_frac_digits) {
    const long e = preferred_msd_exponent(value, digit_set.radix());
    const std::size_t min_digits = static_cast<std::size_t>(e) + 1;
    auto tail = detail::greedy_tail(digit_set, e, value, min_digits,
                                    min_digits + max_frac_digits);
    if (!tail.residual.is_zero()) {
        throw ExactRepresentationExceedsBudget(
            "value is not a finite radix-" + std::to_string(digit_set.radix()) +
            " number within " + std::to_string(max_frac_digits) + " fractional digits");
    }
    return SignedDigitNumber(digit_set, e, std::move(tail.digits));
}

}  // namespace sdstable::sdrep
