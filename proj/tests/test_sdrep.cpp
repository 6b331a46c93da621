#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sdstable/signed_digit.hpp"

using namespace sdstable;
using sdrep::DigitSet;
using sdrep::SignedDigitNumber;

namespace {

SignedDigitNumber bin(long msd_exponent, std::vector<long> digits) {
    return SignedDigitNumber(DigitSet(2, 1), msd_exponent, std::move(digits));
}

// Brute-force oracle: exact values of every extension of `num` by exactly
// k appended digits, enumerated over the full digit set.
std::set<Rational> enumerate_extension_values(const SignedDigitNumber& num, int k) {
    const long gamma = num.digit_set().gamma();
    std::set<Rational> values;
    std::vector<long> tail(static_cast<std::size_t>(k), -gamma);
    for (;;) {
        std::vector<long> digits = num.digits();
        digits.insert(digits.end(), tail.begin(), tail.end());
        values.insert(value_of(
            SignedDigitNumber(num.digit_set(), num.msd_exponent(), std::move(digits))));
        int pos = k - 1;
        while (pos >= 0 && tail[static_cast<std::size_t>(pos)] == gamma) {
            tail[static_cast<std::size_t>(pos)] = -gamma;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++tail[static_cast<std::size_t>(pos)];
    }
    return values;
}

}  // namespace

TEST_CASE("digit set constraints") {
    CHECK(DigitSet(2, 1).maximally_redundant());
    CHECK(DigitSet(10, 9).maximally_redundant());
    CHECK_FALSE(DigitSet(10, 5).maximally_redundant());
    CHECK_THROWS_AS(DigitSet(1, 1), InputError);
    CHECK_THROWS_AS(DigitSet(10, 4), InputError);   // below ceil(r/2)
    CHECK_THROWS_AS(DigitSet(10, 10), InputError);  // above r-1
    CHECK_THROWS_AS(DigitSet(3, 1), InputError);    // ceil(3/2) = 2
}

TEST_CASE("signed digit number invariants") {
    CHECK_THROWS_AS(bin(0, {}), InputError);
    CHECK_THROWS_AS(bin(0, {2}), InputError);     // digit beyond gamma
    CHECK_THROWS_AS(bin(2, {1}), InputError);     // incomplete integer part
    CHECK(bin(0, {1, -1}).frac_digit_count() == 1);
    CHECK(bin(2, {1, 0, 0}).frac_digit_count() == 0);
    CHECK(bin(-1, {1, 1}).frac_digit_count() == 2);
}

TEST_CASE("value_of matches the positional sum") {
    CHECK(value_of(bin(0, {1, -1, -1, -1})) == Rational(1, 8));
    CHECK(value_of(bin(0, {1, -1, 0, -1})) == Rational(3, 8));
    CHECK(value_of(bin(0, {0, 0, 0})) == Rational(0));
    CHECK(value_of(SignedDigitNumber(DigitSet(10, 9), 0, {5, 0})) == Rational(5));
    CHECK(value_of(bin(2, {1, 0, 1})) == Rational(5));
    CHECK(value_of(bin(-1, {1, 1})) == Rational(3, 4));
}

TEST_CASE("representation interval") {
    const auto iv = representation_interval(bin(0, {1, -1, -1, -1}));
    CHECK(iv.lo() == Rational(0));
    CHECK(iv.hi() == Rational(1, 4));

    const auto whole = representation_interval(bin(0, {0}));
    CHECK(whole.lo() == Rational(-1));
    CHECK(whole.hi() == Rational(1));

    const auto dec = representation_interval(SignedDigitNumber(DigitSet(10, 9), 0, {5, 0}));
    CHECK(dec.lo() == Rational(49, 10));
    CHECK(dec.hi() == Rational(51, 10));

    CHECK_THROWS_AS(representation_interval(SignedDigitNumber(DigitSet(10, 5), 0, {5, 0})),
                    NotMaximallyRedundant);
}

TEST_CASE("interval containment of appended extensions, exhaustively") {
    // Every extension of every short binary prefix stays strictly inside
    // the parent's representation interval.
    const DigitSet ds(2, 1);
    for (int len = 1; len <= 3; ++len) {
        std::vector<long> digits(static_cast<std::size_t>(len), -1);
        for (;;) {
            const SignedDigitNumber num(ds, 0, digits);
            const auto iv = representation_interval(num);
            for (int k = 1; k <= 4; ++k) {
                for (const Rational& v : enumerate_extension_values(num, k)) {
                    CHECK(iv.contains(v));
                }
            }
            int pos = len - 1;
            while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 1) {
                digits[static_cast<std::size_t>(pos)] = -1;
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++digits[static_cast<std::size_t>(pos)];
        }
    }
}

TEST_CASE("append_digits reaches an exactly representable target") {
    const auto num = bin(0, {1, -1, -1, -1});  // 1/8
    const Rational target(3, 16);

    // Oracle: 3/16 is reachable with one appended digit.
    const auto one_digit = enumerate_extension_values(num, 1);
    REQUIRE(one_digit.count(target) == 1);

    const auto extended = append_digits(num, target, 1);
    CHECK(extended.digits() == std::vector<long>{1, -1, -1, -1, 1});
    CHECK(value_of(extended) == target);
}

TEST_CASE("append_digits with the identity target appends a single zero") {
    const auto num = bin(0, {1, -1, 0, -1});
    const auto extended = append_digits(num, value_of(num), 1);
    CHECK(extended.digits() == std::vector<long>{1, -1, 0, -1, 0});
    CHECK(value_of(extended) == value_of(num));
}

TEST_CASE("append_digits builds a four digit extension") {
    const auto num = bin(0, {1});  // value 1, D = 0
    const auto extended = append_digits(num, Rational(9, 16), 4);
    CHECK(value_of(extended) == Rational(9, 16));
    CHECK(extended.digits() == std::vector<long>{1, -1, 0, 0, 1});
}

TEST_CASE("append_digits rejects targets outside the open interval") {
    const auto num = bin(0, {1, -1, -1, -1});  // 1/8, interval (0, 1/4)
    CHECK_THROWS_AS(append_digits(num, Rational(1, 4), 8), TargetOutsideInterval);
    CHECK_THROWS_AS(append_digits(num, Rational(0), 8), TargetOutsideInterval);
    CHECK_THROWS_AS(append_digits(num, Rational(3, 4), 8), TargetOutsideInterval);
}

TEST_CASE("append_digits leaves the residual below the final weight") {
    const auto num = bin(0, {0});
    const Rational target(1, 3);  // not a finite binary number
    const auto extended = append_digits(num, target, 6);
    CHECK(extended.size() == 7);
    CHECK((value_of(extended) - target).abs() < Rational::power_of(2, -6));
    CHECK(representation_interval(extended).contains(target));
}

TEST_CASE("exact_extension_exists matches its closed form") {
    const auto num = bin(0, {1, -1, -1, -1});  // 1/8, D = 3
    CHECK(exact_extension_exists(num, Rational(3, 16), 1));
    CHECK_FALSE(exact_extension_exists(num, Rational(1, 4), 1));
    CHECK_FALSE(exact_extension_exists(num, Rational(1, 4), 12));

    const auto zero = bin(0, {0});
    CHECK_FALSE(exact_extension_exists(zero, Rational(1, 3), 8));

    // Oracle comparison: the predicate agrees with full enumeration.
    for (int k = 1; k <= 4; ++k) {
        const auto reachable = enumerate_extension_values(num, k);
        const Rational step = Rational::power_of(2, -(3 + k));
        for (long m = -(1L << (k + 1)); m <= (1L << (k + 1)); ++m) {
            const Rational target = value_of(num) + Rational(m) * step;
            CHECK(exact_extension_exists(num, target, static_cast<std::size_t>(k)) ==
                  (reachable.count(target) == 1));
        }
    }
}

TEST_CASE("reachable values form the centered lattice") {
    // With gamma = r-1, k appended digits reach exactly
    // value + m * r^-(D+k) for |m| <= r^k - 1. Exhaustive for r = 3.
    const DigitSet ds(3, 2);
    const SignedDigitNumber num(ds, 0, {1, -2});  // 1/3, D = 1
    for (int k = 1; k <= 3; ++k) {
        std::set<Rational> expected;
        const Rational step = Rational::power_of(3, -(1 + k));
        long bound = 1;
        for (int i = 0; i < k; ++i) {
            bound *= 3;
        }
        for (long m = -(bound - 1); m <= bound - 1; ++m) {
            expected.insert(value_of(num) + Rational(m) * step);
        }
        CHECK(enumerate_extension_values(num, k) == expected);
    }
}

TEST_CASE("append_digits round-trips whenever an exact extension exists") {
    const auto num = bin(0, {1, -1});
    for (long m = -70; m <= 70; ++m) {
        const Rational target = value_of(num) + Rational(m, 128);  // step 2^-7, D=1
        for (std::size_t k = 1; k <= 6; ++k) {
            if (!exact_extension_exists(num, target, k)) {
                continue;
            }
            const auto extended = append_digits(num, target, k);
            CHECK(value_of(extended) == target);
            CHECK(std::equal(num.digits().begin(), num.digits().end(),
                             extended.digits().begin()));
            CHECK(extended.size() <= num.size() + k);
        }
    }
}

TEST_CASE("to_nonredundant rewrites with conventional digits") {
    const auto a = to_nonredundant(bin(0, {1, -1, -1, -1}));
    CHECK(a.digits() == std::vector<long>{0, 0, 0, 1});
    CHECK(value_of(a) == Rational(1, 8));

    const auto z = to_nonredundant(bin(0, {0, 0}));
    CHECK(z.digits() == std::vector<long>{0, 0});

    const auto b = to_nonredundant(bin(0, {1, -1, 1, 0}));
    CHECK(b.digits() == std::vector<long>{0, 1, 1, 0});
    CHECK(value_of(b) == Rational(3, 4));

    const auto neg = to_nonredundant(bin(0, {-1, 1, 1}));  // -1/4
    CHECK(value_of(neg) == Rational(-1, 4));
    for (long d : neg.digits()) {
        CHECK(d <= 0);
    }
}

TEST_CASE("to_nonredundant preserves value over the full radix-3 cube") {
    const DigitSet ds(3, 2);
    std::vector<long> digits(3, -2);
    for (;;) {
        const SignedDigitNumber num(ds, 0, digits);
        const auto conv = to_nonredundant(num);
        CHECK(value_of(conv) == value_of(num));
        const int sign = value_of(num).sign();
        for (long d : conv.digits()) {
            CHECK(d * sign >= 0);
            CHECK(std::abs(d) <= 2);
        }
        int pos = 2;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 2) {
            digits[static_cast<std::size_t>(pos)] = -2;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++digits[static_cast<std::size_t>(pos)];
    }
}

TEST_CASE("common_prefix_len") {
    const auto five = bin(0, {1, -1, 0, 0, 1});
    const auto six = bin(0, {1, -1, 0, 0, 0, -1});
    CHECK(common_prefix_len(five, six) == 4);
    CHECK(common_prefix_len(six, five) == 4);

    CHECK(common_prefix_len(five, five) == five.size());

    const auto one = bin(0, {1, 0, 0, 0});
    const auto two = bin(0, {1, -1, -1, -1});
    CHECK(common_prefix_len(one, two) == 1);

    CHECK_THROWS_AS(common_prefix_len(five, bin(1, {1, 0})), MismatchedFormat);
    CHECK_THROWS_AS(
        common_prefix_len(five, SignedDigitNumber(DigitSet(3, 2), 0, {1, -1})),
        MismatchedFormat);
}

TEST_CASE("encode_value picks the smallest nonnegative exponent") {
    const DigitSet ds(2, 1);
    const auto one = encode_value(Rational(1), ds, 8);
    CHECK(one.msd_exponent() == 0);
    CHECK(one.digits() == std::vector<long>{1});

    const auto frac = encode_value(Rational(1, 8), ds, 8);
    CHECK(frac.msd_exponent() == 0);
    CHECK(value_of(frac) == Rational(1, 8));

    const auto big = encode_value(Rational(5), ds, 8);
    CHECK(big.msd_exponent() == 2);
    CHECK(value_of(big) == Rational(5));
    CHECK(big.size() >= 3);  // integer part is always emitted

    const auto zero = encode_value(Rational(0), ds, 8);
    CHECK(zero.digits() == std::vector<long>{0});

    CHECK_THROWS_AS(encode_value(Rational(1, 3), ds, 16),
                    ExactRepresentationExceedsBudget);
}
