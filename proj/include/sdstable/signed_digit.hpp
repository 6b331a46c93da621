#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdstable/digit_set.hpp"
#include "sdstable/interval.hpp"
#include "sdstable/rational.hpp"

namespace sdstable::sdrep {

/// A finite signed-digit string d1 ... dn with an explicit weight for the
/// leading digit: digit i carries weight r^(e - i + 1), so the exact value
/// is sum_i di * r^(e-i+1).
///
/// frac_digit_count() is n - e - 1, the (nonnegative) count of positions of
/// weight <= 1/r covered by the string; it is the D in the representation
/// interval radius r^(-D). Constructing a number with n < e + 1 (an
/// incomplete integer part) is rejected.
class SignedDigitNumber {
public:
    SignedDigitNumber(DigitSet digit_set, long msd_exponent, std::vector<long> digits);

    const DigitSet& digit_set() const { return digit_set_; }
    long msd_exponent() const { return msd_exponent_; }
    const std::vector<long>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }

    long frac_digit_count() const {
        return static_cast<long>(digits_.size()) - msd_exponent_ - 1;
    }

    /// Same digit set and exponent, keeping only the first `len` digits.
    /// Requires 1 <= len <= size() and len >= msd_exponent + 1.
    SignedDigitNumber prefix(std::size_t len) const;

    friend bool operator==(const SignedDigitNumber& a, const SignedDigitNumber& b) {
        return a.digit_set_ == b.digit_set_ && a.msd_exponent_ == b.msd_exponent_ &&
               a.digits_ == b.digits_;
    }

private:
    DigitSet digit_set_;
    long msd_exponent_;
    std::vector<long> digits_;
};

/// Exact positional valuation: sum_i di * r^(e-i+1).
Rational value_of(const SignedDigitNumber& num);

/// The open set of values reachable from `num` by appending digits:
/// (value - r^(-D), value + r^(-D)) with D = frac_digit_count().
/// Only proven for the maximally redundant digit set; anything narrower
/// is rejected rather than given an unproven interval.
OpenInterval representation_interval(const SignedDigitNumber& num);

/// Extends `num` toward `target` with at most `max_extra` appended digits,
/// never touching the existing digits. Digit selection is greedy: at each
/// new position of weight w, pick the in-range digit nearest to the
/// remaining error (exact halves resolve toward the smaller magnitude,
/// then toward the nonnegative digit). Emission stops as soon as the
/// residual is exactly zero, so at least one digit and at most `max_extra`
/// are appended. If target is exactly reachable within the budget the
/// result's value equals target; otherwise the gap is below
/// r^-(D + max_extra) and target stays inside the result's interval.
SignedDigitNumber append_digits(const SignedDigitNumber& num, const Rational& target,
                                std::size_t max_extra);

/// True iff `target` is exactly reachable from `num` with exactly k
/// appended digits (trailing zeros allowed): the difference must be an
/// integer multiple of r^-(D+k) no larger than r^-D * (1 - r^-k).
bool exact_extension_exists(const SignedDigitNumber& num, const Rational& target,
                            std::size_t k);

/// Rewrites `num` with conventional digits: every output digit has the
/// same sign and magnitude in {0, ..., r-1}. The output carries the
/// maximal digit set for the radix (magnitude r-1 may appear regardless
/// of the input's gamma); exponent and length are preserved.
SignedDigitNumber to_nonredundant(const SignedDigitNumber& num);

/// Length of the longest shared leading digit run. Both numbers must use
/// the same digit set and msd exponent.
std::size_t common_prefix_len(const SignedDigitNumber& a, const SignedDigitNumber& b);

/// Greedy encoding of an arbitrary value from scratch, using the smallest
/// msd exponent e >= 0 with |value| < r^(e+1). At most
/// e + 1 + max_frac_digits digits are produced; a nonzero residual at the
/// budget raises ExactRepresentationExceedsBudget.
SignedDigitNumber encode_value(const Rational& value, const DigitSet& digit_set,
                               std::size_t max_frac_digits);

/// Smallest e >= 0 with |value| < radix^(e+1).
long preferred_msd_exponent(const Rational& value, long radix);

namespace detail {

/// One greedy digit-selection pass shared by append_digits and
/// encode_value. Chooses digits for positions of weight
/// r^first_weight_exp, r^(first_weight_exp-1), ... until `delta` is
/// exhausted, emitting at least `min_digits` and at most `max_digits`.
struct GreedyTail {
    std::vector<long> digits;
    Rational residual;  // delta minus the value of the emitted digits
};

GreedyTail greedy_tail(const DigitSet& digit_set, long first_weight_exp, Rational delta,
                       std::size_t min_digits, std::size_t max_digits);

}  // namespace detail

}  // namespace sdstable::sdrep
