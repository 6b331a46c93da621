#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdstable/digit_set.hpp"
#include "sdstable/fejer.hpp"
#include "sdstable/sequence.hpp"
#include "sdstable/signed_digit.hpp"

namespace sdstable::stability {

/// Per-component record of how one coordinate of a Fejér monotone sequence
/// is represented across iterations.
///
/// stable_prefix[n] is the number of leading digits representation n shares
/// with every later representation (for the last element, its own length).
/// reused_prefix[n] is the number of digits kept verbatim from
/// representation n-1 when representation n was built; 0 marks a fresh
/// encoding (always the case at n = 0).
struct DigitTrace {
    std::size_t component_index = 0;
    std::vector<sdrep::SignedDigitNumber> representations;
    std::vector<std::size_t> stable_prefix;
    std::vector<Rational> distances;
    std::vector<std::size_t> reused_prefix;
    std::vector<bool> exact;
};

struct TraceOptions {
    /// New digits allowed per iterate beyond the reused prefix (integer
    /// positions of a fresh encoding are not counted against this).
    std::size_t max_digits_per_step = 64;
    /// Hard cap on any single representation's length.
    std::size_t max_total_digits = 4096;
    /// When set, an iterate that is not exactly representable within the
    /// budget is kept truncated and flagged instead of raising an error.
    bool allow_inexact = false;
};

/// Builds one DigitTrace per component of a Fejér monotone sequence.
///
/// Each iterate is represented by appending greedy digits to the longest
/// prefix of the previous representation whose open representation
/// interval strictly contains the new value. The full previous
/// representation is used whenever the value lies in its interval; a fresh
/// encoding happens only at the first iterate or when the value has
/// outgrown the component's msd exponent.
///
/// Throws NotFejerMonotone (with the violating index) when the sequence is
/// not monotone, and ExactRepresentationExceedsBudget when an iterate is
/// not a finite radix-r number within the budget (unless allow_inexact).
std::vector<DigitTrace> build_stable_trace(const IterateSequence& seq,
                                           const sdrep::DigitSet& digit_set,
                                           const TraceOptions& options);

std::vector<DigitTrace> build_stable_trace(const IterateSequence& seq,
                                           const sdrep::DigitSet& digit_set,
                                           std::size_t max_digits_per_step);

/// Smallest iterate index n at which every component's stable prefix
/// covers all digit positions of weight >= r^-digits (i.e. the first D
/// most significant digits, in the sense of the representation's own
/// exponent, never change afterwards). nullopt when never reached.
std::optional<std::size_t> observed_stabilization_index(
    const std::vector<DigitTrace>& traces, long digits);

}  // namespace sdstable::stability
