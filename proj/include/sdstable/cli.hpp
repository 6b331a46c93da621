#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdstable/rational.hpp"
#include "sdstable/signed_digit.hpp"

namespace sdstable::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;  // malformed input / usage
inline constexpr int kExitMath = 3;   // mathematical precondition violated

/// One element of the built-in reference sequence (limit 1/2, radix 2).
struct Table1Row {
    int element = 0;  // 1-based
    Rational value;
    sdrep::SignedDigitNumber binary_form;
    sdrep::SignedDigitNumber reference_redundant;
    sdrep::SignedDigitNumber constructed;
    Rational distance;
    std::size_t stable_prefix = 0;  // of the constructed representation
};

struct Table1Report {
    Rational limit;
    std::vector<Table1Row> rows;
    bool verified = false;  // reference forms re-evaluated and round-tripped
};

/// Builds the reference table: the stored redundant and binary forms are
/// re-evaluated against the stored values, every rendered string is parsed
/// back, and a greedy trace of the same sequence is attached.
Table1Report make_table1_report();

/// Full command-line entry point; argv-style args without the program
/// name. Returns the process exit code and never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdstable::cli
