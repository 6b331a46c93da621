#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sdstable/polynomial.hpp"
#include "sdstable/sequence.hpp"
#include "sdstable/signed_digit.hpp"
#include "sdstable/stationary.hpp"
#include "sdstable/trace.hpp"

namespace sdstable::format {

/// Text form of a signed-digit number, e.g. "SD r=2 g=1 e=0 : 1 -1 0 -1".
/// render and parse are exact inverses on every valid number.
std::string render_sd(const sdrep::SignedDigitNumber& num);
sdrep::SignedDigitNumber parse_sd(std::string_view text);

/// Digit string with a '|' between the stable prefix and the live tail,
/// e.g. "1 -1 | 0 -1". stable_len is clamped to the digit count.
std::string render_sd_marked(const sdrep::SignedDigitNumber& num, std::size_t stable_len);

nlohmann::json sd_to_json(const sdrep::SignedDigitNumber& num);
sdrep::SignedDigitNumber sd_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);  // "num/den" string
Rational rational_from_json(const nlohmann::json& j);

/// CSV with the fixed column set
/// (iteration, value_num, value_den, distance_num, distance_den,
///  sd_string, stable_prefix_len).
void write_trace_csv(std::ostream& os, const stability::DigitTrace& trace);

/// JSON array of per-iteration records; representations use the signed-
/// digit JSON form. Carries the reused-prefix length and exactness flag of
/// each step alongside the pinned fields.
nlohmann::json trace_to_json(const stability::DigitTrace& trace);

struct StationaryProblem {
    solvers::RationalMatrix a;
    std::vector<Rational> b;
    solvers::SplittingKind kind = solvers::SplittingKind::Jacobi;
    Rational omega = Rational(1);
    std::vector<Rational> x0;
    std::size_t iters = 0;

    solvers::StationarySplitting make_splitting() const;
};

struct NewtonProblem {
    solvers::RationalPolynomial poly;
    Rational x0;
    std::size_t iters = 0;
    long digit_budget = 0;
};

StationaryProblem stationary_problem_from_json(const nlohmann::json& j);
NewtonProblem newton_problem_from_json(const nlohmann::json& j);

/// {"iterates": [[...], ...], "fixed_point": [...]} with "num/den" values.
stability::IterateSequence sequence_from_json(const nlohmann::json& j);

/// Loads and parses a JSON document, wrapping failures as InputError.
nlohmann::json load_json_file(const std::string& path);

}  // namespace sdstable::format
