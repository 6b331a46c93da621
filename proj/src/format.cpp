#include "sdstable/format.hpp"

#include <fstream>
#include <sstream>

namespace sdstable::format {

namespace {

long parse_long_field(std::istringstream& in, const std::string& key) {
    std::string token;
    if (!(in >> token) || token.rfind(key + "=", 0) != 0) {
        throw ParseError("expected '" + key + "=<int>' in signed-digit string");
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(token.substr(key.size() + 1), &used);
        if (used != token.size() - key.size() - 1) {
            throw std::invalid_argument(token);
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer in '" + token + "'");
    }
}

}  // namespace

std::string render_sd(const sdrep::SignedDigitNumber& num) {
    std::ostringstream out;
    out << "SD r=" << num.digit_set().radix() << " g=" << num.digit_set().gamma()
        << " e=" << num.msd_exponent() << " :";
    for (long d : num.digits()) {
        out << ' ' << d;
    }
    return out.str();
}

sdrep::SignedDigitNumber parse_sd(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string head;
    if (!(in >> head) || head != "SD") {
        throw ParseError("signed-digit string must start with 'SD'");
    }
    const long radix = parse_long_field(in, "r");
    const long gamma = parse_long_field(in, "g");
    const long exponent = parse_long_field(in, "e");
    std::string colon;
    if (!(in >> colon) || colon != ":") {
        throw ParseError("expected ':' before the digits");
    }
    std::vector<long> digits;
    long d = 0;
    while (in >> d) {
        digits.push_back(d);
    }
    if (!in.eof()) {
        throw ParseError("trailing junk after digits");
    }
    try {
        return sdrep::SignedDigitNumber(sdrep::DigitSet(radix, gamma), exponent,
                                        std::move(digits));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

std::string render_sd_marked(const sdrep::SignedDigitNumber& num, std::size_t stable_len) {
    if (stable_len > num.size()) {
        stable_len = num.size();
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        if (i == stable_len) {
            out << "| ";
        }
        out << num.digits()[i];
    }
    if (stable_len == num.size()) {
        out << " |";
    }
    return out.str();
}

nlohmann::json sd_to_json(const sdrep::SignedDigitNumber& num) {
    return nlohmann::json{{"radix", num.digit_set().radix()},
                          {"gamma", num.digit_set().gamma()},
                          {"msd_exponent", num.msd_exponent()},
                          {"digits", num.digits()}};
}

sdrep::SignedDigitNumber sd_from_json(const nlohmann::json& j) {
    try {
        return sdrep::SignedDigitNumber(
            sdrep::DigitSet(j.at("radix").get<long>(), j.at("gamma").get<long>()),
            j.at("msd_exponent").get<long>(), j.at("digits").get<std::vector<long>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad signed-digit JSON: ") + e.what());
    }
}

nlohmann::json rational_to_json(const Rational& r) {
    return r.str();
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw ParseError("rational values must be \"num/den\" strings");
    }
    return Rational::from_string(j.get<std::string>());
}

void write_trace_csv(std::ostream& os, const stability::DigitTrace& trace) {
    os << "iteration,value_num,value_den,distance_num,distance_den,"
          "sd_string,stable_prefix_len\n";
    for (std::size_t n = 0; n < trace.representations.size(); ++n) {
        const Rational v = sdrep::value_of(trace.representations[n]);
        os << n << ',' << v.num_str() << ',' << v.den_str() << ','
           << trace.distances[n].num_str() << ',' << trace.distances[n].den_str() << ','
           << render_sd(trace.representations[n]) << ',' << trace.stable_prefix[n]
           << '\n';
    }
}

nlohmann::json trace_to_json(const stability::DigitTrace& trace) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 0; n < trace.representations.size(); ++n) {
        const Rational v = sdrep::value_of(trace.representations[n]);
        rows.push_back({{"iteration", n},
                        {"value", rational_to_json(v)},
                        {"distance", rational_to_json(trace.distances[n])},
                        {"representation", sd_to_json(trace.representations[n])},
                        {"stable_prefix_len", trace.stable_prefix[n]},
                        {"reused_prefix_len", trace.reused_prefix[n]},
                        {"exact", static_cast<bool>(trace.exact[n])}});
    }
    return nlohmann::json{{"component_index", trace.component_index},
                          {"records", std::move(rows)}};
}

namespace {

std::vector<Rational> rational_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(what) + " must be a nonempty array");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

}  // namespace

solvers::StationarySplitting StationaryProblem::make_splitting() const {
    switch (kind) {
        case solvers::SplittingKind::Jacobi:
            return solvers::StationarySplitting::jacobi(a, b);
        case solvers::SplittingKind::GaussSeidel:
            return solvers::StationarySplitting::gauss_seidel(a, b);
        case solvers::SplittingKind::Sor:
            return solvers::StationarySplitting::sor(a, b, omega);
    }
    throw InputError("unknown splitting kind");
}

StationaryProblem stationary_problem_from_json(const nlohmann::json& j) {
    try {
        const auto& rows = j.at("A");
        if (!rows.is_array() || rows.empty()) {
            throw ParseError("\"A\" must be a nonempty array of rows");
        }
        const std::size_t n = rows.size();
        solvers::RationalMatrix a(n, rows.front().size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = rows[i];
            if (!row.is_array() || row.size() != a.cols()) {
                throw ParseError("matrix rows must have equal length");
            }
            for (std::size_t k = 0; k < a.cols(); ++k) {
                a.at(i, k) = rational_from_json(row[k]);
            }
        }
        StationaryProblem p{std::move(a),
                            rational_vector(j.at("b"), "\"b\""),
                            solvers::SplittingKind::Jacobi,
                            Rational(1),
                            rational_vector(j.at("x0"), "\"x0\""),
                            j.at("iters").get<std::size_t>()};
        const auto& split = j.at("splitting");
        const std::string kind = split.at("kind").get<std::string>();
        if (kind == "jacobi") {
            p.kind = solvers::SplittingKind::Jacobi;
        } else if (kind == "gauss_seidel") {
            p.kind = solvers::SplittingKind::GaussSeidel;
        } else if (kind == "sor") {
            p.kind = solvers::SplittingKind::Sor;
            p.omega = rational_from_json(split.at("omega"));
        } else {
            throw ParseError("splitting kind must be jacobi, gauss_seidel or sor");
        }
        if (p.iters < 1) {
            throw ParseError("\"iters\" must be at least 1");
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad stationary problem: ") + e.what());
    }
}

NewtonProblem newton_problem_from_json(const nlohmann::json& j) {
    try {
        NewtonProblem p{solvers::RationalPolynomial(
                            rational_vector(j.at("poly"), "\"poly\"")),
                        rational_from_json(j.at("x0")), j.at("iters").get<std::size_t>(),
                        j.at("digit_budget").get<long>()};
        if (p.iters < 1) {
            throw ParseError("\"iters\" must be at least 1");
        }
        if (p.digit_budget < 1) {
            throw ParseError("\"digit_budget\" must be at least 1");
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad newton problem: ") + e.what());
    }
}

stability::IterateSequence sequence_from_json(const nlohmann::json& j) {
    try {
        stability::IterateSequence seq;
        seq.fixed_point = rational_vector(j.at("fixed_point"), "\"fixed_point\"");
        seq.dimension = seq.fixed_point.size();
        const auto& iterates = j.at("iterates");
        if (!iterates.is_array() || iterates.empty()) {
            throw ParseError("\"iterates\" must be a nonempty array");
        }
        for (const auto& row : iterates) {
            seq.iterates.push_back(rational_vector(row, "iterate"));
        }
        seq.validate();
        return seq;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad sequence file: ") + e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
}

}  // namespace sdstable::format
