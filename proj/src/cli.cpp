#include "sdstable/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdstable/fejer.hpp"
#include "sdstable/format.hpp"
#include "sdstable/newton.hpp"
#include "sdstable/stationary.hpp"
#include "sdstable/trace.hpp"

namespace sdstable::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using sdrep::DigitSet;
using sdrep::SignedDigitNumber;
using stability::DigitTrace;
using stability::IterateSequence;

constexpr std::size_t kDefaultMaxDigits = 4096;

// Reference oscillating sequence converging to 1/2 (radix 2, gamma 1),
// with its conventional binary forms and one valid redundant form each.
struct ReferenceElement {
    long num;
    long den;
    std::vector<long> binary;
    std::vector<long> redundant;
};

const std::vector<ReferenceElement>& reference_elements() {
    static const std::vector<ReferenceElement> table = {
        {1, 1, {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0}},
        {1, 8, {0, 0, 0, 1, 0, 0, 0}, {1, -1, -1, -1}},
        {3, 4, {0, 1, 1, 0, 0, 0, 0}, {1, -1, 1, 0}},
        {3, 8, {0, 0, 1, 1, 0, 0, 0}, {1, -1, 0, -1}},
        {9, 16, {0, 1, 0, 0, 1, 0, 0}, {1, -1, 0, 0, 1}},
        {15, 32, {0, 0, 1, 1, 1, 1, 0}, {1, -1, 0, 0, 0, -1}},
        {33, 64, {0, 1, 0, 0, 0, 0, 1}, {1, -1, 0, 0, 0, 0, 1}},
    };
    return table;
}

std::size_t max_digit_cap() {
    const char* env = std::getenv("SDSTABLE_MAX_DIGITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxDigits;
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 8) {
            throw std::invalid_argument(env);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("SDSTABLE_MAX_DIGITS must be an integer >= 8");
    }
}

// Digits with a radix point after the weight-r^0 position and each digit
// in its own brackets, e.g. "[1].[-1][0][-1]".
std::string pointed_digits(const SignedDigitNumber& num) {
    std::ostringstream out;
    const long point_after = num.msd_exponent();  // 0-based digit index
    for (std::size_t i = 0; i < num.size(); ++i) {
        out << '[' << num.digits()[i] << ']';
        if (static_cast<long>(i) == point_after && i + 1 < num.size()) {
            out << '.';
        }
    }
    return out.str();
}

struct StabilizationRow {
    long digits = 0;
    std::optional<std::size_t> observed;
    std::optional<long> predicted;
};

std::vector<StabilizationRow> stabilization_table(const std::vector<DigitTrace>& traces,
                                                  const IterateSequence& seq,
                                                  const std::optional<Rational>& lipschitz,
                                                  long radix, long target_digits) {
    std::vector<StabilizationRow> rows;
    rows.reserve(static_cast<std::size_t>(target_digits));
    for (long d = 1; d <= target_digits; ++d) {
        StabilizationRow row;
        row.digits = d;
        row.observed = stability::observed_stabilization_index(traces, d);
        if (lipschitz && *lipschitz < Rational(1) && seq.iterates.size() >= 2) {
            row.predicted = stability::predict_stability_index(
                *lipschitz, seq.iterates[0], seq.iterates[1], d, radix);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_trace_files(const fs::path& dir, const std::vector<DigitTrace>& traces,
                       json& summary, std::ostream& out) {
    fs::create_directories(dir);
    json components = json::array();
    for (const DigitTrace& t : traces) {
        const std::string stem = "component_" + std::to_string(t.component_index);
        {
            std::ofstream csv(dir / (stem + ".csv"));
            format::write_trace_csv(csv, t);
        }
        {
            std::ofstream js(dir / (stem + ".json"));
            js << format::trace_to_json(t).dump(2) << '\n';
        }
        components.push_back(stem);
    }
    summary["components"] = components;
    out << "trace files written to " << dir.string() << "\n";
}

void print_stabilization(std::ostream& out, const std::vector<StabilizationRow>& rows) {
    out << "digit stabilization (observed first index vs. predicted bound):\n";
    for (const auto& row : rows) {
        out << "  D=" << std::setw(2) << row.digits << "  observed ";
        if (row.observed) {
            out << std::setw(4) << *row.observed;
        } else {
            out << "   -";
        }
        out << "  predicted ";
        if (row.predicted) {
            out << std::setw(4) << *row.predicted;
        } else {
            out << "   -";
        }
        out << "\n";
    }
}

json stabilization_to_json(const std::vector<StabilizationRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json r{{"digits", row.digits}};
        r["observed"] = row.observed ? json(*row.observed) : json(nullptr);
        r["predicted"] = row.predicted ? json(*row.predicted) : json(nullptr);
        arr.push_back(std::move(r));
    }
    return arr;
}

// ---- table1 ----------------------------------------------------------

int cmd_table1(const std::string& fmt, std::ostream& out) {
    const Table1Report report = make_table1_report();
    if (!report.verified) {
        throw MathError("reference table failed self-verification");
    }
    if (fmt == "text") {
        out << "reference sequence converging to " << report.limit.decimal_str()
            << " (radix 2, digit set {-1, 0, 1})\n\n";
        out << std::left << std::setw(9) << "element" << std::setw(11) << "standard"
            << std::setw(24) << "binary" << std::setw(26) << "redundant (reference)"
            << std::setw(26) << "redundant (constructed)" << "distance\n";
        for (const auto& row : report.rows) {
            out << std::left << std::setw(9) << row.element << std::setw(11)
                << row.value.decimal_str() << std::setw(24)
                << pointed_digits(row.binary_form) << std::setw(26)
                << pointed_digits(row.reference_redundant) << std::setw(26)
                << pointed_digits(row.constructed) << row.distance.decimal_str() << "\n";
        }
        out << "\nconstructed forms come from the greedy prefix-extending trace;\n"
               "both redundant columns evaluate exactly to the standard value.\n";
    } else if (fmt == "csv") {
        out << "element,value_num,value_den,distance_num,distance_den,"
               "binary,reference_redundant,constructed_redundant,stable_prefix_len\n";
        for (const auto& row : report.rows) {
            out << row.element << ',' << row.value.num_str() << ',' << row.value.den_str()
                << ',' << row.distance.num_str() << ',' << row.distance.den_str() << ','
                << format::render_sd(row.binary_form) << ','
                << format::render_sd(row.reference_redundant) << ','
                << format::render_sd(row.constructed) << ',' << row.stable_prefix << '\n';
        }
    } else {  // json
        json rows = json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"element", row.element},
                            {"value", format::rational_to_json(row.value)},
                            {"distance", format::rational_to_json(row.distance)},
                            {"binary", format::sd_to_json(row.binary_form)},
                            {"reference_redundant",
                             format::sd_to_json(row.reference_redundant)},
                            {"constructed", format::sd_to_json(row.constructed)},
                            {"stable_prefix_len", row.stable_prefix}});
        }
        out << json{{"limit", format::rational_to_json(report.limit)},
                    {"verified", report.verified},
                    {"rows", std::move(rows)}}
                   .dump(2)
            << '\n';
    }
    return kExitOk;
}

// ---- stationary ------------------------------------------------------

int cmd_stationary(const std::string& problem_path, long radix, long target_digits,
                   bool require_stable, const std::string& out_dir, std::ostream& out) {
    const format::StationaryProblem problem =
        format::stationary_problem_from_json(format::load_json_file(problem_path));
    const solvers::StationarySplitting split = problem.make_splitting();

    const Rational lipschitz = solvers::stationary_lipschitz(split);
    const bool contractive = lipschitz < Rational(1);
    const char* kind_name = problem.kind == solvers::SplittingKind::Jacobi ? "jacobi"
                            : problem.kind == solvers::SplittingKind::GaussSeidel
                                ? "gauss_seidel"
                                : "sor";

    out << "stationary solver: " << kind_name << ", dimension " << split.dimension()
        << ", radix " << radix << ", iterations " << problem.iters << "\n";
    out << "lipschitz constant L = " << lipschitz.str() << "\n";
    json summary{{"command", "stationary"},
                 {"splitting", kind_name},
                 {"radix", radix},
                 {"iterations", problem.iters},
                 {"lipschitz", format::rational_to_json(lipschitz)},
                 {"contractive", contractive}};

    if (!contractive) {
        out << "verdict: no guarantee (L >= 1); digit stability is not assured\n";
        if (require_stable) {
            out << "failing because --require-stable was given\n";
            return kExitMath;
        }
    } else {
        out << "verdict: contractive (L < 1); digit stability guaranteed\n";
    }

    const IterateSequence seq = solvers::run_stationary(split, problem.x0, problem.iters);
    {
        out << "exact fixed point: (";
        for (std::size_t i = 0; i < seq.fixed_point.size(); ++i) {
            out << (i ? ", " : "") << seq.fixed_point[i].str();
        }
        out << ")\n";
    }

    if (auto violation = stability::first_fejer_violation(seq)) {
        out << "sequence is not Fejér monotone at index " << (*violation + 1)
            << "; no trace emitted\n";
        summary["fejer_monotone"] = false;
        summary["violating_index"] = *violation;
        fs::create_directories(out_dir);
        std::ofstream js(fs::path(out_dir) / "summary.json");
        js << summary.dump(2) << '\n';
        return contractive ? kExitMath : kExitOk;
    }
    summary["fejer_monotone"] = true;

    stability::TraceOptions options;
    options.max_total_digits = max_digit_cap();
    options.max_digits_per_step = std::min<std::size_t>(256, options.max_total_digits);
    const auto traces =
        stability::build_stable_trace(seq, DigitSet::maximal(radix), options);

    const auto stab = stabilization_table(
        traces, seq, contractive ? std::optional<Rational>(lipschitz) : std::nullopt,
        radix, target_digits);
    print_stabilization(out, stab);
    summary["stabilization"] = stabilization_to_json(stab);

    write_trace_files(out_dir, traces, summary, out);
    std::ofstream js(fs::path(out_dir) / "summary.json");
    js << summary.dump(2) << '\n';
    return kExitOk;
}

// ---- newton ----------------------------------------------------------

int cmd_newton(const std::string& problem_path, long radix, long target_digits,
               std::size_t samples, const std::string& out_dir, std::ostream& out) {
    const format::NewtonProblem problem =
        format::newton_problem_from_json(format::load_json_file(problem_path));

    const solvers::NewtonRun run = solvers::run_newton(
        problem.poly, problem.x0, problem.iters, problem.digit_budget, radix);
    const IterateSequence& seq = run.sequence;

    out << "newton run: degree " << problem.poly.degree() << " polynomial, x0 = "
        << problem.x0.str() << ", radix " << radix << ", digit budget "
        << problem.digit_budget << "\n";
    if (run.derivative_zero_at) {
        out << "run truncated at iteration " << *run.derivative_zero_at
            << ": derivative became zero\n";
    }
    out << "fixed point (bisected): " << seq.fixed_point[0].str() << "\n";

    json summary{{"command", "newton"},
                 {"radix", radix},
                 {"digit_budget", problem.digit_budget},
                 {"iterations", seq.iterates.size() - 1},
                 {"truncated_at", run.derivative_zero_at
                                      ? json(*run.derivative_zero_at)
                                      : json(nullptr)},
                 {"fixed_point", format::rational_to_json(seq.fixed_point[0])}};

    // Contraction of the Newton map sampled over the span of the run.
    std::optional<Rational> estimate;
    {
        Rational lo = seq.fixed_point[0];
        Rational hi = lo;
        for (const auto& it : seq.iterates) {
            lo = std::min(lo, it[0]);
            hi = std::max(hi, it[0]);
        }
        const Rational pad = Rational::power_of(radix, -2);
        try {
            estimate = solvers::newton_contraction(
                problem.poly, OpenInterval(lo - pad, hi + pad), samples);
            out << "sampled contraction estimate: " << estimate->str()
                << (*estimate < Rational(1) ? " (< 1)" : " (not < 1)") << "\n";
        } catch (const DerivativeZero&) {
            out << "sampled contraction estimate: unavailable "
                   "(derivative vanishes in the sampled range)\n";
        }
    }
    summary["contraction_estimate"] =
        estimate ? format::rational_to_json(*estimate) : json(nullptr);

    if (auto violation = stability::first_fejer_violation(seq)) {
        throw NotFejerMonotone("rounded newton sequence is not Fejér monotone at index " +
                                   std::to_string(*violation + 1),
                               *violation);
    }

    stability::TraceOptions options;
    options.max_total_digits = max_digit_cap();
    options.max_digits_per_step =
        std::min<std::size_t>(static_cast<std::size_t>(problem.digit_budget) + 8,
                              options.max_total_digits);
    const auto traces =
        stability::build_stable_trace(seq, DigitSet::maximal(radix), options);

    out << "stable prefix growth:\n";
    const DigitTrace& t = traces.front();
    for (std::size_t n = 0; n < t.representations.size(); ++n) {
        out << "  iter " << std::setw(2) << n << "  value "
            << sdrep::value_of(t.representations[n]).str() << "  stable "
            << std::setw(3) << t.stable_prefix[n] << "  "
            << format::render_sd_marked(t.representations[n],
                                         t.stable_prefix[n])
            << "\n";
    }

    const auto stab = stabilization_table(
        traces, seq,
        estimate && *estimate < Rational(1) ? estimate : std::nullopt, radix,
        target_digits);
    print_stabilization(out, stab);
    out << "(prediction uses the sampled contraction estimate and bounds when the\n"
           " distance condition holds; the built representation may lag by a step)\n";
    summary["stabilization"] = stabilization_to_json(stab);

    write_trace_files(out_dir, traces, summary, out);
    std::ofstream js(fs::path(out_dir) / "summary.json");
    js << summary.dump(2) << '\n';
    return kExitOk;
}

// ---- trace -----------------------------------------------------------

int cmd_trace(const std::string& sequence_path, long radix, const std::string& out_dir,
              std::ostream& out) {
    const IterateSequence seq =
        format::sequence_from_json(format::load_json_file(sequence_path));

    if (auto violation = stability::first_fejer_violation(seq)) {
        throw NotFejerMonotone("sequence is not Fejér monotone at index " +
                                   std::to_string(*violation + 1),
                               *violation);
    }

    stability::TraceOptions options;
    options.max_total_digits = max_digit_cap();
    options.max_digits_per_step = std::min<std::size_t>(256, options.max_total_digits);
    const auto traces =
        stability::build_stable_trace(seq, DigitSet::maximal(radix), options);

    out << "sequence of " << seq.iterates.size() << " iterates, dimension "
        << seq.dimension << ", radix " << radix << ": Fejér monotone\n";
    for (const DigitTrace& t : traces) {
        out << "component " << t.component_index << ":\n";
        for (std::size_t n = 0; n < t.representations.size(); ++n) {
            out << "  iter " << std::setw(2) << n << "  stable " << std::setw(3)
                << t.stable_prefix[n] << "  "
                << format::render_sd_marked(t.representations[n], t.stable_prefix[n])
                << "\n";
        }
    }

    json summary{{"command", "trace"},
                 {"radix", radix},
                 {"iterations", seq.iterates.size()},
                 {"dimension", seq.dimension},
                 {"fejer_monotone", true}};
    write_trace_files(out_dir, traces, summary, out);
    std::ofstream js(fs::path(out_dir) / "summary.json");
    js << summary.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

Table1Report make_table1_report() {
    const DigitSet ds(2, 1);
    Table1Report report;
    report.limit = Rational(1, 2);

    IterateSequence seq;
    seq.dimension = 1;
    seq.fixed_point = {report.limit};
    for (const auto& el : reference_elements()) {
        seq.iterates.push_back({Rational(el.num, el.den)});
    }
    const auto traces = stability::build_stable_trace(seq, ds, 16);
    const DigitTrace& trace = traces.front();

    report.verified = true;
    for (std::size_t i = 0; i < reference_elements().size(); ++i) {
        const auto& el = reference_elements()[i];
        Table1Row row{static_cast<int>(i + 1),
                      Rational(el.num, el.den),
                      SignedDigitNumber(ds, 0, el.binary),
                      SignedDigitNumber(ds, 0, el.redundant),
                      trace.representations[i],
                      (Rational(el.num, el.den) - report.limit).abs(),
                      trace.stable_prefix[i]};
        // Every stored form must evaluate to the stored value, and every
        // rendered string must parse back to the same digits.
        if (!(sdrep::value_of(row.binary_form) == row.value) ||
            !(sdrep::value_of(row.reference_redundant) == row.value) ||
            !(sdrep::value_of(row.constructed) == row.value)) {
            report.verified = false;
        }
        for (const auto* num :
             {&row.binary_form, &row.reference_redundant, &row.constructed}) {
            if (!(format::parse_sd(format::render_sd(*num)) == *num)) {
                report.verified = false;
            }
        }
        // The conventional rewrite of the redundant form must agree with
        // the stored binary column up to trailing zeros.
        {
            auto trimmed = [](std::vector<long> d) {
                while (d.size() > 1 && d.back() == 0) {
                    d.pop_back();
                }
                return d;
            };
            const auto conventional = sdrep::to_nonredundant(row.reference_redundant);
            if (trimmed(conventional.digits()) != trimmed(row.binary_form.digits())) {
                report.verified = false;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed-digit stability explorer: exact redundant number "
                 "representations over Fejér monotone iterations"};
    app.require_subcommand(1);

    std::string fmt = "text";
    auto* table1 = app.add_subcommand(
        "table1", "Print the built-in reference sequence with binary and "
                  "redundant signed-digit forms");
    table1->add_option("--format", fmt, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string problem_path;
    std::string sequence_path;
    std::string out_dir;
    long radix = 2;
    long digits = 8;
    bool require_stable = false;
    std::size_t samples = 33;

    auto* stationary = app.add_subcommand(
        "stationary", "Run a stationary linear solver and trace digit stability");
    stationary->add_option("--problem", problem_path, "Problem file (JSON)")->required();
    stationary->add_option("--radix", radix, "Representation radix (gamma = radix-1)")
        ->check(CLI::Range(2L, 64L));
    stationary->add_option("--digits", digits, "Target number of stable digits")
        ->check(CLI::Range(1L, 4096L));
    stationary->add_flag("--require-stable", require_stable,
                         "Exit nonzero when stability cannot be guaranteed");
    stationary->add_option("--out", out_dir, "Output directory")->required();

    auto* newton = app.add_subcommand(
        "newton", "Run Newton's method on a polynomial and trace digit stability");
    newton->add_option("--problem", problem_path, "Problem file (JSON)")->required();
    newton->add_option("--radix", radix, "Representation radix (gamma = radix-1)")
        ->check(CLI::Range(2L, 64L));
    newton->add_option("--digits", digits, "Target number of stable digits")
        ->check(CLI::Range(1L, 4096L));
    newton->add_option("--samples", samples, "Grid size for the contraction estimate")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    newton->add_option("--out", out_dir, "Output directory")->required();

    auto* trace = app.add_subcommand(
        "trace", "Trace digit stability of a user-supplied iterate sequence");
    trace->add_option("--sequence", sequence_path, "Sequence file (JSON)")->required();
    trace->add_option("--radix", radix, "Representation radix (gamma = radix-1)")
        ->check(CLI::Range(2L, 64L));
    trace->add_option("--out", out_dir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (table1->parsed()) {
            return cmd_table1(fmt, out);
        }
        if (stationary->parsed()) {
            return cmd_stationary(problem_path, radix, digits, require_stable, out_dir,
                                  out);
        }
        if (newton->parsed()) {
            return cmd_newton(problem_path, radix, digits, samples, out_dir, out);
        }
        if (trace->parsed()) {
            return cmd_trace(sequence_path, radix, out_dir, out);
        }
        err << "error: no command given\n";
        return kExitInput;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace sdstable::cli
