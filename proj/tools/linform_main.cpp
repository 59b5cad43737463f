// linform: construct, verify and recognize uniquely-representing pairs of
// coefficient and element sets for linear forms over the nonnegative integers.
//
// Exit codes: 0 success / property holds, 1 property fails (collision found,
// mismatch, infeasible), 2 usage or budget errors.  Machine output goes to
// stdout, diagnostics to stderr.

#include "linform/json_io.hpp"
#include "linform/recognize.hpp"
#include "linform/repcount.hpp"
#include "linform/sets.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace linform;

enum class Format { Text, Json };

struct Options {
    Format format = Format::Json;
    bool allow_uk_one = false;
    std::size_t budget = kDefaultBudget;
};

std::vector<Int> read_integer_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::vector<Int> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        try {
            values.push_back(parse_decimal(line.substr(begin, end - begin + 1)));
        } catch (const Error& e) {
            fail(Errc::ParseError,
                 path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return values;
}

void emit(const Options& options, const Json& json, const std::string& text)
{
    if (options.format == Format::Json)
        std::cout << json.dump() << "\n";
    else
        std::cout << text;
}

std::string join_lines(const std::vector<Int>& values)
{
    std::string out;
    for (const Int& v : values) {
        out += to_decimal(v);
        out += '\n';
    }
    return out;
}

std::size_t parse_budget_env()
{
    const char* raw = std::getenv("LINFORM_BUDGET");
    if (!raw)
        return kDefaultBudget;
    Int value = parse_decimal(raw);
    if (!value.fits_ulong_p())
        fail(Errc::ParseError, "LINFORM_BUDGET out of range");
    return static_cast<std::size_t>(value.get_ui());
}

int run_construct_lambda(const Options& options, const std::string& chain_spec)
{
    ParameterChain chain = parse_chain_spec(chain_spec, options.allow_uk_one);
    CoefficientTuple coeffs = build_coefficients(chain);
    Json json;
    json["chain"] = to_spec_string(chain);
    Json values = Json::array();
    for (const Int& v : coeffs.values)
        values.push_back(to_decimal(v));
    json["coeffs"] = values;
    Json exponents = Json::array();
    for (const Int& e : *coeffs.exponents)
        exponents.push_back(to_decimal(e));
    json["exponents"] = exponents;
    emit(options, json, join_lines(coeffs.values));
    return 0;
}

int run_construct_a(const Options& options, const std::string& chain_spec,
                    const std::string& bound_text)
{
    ParameterChain chain = parse_chain_spec(chain_spec, options.allow_uk_one);
    Int bound = parse_decimal(bound_text);
    std::vector<Int> elements = enumerate_elements(chain, bound);
    Json json;
    json["chain"] = to_spec_string(chain);
    json["bound"] = to_decimal(bound);
    Json values = Json::array();
    for (const Int& v : elements)
        values.push_back(to_decimal(v));
    json["elements"] = values;
    json["count"] = elements.size();
    emit(options, json, join_lines(elements));
    return 0;
}

int run_represent(const Options& options, const std::string& chain_spec,
                  const std::string& n_text)
{
    ParameterChain chain = parse_chain_spec(chain_spec, options.allow_uk_one);
    Representation rep = represent(parse_decimal(n_text), chain);
    std::string text;
    for (const auto& entry : rep.entries)
        text += to_decimal(entry.coeff) + " " + to_decimal(entry.element) + "\n";
    emit(options, to_json(rep), text);
    return 0;
}

int run_count(const Options& options, const std::string& coeffs_path,
              const std::string& elements_path, const std::string& bound_text,
              unsigned cap)
{
    std::vector<Int> coeffs = read_integer_file(coeffs_path);
    std::vector<Int> elements = read_integer_file(elements_path);
    Int bound = parse_decimal(bound_text);
    CountReport report = count_report(coeffs, elements, to_index(bound, options.budget), cap,
                                      options.budget);
    std::string text = report.all_unique
                           ? "count = 1 on [0," + to_decimal(report.bound) + ")\n"
                           : "first deviation at " + to_decimal(*report.first_deviation) +
                                 " (count " + std::to_string(report.first_deviation_count) +
                                 ")\n";
    if (options.format == Format::Json)
        std::cerr << text;
    emit(options, to_json(report), text);
    return report.all_unique ? 0 : 1;
}

int run_verify(const Options& options, const std::string& chain_spec,
               const std::string& case_name)
{
    ParameterChain chain = parse_chain_spec(chain_spec, options.allow_uk_one);
    VerifyCase mode = case_name == "i" ? VerifyCase::I : VerifyCase::II;
    CountReport report = verify_unique_range(chain, mode, options.budget);
    std::string text;
    if (report.ok()) {
        text = "unique on [0," + to_decimal(report.bound) + ")";
        text += "; zero on [" + to_decimal(report.zero_window->first) + "," +
                to_decimal(report.zero_window->second) + ")";
        text += "; zero beyond (max sum " + to_decimal(report.max_sum) + ")\n";
    } else if (report.first_deviation) {
        text = "deviation at " + to_decimal(*report.first_deviation) + " (count " +
               std::to_string(report.first_deviation_count) + ")\n";
    } else {
        text = "verification incomplete\n";
    }
    if (options.format == Format::Json)
        std::cerr << text;
    emit(options, to_json(report), text);
    return report.ok() ? 0 : 1;
}

int run_recognize(const Options& options, const std::string& coeffs_path,
                  const std::string& prefix_path, const std::string& bound_text)
{
    std::vector<Int> coeffs = read_integer_file(coeffs_path);
    std::vector<Int> prefix = read_integer_file(prefix_path);
    RecognitionResult result = recognize(coeffs, prefix, parse_decimal(bound_text));
    std::string text = std::string(verdict_name(result.verdict));
    if (result.chain)
        text += " " + to_spec_string(*result.chain);
    if (!result.reason.empty())
        text += " (" + result.reason + ")";
    text += "\n";
    if (options.format == Format::Json)
        std::cerr << text;
    emit(options, to_json(result), text);
    return result.verdict == Verdict::Mismatch ? 1 : 0;
}

int run_forced_a(const Options& options, const std::string& coeffs_path,
                 const std::string& bound_text)
{
    std::vector<Int> coeffs = read_integer_file(coeffs_path);
    Int bound = parse_decimal(bound_text);
    ForcedPrefix forced =
        forced_elements(coeffs, to_index(bound, options.budget), options.budget);
    std::string text = forced.feasible()
                           ? join_lines(forced.elements)
                           : "infeasible at " + to_decimal(*forced.bad_n) + "\n";
    if (!forced.feasible() && options.format == Format::Json)
        std::cerr << text;
    emit(options, to_json(forced), text);
    return forced.feasible() ? 0 : 1;
}

int run_search(const Options& options, unsigned max_m, std::uint64_t max_coeff,
               const std::string& bound_text)
{
    Int bound = parse_decimal(bound_text);
    SearchReport report =
        search_all(max_m, max_coeff, to_index(bound, options.budget), options.budget);
    bool any_mismatch = false;
    std::string text;
    for (const auto& entry : report.survivors) {
        any_mismatch = any_mismatch || entry.result.verdict == Verdict::Mismatch;
        for (std::size_t i = 0; i < entry.coeffs.size(); ++i)
            text += (i ? "," : "") + to_decimal(entry.coeffs[i]);
        text += " -> ";
        text += verdict_name(entry.result.verdict);
        if (entry.result.chain)
            text += " " + to_spec_string(*entry.result.chain);
        text += "\n";
    }
    std::cerr << std::to_string(report.survivors.size()) + " survivors of " +
                     std::to_string(report.candidates) + " candidates\n";
    emit(options, to_json(report), text);
    return any_mismatch ? 1 : 0;
}

int run_collide(const Options& options, const std::string& coeffs_path,
                const std::string& elements_path, const std::string& bound_text)
{
    std::vector<Int> coeffs = read_integer_file(coeffs_path);
    std::vector<Int> elements = read_integer_file(elements_path);
    Int bound = parse_decimal(bound_text);
    auto witness =
        find_collision(coeffs, elements, to_index(bound, options.budget), options.budget);
    Json json;
    json["found"] = witness.has_value();
    std::string text;
    if (witness) {
        json["witness"] = to_json(*witness);
        text = "collision at " + to_decimal(witness->target) + "\n";
        if (options.format == Format::Json)
            std::cerr << text;
    } else {
        text = "no collision below " + to_decimal(bound) + "\n";
    }
    emit(options, json, text);
    return witness ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact construction, verification and recognition of "
                 "uniquely-representing linear-form systems"};
    app.require_subcommand(1);

    Options options;
    std::string format = "json";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--allow-uk-one", options.allow_uk_one,
                 "accept a trailing u block equal to 1");

    std::string chain_spec, bound_text, n_text, case_name = "i";
    std::string coeffs_path, elements_path, prefix_path;
    unsigned cap = 2;
    unsigned max_m = 2;
    std::uint64_t max_coeff = 4;

    auto* construct_lambda =
        app.add_subcommand("construct-lambda", "coefficient set of a chain");
    construct_lambda->add_option("chain", chain_spec)->required();

    auto* construct_a = app.add_subcommand("construct-a", "element set of a chain");
    construct_a->add_option("chain", chain_spec)->required();
    construct_a->add_option("--bound", bound_text, "exclusive bound")->required();

    auto* represent_cmd =
        app.add_subcommand("represent", "unique representation of an integer");
    represent_cmd->add_option("chain", chain_spec)->required();
    represent_cmd->add_option("n", n_text)->required();

    auto* count_cmd = app.add_subcommand("count", "representation counts over a range");
    count_cmd->add_option("--coeffs", coeffs_path)->required();
    count_cmd->add_option("--elements", elements_path)->required();
    count_cmd->add_option("--bound", bound_text)->required();
    count_cmd->add_option("--cap", cap, "saturation value");

    auto* verify_cmd =
        app.add_subcommand("verify", "exhaustive uniqueness check of a chain");
    verify_cmd->add_option("chain", chain_spec)->required();
    verify_cmd->add_option("--case", case_name)->required()->check(CLI::IsMember({"i", "ii"}));

    auto* recognize_cmd =
        app.add_subcommand("recognize", "recover the chain behind a coefficient/element pair");
    recognize_cmd->add_option("--coeffs", coeffs_path)->required();
    recognize_cmd->add_option("--a-prefix", prefix_path)->required();
    recognize_cmd->add_option("--prefix-bound", bound_text)->required();

    auto* forced_cmd =
        app.add_subcommand("forced-a", "derive the unique element set forced by coefficients");
    forced_cmd->add_option("--coeffs", coeffs_path)->required();
    forced_cmd->add_option("--bound", bound_text)->required();

    auto* search_cmd =
        app.add_subcommand("search", "exhaust small coefficient tuples for viable pairs");
    search_cmd->add_option("--max-m", max_m)->required();
    search_cmd->add_option("--max-coeff", max_coeff)->required();
    search_cmd->add_option("--bound", bound_text)->required();

    auto* collide_cmd =
        app.add_subcommand("collide", "smallest target with two representations");
    collide_cmd->add_option("--coeffs", coeffs_path)->required();
    collide_cmd->add_option("--elements", elements_path)->required();
    collide_cmd->add_option("--bound", bound_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        options.format = format == "text" ? Format::Text : Format::Json;
        options.budget = parse_budget_env();

        if (construct_lambda->parsed())
            return run_construct_lambda(options, chain_spec);
        if (construct_a->parsed())
            return run_construct_a(options, chain_spec, bound_text);
        if (represent_cmd->parsed())
            return run_represent(options, chain_spec, n_text);
        if (count_cmd->parsed())
            return run_count(options, coeffs_path, elements_path, bound_text, cap);
        if (verify_cmd->parsed())
            return run_verify(options, chain_spec, case_name);
        if (recognize_cmd->parsed())
            return run_recognize(options, coeffs_path, prefix_path, bound_text);
        if (forced_cmd->parsed())
            return run_forced_a(options, coeffs_path, bound_text);
        if (search_cmd->parsed())
            return run_search(options, max_m, max_coeff, bound_text);
        if (collide_cmd->parsed())
            return run_collide(options, coeffs_path, elements_path, bound_text);
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
