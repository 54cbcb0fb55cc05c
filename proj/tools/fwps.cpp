// Command-line front end: analyze fans, build fans from weights, normalize
// diagonal actions on P^2, enumerate cyclic quotients. JSON in, JSON out,
// byte-deterministic for a given input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwps/report.hpp"

namespace {

using fwps::Int;
using fwps::IntVec;
using Json = fwps::Json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

// schema violations and unreadable input: exit code 3
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail_parse(const std::string& message) {
    Json err = Json::object();
    Json inner = Json::object();
    inner["code"] = "ParseError";
    inner["message"] = message;
    err["error"] = inner;
    emit(err);
    std::exit(kExitParse);
}

[[noreturn]] void fail_domain(const fwps::Error& e) {
    Json err = Json::object();
    Json inner = Json::object();
    inner["code"] = fwps::errc_name(e.code());
    if (e.index() >= 0) inner["index"] = e.index();
    inner["message"] = e.what();
    err["error"] = inner;
    emit(err);
    std::exit(kExitDomain);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) fail_parse("cannot read input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json parse_object(const std::string& text, std::initializer_list<const char*> keys) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail_parse(e.what());
    }
    if (!j.is_object()) fail_parse("input must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known) fail_parse("unknown key: " + key);
    }
    for (const char* k : keys)
        if (!j.contains(k)) fail_parse(std::string("missing key: ") + k);
    return j;
}

Int to_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) fail_parse(what + " must be an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        fail_parse(what + " is out of range");
    return v.get<Int>();
}

IntVec to_int_vec(const Json& v, const std::string& what) {
    if (!v.is_array() || v.empty()) fail_parse(what + " must be a nonempty array of integers");
    IntVec out;
    for (const Json& x : v) out.push_back(to_int(x, what + " entry"));
    return out;
}

std::vector<IntVec> parse_rays(const Json& v) {
    if (!v.is_array() || v.empty())
        fail_parse("rays must be a nonempty array of integer vectors");
    std::vector<IntVec> rays;
    for (const Json& row : v) rays.push_back(to_int_vec(row, "ray"));
    for (const IntVec& r : rays)
        if (r.size() != rays.front().size()) fail_parse("rays must all have the same length");
    return rays;
}

int run_analyze(const std::string& input_path, bool table) {
    Json in = parse_object(read_input(input_path), {"rays"});
    std::vector<IntVec> rays = parse_rays(in["rays"]);
    try {
        fwps::AnalysisReport rep = fwps::analyze_rays(rays);
        if (table)
            std::cout << fwps::report_table(rep);
        else
            emit(fwps::report_json(rep));
    } catch (const fwps::Error& e) {
        fail_domain(e);
    } catch (const std::invalid_argument& e) {
        fail_parse(e.what());
    }
    return kExitOk;
}

int run_from_weights(const std::string& input_path, bool table) {
    Json in = parse_object(read_input(input_path), {"weights"});
    IntVec raw = to_int_vec(in["weights"], "weights");
    if (raw.size() < 2) fail_parse("weights must have at least two entries");
    try {
        fwps::FwpsFan fan = fwps::fan_from_weights(fwps::WeightVector::normalized(raw));
        fwps::AnalysisReport rep = fwps::analyze_rays(fan.rays());
        if (table) {
            std::cout << fwps::report_table(rep);
        } else {
            Json out = Json::object();
            Json fan_json = Json::object();
            Json rays = Json::array();
            for (const IntVec& v : fan.rays()) rays.push_back(fwps::json_int_vec(v));
            fan_json["rays"] = rays;
            out["fan"] = fan_json;
            out["analysis"] = fwps::report_json(rep);
            emit(out);
        }
    } catch (const fwps::Error& e) {
        fail_domain(e);
    } catch (const std::invalid_argument& e) {
        fail_parse(e.what());
    }
    return kExitOk;
}

int run_normalize_action(const std::string& input_path, bool table) {
    Json in = parse_object(read_input(input_path), {"r", "exponents"});
    Int r = to_int(in["r"], "r");
    if (r < 1) fail_parse("r must be >= 1");
    if (!in["exponents"].is_array() || in["exponents"].size() != 3)
        fail_parse("exponents must be an array of exactly 3 integers");
    std::array<Int, 3> e{};
    for (int i = 0; i < 3; ++i) e[i] = to_int(in["exponents"][i], "exponent");
    try {
        fwps::P2ActionNormalForm nf = fwps::normalize_p2_action(r, e);
        if (table) {
            std::cout << "r=" << nf.r << " a=" << nf.a << "\n";
        } else {
            Json out = Json::object();
            fwps::json_put_int(out, "r", nf.r);
            fwps::json_put_int(out, "a", nf.a);
            emit(out);
        }
    } catch (const fwps::Error& e2) {
        fail_domain(e2);
    }
    return kExitOk;
}

int run_enumerate(Int max_r, bool table) {
    if (max_r < 1) fail_parse("--max-r must be >= 1");
    std::vector<fwps::P2EnumRecord> records = fwps::enumerate_p2_quotients(max_r);
    if (table)
        std::cout << fwps::enumerate_table(records);
    else
        emit(fwps::enumerate_json(records));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric computations for (fake) weighted projective spaces"};
    app.require_subcommand(1);

    std::string input_path = "-";
    bool table = false;
    std::int64_t max_r = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a fan given by its rays");
    analyze->add_option("--input", input_path, "input file (default: stdin)");
    analyze->add_flag("--table", table, "human-readable output");

    CLI::App* fromw = app.add_subcommand("from-weights", "build and analyze the fan of P(a)");
    fromw->add_option("--input", input_path, "input file (default: stdin)");
    fromw->add_flag("--table", table, "human-readable output");

    CLI::App* norm = app.add_subcommand("normalize-action",
                                        "canonical form of a diagonal Z_r action on P^2");
    norm->add_option("--input", input_path, "input file (default: stdin)");
    norm->add_flag("--table", table, "human-readable output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list Z_r quotients of P^2 for r <= N");
    enumerate->add_option("--max-r", max_r, "largest modulus to enumerate")->required();
    enumerate->add_flag("--table", table, "human-readable output");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return run_analyze(input_path, table);
    if (fromw->parsed()) return run_from_weights(input_path, table);
    if (norm->parsed()) return run_normalize_action(input_path, table);
    return run_enumerate(max_r, table);
}
