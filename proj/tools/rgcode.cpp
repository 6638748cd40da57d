// Command-line front end: construction info, encode/decode, BSC experiments,
// and an exhaustive selftest for small instances.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgc/channel.hpp"
#include "rgc/decoder.hpp"
#include "rgc/gray_code.hpp"
#include "rgc/linear_code.hpp"
#include "rgc/oracle.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSelftestFail = 4;

using nlohmann::json;

// Accepts repetition(3), rm1(4), matrix(path); ':' works in place of parens.
std::shared_ptr<const rgc::LinearCode> parse_code(const std::string& spec) {
    std::string kind;
    std::string arg;
    const auto paren = spec.find('(');
    const auto colon = spec.find(':');
    if (paren != std::string::npos && spec.back() == ')') {
        kind = spec.substr(0, paren);
        arg = spec.substr(paren + 1, spec.size() - paren - 2);
    } else if (colon != std::string::npos) {
        kind = spec.substr(0, colon);
        arg = spec.substr(colon + 1);
    } else {
        throw std::invalid_argument("code spec must look like repetition(3), rm1(4) or matrix(FILE)");
    }
    if (kind == "repetition") {
        return std::make_shared<rgc::RepetitionCode>(std::stoul(arg));
    }
    if (kind == "rm1") {
        return std::make_shared<rgc::ReedMullerRM1>(unsigned(std::stoul(arg)));
    }
    if (kind == "matrix") {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open matrix file: " + arg);
        return rgc::load_generator_matrix(in);
    }
    throw std::invalid_argument("unknown code kind: " + kind);
}

std::uint64_t resolve_seed(std::uint64_t* seed_opt, bool seed_given) {
    if (seed_given) return *seed_opt;
    std::random_device rd;
    const std::uint64_t seed = (std::uint64_t(rd()) << 32) | rd();
    std::cerr << "seed: " << seed << "\n";
    return seed;
}

int cmd_info(const rgc::GrayCode& g, const std::string& format) {
    const double base_rate = double(g.k()) / double(g.n());
    const double gray_rate = std::log2(double(g.num_codewords())) / double(g.d());
    if (format == "json") {
        json out = {{"n", g.n()},        {"k", g.k()},
                    {"D", g.base_distance()}, {"d", g.d()},
                    {"N", g.num_codewords()}, {"base_rate", base_rate},
                    {"gray_rate", gray_rate}, {"base", g.base().name()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "base      " << g.base().name() << "\n"
                  << "n         " << g.n() << "\n"
                  << "k         " << g.k() << "\n"
                  << "D         " << g.base_distance() << "\n"
                  << "d         " << g.d() << "\n"
                  << "N         " << g.num_codewords() << "\n"
                  << "base rate " << base_rate << "\n"
                  << "gray rate " << gray_rate << "\n";
    }
    return 0;
}

int cmd_selftest(const rgc::GrayCode& g) {
    if (g.blocks() > rgc::oracle::kMaxBlocks ||
        g.num_codewords() > rgc::oracle::kMaxCodewords) {
        std::cerr << "too large for exhaustive selftest\n";
        return kExitValidation;
    }
    const std::uint64_t big_n = g.num_codewords();
    bool ok = true;
    auto check = [&ok](const std::string& name, bool pass) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
        ok = ok && pass;
    };

    bool r_ok = true;
    for (std::uint64_t i = 0; i <= g.blocks(); ++i) {
        r_ok = r_ok && g.compute_r(i) == rgc::oracle::naive_r(g, i);
    }
    check("compute_r matches direct summation", r_ok);

    const rgc::oracle::OracleGrayCode table(g);
    bool enc_ok = true;
    bool gray_ok = true;
    std::unordered_set<std::string> seen;
    for (std::uint64_t j = 0; j < big_n; ++j) {
        const rgc::BitString w = g.encode(j);
        enc_ok = enc_ok && w == table.words[j];
        gray_ok =
            gray_ok && rgc::hamming_distance(w, table.words[(j + 1) % big_n]) == 1;
        seen.insert(w.str());
    }
    check("encoder matches flip-walk oracle", enc_ok);
    check("Gray property (cyclic, exhaustive)", gray_ok);
    check("injectivity (all codewords distinct)", seen.size() == big_n);

    bool round_ok = true;
    rgc::RandomSource rng(0);
    for (std::uint64_t j = 0; j < big_n; ++j) {
        round_ok = round_ok && rgc::decode_gray(g, table.words[j], rng).j_hat == j;
    }
    check("noiseless roundtrip", round_ok);

    return ok ? 0 : kExitSelftestFail;
}

json experiment_json(const rgc::ExperimentResult& r) {
    json tail = json::array();
    for (const auto& pt : r.tail) {
        tail.push_back({{"t", pt.t},
                        {"freq", pt.freq},
                        {"ci95", {pt.ci_lo, pt.ci_hi}},
                        {"bound", pt.bound}});
    }
    return {{"params", {{"p", r.p}}},
            {"pfail", {{"estimate", r.pfail.value}, {"ci95", {r.pfail.ci_lo, r.pfail.ci_hi}}}},
            {"bound", {{"alpha", r.bound.alpha}, {"gamma", r.bound.gamma}}},
            {"tail", tail},
            {"seed", r.seed},
            {"trials", r.trials}};
}

void experiment_csv(const rgc::ExperimentResult& r, std::ostream& out) {
    out << "t,freq,ci_lo,ci_hi,bound\n";
    for (const auto& pt : r.tail) {
        out << pt.t << ',' << pt.freq << ',' << pt.ci_lo << ',' << pt.ci_hi << ','
            << pt.bound << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust Gray code toolkit"};
    app.require_subcommand(1);

    std::string code_spec;
    std::string format = "table";
    std::uint64_t j = 0;
    std::string x_bits;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool verbose = false;
    double p = 0.05;
    std::uint64_t trials = 100000;
    std::vector<std::uint64_t> t_values;
    std::string out_path;

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", code_spec, "base code: repetition(n), rm1(m), matrix(FILE)")
            ->required();
    };

    auto* info = app.add_subcommand("info", "print construction parameters");
    add_code(info);
    info->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* encode = app.add_subcommand("encode", "print the j-th codeword");
    add_code(encode);
    encode->add_option("--j", j, "index in [0, N)")->required();

    auto* decode = app.add_subcommand("decode", "decode a received word");
    add_code(decode);
    decode->add_option("--x", x_bits, "received word as ASCII bits")->required();
    decode->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    decode->add_flag("--verbose", verbose, "print the full decode report as JSON");

    auto* simulate = app.add_subcommand("simulate", "BSC tail experiment");
    add_code(simulate);
    simulate->add_option("--p", p, "crossover probability in [0, 1/2)")->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    simulate->add_option("--t", t_values, "tail thresholds (repeatable, ascending)");
    simulate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--out", out_path, "write to file instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "exhaustive property checks");
    add_code(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto base = parse_code(code_spec);
        const rgc::GrayCode g(base);

        if (info->parsed()) {
            if (format == "table" || format == "json") return cmd_info(g, format);
        }
        if (encode->parsed()) {
            if (j >= g.num_codewords()) {
                std::cerr << "j out of range: N = " << g.num_codewords() << "\n";
                return kExitValidation;
            }
            std::cout << g.encode(j).str() << "\n";
            return 0;
        }
        if (decode->parsed()) {
            const rgc::BitString x = rgc::BitString::from_string(x_bits);
            if (x.size() != g.d()) {
                std::cerr << "input length " << x.size() << " != d = " << g.d() << "\n";
                return kExitValidation;
            }
            rgc::RandomSource rng(resolve_seed(&seed, seed_given));
            const rgc::DecodeReport report = rgc::decode_gray(g, x, rng);
            if (verbose) {
                json out = {{"j_hat", report.j_hat},
                            {"case", int(report.case_taken)},
                            {"iota_hat", report.iota_hat},
                            {"u_values", report.u_values},
                            {"majority_bits", report.majority_bits},
                            {"chunk_messages", report.chunk_messages}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << report.j_hat << "\n";
            }
            return 0;
        }
        if (simulate->parsed()) {
            if (p < 0.0 || p >= 0.5) {
                std::cerr << "p must be in [0, 1/2)\n";
                return kExitValidation;
            }
            if (t_values.empty()) t_values = {1, 2, 4, 8, 16, 32, 64};
            const std::uint64_t s = resolve_seed(&seed, seed_given);
            const rgc::ExperimentResult result =
                rgc::run_tail_experiment(g, p, trials, t_values, s);
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    std::cerr << "cannot open output file: " << out_path << "\n";
                    return kExitValidation;
                }
                out = &file;
            }
            if (format == "csv") {
                experiment_csv(result, *out);
            } else {
                *out << experiment_json(result).dump(2) << "\n";
            }
            return 0;
        }
        if (selftest->parsed()) {
            return cmd_selftest(g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
