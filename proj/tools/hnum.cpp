#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "hnum/builders.hpp"
#include "hnum/errors.hpp"
#include "hnum/io.hpp"
#include "hnum/oracle.hpp"
#include "hnum/sweep.hpp"
#include "hnum/universal.hpp"
#include "hnum/verify.hpp"

using namespace hnum;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 cross-check mismatch / failed verification,
// 2 malformed input, 3 degenerate branch data, 4 internal invariant breach.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInvariant = 4;

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : (int)n;
}

struct CommonArgs {
    int g = 0;
    std::string lambda_text, mu_text, signs_text;
    int threads = default_threads();
    bool as_json = false;
};

std::string u128_str(uint128 v) { return to_string_u128(v); }

int cmd_real(const CommonArgs& a, const std::string& method, bool slow_reference) {
    Partition lambda = Partition::parse(a.lambda_text);
    Partition mu = Partition::parse(a.mu_text);
    SignSplitting signs = SignSplitting::parse(a.signs_text);
    bool want_oracle = method == "oracle" || method == "both";
    bool want_tropical = method == "tropical" || method == "both";
    if (!want_oracle && !want_tropical)
        throw ParseError("unknown method \"" + method + "\" (expected tropical|oracle|both)");

    std::string oracle_str, tropical_str;
    Rational oracle_value;
    uint128 tropical_value = 0;
    if (want_oracle) {
        OracleOptions opts;
        opts.threads = a.threads;
        opts.slow_reference = slow_reference;
        oracle_value = real_hurwitz_oracle(a.g, lambda, mu, signs, opts).value;
        oracle_str = oracle_value.str();
    }
    if (want_tropical) {
        tropical_value = real_hurwitz_tropical(a.g, lambda, mu, signs, a.threads);
        tropical_str = u128_str(tropical_value);
    }
    bool match = true;
    if (method == "both")
        match = oracle_value.is_integer() && oracle_value == Rational((int128)tropical_value, 1);

    if (a.as_json) {
        json j;
        j["genus"] = a.g;
        j["lambda"] = lambda.str();
        j["mu"] = mu.str();
        j["signs"] = signs.str();
        j["method"] = method;
        if (want_oracle) j["oracle"] = oracle_str;
        if (want_tropical) j["tropical"] = tropical_str;
        if (method == "both") j["match"] = match;
        std::cout << j.dump() << "\n";
    } else if (method == "both") {
        std::cout << "oracle=" << oracle_str << " tropical=" << tropical_str
                  << (match ? " OK" : " MISMATCH") << "\n";
    } else if (want_oracle) {
        std::cout << "oracle=" << oracle_str << "\n";
    } else {
        std::cout << "tropical=" << tropical_str << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_complex(const CommonArgs& a) {
    Partition lambda = Partition::parse(a.lambda_text);
    Partition mu = Partition::parse(a.mu_text);
    OracleOptions opts;
    opts.threads = a.threads;
    Rational value = complex_hurwitz_oracle(a.g, lambda, mu, opts).value;
    if (a.as_json) {
        json j;
        j["genus"] = a.g;
        j["lambda"] = lambda.str();
        j["mu"] = mu.str();
        j["complex"] = value.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "complex=" << value.str() << "\n";
    }
    return kExitOk;
}

int cmd_enhanced(const CommonArgs& a) {
    Partition lambda = Partition::parse(a.lambda_text);
    Partition mu = Partition::parse(a.mu_text);
    auto classes = enumerate_universal(a.g, lambda, mu, a.threads);
    uint128 e = 0;
    for (const CoverClass& cls : classes) e = checked_add(e, cls.multiplicity);
    if (a.as_json) {
        json j;
        j["genus"] = a.g;
        j["lambda"] = lambda.str();
        j["mu"] = mu.str();
        j["enhanced"] = u128_str(e);
        j["classes"] = classes.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "E=" << u128_str(e) << " classes=" << classes.size() << "\n";
    }
    return kExitOk;
}

int cmd_fixed_target(int d, bool as_json) {
    uint128 n = count_fixed_target_factorizations(d);
    uint128 expected = 1;
    for (int i = 0; i < (d - 3) / 2; ++i) expected *= (uint128)d;
    if (as_json) {
        json j;
        j["d"] = d;
        j["N"] = u128_str(n);
        j["expected"] = u128_str(expected);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "N=" << u128_str(n) << " expected=" << u128_str(expected) << "\n";
    }
    if (n != expected)
        throw InvariantError("fixed-target count differs from d^((d-3)/2)");
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, bool as_json) {
    std::vector<std::string> lines;
    auto sink = [&](const std::string& line) {
        if (!as_json) std::cout << line << "\n";
        lines.push_back(line);
    };
    std::vector<CriterionResult> results = run_acceptance(opts, sink);
    bool all = true;
    for (const CriterionResult& r : results) all &= r.pass;
    if (as_json) {
        json j;
        j["pass"] = all;
        json jr = json::array();
        for (const CriterionResult& r : results) {
            json one;
            one["criterion"] = r.id;
            one["name"] = r.name;
            one["pass"] = r.pass;
            one["cases"] = r.cases;
            one["failures"] = r.failures;
            jr.push_back(one);
        }
        j["criteria"] = jr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const CriterionResult& r : results)
            std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name
                      << "): " << r.cases << " checks, " << r.failures << " failures\n";
        std::cout << (all ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_export(const CommonArgs& a, const std::string& format, const std::string& out_path) {
    Partition lambda = Partition::parse(a.lambda_text);
    Partition mu = Partition::parse(a.mu_text);
    SignSplitting signs = SignSplitting::parse(a.signs_text);
    ExportFormat fmt = parse_export_format(format);
    auto classes = enumerate_enhanced_covers(a.g, lambda, mu, signs, a.threads);
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open \"" + out_path + "\" for writing");
    if (fmt == ExportFormat::Json) {
        json arr = json::array();
        for (const CoverClass& cls : classes)
            arr.push_back(json::parse(cover_to_json(cls.cover, cls.rho, signs.str())));
        out << arr.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < classes.size(); ++i) {
            std::string dot = cover_to_dot(classes[i].cover, classes[i].rho);
            // One named digraph per class.
            dot.replace(dot.find("digraph cover"), 13, "digraph cover" + std::to_string(i));
            out << dot;
        }
    }
    if (a.as_json) {
        json j;
        j["classes"] = classes.size();
        j["path"] = out_path;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "wrote " << classes.size() << " classes to " << out_path << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real double Hurwitz numbers with 3-cycles: factorization oracle, "
                 "tropical enumeration, and the splitting-independent lower bound"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string method = "both";
    bool slow_reference = false;
    std::string format = "json", out_path;
    int fixed_d = 3;
    VerifyOptions vopts;
    vopts.threads = default_threads();

    auto add_common = [&](CLI::App* cmd, bool with_signs) {
        cmd->add_option("-g,--genus", args.g, "genus")->required();
        cmd->add_option("-l,--left", args.lambda_text, "profile over 0, e.g. 3,1,1")->required();
        cmd->add_option("-m,--right", args.mu_text, "profile over infinity")->required();
        if (with_signs)
            cmd->add_option("--signs", args.signs_text, "sign sequence, e.g. +-+")->required();
        cmd->add_option("--threads", args.threads, "worker threads");
        cmd->add_flag("--json", args.as_json, "emit one JSON object");
    };

    CLI::App* real = app.add_subcommand("real", "real double Hurwitz number with 3-cycles");
    add_common(real, true);
    real->add_option("--method", method, "tropical|oracle|both")
        ->check(CLI::IsMember({"tropical", "oracle", "both"}));
    real->add_flag("--slow-reference", slow_reference,
                   "use the unpruned reference search (tiny inputs only)");

    CLI::App* cplx = app.add_subcommand("complex", "complex double Hurwitz number with 3-cycles");
    add_common(cplx, false);

    CLI::App* enh = app.add_subcommand("enhanced", "enhanced number E_g(lambda,mu)");
    add_common(enh, false);

    CLI::App* fixed = app.add_subcommand("fixed-target", "minimal transitive factorizations of a d-cycle");
    fixed->add_option("-d,--degree", fixed_d, "odd degree >= 3")->required();
    bool fixed_json = false;
    fixed->add_flag("--json", fixed_json, "emit one JSON object");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance battery");
    verify->add_option("--max-d", vopts.max_d, "correspondence battery degree bound");
    verify->add_option("--max-r", vopts.max_r, "correspondence battery pair bound");
    verify->add_option("--threads", vopts.threads, "worker threads");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "emit one JSON object");

    CLI::App* exp = app.add_subcommand("export", "export all enhanced cover classes");
    add_common(exp, true);
    exp->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    exp->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (real->parsed()) return cmd_real(args, method, slow_reference);
        if (cplx->parsed()) return cmd_complex(args);
        if (enh->parsed()) return cmd_enhanced(args);
        if (fixed->parsed()) return cmd_fixed_target(fixed_d, fixed_json);
        if (verify->parsed()) return cmd_verify(vopts, verify_json);
        if (exp->parsed()) return cmd_export(args, format, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const OverflowError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
