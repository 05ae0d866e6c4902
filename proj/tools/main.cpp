#include "weilrep/serialize.hpp"
#include "weilrep/suites.hpp"
#include "weilrep/weil_even.hpp"
#include "weilrep/weil_odd.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace weilrep;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Json report_to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["skipped"] = c.skipped;
        e["witness"] = c.witness;
        e["millis"] = c.millis;
        checks.push_back(std::move(e));
    }
    Json out;
    out["scenario"] = r.scenario;
    out["checks"] = std::move(checks);
    out["pass"] = r.all_pass();
    return out;
}

void print_report(const SuiteReport& r) {
    std::cout << "scenario: " << r.scenario << "\n";
    for (const auto& c : r.checks) {
        std::cout << (c.skipped ? "  SKIP  " : c.pass ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
        std::cout << "  (" << (long long)c.millis << " ms)\n";
    }
}

int cmd_verify(const std::string& pcase, const SuiteOptions& opts, const std::vector<std::string>& suites, bool json,
               const std::string& out_path) {
    SuiteReport report = run_suites(pcase, suites, opts);
    if (json) {
        const std::string text = dump_deterministic(artifact("suite-report", Json{{"case", pcase}}, report_to_json(report)));
        if (out_path.empty())
            std::cout << text;
        else
            std::ofstream(out_path) << text;
    } else {
        print_report(report);
    }
    return report.all_pass() ? 0 : 1;
}

Json dump_odd_generators(const SuiteOptions& opts) {
    const GaloisField* F = nullptr;
    for (int p = 2; p <= opts.q && !F; ++p) {
        bool prime = true;
        for (int t = 2; t * t <= p; ++t)
            if (p % t == 0) prime = false;
        if (!prime) continue;
        int qq = p, d = 1;
        while (qq < opts.q) {
            qq *= p;
            ++d;
        }
        if (qq == opts.q) F = GaloisField::get(p, d);
    }
    if (!F) throw std::invalid_argument("q is not a prime power");
    OddScenario s(F, opts.m, opts.enum_budget);
    auto mod = s.model();
    FMatrix b(F, opts.m), a(F, opts.m);
    for (int i = 0; i < opts.m; ++i) {
        for (int j = 0; j < opts.m; ++j) b.at(i, j) = i == j ? 1 : 0;
        a.at(i, i) = s.ms().generator();
    }
    Json data;
    data["U"] = matrix_to_json(mod->op_token({GenToken::U, b.a}));
    data["D"] = matrix_to_json(mod->op_token({GenToken::D, a.a}));
    data["Omega"] = matrix_to_json(mod->op_token({GenToken::Omega, {}}));
    return artifact("odd-generators", Json{{"q", opts.q}, {"m", opts.m}}, std::move(data));
}

Json dump_even_cocycle(const SuiteOptions& opts) {
    auto space = std::make_shared<EvenSymplecticSpace>(opts.d, opts.m);
    auto asp = std::make_shared<AffineSymplecticGroup>(space, false, opts.enum_budget);
    if (asp->size() > 256) throw std::invalid_argument("cocycle table dump needs a small affine group");
    EvenWeilFamily family(space, asp);
    Json rows = Json::array();
    for (long long x = 0; x < asp->size(); ++x) {
        Json row = Json::array();
        for (long long y = 0; y < asp->size(); ++y)
            row.push_back(cyclotomic_to_json(Cyclotomic::root_of_unity(8, family.cocycle_exp((int)x, (int)y))));
        rows.push_back(std::move(row));
    }
    Json data;
    data["size"] = asp->size();
    data["table"] = std::move(rows);
    return artifact("even-cocycle", Json{{"d", opts.d}, {"m", opts.m}}, std::move(data));
}

Json dump_gauss(const SuiteOptions& opts) {
    const GaloisField* F = opts.q == 9 ? GaloisField::get(3, 2) : GaloisField::get(opts.q, 1);
    SymplecticSpace sp(F, 1);
    auto ms = std::make_shared<MultiplicativeStructure>(F);
    SchrodingerModel mod(sp, ms);
    return artifact("gauss-sum", Json{{"q", opts.q}}, cyclotomic_to_json(mod.gauss_sum()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of finite Weil representations"};
    app.require_subcommand(1);

    std::string pcase = "odd", suites = "all", out_path;
    bool json = false, exhaustive = false;
    SuiteOptions opts;
    long long budget = 0;

    auto* verify = app.add_subcommand("verify", "build a scenario and run verification suites");
    verify->add_option("--case", pcase, "odd or even")->check(CLI::IsMember({"odd", "even"}));
    verify->add_option("--q", opts.q, "odd prime power (odd case)");
    verify->add_option("--m", opts.m, "rank: W has dimension 2m");
    verify->add_option("--d", opts.d, "residue degree (even case)");
    verify->add_option("--suite", suites, "comma-separated suite names, or 'all'");
    verify->add_flag("--exhaustive", exhaustive, "escalate sampled checks to exhaustive sweeps");
    verify->add_flag("--json", json, "machine-readable report");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--budget", budget, "character-sum budget (elements)");
    verify->add_option("--poly", [&opts](const std::vector<std::string>& vals) {
        for (const auto& v : vals)
            for (const auto& tok : split_list(v)) opts.field_modulus.push_back(std::stoi(tok));
        return true;
    }, "override the field modulus, comma-separated coefficients c0,..,cd");

    std::string object = "odd-generators";
    auto* dump = app.add_subcommand("dump", "serialize representation data as JSON");
    dump->add_option("object", object, "odd-generators | even-cocycle | gauss-sum")->required();
    dump->add_option("--q", opts.q, "odd prime power");
    dump->add_option("--m", opts.m, "rank");
    dump->add_option("--d", opts.d, "residue degree");
    dump->add_option("--out", out_path, "write to a file instead of stdout");

    auto* ls = app.add_subcommand("list-suites", "list suite names and descriptions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ls->parsed()) {
            for (const auto& info : weilrep::list_suites())
                std::cout << info.parameter_case << "/" << info.name << "  " << info.description << "\n";
            return 0;
        }
        if (verify->parsed()) {
            if (pcase == "odd" && (opts.q < 3 || opts.q % 2 == 0)) {
                std::cerr << "error: the odd case needs an odd prime power q\n";
                return 2;
            }
            opts.exhaustive = exhaustive;
            if (budget > 0) opts.char_budget = budget;
            return cmd_verify(pcase, opts, split_list(suites), json, out_path);
        }
        if (dump->parsed()) {
            Json j;
            if (object == "odd-generators")
                j = dump_odd_generators(opts);
            else if (object == "even-cocycle")
                j = dump_even_cocycle(opts);
            else if (object == "gauss-sum")
                j = dump_gauss(opts);
            else {
                std::cerr << "error: unknown object '" << object << "'\n";
                return 2;
            }
            const std::string text = weilrep::dump_deterministic(j);
            if (out_path.empty())
                std::cout << text;
            else
                std::ofstream(out_path) << text;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
