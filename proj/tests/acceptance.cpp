// Acceptance runner: one numbered criterion per block, each printing a
// single PASS/FAIL line.  Every tolerance is literal equality in exact
// arithmetic; there are no numeric thresholds to tune.

#include "weilrep/suites.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>

using namespace weilrep;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> suite(const std::string& pcase, const std::vector<std::string>& names, SuiteOptions opts) {
    return run_suites(pcase, names, opts).checks;
}

SuiteOptions odd_opts(int q, int m, bool exhaustive = false) {
    SuiteOptions o;
    o.q = q;
    o.m = m;
    o.exhaustive = exhaustive;
    return o;
}

SuiteOptions even_opts(int d, int m) {
    SuiteOptions o;
    o.d = d;
    o.m = m;
    return o;
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> cs;
    cs.push_back({1, "true representation: exhaustive q=3 pairs, sampled q=5, q=7, and q=3 at m=2", [] {
                      auto out = suite("odd", {"rep"}, odd_opts(3, 1, true));
                      for (auto& c : suite("odd", {"rep"}, odd_opts(5, 1))) out.push_back(c);
                      for (auto& c : suite("odd", {"rep"}, odd_opts(7, 1))) out.push_back(c);
                      for (auto& c : suite("odd", {"rep"}, odd_opts(3, 2))) out.push_back(c);
                      return out;
                  }});
    cs.push_back({2, "Stone-von Neumann at q=3: irreducible over the 648-element semidirect product", [] {
                      return suite("odd", {"svn"}, odd_opts(3, 1));
                  }});
    cs.push_back({3, "restriction of the induced similitude representation: (1,1) with zero residual, q=3 and q=7",
                  [] {
                      auto out = suite("odd", {"restriction"}, odd_opts(3, 1));
                      for (auto& c : suite("odd", {"restriction"}, odd_opts(7, 1))) out.push_back(c);
                      return out;
                  }});
    cs.push_back({4, "irreducibility over the projective semidirect product at q=3 (1296 elements)", [] {
                      return suite("odd", {"irred"}, odd_opts(3, 1));
                  }});
    cs.push_back({5, "q=5 restriction decomposes into exactly 4 pairwise inequivalent twists", [] {
                      return suite("odd", {"components"}, odd_opts(5, 1));
                  }});
    cs.push_back({6, "square-root tower: all cocycles, the similitude lift, centrality, tau identity (q=5, q=13)",
                  [] {
                      auto out = suite("odd", {"tower"}, odd_opts(5, 1));
                      for (auto& c : suite("odd", {"tower"}, odd_opts(13, 1))) out.push_back(c);
                      return out;
                  }});
    cs.push_back({7, "the wide induced representation contains every character twist at q=5", [] {
                      return suite("odd", {"contains"}, odd_opts(5, 1));
                  }});
    cs.push_back({8, "square twists preserve the Sp character, exhaustive at q=3 and q=5", [] {
                      auto out = suite("odd", {"twist"}, odd_opts(3, 1));
                      for (auto& c : suite("odd", {"twist"}, odd_opts(5, 1))) out.push_back(c);
                      return out;
                  }});
    cs.push_back({9, "even case d=1: Heisenberg rep, ASp order and section search, mu_4 versus mu_1, AGSp torus",
                  [] {
                      auto out = suite("even", {"svn", "asp", "mu4"}, even_opts(1, 1));
                      for (auto& c : suite("even", {"agsp"}, even_opts(2, 1))) out.push_back(c);
                      return out;
                  }});
    cs.push_back({10, "even case d=2: dimension 4, closure, lift independence, mu_4 reduction rerun", [] {
                      return suite("even", {"svn", "sigma", "mu4"}, even_opts(2, 1));
                  }});
    cs.push_back({11, "Gauss sum norm for q in {3, 5, 7, 9, 13}", [] {
                      std::vector<CheckResult> out;
                      for (int q : {3, 5, 7, 9, 13})
                          for (auto& c : suite("odd", {"gauss"}, odd_opts(q, 1))) {
                              c.name += " q=" + std::to_string(q);
                              out.push_back(c);
                          }
                      return out;
                  }});
    cs.push_back({12, "falsification controls: perturbed cocycle, flipped operator, refused linearization", [] {
                      auto out = suite("odd", {"controls"}, odd_opts(3, 1));
                      for (auto& c : suite("even", {"controls"}, even_opts(1, 1))) out.push_back(c);
                      return out;
                  }});
    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string witness;
        try {
            const auto checks = c.run();
            pass = !checks.empty();
            for (const auto& chk : checks) {
                if (!chk.pass) {
                    pass = false;
                    witness += (witness.empty() ? "" : "; ") + chk.name + ": " + chk.witness;
                }
            }
        } catch (const std::exception& e) {
            pass = false;
            witness = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " ("
             << (long long)(secs * 1000) << " ms)";
        if (!pass) line << "\n       " << witness;
        std::cout << line.str() << std::endl;
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
