#include "weilrep/group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace weilrep {

int FiniteGroup::power(int x, long long e) const {
    if (e < 0) return power(inv(x), -e);
    int r = identity, b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

long long FiniteGroup::element_order(int x) const {
    long long n = 1;
    int y = x;
    while (y != identity) {
        y = mul(y, x);
        ++n;
        if (n > size) throw std::logic_error("element order exceeds group size");
    }
    return n;
}

GroupPtr make_cyclic(int n, const std::string& name) {
    auto g = std::make_shared<FiniteGroup>();
    g->size = n;
    g->identity = 0;
    g->mul = [n](int a, int b) { return (a + b) % n; };
    g->inv = [n](int a) { return (n - a) % n; };
    if (n > 1) g->generators = {1};
    g->name = name.empty() ? "Z/" + std::to_string(n) : name;
    return g;
}

GroupPtr make_from_oracle(long long n, int identity, std::function<int(int, int)> mul,
                          std::vector<int> generators, const std::string& name, bool materialize_tables) {
    auto g = std::make_shared<FiniteGroup>();
    g->size = n;
    g->identity = identity;
    g->name = name;
    g->generators = std::move(generators);
    if (materialize_tables && n <= 2048) {
        auto table = std::make_shared<std::vector<int>>(n * n);
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b) (*table)[a * n + b] = mul((int)a, (int)b);
        g->mul = [table, n](int a, int b) { return (*table)[(long long)a * n + b]; };
        auto invt = std::make_shared<std::vector<int>>(n, -1);
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b)
                if ((*table)[a * n + b] == identity) {
                    (*invt)[a] = (int)b;
                    break;
                }
        g->inv = [invt](int a) { return (*invt)[a]; };
    } else {
        g->mul = std::move(mul);
        // inversion by repeated squaring needs the order; fall back to a cache
        auto cache = std::make_shared<std::unordered_map<int, int>>();
        const FiniteGroup* raw = g.get();
        g->inv = [raw, cache](int a) {
            auto it = cache->find(a);
            if (it != cache->end()) return it->second;
            // x^{ord-1}; find the order of a by iteration
            int y = a, prev = raw->identity;
            while (y != raw->identity) {
                prev = y;
                y = raw->mul(y, a);
            }
            // prev * a = identity
            cache->emplace(a, prev);
            return prev;
        };
    }
    return g;
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    return semidirect(a, b, [b](int h, int) { return h; }, a->name + " x " + b->name, 0);
}

GroupPtr semidirect(GroupPtr gg, GroupPtr hh, std::function<int(int, int)> act, const std::string& name,
                    long long validation_budget) {
    // action axioms: identity, compatibility, automorphism
    if (validation_budget > 0) {
        std::mt19937 rng(20240601);
        const long long nG = gg->size, nH = hh->size;
        auto rand_g = [&]() { return (int)(rng() % nG); };
        auto rand_h = [&]() { return (int)(rng() % nH); };
        for (long long i = 0; i < std::min<long long>(nH, validation_budget); ++i) {
            const int h = nH <= validation_budget ? (int)i : rand_h();
            if (act(h, gg->identity) != h) throw std::runtime_error("action: identity axiom fails");
        }
        const bool exhaustive_pairs = nH * nG * nG <= validation_budget;
        const long long pair_checks = exhaustive_pairs ? nH * nG * nG : validation_budget;
        for (long long i = 0; i < pair_checks; ++i) {
            int h, g1, g2;
            if (exhaustive_pairs) {
                h = (int)(i % nH);
                g1 = (int)((i / nH) % nG);
                g2 = (int)(i / (nH * nG));
            } else {
                h = rand_h();
                g1 = rand_g();
                g2 = rand_g();
            }
            if (act(act(h, g1), g2) != act(h, gg->mul(g1, g2)))
                throw std::runtime_error("action: compatibility axiom fails");
        }
        const bool exhaustive_auto = nG * nH * nH <= validation_budget;
        const long long auto_checks = exhaustive_auto ? nG * nH * nH : validation_budget;
        for (long long i = 0; i < auto_checks; ++i) {
            int g, h1, h2;
            if (exhaustive_auto) {
                g = (int)(i % nG);
                h1 = (int)((i / nG) % nH);
                h2 = (int)(i / (nG * nH));
            } else {
                g = rand_g();
                h1 = rand_h();
                h2 = rand_h();
            }
            if (act(hh->mul(h1, h2), g) != hh->mul(act(h1, g), act(h2, g)))
                throw std::runtime_error("action: automorphism axiom fails for g=" + std::to_string(g));
        }
    }
    auto out = std::make_shared<FiniteGroup>();
    const long long nH = hh->size;
    out->size = gg->size * nH;
    out->identity = (int)((long long)gg->identity * nH + hh->identity);
    out->name = name.empty() ? gg->name + " |x " + hh->name : name;
    auto g_ = gg, h_ = hh;
    out->mul = [g_, h_, act, nH](int x, int y) {
        const int xg = (int)(x / nH), xh = (int)(x % nH);
        const int yg = (int)(y / nH), yh = (int)(y % nH);
        return (int)((long long)g_->mul(xg, yg) * nH + h_->mul(act(xh, yg), yh));
    };
    out->inv = [g_, h_, act, nH](int x) {
        const int xg = (int)(x / nH), xh = (int)(x % nH);
        const int gi = g_->inv(xg);
        return (int)((long long)gi * nH + act(h_->inv(xh), gi));
    };
    for (int s : gg->generators) out->generators.push_back((int)((long long)s * nH + hh->identity));
    for (int s : hh->generators) out->generators.push_back((int)((long long)gg->identity * nH + s));
    return out;
}

QuotientGroup quotient(GroupPtr g, const std::vector<int>& normal, const std::string& name) {
    if (g->size > 2000000) throw std::runtime_error("quotient needs a materializable group");
    // normality check and coset labelling
    std::unordered_set<int> nset(normal.begin(), normal.end());
    if (!nset.count(g->identity)) throw std::runtime_error("normal subgroup must contain the identity");
    QuotientGroup out;
    out.coset_of.assign(g->size, -1);
    for (long long x = 0; x < g->size; ++x) {
        if (out.coset_of[x] >= 0) continue;
        const int rep = (int)x;  // ascending scan makes reps minimal
        const int qidx = (int)out.reps.size();
        for (int n : normal) {
            const int y = g->mul(rep, n);
            if (out.coset_of[y] >= 0 && out.coset_of[y] != qidx)
                throw std::runtime_error("cosets collide; subgroup is not a subgroup");
            out.coset_of[y] = qidx;
        }
        out.reps.push_back(rep);
    }
    if (out.reps.size() * normal.size() != (std::size_t)g->size)
        throw std::runtime_error("subgroup size does not divide the group order");
    // normality: conj of normal elements by every generator-ish sample stays inside
    for (int n : normal)
        for (int s = 0; s < std::min<long long>(g->size, 64); ++s)
            if (!nset.count(g->conj(n, (int)(s * (g->size / std::min<long long>(g->size, 64))))))
                throw std::runtime_error("subgroup is not normal");
    auto coset = std::make_shared<std::vector<int>>(out.coset_of);
    auto reps = std::make_shared<std::vector<int>>(out.reps);
    auto base = g;
    out.group = make_from_oracle(
        (long long)out.reps.size(), out.coset_of[g->identity],
        [base, coset, reps](int a, int b) { return (*coset)[base->mul((*reps)[a], (*reps)[b])]; }, {},
        name.empty() ? g->name + "/N" : name);
    out.proj = [coset](int x) { return (*coset)[x]; };
    return out;
}

std::optional<std::string> check_group_axioms(const FiniteGroup& g, long long budget) {
    const long long n = g.size;
    for (long long x = 0; x < n; ++x) {
        if (g.mul((int)x, g.identity) != (int)x || g.mul(g.identity, (int)x) != (int)x)
            return "identity axiom fails at " + std::to_string(x);
        const int xi = g.inv((int)x);
        if (g.mul((int)x, xi) != g.identity || g.mul(xi, (int)x) != g.identity)
            return "inverse axiom fails at " + std::to_string(x);
    }
    if (n * n * n <= budget) {
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b)
                for (long long c = 0; c < n; ++c)
                    if (g.mul(g.mul((int)a, (int)b), (int)c) != g.mul((int)a, g.mul((int)b, (int)c)))
                        return "associativity fails";
    } else {
        std::mt19937 rng(42);
        for (long long i = 0; i < budget / 3; ++i) {
            const int a = (int)(rng() % n), b = (int)(rng() % n), c = (int)(rng() % n);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                return "associativity fails at sampled triple";
        }
    }
    return std::nullopt;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::unordered_set<int> seen{g.identity};
    std::vector<int> frontier{g.identity};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : gens) {
                const int y = g.mul(x, s);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<int> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> have = generated_subgroup(g, gens);
    while ((long long)have.size() < g.size) {
        // smallest element not generated yet
        std::unordered_set<int> hs(have.begin(), have.end());
        int pick = -1;
        for (long long x = 0; x < g.size; ++x)
            if (!hs.count((int)x)) {
                pick = (int)x;
                break;
            }
        gens.push_back(pick);
        have = generated_subgroup(g, gens);
    }
    return gens;
}

}  // namespace weilrep
