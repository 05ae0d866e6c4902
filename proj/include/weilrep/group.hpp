#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace weilrep {

/// A finite group presented through index arithmetic: elements are
/// 0..size-1, multiplication and inversion are oracles.  Composite groups
/// (semidirect products, central extensions) stay lazy; only leaf groups
/// carry materialized element tables elsewhere.
struct FiniteGroup {
    long long size = 0;
    int identity = 0;
    std::function<int(int, int)> mul;
    std::function<int(int)> inv;
    std::vector<int> generators;  // some generating set, possibly empty
    std::string name;

    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
    int power(int x, long long e) const;
    long long element_order(int x) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup H <= G through an embedding of indices.
struct SubgroupMap {
    GroupPtr sub;
    GroupPtr amb;
    std::function<int(int)> to_ambient;
    std::function<int(int)> from_ambient;  // -1 when not a member
};

GroupPtr make_cyclic(int n, const std::string& name = "");

/// Group from an explicit multiplication table oracle over 0..n-1 (table is
/// materialized when n is small enough for n^2 ints).
GroupPtr make_from_oracle(long long n, int identity, std::function<int(int, int)> mul,
                          std::vector<int> generators, const std::string& name,
                          bool materialize_tables = true);

/// G x H with the product law.
GroupPtr direct_product(GroupPtr g, GroupPtr h);

/// G semidirect H for a right action of G on H by automorphisms:
/// [g, h][g', h'] = [g g', act(h, g') h'].  Validation of the action axioms
/// is exhaustive below the budget and sampled above it.
GroupPtr semidirect(GroupPtr g, GroupPtr h, std::function<int(int, int)> act,
                    const std::string& name = "", long long validation_budget = 200000);

inline long long semi_index(const FiniteGroup& h, int gi, int hi) { return (long long)gi * h.size + hi; }

/// Quotient of a materializable group by a normal subgroup, with canonical
/// minimal-index coset representatives.
struct QuotientGroup {
    GroupPtr group;                 // the quotient as a FiniteGroup over rep indices
    std::vector<int> reps;          // coset representative (ambient index) per quotient index
    std::vector<int> coset_of;      // ambient index -> quotient index
    std::function<int(int)> proj;   // ambient -> quotient index
};

QuotientGroup quotient(GroupPtr g, const std::vector<int>& normal_subgroup, const std::string& name = "");

/// Checks closure under mul/inv, associativity, identity; exhaustive when
/// size^3 fits the budget, deterministic sampling otherwise.  Returns an
/// explanatory witness on failure.
std::optional<std::string> check_group_axioms(const FiniteGroup& g, long long budget = 20000000);

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// generated subgroup.  Only sensible for materialized sizes.
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Subgroup closure of a generating set, sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace weilrep
