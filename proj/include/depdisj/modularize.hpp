#ifndef DEPDISJ_MODULARIZE_HPP
#define DEPDISJ_MODULARIZE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "depdisj/core.hpp"

namespace depdisj {

// Projection of a case form onto sub, duplicates removed.
// Throws Error(BadSubscope) unless sub is a nonempty subset of case.scope().
CaseForm confine(const CaseForm& form, const IndexSet& sub);

// DNF of the conjunction of two case forms over disjoint scopes: every row
// of a merged with every row of b. Throws Error(ScopeOverlap).
CaseForm free_combine(const CaseForm& a, const CaseForm& b);

// Two confinements whose scopes partition the scope of the form they came from.
struct Split {
    CaseForm first;
    CaseForm second;
};

// Counters for the partition search. confinements counts every call to
// confine() the search makes; candidates counts bipartitions examined.
struct SearchStats {
    std::size_t confinements = 0;
    std::size_t candidates = 0;
    std::size_t splits = 0;
};

// Cardinality test for independence: confines the form to sub and to its
// complement and accepts when the row counts multiply to form.size(). The
// two confinements are independent exactly when this holds, so the free
// combination is never built.
//
// Throws Error(BadSubscope) unless sub is a proper nonempty subset of the scope.
std::optional<Split> independent_split(const CaseForm& form, const IndexSet& sub,
                                       SearchStats* stats = nullptr);

// Each unordered bipartition of scope once, as (subset holding min(scope),
// complement), by increasing subset size and lexicographically within a
// size. Yields 2^(|scope|-1) - 1 pairs. Throws Error(NothingToSplit) when
// |scope| < 2.
std::vector<std::pair<IndexSet, IndexSet>> bipartitions(const IndexSet& scope);

// Same order as bipartitions(), without materializing the list. Stops as
// soon as visit returns false; returns whether it ran to completion.
bool for_each_bipartition(const IndexSet& scope,
                          const std::function<bool(const IndexSet&, const IndexSet&)>& visit);

struct ModularizeOptions {
    // Largest scope the bipartition search will scan.
    std::size_t max_group_size = 24;
};

bool is_prime(std::size_t n) noexcept;

// Splits a case form into modular parts whose free combination is the
// original. Parts are ordered by smallest scope index.
//
// A single-index scope is returned as is. A single-row form is split into
// one part per index. A form with a prime number of rows is modular. Other
// forms are searched over bipartitions in the order of bipartitions(); the
// first independent split is taken and both halves are modularized again.
//
// Throws Error(GroupTooLarge) when a search would be needed over a scope
// larger than options.max_group_size.
std::vector<CaseForm> modularize_case(const CaseForm& form, const ModularizeOptions& options = {},
                                      SearchStats* stats = nullptr);

// encode_group, modularize_case and decode_groups composed. The disjuncts of
// each output group follow the order in which their combination first occurs
// in the input group, so a modular group comes back unchanged.
std::vector<DependencyGroup> modularize_group(const DependencyGroup& group,
                                              const ModularizeOptions& options = {},
                                              SearchStats* stats = nullptr);

} // namespace depdisj

#endif // DEPDISJ_MODULARIZE_HPP
