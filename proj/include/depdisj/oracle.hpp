#ifndef DEPDISJ_ORACLE_HPP
#define DEPDISJ_ORACLE_HPP

// Brute-force reference semantics. Exponential by construction; meant for
// tests and for `modularize --verify` on small groups.

#include <map>
#include <set>
#include <span>

#include "depdisj/core.hpp"

namespace depdisj {

// One admissible joint choice: disjunction index -> chosen atom.
using Solution = std::map<Index, Atom>;
using SolutionSet = std::set<Solution>;

// One solution per case row, keyed by case-form index.
SolutionSet solutions(const AltCaseForm& form);

// Solutions read straight off the group: column k picks the k-th disjunct of
// every disjunction. Keyed by origin index (position when origin is absent).
SolutionSet direct_solutions(const DependencyGroup& group);

// Cartesian product of each group's direct solutions, merged on their
// disjoint origin indices. Throws Error(ScopeOverlap) on shared indices.
SolutionSet combined_solutions(std::span<const DependencyGroup> groups);

// Literal independence test: does the free combination of the two
// confinements reproduce the form? Throws Error(BadSubscope) unless sub is a
// proper nonempty subset of the scope.
bool independent_by_free_combination(const CaseForm& form, const IndexSet& sub);

} // namespace depdisj

#endif // DEPDISJ_ORACLE_HPP
