#include "depdisj/oracle.hpp"

#include <string>

#include "depdisj/modularize.hpp"

namespace depdisj {

SolutionSet solutions(const AltCaseForm& form) {
    SolutionSet out;
    for (const CaseRow& row : form.cases().rows()) {
        Solution s;
        for (const AltVar& v : row.choices())
            s.emplace(v.disjunction, form.atom(v));
        out.insert(std::move(s));
    }
    return out;
}

SolutionSet direct_solutions(const DependencyGroup& group) {
    const bool has_origin = group.origin.size() == group.size();
    SolutionSet out;
    for (std::size_t k = 0; k < group.width(); ++k) {
        Solution s;
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (k >= group.disjunctions[i].size())
                throw Error(ErrorKind::RaggedGroup, "group '" + group.name + "' is ragged");
            const Index key = has_origin ? group.origin[i] : static_cast<Index>(i + 1);
            s.emplace(key, group.disjunctions[i][k]);
        }
        out.insert(std::move(s));
    }
    return out;
}

SolutionSet combined_solutions(std::span<const DependencyGroup> groups) {
    SolutionSet acc{Solution{}};
    for (const DependencyGroup& g : groups) {
        SolutionSet next;
        for (const Solution& part : direct_solutions(g)) {
            for (const Solution& prefix : acc) {
                Solution merged = prefix;
                for (const auto& [index, atom] : part) {
                    if (!merged.emplace(index, atom).second)
                        throw Error(ErrorKind::ScopeOverlap,
                                    "groups share disjunction index " + std::to_string(index));
                }
                next.insert(std::move(merged));
            }
        }
        acc = std::move(next);
    }
    if (groups.empty())
        acc.clear();
    return acc;
}

bool independent_by_free_combination(const CaseForm& form, const IndexSet& sub) {
    const IndexSet rest = form.scope().minus(sub);
    if (sub.empty() || rest.empty() || !sub.is_subset_of(form.scope()))
        throw Error(ErrorKind::BadSubscope, to_string(sub) + " is not a proper subset of " +
                                                to_string(form.scope()));
    return free_combine(confine(form, sub), confine(form, rest)) == form;
}

} // namespace depdisj
