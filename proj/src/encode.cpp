#include "depdisj/encode.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace depdisj {

namespace {

void check_well_formed(const DependencyGroup& group) {
    if (group.disjunctions.empty())
        throw Error(ErrorKind::EmptyGroup, "group '" + group.name + "' has no disjunctions");
    const std::size_t n = group.width();
    if (n == 0)
        throw Error(ErrorKind::EmptyGroup, "group '" + group.name + "' has empty disjunctions");
    for (std::size_t i = 0; i < group.disjunctions.size(); ++i) {
        if (group.disjunctions[i].size() != n)
            throw Error(ErrorKind::RaggedGroup,
                        "group '" + group.name + "': disjunction " + std::to_string(i + 1) +
                            " has " + std::to_string(group.disjunctions[i].size()) +
                            " disjuncts, expected " + std::to_string(n));
    }
}

} // namespace

AltCaseForm encode_group(const DependencyGroup& group) {
    check_well_formed(group);
    const std::size_t m = group.size();
    const std::size_t n = group.width();

    // reps[i][k]: representative (1-based) of disjunct k+1 in disjunction i+1.
    std::vector<std::vector<Index>> reps(m, std::vector<Index>(n));
    std::map<AltVar, Atom> alternatives;
    for (std::size_t i = 0; i < m; ++i) {
        std::unordered_map<std::string, Index> first_seen;
        const Index di = static_cast<Index>(i + 1);
        for (std::size_t k = 0; k < n; ++k) {
            const Atom& atom = group.disjunctions[i][k];
            auto [it, fresh] = first_seen.emplace(atom.token(), static_cast<Index>(k + 1));
            reps[i][k] = it->second;
            if (fresh)
                alternatives.emplace(AltVar{di, it->second}, atom);
        }
    }

    std::vector<CaseRow> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<AltVar> choices;
        choices.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            choices.push_back(AltVar{static_cast<Index>(i + 1), reps[i][k]});
        rows.emplace_back(std::move(choices));
    }
    return AltCaseForm(std::move(alternatives), canonicalize(std::move(rows)));
}

std::vector<DependencyGroup> decode_groups(std::span<const AltCaseForm> forms,
                                           std::string_view base) {
    IndexSet seen;
    for (const AltCaseForm& f : forms) {
        if (seen.intersects(f.scope()))
            throw Error(ErrorKind::ScopeOverlap,
                        "case forms overlap on scope " + to_string(f.scope()));
        seen = seen.unite(f.scope());
    }

    std::vector<std::size_t> order(forms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const AltCaseForm& fa = forms[a];
        const AltCaseForm& fb = forms[b];
        if (fa.cases().size() != fb.cases().size())
            return fa.cases().size() < fb.cases().size();
        return fa.scope().front() < fb.scope().front();
    });

    std::vector<DependencyGroup> groups;
    groups.reserve(forms.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const AltCaseForm& form = forms[order[k]];
        DependencyGroup g;
        g.name = std::string(base);
        if (forms.size() > 1)
            g.name += "." + std::to_string(k + 1);
        for (Index i : form.scope()) {
            Disjunction d;
            d.reserve(form.cases().size());
            for (const CaseRow& row : form.cases().rows())
                d.push_back(form.atom(row.at(i)));
            g.disjunctions.push_back(std::move(d));
            g.origin.push_back(i);
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

} // namespace depdisj
