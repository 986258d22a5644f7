#include "depdisj/modularize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "depdisj/encode.hpp"

namespace depdisj {

CaseForm confine(const CaseForm& form, const IndexSet& sub) {
    if (sub.empty() || !sub.is_subset_of(form.scope()))
        throw Error(ErrorKind::BadSubscope, "cannot confine scope " + to_string(form.scope()) +
                                                " to " + to_string(sub));
    std::vector<CaseRow> rows;
    rows.reserve(form.size());
    for (const CaseRow& r : form.rows())
        rows.push_back(r.restricted_to(sub));
    return canonicalize(std::move(rows));
}

CaseForm free_combine(const CaseForm& a, const CaseForm& b) {
    if (a.scope().intersects(b.scope()))
        throw Error(ErrorKind::ScopeOverlap, "free combination of overlapping scopes " +
                                                 to_string(a.scope()) + " and " +
                                                 to_string(b.scope()));
    std::vector<CaseRow> rows;
    rows.reserve(a.size() * b.size());
    for (const CaseRow& x : a.rows()) {
        for (const CaseRow& y : b.rows())
            rows.push_back(merge(x, y));
    }
    return canonicalize(std::move(rows));
}

std::optional<Split> independent_split(const CaseForm& form, const IndexSet& sub,
                                       SearchStats* stats) {
    IndexSet rest = form.scope().minus(sub);
    if (sub.empty() || rest.empty() || !sub.is_subset_of(form.scope()))
        throw Error(ErrorKind::BadSubscope, to_string(sub) + " is not a proper subset of " +
                                                to_string(form.scope()));
    CaseForm first = confine(form, sub);
    if (stats)
        ++stats->confinements;
    // A confinement whose size does not divide the total cannot be a factor.
    if (form.size() % first.size() != 0)
        return std::nullopt;
    CaseForm second = confine(form, rest);
    if (stats)
        ++stats->confinements;
    if (first.size() * second.size() != form.size())
        return std::nullopt;
    return Split{std::move(first), std::move(second)};
}

bool for_each_bipartition(const IndexSet& scope,
                          const std::function<bool(const IndexSet&, const IndexSet&)>& visit) {
    if (scope.size() < 2)
        throw Error(ErrorKind::NothingToSplit,
                    "scope " + to_string(scope) + " has fewer than two indices");
    const Index pivot = scope.front();
    const std::vector<Index> rest(scope.begin() + 1, scope.end());
    const std::size_t r = rest.size();

    // Subsets are {pivot} plus a combination of `extra` elements of rest,
    // visited in lexicographic order of their position vectors.
    for (std::size_t extra = 0; extra < r; ++extra) {
        std::vector<std::size_t> pos(extra);
        std::iota(pos.begin(), pos.end(), std::size_t{0});
        while (true) {
            std::vector<Index> sub{pivot};
            for (std::size_t p : pos)
                sub.push_back(rest[p]);
            IndexSet subset(std::move(sub));
            if (!visit(subset, scope.minus(subset)))
                return false;

            // Advance to the next combination.
            std::size_t k = extra;
            while (k > 0 && pos[k - 1] == r - extra + (k - 1))
                --k;
            if (k == 0)
                break;
            ++pos[k - 1];
            for (std::size_t j = k; j < extra; ++j)
                pos[j] = pos[j - 1] + 1;
        }
    }
    return true;
}

std::vector<std::pair<IndexSet, IndexSet>> bipartitions(const IndexSet& scope) {
    std::vector<std::pair<IndexSet, IndexSet>> out;
    for_each_bipartition(scope, [&](const IndexSet& a, const IndexSet& b) {
        out.emplace_back(a, b);
        return true;
    });
    return out;
}

bool is_prime(std::size_t n) noexcept {
    if (n < 2)
        return false;
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

namespace {

void modularize_into(const CaseForm& form, const ModularizeOptions& options, SearchStats* stats,
                     std::vector<CaseForm>& out) {
    const IndexSet& scope = form.scope();
    if (scope.size() == 1) {
        out.push_back(form);
        return;
    }
    if (form.size() == 1) {
        const CaseRow& row = form.rows().front();
        for (Index i : scope)
            out.push_back(canonicalize(std::vector<CaseRow>{row.restricted_to(IndexSet{i})}));
        return;
    }
    if (is_prime(form.size())) {
        out.push_back(form);
        return;
    }
    if (scope.size() > options.max_group_size)
        throw Error(ErrorKind::GroupTooLarge,
                    "partition search over " + std::to_string(scope.size()) +
                        " disjunctions exceeds the limit of " +
                        std::to_string(options.max_group_size));

    std::optional<Split> found;
    for_each_bipartition(scope, [&](const IndexSet& sub, const IndexSet&) {
        if (stats)
            ++stats->candidates;
        found = independent_split(form, sub, stats);
        return !found.has_value();
    });
    if (!found) {
        out.push_back(form);
        return;
    }
    if (stats)
        ++stats->splits;
    modularize_into(found->first, options, stats, out);
    modularize_into(found->second, options, stats, out);
}

// Reorders the disjuncts of a decoded subgroup by the position at which their
// combination first occurs in the source group.
void follow_source_order(DependencyGroup& part, const DependencyGroup& source) {
    const std::size_t width = part.width();
    std::map<std::vector<std::string>, std::size_t> first_at;
    for (std::size_t k = 0; k < source.width(); ++k) {
        std::vector<std::string> key;
        key.reserve(part.size());
        for (Index pos : part.origin)
            key.push_back(source.disjunctions[pos - 1][k].token());
        first_at.emplace(std::move(key), k);
    }
    std::vector<std::size_t> rank(width);
    for (std::size_t j = 0; j < width; ++j) {
        std::vector<std::string> key;
        key.reserve(part.size());
        for (const Disjunction& d : part.disjunctions)
            key.push_back(d[j].token());
        rank[j] = first_at.at(key);
    }
    std::vector<std::size_t> perm(width);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    for (Disjunction& d : part.disjunctions) {
        Disjunction reordered;
        reordered.reserve(width);
        for (std::size_t j : perm)
            reordered.push_back(d[j]);
        d = std::move(reordered);
    }
}

} // namespace

std::vector<CaseForm> modularize_case(const CaseForm& form, const ModularizeOptions& options,
                                      SearchStats* stats) {
    std::vector<CaseForm> parts;
    modularize_into(form, options, stats, parts);
    std::sort(parts.begin(), parts.end(), [](const CaseForm& a, const CaseForm& b) {
        return a.scope().front() < b.scope().front();
    });
    return parts;
}

std::vector<DependencyGroup> modularize_group(const DependencyGroup& group,
                                              const ModularizeOptions& options,
                                              SearchStats* stats) {
    const AltCaseForm encoded = encode_group(group);
    std::vector<CaseForm> parts;
    try {
        parts = modularize_case(encoded.cases(), options, stats);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::GroupTooLarge)
            throw Error(e.kind(), "group '" + group.name + "': " + e.what() +
                                      " (raise it with --max-group-size)");
        throw;
    }

    std::vector<AltCaseForm> forms;
    forms.reserve(parts.size());
    for (CaseForm& p : parts)
        forms.push_back(encoded.with_cases(std::move(p)));

    std::vector<DependencyGroup> out = decode_groups(forms, group.name);
    const bool has_origin = group.origin.size() == group.size();
    for (DependencyGroup& g : out) {
        follow_source_order(g, group);
        if (has_origin) {
            for (Index& o : g.origin)
                o = group.origin[o - 1];
        }
    }
    return out;
}

} // namespace depdisj
