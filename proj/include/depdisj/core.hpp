#ifndef DEPDISJ_CORE_HPP
#define DEPDISJ_CORE_HPP

// Domain types for dependent disjunctions and their alternative-case
// encoding. Every CaseForm is kept in canonical DNF: duplicate-free rows
// sorted lexicographically by representative index, so structural equality
// is logical equivalence.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "depdisj/error.hpp"

namespace depdisj {

// 1-based index of a disjunction within a group, or of a disjunct within a
// disjunction.
using Index = std::uint32_t;

// True for nonempty tokens free of whitespace and '#'.
bool is_valid_token(std::string_view token) noexcept;

// An opaque base constraint. Only token equality matters.
class Atom {
public:
    explicit Atom(std::string token);

    const std::string& token() const noexcept { return token_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

private:
    std::string token_;
};

std::ostream& operator<<(std::ostream& os, const Atom& atom);

using Disjunction = std::vector<Atom>;

// A conjunction of same-named disjunctions, all of the same width.
//
// origin[i] records which disjunction of the source document entry i stems
// from; freshly built groups use 1..m. Subgroups produced by modularization
// keep the indices of the disjunctions they were cut from, so their solution
// sets can be recombined and compared against the original.
struct DependencyGroup {
    std::string name;
    std::vector<Disjunction> disjunctions;
    std::vector<Index> origin;

    std::size_t size() const noexcept { return disjunctions.size(); }
    // Disjunct count of the first disjunction (0 for an empty group).
    std::size_t width() const noexcept;

    friend bool operator==(const DependencyGroup&, const DependencyGroup&) = default;
};

// Builds a group with origin 1..m. Does not validate widths; encode_group does.
DependencyGroup make_group(std::string name, std::vector<Disjunction> disjunctions);

// Convenience for tests and examples: each string is one disjunction,
// whitespace-separated atom tokens.
DependencyGroup make_group(std::string name, std::initializer_list<std::string_view> lines);

std::ostream& operator<<(std::ostream& os, const DependencyGroup& group);

// A sorted, duplicate-free set of disjunction indices.
class IndexSet {
public:
    using const_iterator = std::vector<Index>::const_iterator;

    IndexSet() = default;
    IndexSet(std::initializer_list<Index> items);
    explicit IndexSet(std::vector<Index> items);

    // {first, first+1, ..., last}; empty when last < first.
    static IndexSet range(Index first, Index last);

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const_iterator begin() const noexcept { return items_.begin(); }
    const_iterator end() const noexcept { return items_.end(); }
    Index front() const { return items_.front(); }
    const std::vector<Index>& items() const noexcept { return items_; }

    bool contains(Index i) const noexcept;
    bool is_subset_of(const IndexSet& other) const noexcept;
    bool intersects(const IndexSet& other) const noexcept;
    IndexSet unite(const IndexSet& other) const;
    IndexSet minus(const IndexSet& other) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend std::strong_ordering operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<Index> items_;
};

std::string to_string(const IndexSet& set);
std::ostream& operator<<(std::ostream& os, const IndexSet& set);

// Alternative variable a_j^i: disjunction i, representative disjunct j.
// After compaction j is the smallest disjunct index carrying the same atom.
struct AltVar {
    Index disjunction = 0;
    Index representative = 0;

    friend bool operator==(const AltVar&, const AltVar&) = default;
    friend std::strong_ordering operator<=>(const AltVar&, const AltVar&) = default;
};

std::string to_string(const AltVar& var);
std::ostream& operator<<(std::ostream& os, const AltVar& var);

// One conjunction of alternative variables, at most one per disjunction index.
// Choices are held sorted by disjunction index, so the defaulted ordering
// compares rows over the same scope lexicographically by representative.
class CaseRow {
public:
    CaseRow() = default;
    CaseRow(std::initializer_list<AltVar> choices);
    explicit CaseRow(std::vector<AltVar> choices);

    std::span<const AltVar> choices() const noexcept { return choices_; }
    std::size_t size() const noexcept { return choices_.size(); }
    IndexSet scope() const;
    bool has_scope(const IndexSet& scope) const noexcept;

    // The choice made for disjunction i; throws Error(BadSubscope) if absent.
    const AltVar& at(Index disjunction) const;

    // Keeps only the choices whose disjunction index is in keep.
    CaseRow restricted_to(const IndexSet& keep) const;

    // Conjunction of two rows over disjoint scopes.
    friend CaseRow merge(const CaseRow& a, const CaseRow& b);

    friend bool operator==(const CaseRow&, const CaseRow&) = default;
    friend std::strong_ordering operator<=>(const CaseRow& a, const CaseRow& b) {
        return a.choices_ <=> b.choices_;
    }

private:
    std::vector<AltVar> choices_;
};

std::string to_string(const CaseRow& row);
std::ostream& operator<<(std::ostream& os, const CaseRow& row);

// A canonical DNF over alternative variables. Only canonicalize() builds one.
class CaseForm {
public:
    const IndexSet& scope() const noexcept { return scope_; }
    std::span<const CaseRow> rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    friend bool operator==(const CaseForm&, const CaseForm&) = default;

private:
    CaseForm(IndexSet scope, std::vector<CaseRow> rows)
        : scope_(std::move(scope)), rows_(std::move(rows)) {}

    friend CaseForm canonicalize(std::vector<CaseRow> rows);

    IndexSet scope_;
    std::vector<CaseRow> rows_;
};

// Sorts and de-duplicates rows into a CaseForm.
// Throws Error(EmptyCaseForm) for no rows, Error(ScopeMismatch) when the rows
// do not all share one scope.
CaseForm canonicalize(std::vector<CaseRow> rows);
CaseForm canonicalize(std::span<const CaseRow> rows);

std::string to_string(const CaseForm& form);
std::ostream& operator<<(std::ostream& os, const CaseForm& form);

// Alternatives (a_j^i -> atom) together with the cases that choose among them.
class AltCaseForm {
public:
    // Throws Error(MalformedForm) if a case variable lacks an alternative, an
    // alternative lies outside the case scope, or two variables of one
    // disjunction share an atom.
    AltCaseForm(std::map<AltVar, Atom> alternatives, CaseForm cases);

    const std::map<AltVar, Atom>& alternatives() const noexcept { return alternatives_; }
    const CaseForm& cases() const noexcept { return cases_; }
    const IndexSet& scope() const noexcept { return cases_.scope(); }

    const Atom& atom(const AltVar& var) const;

    // Same alternatives restricted to the scope of a confinement of cases().
    AltCaseForm with_cases(CaseForm cases) const;

    friend bool operator==(const AltCaseForm&, const AltCaseForm&) = default;

private:
    std::map<AltVar, Atom> alternatives_;
    CaseForm cases_;
};

std::ostream& operator<<(std::ostream& os, const AltCaseForm& form);

} // namespace depdisj

#endif // DEPDISJ_CORE_HPP
