#include "depdisj/core.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace depdisj {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidAtom: return "InvalidAtom";
    case ErrorKind::EmptyCaseForm: return "EmptyCaseForm";
    case ErrorKind::ScopeMismatch: return "ScopeMismatch";
    case ErrorKind::ScopeOverlap: return "ScopeOverlap";
    case ErrorKind::BadSubscope: return "BadSubscope";
    case ErrorKind::NothingToSplit: return "NothingToSplit";
    case ErrorKind::MalformedForm: return "MalformedForm";
    case ErrorKind::EmptyGroup: return "EmptyGroup";
    case ErrorKind::RaggedGroup: return "RaggedGroup";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::DuplicateGroup: return "DuplicateGroup";
    case ErrorKind::Verification: return "Verification";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": " + message),
      line_(line), column_(column) {}

bool is_valid_token(std::string_view token) noexcept {
    if (token.empty())
        return false;
    return std::none_of(token.begin(), token.end(), [](char c) {
        return c == '#' || std::isspace(static_cast<unsigned char>(c));
    });
}

Atom::Atom(std::string token) : token_(std::move(token)) {
    if (!is_valid_token(token_))
        throw Error(ErrorKind::InvalidAtom, "invalid atom token '" + token_ + "'");
}

std::ostream& operator<<(std::ostream& os, const Atom& atom) { return os << atom.token(); }

std::size_t DependencyGroup::width() const noexcept {
    return disjunctions.empty() ? 0 : disjunctions.front().size();
}

DependencyGroup make_group(std::string name, std::vector<Disjunction> disjunctions) {
    DependencyGroup g;
    g.name = std::move(name);
    g.origin.reserve(disjunctions.size());
    for (std::size_t i = 0; i < disjunctions.size(); ++i)
        g.origin.push_back(static_cast<Index>(i + 1));
    g.disjunctions = std::move(disjunctions);
    return g;
}

DependencyGroup make_group(std::string name, std::initializer_list<std::string_view> lines) {
    std::vector<Disjunction> disjunctions;
    for (std::string_view line : lines) {
        std::istringstream in{std::string(line)};
        Disjunction d;
        for (std::string tok; in >> tok;)
            d.emplace_back(std::move(tok));
        disjunctions.push_back(std::move(d));
    }
    return make_group(std::move(name), std::move(disjunctions));
}

std::ostream& operator<<(std::ostream& os, const DependencyGroup& group) {
    os << "group " << group.name << " {";
    for (std::size_t i = 0; i < group.disjunctions.size(); ++i) {
        os << (i ? "; " : "");
        if (i < group.origin.size())
            os << group.origin[i] << ":";
        os << "(";
        for (std::size_t j = 0; j < group.disjunctions[i].size(); ++j)
            os << (j ? "," : "") << group.disjunctions[i][j];
        os << ")";
    }
    return os << "}";
}

// IndexSet

IndexSet::IndexSet(std::initializer_list<Index> items) : IndexSet(std::vector<Index>(items)) {}

IndexSet::IndexSet(std::vector<Index> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::range(Index first, Index last) {
    IndexSet s;
    if (last < first)
        return s;
    s.items_.reserve(last - first + 1);
    for (Index i = first;; ++i) {
        s.items_.push_back(i);
        if (i == last)
            break;
    }
    return s;
}

bool IndexSet::contains(Index i) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const noexcept {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool IndexSet::intersects(const IndexSet& other) const noexcept {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a == *b)
            return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    IndexSet r;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(r.items_));
    return r;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
    IndexSet r;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(r.items_));
    return r;
}

std::string to_string(const IndexSet& set) {
    std::string s = "{";
    bool first = true;
    for (Index i : set) {
        if (!first)
            s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::ostream& operator<<(std::ostream& os, const IndexSet& set) { return os << to_string(set); }

// AltVar / CaseRow

std::string to_string(const AltVar& var) {
    return "a_" + std::to_string(var.representative) + "^" + std::to_string(var.disjunction);
}

std::ostream& operator<<(std::ostream& os, const AltVar& var) { return os << to_string(var); }

CaseRow::CaseRow(std::initializer_list<AltVar> choices)
    : CaseRow(std::vector<AltVar>(choices)) {}

CaseRow::CaseRow(std::vector<AltVar> choices) : choices_(std::move(choices)) {
    std::sort(choices_.begin(), choices_.end());
    for (std::size_t k = 1; k < choices_.size(); ++k) {
        if (choices_[k].disjunction == choices_[k - 1].disjunction)
            throw Error(ErrorKind::MalformedForm,
                        "case row chooses twice for disjunction " +
                            std::to_string(choices_[k].disjunction));
    }
}

IndexSet CaseRow::scope() const {
    std::vector<Index> s;
    s.reserve(choices_.size());
    for (const AltVar& v : choices_)
        s.push_back(v.disjunction);
    return IndexSet(std::move(s));
}

bool CaseRow::has_scope(const IndexSet& scope) const noexcept {
    if (scope.size() != choices_.size())
        return false;
    auto it = scope.begin();
    for (const AltVar& v : choices_) {
        if (v.disjunction != *it++)
            return false;
    }
    return true;
}

const AltVar& CaseRow::at(Index disjunction) const {
    auto it = std::lower_bound(choices_.begin(), choices_.end(), disjunction,
                               [](const AltVar& v, Index i) { return v.disjunction < i; });
    if (it == choices_.end() || it->disjunction != disjunction)
        throw Error(ErrorKind::BadSubscope,
                    "case row has no choice for disjunction " + std::to_string(disjunction));
    return *it;
}

CaseRow CaseRow::restricted_to(const IndexSet& keep) const {
    CaseRow r;
    r.choices_.reserve(keep.size());
    for (const AltVar& v : choices_) {
        if (keep.contains(v.disjunction))
            r.choices_.push_back(v);
    }
    return r;
}

CaseRow merge(const CaseRow& a, const CaseRow& b) {
    CaseRow r;
    r.choices_.reserve(a.size() + b.size());
    std::merge(a.choices_.begin(), a.choices_.end(), b.choices_.begin(), b.choices_.end(),
               std::back_inserter(r.choices_));
    for (std::size_t k = 1; k < r.choices_.size(); ++k) {
        if (r.choices_[k].disjunction == r.choices_[k - 1].disjunction)
            throw Error(ErrorKind::ScopeOverlap,
                        "cannot merge rows sharing disjunction " +
                            std::to_string(r.choices_[k].disjunction));
    }
    return r;
}

std::string to_string(const CaseRow& row) {
    std::string s = "(";
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k)
            s += " & ";
        s += to_string(row.choices()[k]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const CaseRow& row) { return os << to_string(row); }

// CaseForm

CaseForm canonicalize(std::vector<CaseRow> rows) {
    if (rows.empty())
        throw Error(ErrorKind::EmptyCaseForm, "case form needs at least one row");
    IndexSet scope = rows.front().scope();
    if (scope.empty())
        throw Error(ErrorKind::EmptyCaseForm, "case rows need at least one choice");
    for (const CaseRow& r : rows) {
        if (!r.has_scope(scope))
            throw Error(ErrorKind::ScopeMismatch, "case row " + to_string(r) +
                                                      " does not have scope " + to_string(scope));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return CaseForm(std::move(scope), std::move(rows));
}

CaseForm canonicalize(std::span<const CaseRow> rows) {
    return canonicalize(std::vector<CaseRow>(rows.begin(), rows.end()));
}

std::string to_string(const CaseForm& form) {
    std::string s;
    for (const CaseRow& r : form.rows()) {
        if (!s.empty())
            s += " | ";
        s += to_string(r);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const CaseForm& form) { return os << to_string(form); }

// AltCaseForm

AltCaseForm::AltCaseForm(std::map<AltVar, Atom> alternatives, CaseForm cases)
    : alternatives_(std::move(alternatives)), cases_(std::move(cases)) {
    for (const CaseRow& r : cases_.rows()) {
        for (const AltVar& v : r.choices()) {
            if (!alternatives_.contains(v))
                throw Error(ErrorKind::MalformedForm,
                            "case variable " + to_string(v) + " has no alternative");
        }
    }
    std::set<std::pair<Index, std::string>> seen;
    for (const auto& [var, atom] : alternatives_) {
        if (!cases_.scope().contains(var.disjunction))
            throw Error(ErrorKind::MalformedForm,
                        "alternative " + to_string(var) + " lies outside the case scope");
        if (!seen.emplace(var.disjunction, atom.token()).second)
            throw Error(ErrorKind::MalformedForm, "alternatives of disjunction " +
                                                      std::to_string(var.disjunction) +
                                                      " are not compact: '" + atom.token() +
                                                      "' appears twice");
    }
}

const Atom& AltCaseForm::atom(const AltVar& var) const {
    auto it = alternatives_.find(var);
    if (it == alternatives_.end())
        throw Error(ErrorKind::MalformedForm, "no alternative for " + to_string(var));
    return it->second;
}

AltCaseForm AltCaseForm::with_cases(CaseForm cases) const {
    std::map<AltVar, Atom> kept;
    for (const auto& [var, atom] : alternatives_) {
        if (cases.scope().contains(var.disjunction))
            kept.emplace(var, atom);
    }
    return AltCaseForm(std::move(kept), std::move(cases));
}

std::ostream& operator<<(std::ostream& os, const AltCaseForm& form) {
    bool first = true;
    for (const auto& [var, atom] : form.alternatives()) {
        os << (first ? "" : " & ") << "(" << var << " -> " << atom << ")";
        first = false;
    }
    return os << " & [" << form.cases() << "]";
}

} // namespace depdisj
