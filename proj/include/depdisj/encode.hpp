#ifndef DEPDISJ_ENCODE_HPP
#define DEPDISJ_ENCODE_HPP

#include <span>
#include <string_view>
#include <vector>

#include "depdisj/core.hpp"

namespace depdisj {

// Compact alternative-case form of a group. Equal atoms within one disjunction
// share the variable of their first occurrence; raw case rows that collapse
// onto the same compacted row are merged. Scope is {1..m}.
//
// Throws Error(EmptyGroup) for a group without disjunctions or with empty
// disjunctions, Error(RaggedGroup) when widths differ.
AltCaseForm encode_group(const DependencyGroup& group);

// Reads case forms back as dependency groups, one per form.
//
// Disjunction i of a form lists alternatives(row(i)) over the rows in
// canonical order, so every output disjunction is as wide as the form has
// rows. Groups are named base.1, base.2, ... by ascending width, ties broken
// by smallest scope index, and returned in that order. A single form keeps
// the name base. origin of each output group is the form's scope.
//
// Throws Error(ScopeOverlap) when two forms share a disjunction index.
std::vector<DependencyGroup> decode_groups(std::span<const AltCaseForm> forms,
                                           std::string_view base);

} // namespace depdisj

#endif // DEPDISJ_ENCODE_HPP
