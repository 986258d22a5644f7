#ifndef DEPDISJ_DOCUMENT_HPP
#define DEPDISJ_DOCUMENT_HPP

// Line-oriented text format for groups of dependent disjunctions:
//
//   # comment to end of line
//   group d
//     phi phi phi' phi'
//     psi psi' psi psi'
//   end
//
// One line per disjunction, atoms separated by whitespace. Inside a group a
// line holding only `end` closes it, and a disjunction line may not start
// with the keywords `group` or `end`.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "depdisj/core.hpp"

namespace depdisj {

struct Document {
    std::vector<DependencyGroup> groups;
    // Line of each group's `group` header; empty for documents not read from text.
    std::vector<std::size_t> group_lines;

    friend bool operator==(const Document& a, const Document& b) { return a.groups == b.groups; }
};

// Throws ParseError with kind Syntax (malformed lines, missing `end`, invalid
// tokens), DuplicateGroup, RaggedGroup or EmptyGroup.
Document parse_document(std::string_view text);
Document parse_document(std::istream& in);

std::string serialize_document(const Document& doc);

} // namespace depdisj

#endif // DEPDISJ_DOCUMENT_HPP
