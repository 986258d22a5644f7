#include "depdisj/document.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <optional>
#include <set>

namespace depdisj {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

struct OpenGroup {
    std::string name;
    std::size_t line;
    std::vector<Disjunction> disjunctions;
};

} // namespace

Document parse_document(std::string_view text) {
    Document doc;
    std::set<std::string> names;
    std::optional<OpenGroup> open;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const Token& head = tokens.front();

        if (!open) {
            if (head.text != "group")
                throw ParseError(ErrorKind::Syntax, line_no, head.column,
                                 "expected 'group <name>', found '" + head.text + "'");
            if (tokens.size() != 2)
                throw ParseError(ErrorKind::Syntax, line_no, head.column,
                                 "expected exactly one group name after 'group'");
            const Token& name = tokens[1];
            if (!names.insert(name.text).second)
                throw ParseError(ErrorKind::DuplicateGroup, line_no, name.column,
                                 "duplicate group name '" + name.text + "'");
            open = OpenGroup{name.text, line_no, {}};
            continue;
        }

        if (head.text == "end") {
            if (tokens.size() != 1)
                throw ParseError(ErrorKind::Syntax, line_no, tokens[1].column,
                                 "unexpected '" + tokens[1].text + "' after 'end'");
            if (open->disjunctions.empty())
                throw ParseError(ErrorKind::EmptyGroup, open->line, 1,
                                 "group '" + open->name + "' has no disjunctions");
            doc.groups.push_back(make_group(std::move(open->name), std::move(open->disjunctions)));
            doc.group_lines.push_back(open->line);
            open.reset();
            continue;
        }
        if (head.text == "group")
            throw ParseError(ErrorKind::Syntax, line_no, head.column,
                             "group '" + open->name + "' opened at line " +
                                 std::to_string(open->line) + " is missing 'end'");

        Disjunction d;
        d.reserve(tokens.size());
        for (const Token& t : tokens)
            d.emplace_back(t.text);
        if (!open->disjunctions.empty() && d.size() != open->disjunctions.front().size())
            throw ParseError(ErrorKind::RaggedGroup, line_no, head.column,
                             "group '" + open->name + "': disjunction has " +
                                 std::to_string(d.size()) + " disjuncts, expected " +
                                 std::to_string(open->disjunctions.front().size()));
        open->disjunctions.push_back(std::move(d));
    }

    if (open)
        throw ParseError(ErrorKind::Syntax, open->line, 1,
                         "group '" + open->name + "' is missing 'end'");
    return doc;
}

Document parse_document(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_document(std::string_view(text));
}

std::string serialize_document(const Document& doc) {
    std::string out;
    for (std::size_t g = 0; g < doc.groups.size(); ++g) {
        const DependencyGroup& group = doc.groups[g];
        if (g)
            out += '\n';
        out += "group " + group.name + "\n";
        for (const Disjunction& d : group.disjunctions) {
            out += " ";
            for (const Atom& a : d) {
                out += ' ';
                out += a.token();
            }
            out += '\n';
        }
        out += "end\n";
    }
    return out;
}

} // namespace depdisj
