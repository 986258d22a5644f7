#include "depdisj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "depdisj/document.hpp"
#include "depdisj/modularize.hpp"
#include "depdisj/oracle.hpp"
#include "depdisj/stats.hpp"

namespace depdisj::cli {

namespace {

// Above these sizes the solution enumeration behind --verify gets expensive.
constexpr std::size_t kVerifyMaxDisjunctions = 5;
constexpr std::size_t kVerifyMaxWidth = 8;

void verify_group(const DependencyGroup& input, const std::vector<DependencyGroup>& output,
                  std::ostream& err) {
    if (input.size() > kVerifyMaxDisjunctions || input.width() > kVerifyMaxWidth)
        err << "warning: verifying group '" << input.name << "' (" << input.size()
            << " disjunctions, width " << input.width()
            << ") enumerates solutions; cost grows exponentially\n";
    if (combined_solutions(output) != direct_solutions(input))
        throw Error(ErrorKind::Verification,
                    "group '" + input.name + "': modularized groups are not equivalent");
}

} // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::DuplicateGroup:
    case ErrorKind::InvalidAtom:
        return kSyntaxError;
    case ErrorKind::EmptyGroup:
    case ErrorKind::RaggedGroup:
        return kBadGroup;
    case ErrorKind::GroupTooLarge:
        return kGroupTooLarge;
    case ErrorKind::Verification:
        return kVerificationFailed;
    case ErrorKind::Io:
        return kIoError;
    default:
        // Internal invariant failures surface as verification failures.
        return kVerificationFailed;
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Split groups of dependent disjunctions into independent subgroups",
                 "modularize"};
    std::string input_path = "-";
    std::string output_path;
    bool stats = false;
    bool verify = false;
    ModularizeOptions options;
    app.add_option("INPUT", input_path, "constraint document ('-' for standard input)");
    app.add_option("-o,--output", output_path, "write the modularized document here");
    app.add_flag("--stats", stats, "report per-group savings on standard error");
    app.add_flag("--verify", verify, "check every result against solution enumeration");
    app.add_option("--max-group-size", options.max_group_size,
                   "largest number of disjunctions to search for a split")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Document doc;
        if (input_path == "-") {
            doc = parse_document(in);
        } else {
            std::ifstream file(input_path, std::ios::binary);
            if (!file)
                throw Error(ErrorKind::Io, "cannot open '" + input_path + "'");
            doc = parse_document(file);
        }

        Document result;
        StatsReport report;
        std::set<std::string> names;
        for (const DependencyGroup& group : doc.groups) {
            std::vector<DependencyGroup> parts = modularize_group(group, options);
            if (verify)
                verify_group(group, parts, err);
            if (stats)
                report.groups.push_back(describe(group, parts));
            for (DependencyGroup& p : parts) {
                if (!names.insert(p.name).second)
                    throw Error(ErrorKind::DuplicateGroup,
                                "output group name '" + p.name + "' is already taken");
                result.groups.push_back(std::move(p));
            }
        }

        const std::string text = serialize_document(result);
        if (verify) {
            // The text format drops origin indices, so compare names and disjuncts only.
            const Document reparsed = parse_document(text);
            bool same = reparsed.groups.size() == result.groups.size();
            for (std::size_t g = 0; same && g < reparsed.groups.size(); ++g)
                same = reparsed.groups[g].name == result.groups[g].name &&
                       reparsed.groups[g].disjunctions == result.groups[g].disjunctions;
            if (!same)
                throw Error(ErrorKind::Verification,
                            "output does not survive a serialize/parse roundtrip");
        }

        if (output_path.empty() || output_path == "-") {
            out << text;
            out.flush();
        } else {
            std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
            if (!(file << text))
                throw Error(ErrorKind::Io, "cannot write '" + output_path + "'");
        }
        if (stats)
            err << format_stats(report);
        return kSuccess;
    } catch (const Error& e) {
        err << "modularize: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

} // namespace depdisj::cli
