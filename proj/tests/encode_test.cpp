#include <gtest/gtest.h>

#include <random>
#include <set>

#include "depdisj/encode.hpp"
#include "depdisj/modularize.hpp"
#include "depdisj/oracle.hpp"
#include "test_support.hpp"

namespace depdisj {
namespace {

using testing::a;

std::map<AltVar, Atom> alts(std::initializer_list<std::pair<AltVar, const char*>> items) {
    std::map<AltVar, Atom> m;
    for (const auto& [var, token] : items)
        m.emplace(var, Atom(token));
    return m;
}

TEST(EncodeGroupTest, CompactsEqualAtomsOntoFirstOccurrence) {
    const AltCaseForm form = encode_group(testing::compaction_group());
    EXPECT_EQ(form.alternatives(), alts({{a(1, 1), "phi"},
                                         {a(3, 1), "phi'"},
                                         {a(1, 2), "psi"},
                                         {a(2, 2), "psi'"}}));
    // The printed third case reads a_2^1 & a_2^2; the representative rule
    // (a_2^1 -> a_1^1, a_3^2 -> a_2^2) gives a_3^1 & a_2^2.
    const CaseForm expected = canonicalize(std::vector<CaseRow>{
        {a(1, 1), a(1, 2)}, {a(1, 1), a(2, 2)}, {a(3, 1), a(2, 2)}});
    EXPECT_EQ(form.cases(), expected);
    EXPECT_EQ(form.cases().size(), 3u);
}

TEST(EncodeGroupTest, TwoDisjunctionExample) {
    const AltCaseForm form = encode_group(testing::two_disjunction_group());
    EXPECT_EQ(form.alternatives(), alts({{a(1, 1), "phi"},
                                         {a(3, 1), "phi'"},
                                         {a(1, 2), "psi"},
                                         {a(2, 2), "psi'"}}));
    const CaseForm expected = canonicalize(std::vector<CaseRow>{{a(1, 1), a(1, 2)},
                                                                {a(1, 1), a(2, 2)},
                                                                {a(3, 1), a(1, 2)},
                                                                {a(3, 1), a(2, 2)}});
    EXPECT_EQ(form.cases(), expected);
}

TEST(EncodeGroupTest, SingleDisjunctionSingleDisjunct) {
    const AltCaseForm form = encode_group(make_group("d", {"phi"}));
    EXPECT_EQ(form.alternatives(), alts({{a(1, 1), "phi"}}));
    ASSERT_EQ(form.cases().size(), 1u);
    EXPECT_EQ(form.cases().rows()[0], CaseRow{a(1, 1)});
    EXPECT_EQ(form.scope(), IndexSet{1});
}

TEST(EncodeGroupTest, ThreeDisjunctionExample) {
    const AltCaseForm form = encode_group(testing::three_disjunction_group());
    EXPECT_EQ(form.cases(), testing::three_disjunction_case());
    EXPECT_EQ(form.alternatives(), alts({{a(1, 1), "phi"},
                                         {a(5, 1), "phi'"},
                                         {a(1, 2), "psi"},
                                         {a(2, 2), "psi'"},
                                         {a(1, 3), "chi"},
                                         {a(3, 3), "chi'"}}));
}

TEST(EncodeGroupTest, DuplicateRawRowsMerge) {
    const AltCaseForm form = encode_group(make_group("d", {"phi phi", "psi psi"}));
    EXPECT_EQ(form.cases().size(), 1u);
}

TEST(EncodeGroupTest, Errors) {
    auto kind_of = [](const DependencyGroup& g) {
        try {
            encode_group(g);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind_of(make_group("d", {"a b", "c"})), ErrorKind::RaggedGroup);
    EXPECT_EQ(kind_of(make_group("d", std::vector<Disjunction>{})), ErrorKind::EmptyGroup);
    EXPECT_EQ(kind_of(make_group("d", std::vector<Disjunction>{{}, {}})), ErrorKind::EmptyGroup);
}

TEST(EncodeGroupTest, CompactnessWidthBoundAndSemantics) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const DependencyGroup g = testing::random_group(rng, 4, 6, 3);
        const AltCaseForm form = encode_group(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::set<Atom> distinct(g.disjunctions[i].begin(), g.disjunctions[i].end());
            std::size_t vars = 0;
            for (const auto& entry : form.alternatives())
                vars += entry.first.disjunction == i + 1;
            EXPECT_EQ(vars, distinct.size());
        }
        EXPECT_LE(form.cases().size(), g.width());
        const SolutionSet direct = direct_solutions(g);
        EXPECT_EQ(form.cases().size() == g.width(), direct.size() == g.width());
        EXPECT_EQ(solutions(form), direct);
    }
}

TEST(DecodeGroupsTest, ConfinementsOfThreeDisjunctionExample) {
    const AltCaseForm encoded = encode_group(testing::three_disjunction_group());
    const CaseForm& cases = encoded.cases();
    const std::vector<AltCaseForm> forms{encoded.with_cases(confine(cases, IndexSet{2})),
                                         encoded.with_cases(confine(cases, IndexSet{1, 3}))};
    const std::vector<DependencyGroup> groups = decode_groups(forms, "d");
    ASSERT_EQ(groups.size(), 2u);

    DependencyGroup d1 = make_group("d.1", {"psi psi'"});
    d1.origin = {2};
    DependencyGroup d2 = make_group("d.2", {"phi phi phi'", "chi chi' chi'"});
    d2.origin = {1, 3};
    EXPECT_EQ(groups[0], d1);
    EXPECT_EQ(groups[1], d2);

    // Naming does not depend on the order the forms are given in.
    const std::vector<AltCaseForm> swapped{forms[1], forms[0]};
    EXPECT_EQ(decode_groups(swapped, "d"), groups);
}

TEST(DecodeGroupsTest, SingleFormKeepsNameAndSolutions) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const DependencyGroup g = testing::random_group(rng, 4, 6, 3);
        const AltCaseForm form = encode_group(g);
        const std::vector<DependencyGroup> out = decode_groups(std::span(&form, 1), g.name);
        ASSERT_EQ(out.size(), 1u);
        EXPECT_EQ(out[0].name, g.name);
        EXPECT_EQ(out[0].width(), form.cases().size());
        EXPECT_EQ(direct_solutions(out[0]), direct_solutions(g));
    }
}

TEST(DecodeGroupsTest, LiebenSplit) {
    const AltCaseForm encoded = encode_group(testing::lieben_group());
    ASSERT_EQ(encoded.cases().size(), 4u);
    const std::vector<AltCaseForm> forms{
        encoded.with_cases(confine(encoded.cases(), IndexSet{1, 2})),
        encoded.with_cases(confine(encoded.cases(), IndexSet{3, 4}))};
    const std::vector<DependencyGroup> groups = decode_groups(forms, "d");
    ASSERT_EQ(groups.size(), 2u);
    EXPECT_EQ(groups[0].name, "d.1");
    EXPECT_EQ(groups[0].disjunctions,
              make_group("", {"lieben liebt", "bse fin"}).disjunctions);
    EXPECT_EQ(groups[1].name, "d.2");
    EXPECT_EQ(groups[1].disjunctions,
              make_group("", {"comp elist", "elist comp"}).disjunctions);
}

TEST(DecodeGroupsTest, RejectsOverlappingScopes) {
    const AltCaseForm encoded = encode_group(testing::three_disjunction_group());
    const std::vector<AltCaseForm> forms{
        encoded.with_cases(confine(encoded.cases(), IndexSet{1, 2})),
        encoded.with_cases(confine(encoded.cases(), IndexSet{2, 3}))};
    try {
        decode_groups(forms, "d");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ScopeOverlap);
    }
}

} // namespace
} // namespace depdisj
