#include <gtest/gtest.h>

#include "depdisj/encode.hpp"
#include "depdisj/modularize.hpp"
#include "depdisj/oracle.hpp"
#include "test_support.hpp"

namespace depdisj {
namespace {

Solution sol(std::initializer_list<std::pair<Index, const char*>> items) {
    Solution s;
    for (const auto& [i, token] : items)
        s.emplace(i, Atom(token));
    return s;
}

TEST(SolutionsTest, TwoDisjunctionExampleIsFullProduct) {
    const SolutionSet expected{sol({{1, "phi"}, {2, "psi"}}), sol({{1, "phi"}, {2, "psi'"}}),
                               sol({{1, "phi'"}, {2, "psi"}}), sol({{1, "phi'"}, {2, "psi'"}})};
    EXPECT_EQ(solutions(encode_group(testing::two_disjunction_group())), expected);
}

TEST(SolutionsTest, CompactionExampleChoosesInSync) {
    const SolutionSet expected{sol({{1, "phi"}, {2, "psi"}}), sol({{1, "phi"}, {2, "psi'"}}),
                               sol({{1, "phi'"}, {2, "psi'"}})};
    EXPECT_EQ(solutions(encode_group(testing::compaction_group())), expected);
    EXPECT_EQ(direct_solutions(testing::compaction_group()), expected);
}

TEST(SolutionsTest, SingleDisjunct) {
    EXPECT_EQ(solutions(encode_group(make_group("d", {"phi"}))), SolutionSet{sol({{1, "phi"}})});
}

TEST(CombinedSolutionsTest, LiebenOutputMatchesInput) {
    const DependencyGroup g = testing::lieben_group();
    const std::vector<DependencyGroup> out = modularize_group(g);
    const SolutionSet combined = combined_solutions(out);
    EXPECT_EQ(combined.size(), 4u);
    EXPECT_EQ(combined, direct_solutions(g));
    EXPECT_EQ(combined, solutions(encode_group(g)));
}

TEST(CombinedSolutionsTest, OneGroup) {
    const DependencyGroup g = testing::three_disjunction_group();
    EXPECT_EQ(combined_solutions(std::span(&g, 1)), direct_solutions(g));
}

TEST(CombinedSolutionsTest, ThreeDisjunctionOutput) {
    // Both sides enumerated independently: the six input columns, and the
    // 2 x 3 recombination of the output groups.
    const DependencyGroup g = testing::three_disjunction_group();
    const std::vector<DependencyGroup> out = modularize_group(g);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(direct_solutions(out[0]).size(), 2u);
    EXPECT_EQ(direct_solutions(out[1]).size(), 3u);
    const SolutionSet combined = combined_solutions(out);
    EXPECT_EQ(combined.size(), 6u);
    EXPECT_EQ(combined, direct_solutions(g));
}

TEST(CombinedSolutionsTest, RejectsOverlap) {
    const DependencyGroup g = make_group("d", {"a b"});
    const std::vector<DependencyGroup> twice{g, g};
    try {
        combined_solutions(twice);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ScopeOverlap);
    }
}

TEST(IndependentByFreeCombinationTest, ThreeDisjunctionExample) {
    const CaseForm cases = testing::three_disjunction_case();
    EXPECT_FALSE(independent_by_free_combination(cases, IndexSet{1, 2}));
    EXPECT_TRUE(independent_by_free_combination(cases, IndexSet{2}));
    EXPECT_TRUE(independent_by_free_combination(cases, IndexSet{1, 3}));
    EXPECT_FALSE(independent_by_free_combination(cases, IndexSet{1}));
    try {
        independent_by_free_combination(cases, IndexSet{1, 2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadSubscope);
    }
}

} // namespace
} // namespace depdisj
