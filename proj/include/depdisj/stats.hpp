#ifndef DEPDISJ_STATS_HPP
#define DEPDISJ_STATS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "depdisj/core.hpp"

namespace depdisj {

struct SubgroupStats {
    std::string name;
    IndexSet disjunctions;  // origin indices
    std::size_t width = 0;
};

struct GroupStats {
    std::string name;
    std::size_t width_before = 0;   // n of the input group
    std::size_t disjunctions = 0;   // m
    std::size_t rows_before = 0;    // case rows after compaction
    std::vector<SubgroupStats> subgroups;
    std::string note;               // "split", "prime, modular", "modular", ...

    std::size_t rows_after_sum() const noexcept;
    std::size_t rows_after_product() const noexcept;
    // n / sum of subgroup widths.
    double interaction_ratio() const noexcept;
};

struct StatsReport {
    std::vector<GroupStats> groups;
};

GroupStats describe(const DependencyGroup& input, std::span<const DependencyGroup> output);

// "d: width 6, 3 disjunctions, rows 6 = 2 × 3, ..." one line per group.
std::string format_stats(const StatsReport& report);

} // namespace depdisj

#endif // DEPDISJ_STATS_HPP
