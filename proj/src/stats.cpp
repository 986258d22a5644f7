#include "depdisj/stats.hpp"

#include <cstdio>
#include <numeric>

#include "depdisj/encode.hpp"
#include "depdisj/modularize.hpp"

namespace depdisj {

std::size_t GroupStats::rows_after_sum() const noexcept {
    std::size_t sum = 0;
    for (const SubgroupStats& s : subgroups)
        sum += s.width;
    return sum;
}

std::size_t GroupStats::rows_after_product() const noexcept {
    std::size_t product = 1;
    for (const SubgroupStats& s : subgroups)
        product *= s.width;
    return product;
}

double GroupStats::interaction_ratio() const noexcept {
    const std::size_t sum = rows_after_sum();
    return sum == 0 ? 0.0 : static_cast<double>(width_before) / static_cast<double>(sum);
}

GroupStats describe(const DependencyGroup& input, std::span<const DependencyGroup> output) {
    GroupStats s;
    s.name = input.name;
    s.width_before = input.width();
    s.disjunctions = input.size();
    s.rows_before = encode_group(input).cases().size();
    for (const DependencyGroup& g : output)
        s.subgroups.push_back({g.name, IndexSet(g.origin), g.width()});

    if (s.subgroups.size() > 1)
        s.note = s.rows_before == 1 ? "deterministic, split" : "split";
    else if (s.disjunctions == 1)
        s.note = "single disjunction";
    else if (is_prime(s.rows_before))
        s.note = "prime, modular";
    else
        s.note = "modular";
    if (s.rows_before < s.width_before)
        s.note += ", compacted";
    return s;
}

std::string format_stats(const StatsReport& report) {
    std::string out;
    std::size_t before = 0;
    std::size_t after = 0;
    for (const GroupStats& g : report.groups) {
        std::string line = g.name + ": width " + std::to_string(g.width_before) + ", " +
                           std::to_string(g.disjunctions) + " disjunction" +
                           (g.disjunctions == 1 ? "" : "s") + ", rows " +
                           std::to_string(g.rows_before) + " =";
        for (std::size_t k = 0; k < g.subgroups.size(); ++k)
            line += (k ? " × " : " ") + std::to_string(g.subgroups[k].width);
        line += ", " + g.note + ", after " + std::to_string(g.rows_after_sum()) + " [";
        for (std::size_t k = 0; k < g.subgroups.size(); ++k) {
            const SubgroupStats& sub = g.subgroups[k];
            line += (k ? "; " : "") + sub.name + " " + to_string(sub.disjunctions) + " width " +
                    std::to_string(sub.width);
        }
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.2f", g.interaction_ratio());
        line += "], ratio ";
        line += ratio;
        out += line + "\n";
        before += g.rows_before;
        after += g.rows_after_sum();
    }
    out += "total: " + std::to_string(report.groups.size()) + " group" +
           (report.groups.size() == 1 ? "" : "s") + ", rows " + std::to_string(before) +
           " -> " + std::to_string(after) + "\n";
    return out;
}

} // namespace depdisj
