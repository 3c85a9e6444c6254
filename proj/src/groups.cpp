#include "exlasso/groups.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "exlasso/errors.hpp"

namespace exlasso {

namespace {

std::string index_list(const std::vector<int>& idx) {
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(idx[i] + 1);  // 1-based in messages
        if (i == 9 && idx.size() > 10) {
            out += ", ...";
            break;
        }
    }
    return out;
}

}  // namespace

void validate_partition(const std::vector<std::vector<int>>& groups, int p) {
    std::vector<int> seen(static_cast<std::size_t>(p), 0);
    std::vector<int> overlapping;
    std::vector<int> out_of_range;

    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) {
            throw EmptyGroup("group " + std::to_string(g + 1) + " is empty",
                             static_cast<int>(g));
        }
        for (int idx : groups[g]) {
            if (idx < 0 || idx >= p) {
                out_of_range.push_back(idx);
            } else if (seen[idx]++ > 0) {
                overlapping.push_back(idx);
            }
        }
    }
    if (!out_of_range.empty()) {
        throw MissingIndices("indices outside 1..p: " + index_list(out_of_range),
                             out_of_range);
    }
    if (!overlapping.empty()) {
        std::sort(overlapping.begin(), overlapping.end());
        overlapping.erase(std::unique(overlapping.begin(), overlapping.end()),
                          overlapping.end());
        throw OverlappingGroups("indices in more than one group: " + index_list(overlapping),
                                overlapping);
    }
    std::vector<int> missing;
    for (int i = 0; i < p; ++i) {
        if (seen[i] == 0) missing.push_back(i);
    }
    if (!missing.empty()) {
        throw MissingIndices("indices covered by no group: " + index_list(missing), missing);
    }
}

GroupPartition::GroupPartition(std::vector<std::vector<int>> groups, int p)
    : groups_(std::move(groups)), group_of_(static_cast<std::size_t>(p), -1), p_(p) {
    validate_partition(groups_, p);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        std::sort(groups_[g].begin(), groups_[g].end());
        for (int idx : groups_[g]) group_of_[idx] = static_cast<int>(g);
    }
}

GroupPartition GroupPartition::singletons(int p) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) groups[i] = {i};
    return GroupPartition(std::move(groups), p);
}

GroupPartition GroupPartition::contiguous_blocks(int p, int num_groups) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(num_groups));
    const int base = p / num_groups;
    const int extra = p % num_groups;
    int next = 0;
    for (int g = 0; g < num_groups; ++g) {
        const int size = base + (g < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) groups[g].push_back(next++);
    }
    return GroupPartition(std::move(groups), p);
}

}  // namespace exlasso
