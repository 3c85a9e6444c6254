#pragma once

#include <memory>
#include <vector>

namespace exlasso {

/// Throws OverlappingGroups / MissingIndices / EmptyGroup unless `groups`
/// (0-based index lists) is a disjoint cover of {0, ..., p-1}. Error
/// messages report indices 1-based to match the group-file convention.
void validate_partition(const std::vector<std::vector<int>>& groups, int p);

/// Disjoint, exhaustive grouping of the predictor indices {0, ..., p-1}.
/// Stored both as per-group index lists (sorted ascending, which fixes the
/// coordinate sweep order) and as an index-to-group lookup.
class GroupPartition {
public:
    GroupPartition(std::vector<std::vector<int>> groups, int p);

    int p() const { return p_; }
    int num_groups() const { return static_cast<int>(groups_.size()); }
    const std::vector<int>& group(int g) const { return groups_[g]; }
    const std::vector<std::vector<int>>& groups() const { return groups_; }
    int group_of(int index) const { return group_of_[index]; }

    static GroupPartition singletons(int p);
    /// p indices split into num_groups contiguous blocks of near-equal size.
    static GroupPartition contiguous_blocks(int p, int num_groups);

private:
    std::vector<std::vector<int>> groups_;
    std::vector<int> group_of_;
    int p_;
};

using PartitionPtr = std::shared_ptr<const GroupPartition>;

}  // namespace exlasso
