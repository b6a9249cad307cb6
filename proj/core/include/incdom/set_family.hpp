#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "incdom/combinatorics.hpp"

namespace incdom {

/// A deduplicated, colex-sorted family of k-subsets of [n].
class SetFamily {
public:
    SetFamily() = default;
    SetFamily(int n, int k);

    /// Sorts and checks the members. Throws std::invalid_argument on a
    /// duplicate, a wrong cardinality, or an element outside [n].
    SetFamily(int n, int k, std::vector<Mask> members);

    /// Like the checked constructor, but silently drops duplicates.
    static SetFamily from_masks_dedup(int n, int k, std::vector<Mask> members);

    /// Every k-subset of [n].
    static SetFamily complete(int n, int k);

    int ground() const { return n_; }
    int uniformity() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::span<const Mask> masks() const { return members_; }
    VertexSet operator[](std::size_t i) const { return {members_[i], n_}; }
    std::vector<VertexSet> members() const;

    /// Binary search, O(log m).
    bool contains(Mask s) const;

    /// Members of `complete(n,k)` not in this family.
    SetFamily complement() const;

    SetFamily union_with(const SetFamily& other) const;
    SetFamily minus(const SetFamily& other) const;
    bool subset_of(const SetFamily& other) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Mask> members_;
};

/// All (k-1)-subsets of members of f. Throws std::invalid_argument for k = 0.
SetFamily shadow(const SetFamily& f);

/// True when no two members share k-1 elements (each (k-1)-set is covered at
/// most once).
bool is_packing(const SetFamily& f);

}  // namespace incdom
