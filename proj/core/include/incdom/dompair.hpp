#pragma once

#include <cstddef>

#include "incdom/set_family.hpp"

namespace incdom {

/// A vertex set of the inclusion graph G_{l,k} on [n], split by level: the
/// k-sets it contains (`lower`) and the l-sets it contains (`upper`).
class DomPair {
public:
    DomPair() = default;
    /// Empty pair. Requires 1 <= k < l <= n <= 64.
    DomPair(int n, int l, int k);
    DomPair(SetFamily lower, SetFamily upper);

    int ground() const { return lower_.ground(); }
    int l() const { return upper_.uniformity(); }
    int k() const { return lower_.uniformity(); }
    const SetFamily& lower() const { return lower_; }
    const SetFamily& upper() const { return upper_; }
    std::size_t size() const { return lower_.size() + upper_.size(); }

    friend bool operator==(const DomPair&, const DomPair&) = default;

private:
    SetFamily lower_;
    SetFamily upper_;
};

}  // namespace incdom
