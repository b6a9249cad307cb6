#include "incdom/set_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace incdom {

namespace {

void check_params(int n, int k) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [0, 64]");
    if (k < 0 || k > n) throw std::invalid_argument("cardinality must be in [0, n]");
}

void check_member(Mask m, int n, int k) {
    if ((m & ~ground_mask(n)) != 0) throw std::invalid_argument("member has elements outside [n]");
    if (cardinality(m) != k)
        throw std::invalid_argument("member " + VertexSet(m & ground_mask(n), n).to_string() + " does not have cardinality " +
                                    std::to_string(k));
}

}  // namespace

SetFamily::SetFamily(int n, int k) : n_(n), k_(k) { check_params(n, k); }

SetFamily::SetFamily(int n, int k, std::vector<Mask> members) : n_(n), k_(k), members_(std::move(members)) {
    check_params(n, k);
    for (Mask m : members_) check_member(m, n, k);
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) throw std::invalid_argument("duplicate member " + VertexSet(*dup, n).to_string());
}

SetFamily SetFamily::from_masks_dedup(int n, int k, std::vector<Mask> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SetFamily(n, k, std::move(members));
}

SetFamily SetFamily::complete(int n, int k) {
    std::vector<Mask> all;
    all.reserve(binomial(n, k));
    for (Mask m : KSubsets(n, k)) all.push_back(m);
    SetFamily f(n, k);
    f.members_ = std::move(all);
    return f;
}

std::vector<VertexSet> SetFamily::members() const {
    std::vector<VertexSet> out;
    out.reserve(members_.size());
    for (Mask m : members_) out.emplace_back(m, n_);
    return out;
}

bool SetFamily::contains(Mask s) const { return std::binary_search(members_.begin(), members_.end(), s); }

SetFamily SetFamily::complement() const {
    SetFamily out(n_, k_);
    out.members_.reserve(binomial(n_, k_) - members_.size());
    auto it = members_.begin();
    for (Mask m : KSubsets(n_, k_)) {
        while (it != members_.end() && *it < m) ++it;
        if (it == members_.end() || *it != m) out.members_.push_back(m);
    }
    return out;
}

SetFamily SetFamily::union_with(const SetFamily& other) const {
    if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("union of incompatible families");
    SetFamily out(n_, k_);
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(), std::back_inserter(out.members_));
    return out;
}

SetFamily SetFamily::minus(const SetFamily& other) const {
    if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("difference of incompatible families");
    SetFamily out(n_, k_);
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
    return out;
}

bool SetFamily::subset_of(const SetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SetFamily shadow(const SetFamily& f) {
    if (f.uniformity() == 0) throw std::invalid_argument("shadow of a family of empty sets is undefined");
    std::vector<Mask> out;
    out.reserve(f.size() * static_cast<std::size_t>(f.uniformity()));
    for (Mask m : f.masks()) for_each_facet(m, [&](Mask facet) { out.push_back(facet); });
    return SetFamily::from_masks_dedup(f.ground(), f.uniformity() - 1, std::move(out));
}

bool is_packing(const SetFamily& f) {
    if (f.uniformity() == 0) return f.size() <= 1;
    std::unordered_set<Mask> seen;
    seen.reserve(f.size() * static_cast<std::size_t>(f.uniformity()));
    for (Mask m : f.masks()) {
        bool ok = true;
        for_each_facet(m, [&](Mask facet) { ok = seen.insert(facet).second && ok; });
        if (!ok) return false;
    }
    return true;
}

}  // namespace incdom
