#pragma once

// Subsets of a ground set [n] = {1,...,n} as 64-bit masks, exact binomials,
// colex ranking and enumeration.
//
// Element i of the ground set lives at bit (i - 1). For sets of a fixed
// cardinality, numeric order of the masks coincides with colex order, which
// is the canonical order used everywhere in the library.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace incdom {

inline constexpr int kMaxGround = 64;

using Mask = std::uint64_t;

namespace detail {

constexpr std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> make_pascal() {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> t{};
    for (int n = 0; n <= kMaxGround; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
}

inline constexpr auto kPascal = make_pascal();

}  // namespace detail

/// Exact binomial coefficient for 0 <= n <= 64; zero outside 0 <= k <= n.
constexpr std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) return 0;
    return detail::kPascal[n][k];
}

static_assert(binomial(64, 32) == 1832624140942590534ULL, "binomial(64,32) must fit in 64 bits");
static_assert(binomial(30, 3) == 4060);

/// Mask with elements 1..n set.
constexpr Mask ground_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

constexpr Mask element_bit(int i) { return Mask{1} << (i - 1); }

constexpr int cardinality(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Largest element of a non-empty mask.
constexpr int max_element(Mask m) { return 64 - std::countl_zero(m); }

/// Next mask of equal popcount in numeric (= colex) order; 0 when `m` was the
/// last one below bit `n`.
constexpr Mask next_same_popcount(Mask m, int n) {
    if (m == 0) return 0;
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    if (ripple == 0) return 0;  // overflow past bit 63
    const Mask next = ripple | (((m ^ ripple) >> 2) / low);
    if (n < 64 && (next >> n) != 0) return 0;
    return next;
}

/// A subset of [n] with its ground-set size.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(Mask bits, int n);
    /// Throws std::invalid_argument on repeated or out-of-range elements.
    static VertexSet from_elements(const std::vector<int>& elems, int n);

    constexpr Mask bits() const { return bits_; }
    constexpr int ground() const { return n_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1) != 0; }
    constexpr bool subset_of(const VertexSet& other) const { return is_subset(bits_, other.bits_); }

    std::vector<int> elements() const;
    std::string to_string() const;

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
    // Colex within a fixed cardinality; ground size breaks remaining ties.
    friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.n_ <=> b.n_;
    }

private:
    Mask bits_ = 0;
    int n_ = 0;
};

/// Colex rank of a k-set among all k-subsets of [n].
std::uint64_t colex_rank(Mask s);
inline std::uint64_t colex_rank(const VertexSet& s) { return colex_rank(s.bits()); }

/// Inverse of colex_rank. Throws std::out_of_range when r >= binomial(n,k).
Mask colex_unrank_mask(std::uint64_t r, int n, int k);
VertexSet colex_unrank(std::uint64_t r, int n, int k);

/// Forward range over the k-subsets of [n] in colex order.
class KSubsets {
public:
    KSubsets(int n, int k);

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Mask;
        using difference_type = std::ptrdiff_t;
        using pointer = const Mask*;
        using reference = Mask;

        iterator() = default;
        iterator(Mask cur, int n, int k, bool done) : cur_(cur), n_(n), k_(k), done_(done) {}

        Mask operator*() const { return cur_; }
        iterator& operator++() {
            if (k_ == 0) {
                done_ = true;
                return *this;
            }
            cur_ = next_same_popcount(cur_, n_);
            if (cur_ == 0) done_ = true;
            return *this;
        }
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ || b.done_) return a.done_ == b.done_;
            return a.cur_ == b.cur_;
        }

    private:
        Mask cur_ = 0;
        int n_ = 0;
        int k_ = 0;
        bool done_ = true;
    };

    iterator begin() const { return {first_, n_, k_, empty_}; }
    iterator end() const { return {}; }

private:
    int n_;
    int k_;
    Mask first_ = 0;
    bool empty_ = false;
};

/// All k-subsets of [n] as VertexSets, colex order.
std::vector<VertexSet> enumerate_ksubsets(int n, int k);

/// All (|m|-1)-subsets of the mask m.
template <class F>
void for_each_facet(Mask m, F&& f) {
    for (Mask rest = m; rest != 0; rest &= rest - 1) f(m & ~(rest & (~rest + 1)));
}

/// All j-subsets of the mask m, in colex order relative to m's elements.
template <class F>
void for_each_subset_of_size(Mask m, int j, F&& f) {
    const int c = std::popcount(m);
    if (j < 0 || j > c) return;
    std::array<int, 64> pos{};
    int idx = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) pos[idx++] = std::countr_zero(rest);
    for (Mask sel : KSubsets(c, j)) {
        Mask out = 0;
        for (Mask s = sel; s != 0; s &= s - 1) out |= Mask{1} << pos[std::countr_zero(s)];
        f(out);
    }
}

}  // namespace incdom
