#include "incdom/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace incdom {

VertexSet::VertexSet(Mask bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [0, 64]");
    if ((bits & ~ground_mask(n)) != 0) throw std::invalid_argument("set has elements outside [n]");
}

VertexSet VertexSet::from_elements(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
        if (m & element_bit(e)) throw std::invalid_argument("element " + std::to_string(e) + " repeated");
        m |= element_bit(e);
    }
    return {m, n};
}

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::uint64_t colex_rank(Mask s) {
    std::uint64_t r = 0;
    int i = 1;
    for (Mask rest = s; rest != 0; rest &= rest - 1, ++i) {
        const int c = std::countr_zero(rest);  // element - 1
        r += binomial(c, i);
    }
    return r;
}

Mask colex_unrank_mask(std::uint64_t r, int n, int k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) throw std::out_of_range("colex_unrank: invalid (n,k)");
    if (r >= binomial(n, k)) throw std::out_of_range("colex_unrank: rank " + std::to_string(r) + " out of range");
    Mask m = 0;
    int top = n;
    for (int i = k; i >= 1; --i) {
        // largest c < top with binomial(c, i) <= r
        int c = top - 1;
        while (binomial(c, i) > r) --c;
        m |= Mask{1} << c;
        r -= binomial(c, i);
        top = c;
    }
    return m;
}

VertexSet colex_unrank(std::uint64_t r, int n, int k) { return {colex_unrank_mask(r, n, k), n}; }

KSubsets::KSubsets(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) {
        empty_ = true;
        return;
    }
    first_ = ground_mask(k);
}

std::vector<VertexSet> enumerate_ksubsets(int n, int k) {
    std::vector<VertexSet> out;
    out.reserve(binomial(n, k));
    for (Mask m : KSubsets(n, k)) out.emplace_back(m, n);
    return out;
}

}  // namespace incdom
