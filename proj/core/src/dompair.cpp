#include "incdom/dompair.hpp"

#include <stdexcept>

namespace incdom {

namespace {

void check_levels(int n, int l, int k) {
    if (!(1 <= k && k < l && l <= n && n <= kMaxGround)) throw std::invalid_argument("DomPair requires 1 <= k < l <= n <= 64");
}

}  // namespace

DomPair::DomPair(int n, int l, int k) {
    check_levels(n, l, k);
    lower_ = SetFamily(n, k);
    upper_ = SetFamily(n, l);
}

DomPair::DomPair(SetFamily lower, SetFamily upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.ground() != upper_.ground()) throw std::invalid_argument("DomPair levels over different ground sets");
    check_levels(lower_.ground(), upper_.uniformity(), lower_.uniformity());
}

}  // namespace incdom
