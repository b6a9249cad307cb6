#include "incdom/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "incdom/combinatorics.hpp"

namespace incdom::bounds {

std::int64_t lemma2_rhs(int n) {
    if (n < 1) throw std::invalid_argument("lemma2_rhs requires n >= 1");
    const std::int64_t m = n + 1;
    return m * m / 8;
}

std::int64_t gamma32(int n) {
    if (n < 2) throw std::invalid_argument("gamma32 requires n >= 2");
    const std::int64_t nn = n;
    return nn * (nn - 1) / 2 - lemma2_rhs(n);
}

double alpha_star(int k) {
    if (k < 3) throw std::invalid_argument("alpha_star requires k >= 3");
    auto p = [k](double x) { return (k - 1) * std::pow(x, k) - k * x + 1.0; };
    double lo = 0.0, hi = 0.5;
    if (!(p(lo) > 0.0 && p(hi) < 0.0)) throw std::logic_error("alpha_star: root not bracketed");
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double new_upper(int k) {
    const double a = alpha_star(k);
    return 1.0 - (k - 1.0) * (k - 1.0) * a * std::pow(1.0 - a, k - 2) / k;
}

double layered_rate(int k, double a) {
    if (k < 3 || !(a > 0.0 && a < 1.0)) throw std::invalid_argument("layered_rate requires k >= 3 and 0 < a < 1");
    return (k - 1.0) * a * std::pow(1.0 - a, k - 1) / (1.0 - std::pow(a, k));
}

GerbnerBounds gerbner_bounds(int k, double tk) {
    if (k < 3) throw std::invalid_argument("gerbner_bounds requires k >= 3");
    if (!(tk > 0.0 && tk < 1.0)) throw std::invalid_argument("t_k must lie in (0,1)");
    const double r = (k - 1.0) / k;
    return {1.0 - r * tk, 1.0 - 0.5 * std::pow(r, k - 1)};
}

double general_lower_l(int l, int k, double tlk) {
    if (!(2 <= k && k < l && l <= kMaxGround)) throw std::invalid_argument("general_lower_l requires 2 <= k < l");
    if (!(tlk > 0.0 && tlk < 1.0)) throw std::invalid_argument("t_{l,k} must lie in (0,1)");
    const double b = static_cast<double>(binomial(l, k));
    return 1.0 - (b - 2.0) / (b - 1.0) * tlk;
}

double gamma_l2(int l) {
    if (l < 3) throw std::invalid_argument("gamma_l2 requires l >= 3");
    return (l + 3.0) / ((l - 1.0) * (l + 1.0));
}

std::vector<std::pair<int, double>> default_tk() {
    return {{3, 0.5936}, {4, 0.7373}, {5, 0.7697}, {6, 0.8333}, {7, 0.8411}};
}

std::vector<BoundsRow> table1(const std::vector<std::pair<int, double>>& config) {
    std::vector<BoundsRow> rows;
    for (auto [k, tk] : config) {
        if (!(tk > 0.0 && tk < 1.0)) throw std::invalid_argument("t_" + std::to_string(k) + " must lie in (0,1)");
        const auto g = gerbner_bounds(k, tk);
        rows.push_back({k, tk, g.lower, g.upper, new_upper(k), alpha_star(k)});
    }
    return rows;
}

// The small offsets absorb representation error in values that are exact
// multiples of 0.001 (e.g. 7/9 is not, 0.5 is).
double round_lower(double x) { return std::floor(x * 1000.0 + 1e-9) / 1000.0; }
double round_upper(double x) { return std::ceil(x * 1000.0 - 1e-9) / 1000.0; }

}  // namespace incdom::bounds
