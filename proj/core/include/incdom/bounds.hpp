#pragma once

// Closed-form values and asymptotic coefficients (in units of binomial(n,k))
// for domination numbers of inclusion graphs.

#include <cstdint>
#include <utility>
#include <vector>

namespace incdom::bounds {

/// binomial(n,2) - floor((n+1)^2/8): the domination number of G_{3,2}.
/// Values for n < 5 are the formula only.
std::int64_t gamma32(int n);

/// floor((n+1)^2 / 8).
std::int64_t lemma2_rhs(int n);

/// Root of (k-1)x^k - kx + 1 in [0, 1/2], by bisection to 1e-12.
double alpha_star(int k);

/// 1 - (k-1)^2 a (1-a)^(k-2) / k at a = alpha_star(k).
double new_upper(int k);

/// (k-1) a (1-a)^(k-1) / (1 - a^k): the e - c rate of the layered
/// construction.
double layered_rate(int k, double a);

struct GerbnerBounds {
    double lower = 0.0;  // 1 - (k-1)/k * t_k
    double upper = 0.0;  // 1 - (1/2) ((k-1)/k)^(k-1)
};

GerbnerBounds gerbner_bounds(int k, double tk);

/// Lower coefficient for gamma(G_{l,k}) given the Turan density t_{l,k}.
double general_lower_l(int l, int k, double tlk);

/// (l+3) / ((l-1)(l+1)), the coefficient of gamma(G_{l,2}).
double gamma_l2(int l);

struct BoundsRow {
    int k = 0;
    double turan_upper_tk = 0.0;
    double lower = 0.0;
    double gerbner_upper = 0.0;
    double new_upper = 0.0;
    double alpha_star = 0.0;
};

/// Turan density inputs, reverse-engineered from the published lower
/// column (k = 3..7).
std::vector<std::pair<int, double>> default_tk();

/// One row per (k, t_k). Throws std::invalid_argument for t_k outside (0,1)
/// or k < 3.
std::vector<BoundsRow> table1(const std::vector<std::pair<int, double>>& config = default_tk());

/// Three-decimal display of a bound, rounded away from the feasible side:
/// lower bounds down, upper bounds up.
double round_lower(double x);
double round_upper(double x);

}  // namespace incdom::bounds
