#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace uite {

// log(1 + e^x), overflow-safe.
double softplus(double x);

// Inverse of softplus on (0, inf).
double softplus_inv(double y);

// Logistic function, stable on both tails.
double sigmoid(double x);

// Standard normal CDF. Absolute error well below 1e-7 (erfc-backed).
double std_normal_cdf(double z);

inline double clamp_nonneg(double v) { return v < 0.0 ? 0.0 : v; }

// Outcomes live on the log scale y = log(count + 1); counts are recovered
// as exp(y) - 1.
inline double log_from_count(double count) { return std::log1p(count); }
inline double count_from_log(double y) { return std::expm1(y); }

double mean(std::span<const double> xs);

// Unbiased (n-1) sample variance; requires at least 2 values.
double sample_variance(std::span<const double> xs);

// Average ranks (ties share the mean of their rank run), 1-based.
std::vector<double> average_ranks(std::span<const double> xs);

// Spearman rank correlation with average-rank tie handling. Returns
// nullopt when either input is constant (undefined, not a number).
std::optional<double> spearman(std::span<const double> a, std::span<const double> b);

bool all_finite(std::span<const double> xs);

}  // namespace uite
