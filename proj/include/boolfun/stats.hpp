#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace boolfun {

struct KsResult {
  double d = 0.0;        // sup distance between the empirical CDFs
  double p_value = 1.0;  // asymptotic two-sided tail probability
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Asymptotic Kolmogorov tail Q(lambda) = 2 sum_{k>=1} (-1)^(k-1)
/// exp(-2 k^2 lambda^2), with Stephens' small-sample correction of the
/// argument.
inline double ks_asymptotic_p(double d, std::size_t n1, std::size_t n2) {
  const double ne =
      static_cast<double>(n1) * static_cast<double>(n2) / (double(n1) + n2);
  const double lambda = d * (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne));
  if (lambda < 1e-9) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Exact two-sample KS statistic by a sorted merge sweep, with the
/// asymptotic p-value. Ties advance both CDFs before the gap is measured.
template <typename T>
KsResult ks_two_sample(std::vector<T> a, std::vector<T> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("KS needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const T x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  KsResult r;
  r.d = d;
  r.n1 = a.size();
  r.n2 = b.size();
  r.p_value = ks_asymptotic_p(d, r.n1, r.n2);
  return r;
}

/// Pearson chi-square statistic for equal expected counts across bins.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw std::invalid_argument("chi-square needs bins");
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

inline double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

/// log of C(n, k), for expected counts too large for integers.
inline double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace boolfun
