#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "spoilkit/core/error.hpp"

namespace spoilkit {

namespace detail {

// Continued-fraction evaluation of the incomplete beta (Lentz's method).
inline double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kFpMin = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace detail

// Regularised incomplete beta I_x(a, b).
inline double reg_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::betacf(a, b, x) / a;
  return 1.0 - front * detail::betacf(b, a, 1.0 - x) / b;
}

// Two-tailed p-value of Student's t distribution with `df` degrees of freedom.
inline double students_t_two_tailed_p(double t, double df) {
  if (!std::isfinite(t)) return 0.0;
  if (t == 0.0) return 1.0;
  return reg_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

enum class TTestKind {
  Welch,          // unequal-variance (default)
  PooledStudent,  // classic equal-variance form
};

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  bool significant = false;
  // Both samples constant and equal: t is 0/0. Reported as t=0, p=1.
  bool zero_variance_degenerate = false;
};

inline double sample_mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double sample_variance(std::span<const double> x) {
  const double m = sample_mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

// Two-sample two-tailed t-test. Welch's form uses the Welch-Satterthwaite
// degrees of freedom; the pooled form is kept as an option.
inline TTestResult t_test(std::span<const double> a, std::span<const double> b,
                          TTestKind kind = TTestKind::Welch, double alpha = 0.05) {
  if (a.size() < 2 || b.size() < 2)
    throw Error(ErrorKind::TooFewReports, "each sample needs at least 2 observations");
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double ma = sample_mean(a), mb = sample_mean(b);
  const double va = sample_variance(a), vb = sample_variance(b);

  TTestResult r;
  double se2 = 0.0;
  if (kind == TTestKind::Welch) {
    se2 = va / na + vb / nb;
    if (se2 > 0.0) {
      const double ta = va / na, tb = vb / nb;
      r.df = se2 * se2 / (ta * ta / (na - 1.0) + tb * tb / (nb - 1.0));
    }
  } else {
    const double sp2 = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
    se2 = sp2 * (1.0 / na + 1.0 / nb);
    r.df = na + nb - 2.0;
  }

  if (se2 == 0.0) {
    r.df = na + nb - 2.0;
    if (ma == mb) {
      r.t = 0.0;
      r.p = 1.0;
      r.zero_variance_degenerate = true;
    } else {
      r.t = (ma > mb) ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
  } else {
    r.t = (ma - mb) / std::sqrt(se2);
    r.p = students_t_two_tailed_p(r.t, r.df);
  }
  r.significant = r.p < alpha;
  return r;
}

}  // namespace spoilkit
