#pragma once

#include <cstdio>
#include <string>

namespace spoilkit {

// "99.28 (± 0.35)" — metric tables report mean and spread as percentages
// rounded to two decimals.
inline std::string format_mean_std(double mean, double stddev, bool as_percent = true) {
  const double scale = as_percent ? 100.0 : 1.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f (± %.2f)", mean * scale, stddev * scale);
  return buf;
}

// Shortest representation that round-trips a double exactly; used for the
// machine-readable figure tables.
inline std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double parsed = 0.0;
  std::sscanf(buf, "%lg", &parsed);
  if (parsed == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char probe[40];
      std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
      std::sscanf(probe, "%lg", &parsed);
      if (parsed == v) return probe;
    }
  }
  return buf;
}

}  // namespace spoilkit
