#pragma once

#include <cmath>
#include <functional>

#include "acmv/errors.hpp"

namespace acmv {

// ACMV operating point: the three motor frequencies in Hz.
struct OperatingPoint {
  double w1 = 40.0; // supply-air fan
  double w2 = 40.0; // compressor
  double w3 = 40.0; // water pump

  double operator[](int i) const { return i == 0 ? w1 : (i == 1 ? w2 : w3); }
  double& operator[](int i) { return i == 0 ? w1 : (i == 1 ? w2 : w3); }
};

inline double squared_distance(const OperatingPoint& a, const OperatingPoint& b) {
  const double d1 = a.w1 - b.w1;
  const double d2 = a.w2 - b.w2;
  const double d3 = a.w3 - b.w3;
  return d1 * d1 + d2 * d2 + d3 * d3;
}

// Feasible frequency box, identical in all three coordinates.
struct Bounds {
  double lo = 30.0;
  double hi = 50.0;

  double width() const { return hi - lo; }
  bool contains(const OperatingPoint& w) const {
    for (int i = 0; i < 3; ++i)
      if (!(w[i] >= lo && w[i] <= hi)) return false;
    return true;
  }
  OperatingPoint clamp(OperatingPoint w) const {
    for (int i = 0; i < 3; ++i) w[i] = std::min(hi, std::max(lo, w[i]));
    return w;
  }
};

inline void require_in_box(const OperatingPoint& w, const Bounds& b) {
  if (!b.contains(w))
    throw InvalidArgumentError("operating point outside [" + std::to_string(b.lo) +
                               ", " + std::to_string(b.hi) + "] box");
}

// Black-box objective evaluated by the optimizers.
using ObjectiveFn = std::function<double(const OperatingPoint&)>;

} // namespace acmv
