#pragma once

// Composite 16-point Gauss-Legendre rules with panel-doubling refinement.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reexp {

/// Raised when refinement cannot confirm the requested tolerance within the
/// panel budget. Oracles never return an unconfirmed value.
class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureNodes {
  std::vector<double> x;
  std::vector<double> w;
};

inline constexpr int kGaussPointsPerPanel = 16;

/// Nodes and weights of the composite rule with `panels` equal panels on [lo, hi].
QuadratureNodes composite_gauss_legendre(double lo, double hi, std::size_t panels);

double integrate(const std::function<double(double)>& f, double lo, double hi, std::size_t panels);

struct AdaptiveResult {
  double value = 0.0;
  std::size_t panels = 0;      // panel count of the accepted estimate
  double last_change = 0.0;    // |I(2P) - I(P)| at acceptance
};

/// Doubles the panel count from `initial_panels` until two successive
/// estimates differ by at most `abs_tol`; throws QuadratureFailure once the
/// count would exceed `max_panels`.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                  std::size_t initial_panels, double abs_tol, std::size_t max_panels);

}  // namespace reexp
