#include "reexp/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <algorithm>
#include <cmath>

namespace reexp {

namespace {

struct ReferenceRule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

const ReferenceRule& reference_rule() {
  static const ReferenceRule rule = [] {
    using Gauss = boost::math::quadrature::gauss<double, kGaussPointsPerPanel>;
    // Boost stores the nonnegative half of a symmetric rule.
    const auto& abscissa = Gauss::abscissa();
    const auto& weights = Gauss::weights();
    ReferenceRule r;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      if (abscissa[i] == 0.0) {
        r.x.push_back(0.0);
        r.w.push_back(weights[i]);
        continue;
      }
      r.x.push_back(-abscissa[i]);
      r.w.push_back(weights[i]);
      r.x.push_back(abscissa[i]);
      r.w.push_back(weights[i]);
    }
    return r;
  }();
  return rule;
}

}  // namespace

QuadratureNodes composite_gauss_legendre(double lo, double hi, std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("composite rule needs at least one panel");
  const auto& ref = reference_rule();
  QuadratureNodes q;
  q.x.reserve(panels * ref.x.size());
  q.w.reserve(panels * ref.x.size());
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < ref.x.size(); ++i) {
      q.x.push_back(mid + 0.5 * h * ref.x[i]);
      q.w.push_back(0.5 * h * ref.w[i]);
    }
  }
  return q;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, std::size_t panels) {
  const auto q = composite_gauss_legendre(lo, hi, panels);
  double s = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(q.x[i]);
  return s;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                  std::size_t initial_panels, double abs_tol, std::size_t max_panels) {
  std::size_t p = std::max<std::size_t>(1, initial_panels);
  double prev = integrate(f, lo, hi, p);
  while (2 * p <= max_panels) {
    p *= 2;
    const double cur = integrate(f, lo, hi, p);
    const double change = std::abs(cur - prev);
    if (change <= abs_tol) return {cur, p, change};
    prev = cur;
  }
  throw QuadratureFailure("quadrature did not reach tolerance " + std::to_string(abs_tol) + " within " +
                          std::to_string(max_panels) + " panels");
}

}  // namespace reexp
