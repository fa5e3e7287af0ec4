#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "reexp/reexpand.hpp"

namespace reexp {

std::string to_string(VerdictHint hint) {
  switch (hint) {
    case VerdictHint::converging: return "converging";
    case VerdictHint::diverging: return "diverging";
    case VerdictHint::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<Index> doubling_windows(Index base, int count) {
  if (base < 1 || count < 1) throw std::invalid_argument("doubling windows need base >= 1 and count >= 1");
  std::vector<Index> w;
  for (int i = 0; i < count; ++i) w.push_back(base << i);
  return w;
}

namespace {

VerdictHint classify(std::span<const WindowNorm> rows, double scale) {
  if (rows.size() < 3) return VerdictHint::inconclusive;
  // Increments between consecutive windows, per doubling of the window.
  std::vector<double> inc, octaves;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    inc.push_back(rows[i].increment);
    octaves.push_back(std::log2(static_cast<double>(rows[i].window) / static_cast<double>(rows[i - 1].window)));
  }
  const double zero = kZeroIncrement * std::max(1.0, scale);
  if (std::all_of(inc.begin(), inc.end(), [&](double x) { return x <= zero; })) return VerdictHint::converging;

  bool converging = true;
  for (std::size_t i = 1; i < inc.size(); ++i) {
    if (inc[i] <= zero) continue;
    if (inc[i - 1] <= zero) {
      converging = false;
      break;
    }
    if (std::pow(inc[i] / inc[i - 1], 1.0 / octaves[i]) > kConvergingRatio) {
      converging = false;
      break;
    }
  }
  if (converging) return VerdictHint::converging;

  const double first = inc[0] / octaves[0];
  bool diverging = first > zero;
  for (std::size_t i = 1; i < inc.size() && diverging; ++i)
    if (inc[i] / octaves[i] < kDivergingFloor * first) diverging = false;
  return diverging ? VerdictHint::diverging : VerdictHint::inconclusive;
}

}  // namespace

SummabilityReport summability_report(const Coeff1D& a, HilbertKind kind, std::span<const Index> windows,
                                     Algorithm algorithm) {
  if (windows.empty()) throw std::invalid_argument("summability report needs at least one window");
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (windows[i] < 1) throw std::invalid_argument("windows must be positive");
    if (i > 0 && windows[i] <= windows[i - 1]) throw std::invalid_argument("windows must be increasing");
  }

  SummabilityReport rep;
  rep.kind = kind;
  const Index n_max = windows.back();
  const Index lo = (kind == HilbertKind::full) ? -n_max : std::max<Index>(0, min_output_index(kind));
  const Coeff1D b = dht(a, {kind, {lo, n_max}, algorithm});

  // Accumulate |b_n| by |n| so nested windows share one evaluation.
  std::vector<double> by_abs(static_cast<std::size_t>(n_max + 1), 0.0);
  for (Index n = lo; n <= n_max; ++n) by_abs[static_cast<std::size_t>(std::abs(n))] += std::abs(b[n]);

  double norm = 0.0, prev = 0.0;
  Index reached = -1;
  for (Index w : windows) {
    for (Index n = reached + 1; n <= w; ++n) norm += by_abs[static_cast<std::size_t>(n)];
    reached = w;
    rep.partial_norms.push_back({w, norm, norm - prev, window_tail_bound(a, w)});
    prev = norm;
  }

  MomentSums m;
  bool nonnegative = true;
  for (Index k = a.offset(); k < a.end_index(); ++k) {
    const Complex v = a[k];
    m.sum += v;
    m.alternating_sum += (k % 2 == 0) ? v : -v;
    if (k < 0 && v != Complex{}) nonnegative = false;
  }
  rep.moment_sums.push_back(m);
  rep.log_weighted_sum = nonnegative ? log_weighted_sum(a, 0) : std::numeric_limits<double>::quiet_NaN();
  rep.verdict_hint = classify(rep.partial_norms, l1_norm(a));
  return rep;
}

}  // namespace reexp
