#pragma once

// Re-expansion of cosine/sine series on [0, pi]^d at the coefficient level.
//
// A function given by the eta-parity series
//   f(x) = sum_k a_k prod_{eta_j=1} cos k_j x_j prod_{eta_j=0} sin k_j x_j
// is re-expanded in the complementary family,
//   f(x) = sum_m b_m prod_{eta_j=1} sin m_j x_j prod_{eta_j=0} cos m_j x_j,
// with b = (2/pi)^d h_eta^- a (see hilbert.hpp). The cosine coefficient at
// m_j = 0 is the raw formula value, i.e. twice the mean along that axis;
// reconstruction uses b_0 / 2.

#include <span>
#include <string>
#include <vector>

#include "reexp/hilbert.hpp"
#include "reexp/seqcore.hpp"

namespace reexp {

struct ReexpandSpec {
  ParityVector eta;    // source parity per axis (1 = cosine source)
  WeightExponent q;    // derivative order per axis
  bool subtract_mean = false;  // drop the k = 0 (constant) term before re-expanding
  IndexBox output_box;
  Algorithm algorithm = Algorithm::fast;
  double boundary_tol = 1e-10;  // tolerance of the weighted-case boundary check
};

/// Smallest admissible output index on an axis: sine outputs (cosine source)
/// start at 1, cosine outputs at 0.
Index reexpand_output_floor(bool cosine_source) noexcept;

/// b_n = (2/pi) sum_{k-n odd} a_k (1/(n+k) + 1/(n-k)), n >= 1.
Coeff1D cos_to_sin(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);
/// b_n = (2/pi) sum_{k-n odd} a_k (1/(n+k) + 1/(k-n)), n >= 0.
Coeff1D sin_to_cos(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);

/// (2/pi)^d h_eta^- a over spec.output_box. Requires spec.q = 0.
CoeffND reexpand_nd(const CoeffND& a, const ReexpandSpec& spec);

struct WeightedReexpansion {
  /// m^q b_m: the coefficients of D^q f in the shifted target family
  /// prod cos/sin(m_j x_j + q_j pi/2).
  CoeffND raw;
  /// b_m = raw / m^q; entries with m_j = 0 on a weighted axis are set to 0
  /// and listed in `undefined`.
  CoeffND deweighted;
  std::vector<std::vector<Index>> undefined;
  /// Parity and sign under which raw = sign * reexpand_nd(weight_apply(a, q)).
  ParityVector effective_eta;
  double sign = 1.0;
  BoundaryReport boundary;
  std::vector<std::string> warnings;
};

/// Re-expands the weighted sequence k^q a. Since cos(kx + q pi/2) and
/// sin(kx + q pi/2) are +-cos or +-sin, D^q f is an eta'-parity series with
/// eta'_j = eta_j xor (q_j mod 2), and its coefficients against the shifted
/// target family are (-1)^{|q|} (2/pi)^d h_{eta'}^- (k^q a) exactly. These
/// equal m^q b_m (b the re-expansion of a) when the boundary conditions of
/// the integration by parts hold; a failed check is reported as a warning and
/// the formula-level result is still returned.
WeightedReexpansion reexpand_weighted(const CoeffND& a, const ReexpandSpec& spec);

/// (2/pi)^d times the integral over [0, pi]^d of D^q f_eta against the shifted
/// target basis at m, by composite 16-point Gauss-Legendre on the tensor grid
/// with 4 (max frequency + |m_j| + 1) panels per axis, doubled until two
/// estimates agree to 1e-10. Throws QuadratureFailure past the panel budget.
Complex quadrature_oracle(const CoeffND& a, const ParityVector& eta, const WeightExponent& q,
                          std::span<const Index> m);

/// Batched form of quadrature_oracle for many sequences and output indices
/// sharing one parity/weight configuration. Per axis it integrates every
/// (source frequency k, target frequency m) pair once; evaluating a sequence
/// then contracts those tables, which is the tensor Gauss-Legendre rule
/// applied term by term.
class ReexpansionQuadrature {
 public:
  ReexpansionQuadrature(ParityVector eta, WeightExponent q, std::vector<Index> max_source,
                        std::vector<Index> max_target, double abs_tol = 1e-10);

  /// Integral table entry for one axis: integral_0^pi of
  /// k^q src(k t + q pi/2) tgt(m t + q pi/2) dt.
  double axis_integral(std::size_t axis, Index k, Index m) const;
  Complex evaluate(const CoeffND& a, std::span<const Index> m) const;
  /// evaluate() over every m in `box`.
  CoeffND evaluate_box(const CoeffND& a, const IndexBox& box) const;

 private:
  ParityVector eta_;
  WeightExponent q_;
  std::vector<Index> max_source_, max_target_;
  std::vector<std::vector<double>> tables_;  // per axis, (max_source+1) x (max_target+1)
};

enum class VerdictHint { converging, diverging, inconclusive };
std::string to_string(VerdictHint hint);

/// Verdict thresholds, applied to window increments normalized per doubling.
inline constexpr double kConvergingRatio = 0.75;  // every ratio at most this
inline constexpr double kDivergingFloor = 0.5;    // every increment at least this fraction of the first
inline constexpr double kZeroIncrement = 1e-14;

struct WindowNorm {
  Index window = 0;
  double norm = 0.0;       // truncated l1 norm of the transform over the window
  double increment = 0.0;  // norm minus the previous row's norm (first row: norm)
  double tail_bound = 0.0; // pointwise bound on |output(n)| beyond the window
};

struct SummabilityReport {
  HilbertKind kind = HilbertKind::even_halved;
  std::vector<WindowNorm> partial_norms;
  std::vector<MomentSums> moment_sums;
  double log_weighted_sum = 0.0;  // NaN when the support reaches negative indices
  VerdictHint verdict_hint = VerdictHint::inconclusive;
};

/// Windows are output extents N: [1, N] for even kinds, [0, N] for odd kinds
/// and [-N, N] for the full transform. The hint is a trend diagnostic over
/// the supplied windows: "converging" when every per-doubling increment ratio
/// is at most kConvergingRatio, "diverging" when every increment stays above
/// kDivergingFloor times the first, "inconclusive" otherwise.
SummabilityReport summability_report(const Coeff1D& a, HilbertKind kind, std::span<const Index> windows,
                                     Algorithm algorithm = Algorithm::fast);

/// Doubling windows base, 2 base, ..., base * 2^(count-1).
std::vector<Index> doubling_windows(Index base, int count);

}  // namespace reexp
