#pragma once

// Finitely supported coefficient sequences over Z and Z^d, parity and weight
// bookkeeping, trigonometric series evaluation and log-weighted sums.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reexp {

using Complex = std::complex<double>;
using Index = std::int64_t;

/// Finitely supported complex sequence a_k, k in Z, stored as a dense block
/// [offset, offset + size). Entries outside the block are zero.
class Coeff1D {
 public:
  Coeff1D() = default;
  Coeff1D(Index offset, std::vector<Complex> values);

  /// Sparse construction, e.g. Coeff1D::from_pairs({{1, 1.0}, {3, -1.0}}).
  static Coeff1D from_pairs(std::initializer_list<std::pair<Index, Complex>> entries);
  static Coeff1D from_pairs(std::span<const std::pair<Index, Complex>> entries);
  static Coeff1D impulse(Index k, Complex value = 1.0);

  Index offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  /// One past the last stored index.
  Index end_index() const noexcept { return offset_ + static_cast<Index>(values_.size()); }
  std::span<const Complex> values() const noexcept { return values_; }

  /// a_k, zero outside the stored block.
  Complex operator[](Index k) const noexcept;

  /// Copy with leading and trailing exact zeros removed. The zero sequence
  /// trims to an empty block at offset 0.
  Coeff1D trimmed() const;
  bool is_zero() const noexcept;

  /// Copy restricted to indices in [lo, hi].
  Coeff1D restricted(Index lo, Index hi) const;

  Coeff1D operator*(Complex s) const;
  friend Coeff1D operator+(const Coeff1D& a, const Coeff1D& b);
  friend Coeff1D operator-(const Coeff1D& a, const Coeff1D& b);

 private:
  Index offset_ = 0;
  std::vector<Complex> values_;
};

/// Parity selector eta in {0,1}^d. Bit 1 selects cosine, bit 0 sine.
class ParityVector {
 public:
  ParityVector() = default;
  explicit ParityVector(std::vector<std::uint8_t> bits);
  /// Parses strings such as "10"; any character other than '0'/'1' throws.
  static ParityVector parse(std::string_view text);
  static ParityVector zeros(std::size_t d) { return ParityVector(std::vector<std::uint8_t>(d, 0)); }
  static ParityVector ones(std::size_t d) { return ParityVector(std::vector<std::uint8_t>(d, 1)); }

  std::size_t dim() const noexcept { return bits_.size(); }
  bool operator[](std::size_t j) const noexcept { return bits_[j] != 0; }
  std::size_t weight() const noexcept;
  ParityVector complement() const;
  std::string to_string() const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Per-axis exponents q_j >= 0 of the monomial weight k^q = prod_j k_j^{q_j}.
class WeightExponent {
 public:
  WeightExponent() = default;
  explicit WeightExponent(std::vector<int> exponents);
  /// Parses comma lists such as "1,0".
  static WeightExponent parse(std::string_view text);
  static WeightExponent zeros(std::size_t d) { return WeightExponent(std::vector<int>(d, 0)); }

  std::size_t dim() const noexcept { return q_.size(); }
  int operator[](std::size_t j) const noexcept { return q_[j]; }
  int total() const noexcept;
  bool is_zero() const noexcept { return total() == 0; }
  std::span<const int> exponents() const noexcept { return q_; }

  friend WeightExponent operator+(const WeightExponent& a, const WeightExponent& b);
  friend bool operator==(const WeightExponent&, const WeightExponent&) = default;

 private:
  std::vector<int> q_;
};

/// Finitely supported d-dimensional array a_k, k in Z^d. Values are dense,
/// row-major (last axis fastest), covering the box offsets + [0, dims).
class CoeffND {
 public:
  CoeffND() = default;
  CoeffND(std::vector<std::size_t> dims, std::vector<Index> offsets, std::vector<Complex> values);
  /// Zero array over the given box.
  CoeffND(std::vector<std::size_t> dims, std::vector<Index> offsets);
  /// 1-D view of a sequence as a d = 1 array.
  explicit CoeffND(const Coeff1D& a);

  /// u_1 (x) u_2 (x) ... (x) u_d.
  static CoeffND outer(std::span<const Coeff1D> factors);

  std::size_t rank() const noexcept { return dims_.size(); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const Index> offsets() const noexcept { return offsets_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// a_k for a multi-index k; zero outside the box.
  Complex at(std::span<const Index> k) const;
  /// Multi-index of the flat position `flat`.
  std::vector<Index> index_of(std::size_t flat) const;
  std::size_t stride(std::size_t axis) const noexcept;

  /// Fiber along `axis` through the flat position `base` (whose coordinate on
  /// `axis` must be the first one) as a Coeff1D.
  Coeff1D fiber(std::size_t axis, std::size_t base) const;
  /// The 1-D sequence held by a rank-1 array.
  Coeff1D as_1d() const;

  bool is_zero() const noexcept;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Index> offsets_;
  std::vector<Complex> values_;
};

/// Inclusive integer interval [lo, hi].
struct IndexRange {
  Index lo = 0;
  Index hi = -1;

  bool empty() const noexcept { return hi < lo; }
  std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  /// Parses "lo:hi".
  static IndexRange parse(std::string_view text);
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Product of per-axis ranges.
using IndexBox = std::vector<IndexRange>;

double l1_norm(const Coeff1D& a);
double l1_norm(const CoeffND& a);

/// k^q a_k. Entries at k_j = 0 with q_j > 0 become 0. A nonzero entry at a
/// negative index on an axis with q_j > 0 throws std::domain_error.
Coeff1D weight_apply(const Coeff1D& a, int q);
CoeffND weight_apply(const CoeffND& a, const WeightExponent& q);

/// sum_k k^q |a_k| prod_j ln(k_j + 1). Support must lie in Z_+^d.
double log_weighted_sum(const Coeff1D& a, int q);
double log_weighted_sum(const CoeffND& a, const WeightExponent& q);

/// sum_k k^q a_k prod_{eta_j=1} cos(k_j t_j + q_j pi/2) prod_{eta_j=0} sin(k_j t_j + q_j pi/2),
/// i.e. D^q applied to the eta-parity series. Exact finite sum.
Complex series_eval(const CoeffND& a, const ParityVector& eta, const WeightExponent& q,
                    std::span<const double> t);

/// cos(x + s pi/2) for cosine axes, sin(x + s pi/2) for sine axes, with the
/// quarter-period shift applied exactly.
double shifted_trig(bool cosine, double x, int s);

struct FaceCheck {
  std::vector<int> order;  // derivative multi-order s
  std::size_t axis = 0;    // face axis j
  bool at_pi = false;      // face t_j = pi (else t_j = 0)
  double max_abs = 0.0;    // largest |D^s f| coefficient on the face
  bool passed = true;
};

struct MomentSums {
  Complex sum;              // sum_k a_k
  Complex alternating_sum;  // sum_k (-1)^{k_j} a_k
};

struct BoundaryReport {
  std::vector<FaceCheck> faces;
  std::vector<MomentSums> moments;  // one per axis
  bool all_passed() const noexcept;
};

/// Checks D^s f = 0 on the faces t_j in {0, pi} for every axis j with q_j > 0
/// and every multi-order s with s_j < q_j and s_i <= q_i (i != j). The face
/// restriction of D^s f is itself a trigonometric series in the remaining
/// variables; it is collapsed with the same shifted factors series_eval uses
/// and required to have every coefficient within tol.
BoundaryReport boundary_vanish_check(const CoeffND& a, const ParityVector& eta,
                                     const WeightExponent& q, double tol);

}  // namespace reexp
