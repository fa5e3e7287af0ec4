#pragma once

// Compact-group layer: root data, the Weyl denominator |Delta|^2 as a finite
// Fourier table, dimensions, SU(2) characters, and the diagonal Fourier data
// of central extensions of torus functions.
//
// SU(2) torus coordinate: weights of pi_l are -2l, -2l+2, ..., 2l and
// |Delta(t)|^2 = 2 - 2 cos 2t. Highest weights l in (1/2)N_0 are carried as
// the integer 2l.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reexp/seqcore.hpp"

namespace reexp {

class RootSystem {
 public:
  /// Positive roots as integer vectors; `gram` is an optional integer matrix
  /// (row-major, rank x rank) defining the inner product up to a positive
  /// scale. Identity when absent.
  RootSystem(std::size_t rank, std::vector<std::vector<int>> positive_roots,
             std::optional<std::vector<std::int64_t>> gram = std::nullopt);

  /// Single root 2 in the SU(2) torus coordinate.
  static RootSystem su2();
  /// A2 in fundamental-weight coordinates: roots (2,-1), (-1,2), (1,1).
  static RootSystem su3();

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::vector<int>>& positive_roots() const noexcept { return roots_; }
  /// 2 delta = sum of positive roots.
  const std::vector<int>& doubled_half_sum() const noexcept { return two_delta_; }
  std::int64_t inner(std::span<const int> u, std::span<const int> v) const;

 private:
  std::size_t rank_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::int64_t> gram_;
  std::vector<int> two_delta_;
};

enum class DenomConvention { nonnegative, paper_signed };
DenomConvention parse_denom_convention(std::string_view name);
std::string to_string(DenomConvention c);

struct WeylDenomSq {
  std::map<std::vector<int>, std::int64_t> coeffs;
  DenomConvention convention = DenomConvention::nonnegative;
  std::size_t rank = 0;
  std::size_t support_size() const noexcept { return coeffs.size(); }
  /// Coefficient at a rank-1 frequency; 0 off the support.
  std::int64_t at(int nu) const;
};

/// Expands prod_alpha (2 - 2 cos(alpha, t)) (nonnegative) or its negated
/// factors (e^{i(alpha,t)} + e^{-i(alpha,t)} - 2) (paper_signed).
WeylDenomSq weyl_denom_sq_coeffs(const RootSystem& roots, DenomConvention convention = DenomConvention::nonnegative);

/// prod_alpha (mu + delta, alpha) / (delta, alpha), exactly. Throws
/// std::domain_error unless the result is a positive integer.
std::int64_t weyl_dimension(std::span<const int> mu, const RootSystem& roots);

struct HighestWeightSU2 {
  int two_l = 0;
  HighestWeightSU2() = default;
  explicit HighestWeightSU2(int two_l_value);
  int dim() const noexcept { return two_l + 1; }
  double l() const noexcept { return 0.5 * two_l; }
};

inline constexpr int kWeylGroupOrderSU2 = 2;

/// -2l, -2l+2, ..., 2l.
std::vector<int> su2_weights(HighestWeightSU2 l);
/// sin((2l+1)t)/sin t, the limit at t in pi Z.
double su2_character(HighestWeightSU2 l, double t);
/// Torus Fourier coefficients of chi_l: 1 at each weight.
Coeff1D su2_character_coeffs(HighestWeightSU2 l);

enum class CoeffMode { paper, character };
CoeffMode parse_coeff_mode(std::string_view name);
std::string to_string(CoeffMode m);

/// (1/|W|) (1/2pi) int_{-pi}^{pi} f g |Delta|^2 dt from the finite supports.
Complex weyl_pairing(const Coeff1D& f, const Coeff1D& g, const WeylDenomSq& denom);

/// c_l = (1/d) (1/|W|) (1/2pi) int f chi_l |Delta|^2 with |Delta|^2 = 2 - 2cos 2t.
/// Closed form (1/2d)(a_{n-1} + a_{1-n} - a_{n+1} - a_{-n-1}), n = 2l+1.
Complex character_coeff(const Coeff1D& a, HighestWeightSU2 l);
/// The same integral by adaptive composite Gauss-Legendre on [-pi, pi].
Complex character_coeff_quadrature(const Coeff1D& a, HighestWeightSU2 l, double abs_tol = 1e-12);

/// Diagonal values at the weights of pi_l, ascending. Paper mode:
/// (1/|W|) sum_j a_j Dhat(j - mu_m). Character mode: c_l repeated d times.
std::vector<Complex> diag_fourier_coeff(const Coeff1D& a, HighestWeightSU2 l, const WeylDenomSq& denom,
                                        CoeffMode mode);

struct CentralCoeffEntry {
  HighestWeightSU2 l;
  int dim = 1;
  std::vector<int> weights;
  std::vector<Complex> values;
};

struct CentralCoeffTable {
  std::vector<CentralCoeffEntry> entries;
  CoeffMode mode = CoeffMode::character;
  DenomConvention convention = DenomConvention::nonnegative;
};

/// Entries for 2l = 0, ..., lmax.two_l.
CentralCoeffTable ext_fourier_table(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom,
                                    CoeffMode mode);
/// Columns two_l, dim, weight, value_re, value_im, mode, convention.
std::string to_csv(const CentralCoeffTable& table);

/// (sum_pi d_pi sum_m |f(pi)_mm|^p)^{1/p}; p < 1 throws std::domain_error.
double schatten_lp_norm(const CentralCoeffTable& table, double p);

/// Cumulative sum_{2l <= L} d sum_m |diag_m| for L = 0, ..., lmax.two_l.
std::vector<double> condition_q1_sum(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom,
                                     CoeffMode mode);

struct Q2Diagnostic {
  std::vector<double> left;   // with the full Hilbert transform of the weight-lattice inner sums
  std::vector<double> right;  // condition_q1_sum
  std::vector<double> ratio;  // left / right, NaN where right is 0
  std::vector<std::string> warnings;
};

/// Inner sums s(mu) = (1/|W|) sum_j a_j Dhat(mu - j) on the weight lattice
/// window [-(2 lmax + 8), 2 lmax + 8].
Coeff1D q2_inner_sums(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom);
Q2Diagnostic q2_diagnostic(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom,
                           CoeffMode mode = CoeffMode::character);

struct SufficiencyResult {
  double value = 0.0;
  std::size_t ignored = 0;  // nonzero entries at k <= 0
};

/// sum_{n >= 1} n ln(n) |a_n|.
SufficiencyResult su2_sufficiency(const Coeff1D& a);

struct TelescopingResult {
  double brute = 0.0;
  double paper_form = 0.0;
  double derived_form = 0.0;
  std::vector<std::string> warnings;
};

/// With n = 2l+1 and a_0 = a_{-1} = 0 (zeroed with a warning otherwise):
///   brute   = sum_{m=1}^{n} (a_{m-2} - 2 a_m + a_{m+2})
///   paper   = -a_{n-1} - a_n + a_{n+1} + a_{n+2}
///   derived = a_{-1} + a_0 - a_1 - a_2 - a_{n-1} - a_n + a_{n+1} + a_{n+2}
TelescopingResult telescoping_sum(const Coeff1D& a, HighestWeightSU2 l);

enum class Parity { even, odd, neither };
std::string to_string(Parity p);
/// even iff a_k = a_{-k}, odd iff a_k = -a_{-k}, to 1e-12. Zero is even.
Parity parity_check(const Coeff1D& a);

}  // namespace reexp
