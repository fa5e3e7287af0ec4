#pragma once

// Discrete Hilbert transforms of finitely supported sequences.
//
//   full         (h a)(n)    = sum_{k != n} a_k / (n - k)                          n in Z
//   even         (h^e a)(n)  = sum_{k>=1, k != n} 2n a_k / (n^2 - k^2) + a_n / 2n  n >= 1
//   odd          (h^o a)(n)  = sum_{k>=1, k != n} 2k a_k / (n^2 - k^2) - a_n / 2n  n >= 0
//   even_halved  (h^e_- a)(n) = sum_{k-n odd} a_k (1/(n+k) + 1/(n-k))             n >= 1
//   odd_halved   (h^o_- a)(n) = sum_{k-n odd} a_k (1/(n+k) + 1/(k-n))             n >= 0
//
// The halved kernels carry no 2/pi prefactor; the re-expansion maps add it.
// For the even and odd kinds a_0 is treated as zero; the halved kinds accept
// a_0 (their formula is exact there). All non-full kinds reject nonzero
// entries at negative indices.
//
// Every transform has two evaluators: a serial direct summation (the
// reference) and a fast path that writes each kernel as a sum of a discrete
// convolution and a correlation with 1/m and evaluates both with one
// zero-padded FFT product. Callers bound the output window explicitly.

#include <string>
#include <string_view>

#include "reexp/seqcore.hpp"

namespace reexp {

enum class HilbertKind { full, even, odd, even_halved, odd_halved };
enum class Algorithm { naive, fast };

HilbertKind parse_hilbert_kind(std::string_view name);
std::string to_string(HilbertKind kind);
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm algorithm);

/// Smallest admissible output index; numeric_limits<Index>::min() for `full`.
Index min_output_index(HilbertKind kind) noexcept;

struct TransformRequest {
  HilbertKind kind = HilbertKind::full;
  IndexRange output_range;
  Algorithm algorithm = Algorithm::fast;
};

/// Validates the request against `a` and evaluates it. Throws
/// std::domain_error for an empty window, a window below the kind's floor, or
/// negative-index input on a non-full kind.
Coeff1D dht(const Coeff1D& a, const TransformRequest& request);

Coeff1D dht_full(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);
Coeff1D dht_even(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);
Coeff1D dht_odd(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);
Coeff1D dht_even_halved(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);
Coeff1D dht_odd_halved(const Coeff1D& a, IndexRange range, Algorithm algorithm = Algorithm::fast);

/// Single kernel entry K(n, k) of the given kind, written exactly as in the
/// table above. Used by the direct evaluators.
double hilbert_kernel(HilbertKind kind, Index n, Index k) noexcept;

/// Mixed halved transform h_eta^-: the even halved kernel along axes with
/// eta_j = 1 and the odd halved kernel along axes with eta_j = 0, composed
/// over all axes. `box` bounds the output per axis.
CoeffND dht_mixed(const CoeffND& a, const ParityVector& eta, const IndexBox& box,
                  Algorithm algorithm = Algorithm::fast);

/// h^e along axes with chi_j = 1, h^o along axes with zeta_j = 1 (unhalved
/// kernels), identity elsewhere. chi and zeta must have disjoint supports.
CoeffND dht_tensor(const CoeffND& a, const ParityVector& chi, const ParityVector& zeta, const IndexBox& box,
                   Algorithm algorithm = Algorithm::fast);

/// Pointwise bound ||a||_1 / (N - K) on |output(n)| for |n| > N, where K is
/// the largest |index| in the support of a. Returns +inf when N <= K.
double window_tail_bound(const Coeff1D& a, Index window);

}  // namespace reexp
