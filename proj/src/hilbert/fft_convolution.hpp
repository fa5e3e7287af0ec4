#pragma once

#include <functional>
#include <span>
#include <vector>

#include "reexp/seqcore.hpp"

namespace reexp::detail {

/// One term of a windowed Toeplitz/Hankel product:
///   y(n) += sum_k x_k kernel(n - k)   (convolution, reversed = false)
///   y(n) += sum_k x_k kernel(n + k)   (correlation, reversed = true)
struct KernelTerm {
  std::function<double(Index)> kernel;
  bool reversed = false;
  double sign = 1.0;
};

/// Evaluates the sum of the given terms for n in `window` by zero-padded FFT
/// products. x holds entries x_offset .. x_{offset+len-1}.
std::vector<Complex> fft_kernel_apply(std::span<const Complex> x, Index offset, IndexRange window,
                                      std::span<const KernelTerm> terms);

/// Smallest power of two >= n.
std::size_t fft_size_for(std::size_t n) noexcept;

}  // namespace reexp::detail
