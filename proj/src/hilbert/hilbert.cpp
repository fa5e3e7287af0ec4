#include "reexp/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

#include "fft_convolution.hpp"

namespace reexp {

namespace {

using detail::KernelTerm;

double reciprocal(Index m) { return m == 0 ? 0.0 : 1.0 / static_cast<double>(m); }

std::vector<KernelTerm> kernel_terms(HilbertKind kind) {
  switch (kind) {
    case HilbertKind::full:
      return {{reciprocal, false, 1.0}};
    case HilbertKind::even:
      // 2n/(n^2-k^2) = 1/(n-k) + 1/(n+k); the k = n term of the second sum is a_n/2n.
      return {{reciprocal, false, 1.0}, {reciprocal, true, 1.0}};
    case HilbertKind::odd:
      return {{reciprocal, false, 1.0}, {reciprocal, true, -1.0}};
    case HilbertKind::even_halved:
    case HilbertKind::odd_halved:
      break;  // parity-split, see halved_fast
  }
  return {};
}

bool one_sided(HilbertKind kind) { return kind != HilbertKind::full; }

// Nonzero block of an input sequence, borrowed from the caller.
struct InputView {
  std::span<const Complex> values;
  Index offset = 0;
  bool empty() const noexcept { return values.empty(); }
  Index end_index() const noexcept { return offset + static_cast<Index>(values.size()); }
  Complex operator[](Index k) const noexcept { return values[static_cast<std::size_t>(k - offset)]; }
};

// Applies the kind's input domain: rejects negative support for one-sided
// kinds and drops a_0 for the even and odd kinds.
InputView prepare_input(const Coeff1D& a, HilbertKind kind) {
  const auto vals = a.values();
  const auto nz = [](const Complex& v) { return v != Complex{}; };
  auto first = std::find_if(vals.begin(), vals.end(), nz);
  if (first == vals.end()) return {};
  const auto last = std::find_if(vals.rbegin(), vals.rend(), nz).base();
  Index offset = a.offset() + (first - vals.begin());
  if (one_sided(kind)) {
    if (offset < 0)
      throw std::domain_error(to_string(kind) + " transform requires support in k >= 0, found index " +
                              std::to_string(offset));
    if ((kind == HilbertKind::even || kind == HilbertKind::odd) && offset == 0) {
      first = std::find_if(first + 1, last, nz);
      if (first == last) return {};
      offset = a.offset() + (first - vals.begin());
    }
  }
  return {std::span<const Complex>(first, last), offset};
}

void check_range(HilbertKind kind, IndexRange range) {
  if (range.empty()) throw std::domain_error("empty output range");
  if (range.lo < min_output_index(kind))
    throw std::domain_error(to_string(kind) + " transform output range must start at n >= " +
                            std::to_string(min_output_index(kind)) + ", got " + std::to_string(range.lo));
}

std::vector<Complex> naive_apply(const InputView& a, HilbertKind kind, IndexRange range) {
  std::vector<Complex> out(range.size());
  for (Index n = range.lo; n <= range.hi; ++n) {
    Complex s{};
    for (Index k = a.offset; k < a.end_index(); ++k) {
      const Complex v = a[k];
      if (v != Complex{}) s += v * hilbert_kernel(kind, n, k);
    }
    out[static_cast<std::size_t>(n - range.lo)] = s;
  }
  return out;
}

Index floor_div2(Index v) { return (v >= 0) ? v / 2 : -((1 - v) / 2); }

// Only k - n odd contributes, so outputs n = 2i + s see inputs k = 2j + 1 - s
// alone: n - k = 2(i - j) + 2s - 1 and n + k = 2(i + j) + 1. Each output
// parity class is one half-length convolution plus correlation.
Coeff1D halved_fast(const InputView& x, HilbertKind kind, IndexRange range) {
  std::vector<Complex> out(range.size());
  if (x.empty()) return Coeff1D(range.lo, std::move(out));
  const double direct_sign = (kind == HilbertKind::even_halved) ? 1.0 : -1.0;
  for (Index s = 0; s < 2; ++s) {
    const IndexRange sub{floor_div2(range.lo - s + 1), floor_div2(range.hi - s)};
    if (sub.empty()) continue;
    const Index parity = 1 - s;
    const Index j_lo = floor_div2(x.offset - parity + 1);
    const Index j_hi = floor_div2(x.end_index() - 1 - parity);
    if (j_hi < j_lo) continue;
    std::vector<Complex> xs(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (Index j = j_lo; j <= j_hi; ++j) xs[static_cast<std::size_t>(j - j_lo)] = x[2 * j + parity];
    const KernelTerm terms[] = {
        {[s](Index d) { return 1.0 / static_cast<double>(2 * d + 2 * s - 1); }, false, direct_sign},
        {[](Index e) { return 1.0 / static_cast<double>(2 * e + 1); }, true, 1.0},
    };
    const auto ys = detail::fft_kernel_apply(xs, j_lo, sub, terms);
    for (Index i = sub.lo; i <= sub.hi; ++i)
      out[static_cast<std::size_t>(2 * i + s - range.lo)] = ys[static_cast<std::size_t>(i - sub.lo)];
  }
  return Coeff1D(range.lo, std::move(out));
}

Coeff1D apply_1d(const Coeff1D& a, HilbertKind kind, IndexRange range, Algorithm algorithm) {
  check_range(kind, range);
  const InputView x = prepare_input(a, kind);
  if (algorithm == Algorithm::naive) return Coeff1D(range.lo, naive_apply(x, kind, range));
  if (kind == HilbertKind::even_halved || kind == HilbertKind::odd_halved) return halved_fast(x, kind, range);
  const auto terms = kernel_terms(kind);
  return Coeff1D(range.lo, detail::fft_kernel_apply(x.values, x.offset, range, terms));
}

// Per-axis operator of an N-D composition; nullopt is the identity.
using AxisOp = std::optional<HilbertKind>;

void check_nd(const CoeffND& a, std::span<const AxisOp> ops, const IndexBox& box) {
  if (box.size() != a.rank()) throw std::domain_error("output box dimension does not match sequence");
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (box[j].empty()) throw std::domain_error("empty output range on axis " + std::to_string(j));
    if (ops[j]) check_range(*ops[j], box[j]);
  }
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    if (a.values()[flat] == Complex{}) continue;
    const auto k = a.index_of(flat);
    for (std::size_t j = 0; j < ops.size(); ++j)
      if (ops[j] && one_sided(*ops[j]) && k[j] < 0)
        throw std::domain_error("transform along axis " + std::to_string(j) + " requires support in k >= 0");
  }
}

// Direct multi-sum: out(m) = sum_k a_k prod_j K_j(m_j, k_j).
CoeffND naive_nd(const CoeffND& a, std::span<const AxisOp> ops, const IndexBox& box) {
  const std::size_t d = a.rank();
  std::vector<std::size_t> dims(d);
  std::vector<Index> offsets(d);
  for (std::size_t j = 0; j < d; ++j) {
    dims[j] = box[j].size();
    offsets[j] = box[j].lo;
  }
  CoeffND out(dims, offsets);
  std::vector<std::vector<Index>> in_index;
  std::vector<Complex> in_value;
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    if (a.values()[flat] == Complex{}) continue;
    in_index.push_back(a.index_of(flat));
    in_value.push_back(a.values()[flat]);
  }
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto m = out.index_of(flat);
    Complex s{};
    for (std::size_t e = 0; e < in_value.size(); ++e) {
      double w = 1.0;
      for (std::size_t j = 0; j < d && w != 0.0; ++j)
        w *= ops[j] ? hilbert_kernel(*ops[j], m[j], in_index[e][j]) : (m[j] == in_index[e][j] ? 1.0 : 0.0);
      if (w != 0.0) s += in_value[e] * w;
    }
    out.values()[flat] = s;
  }
  return out;
}

// Replaces `axis` of `a` by `range`, applying the 1-D operator to every fiber.
CoeffND apply_axis(const CoeffND& a, std::size_t axis, AxisOp op, IndexRange range, Algorithm algorithm) {
  std::vector<std::size_t> dims(a.dims().begin(), a.dims().end());
  std::vector<Index> offsets(a.offsets().begin(), a.offsets().end());
  const std::size_t inner = a.stride(axis);
  const std::size_t outer = a.size() / (inner * dims[axis]);
  dims[axis] = range.size();
  offsets[axis] = range.lo;
  CoeffND out(dims, offsets);
  const std::size_t width = range.size();
  const auto fibers = static_cast<std::ptrdiff_t>(outer * inner);

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t f = 0; f < fibers; ++f) {
    const std::size_t o = static_cast<std::size_t>(f) / inner;
    const std::size_t i = static_cast<std::size_t>(f) % inner;
    const Coeff1D fib = a.fiber(axis, o * a.dims()[axis] * inner + i);
    const Coeff1D r = op ? apply_1d(fib, *op, range, algorithm) : fib.restricted(range.lo, range.hi);
    auto dst = out.values();
    const std::size_t base = o * width * inner + i;
    for (std::size_t n = 0; n < width; ++n) dst[base + n * inner] = r[range.lo + static_cast<Index>(n)];
  }
  return out;
}

CoeffND apply_nd(const CoeffND& a, std::span<const AxisOp> ops, const IndexBox& box, Algorithm algorithm) {
  check_nd(a, ops, box);
  if (algorithm == Algorithm::naive) return naive_nd(a, ops, box);
  CoeffND cur = a;
  for (std::size_t j = 0; j < a.rank(); ++j) cur = apply_axis(cur, j, ops[j], box[j], algorithm);
  return cur;
}

}  // namespace

HilbertKind parse_hilbert_kind(std::string_view name) {
  if (name == "full") return HilbertKind::full;
  if (name == "even") return HilbertKind::even;
  if (name == "odd") return HilbertKind::odd;
  if (name == "even_halved") return HilbertKind::even_halved;
  if (name == "odd_halved") return HilbertKind::odd_halved;
  throw std::invalid_argument("unknown transform kind '" + std::string(name) + "'");
}

std::string to_string(HilbertKind kind) {
  switch (kind) {
    case HilbertKind::full: return "full";
    case HilbertKind::even: return "even";
    case HilbertKind::odd: return "odd";
    case HilbertKind::even_halved: return "even_halved";
    case HilbertKind::odd_halved: return "odd_halved";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "fast") return Algorithm::fast;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string to_string(Algorithm algorithm) { return algorithm == Algorithm::naive ? "naive" : "fast"; }

Index min_output_index(HilbertKind kind) noexcept {
  switch (kind) {
    case HilbertKind::full: return std::numeric_limits<Index>::min();
    case HilbertKind::even:
    case HilbertKind::even_halved: return 1;
    case HilbertKind::odd:
    case HilbertKind::odd_halved: return 0;
  }
  return 0;
}

double hilbert_kernel(HilbertKind kind, Index n, Index k) noexcept {
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  switch (kind) {
    case HilbertKind::full:
      return k == n ? 0.0 : 1.0 / (dn - dk);
    case HilbertKind::even:
      if (k <= 0) return 0.0;
      return k == n ? 1.0 / (2.0 * dn) : 2.0 * dn / (dn * dn - dk * dk);
    case HilbertKind::odd:
      if (k <= 0) return 0.0;
      return k == n ? -1.0 / (2.0 * dn) : 2.0 * dk / (dn * dn - dk * dk);
    case HilbertKind::even_halved:
      if (k < 0 || (k - n) % 2 == 0) return 0.0;
      return 2.0 * dn / (dn * dn - dk * dk);
    case HilbertKind::odd_halved:
      if (k < 0 || (k - n) % 2 == 0) return 0.0;
      return 2.0 * dk / (dk * dk - dn * dn);
  }
  return 0.0;
}

Coeff1D dht(const Coeff1D& a, const TransformRequest& request) {
  return apply_1d(a, request.kind, request.output_range, request.algorithm);
}

Coeff1D dht_full(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return apply_1d(a, HilbertKind::full, range, algorithm);
}
Coeff1D dht_even(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return apply_1d(a, HilbertKind::even, range, algorithm);
}
Coeff1D dht_odd(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return apply_1d(a, HilbertKind::odd, range, algorithm);
}
Coeff1D dht_even_halved(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return apply_1d(a, HilbertKind::even_halved, range, algorithm);
}
Coeff1D dht_odd_halved(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return apply_1d(a, HilbertKind::odd_halved, range, algorithm);
}

CoeffND dht_mixed(const CoeffND& a, const ParityVector& eta, const IndexBox& box, Algorithm algorithm) {
  if (eta.dim() != a.rank()) throw std::domain_error("parity vector dimension does not match sequence");
  std::vector<AxisOp> ops(a.rank());
  for (std::size_t j = 0; j < ops.size(); ++j) ops[j] = eta[j] ? HilbertKind::even_halved : HilbertKind::odd_halved;
  return apply_nd(a, ops, box, algorithm);
}

CoeffND dht_tensor(const CoeffND& a, const ParityVector& chi, const ParityVector& zeta, const IndexBox& box,
                   Algorithm algorithm) {
  if (chi.dim() != a.rank() || zeta.dim() != a.rank())
    throw std::domain_error("parity vector dimension does not match sequence");
  std::vector<AxisOp> ops(a.rank());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (chi[j] && zeta[j])
      throw std::domain_error("chi and zeta overlap on axis " + std::to_string(j));
    if (chi[j]) ops[j] = HilbertKind::even;
    if (zeta[j]) ops[j] = HilbertKind::odd;
  }
  return apply_nd(a, ops, box, algorithm);
}

double window_tail_bound(const Coeff1D& a, Index window) {
  const Coeff1D t = a.trimmed();
  if (t.empty()) return 0.0;
  const Index reach = std::max(std::abs(t.offset()), std::abs(t.end_index() - 1));
  if (window <= reach) return std::numeric_limits<double>::infinity();
  return l1_norm(t) / static_cast<double>(window - reach);
}

}  // namespace reexp
