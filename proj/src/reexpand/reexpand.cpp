#include "reexp/reexpand.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reexp {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

void check_dims(const CoeffND& a, const ReexpandSpec& spec) {
  const std::size_t d = a.rank();
  if (spec.eta.dim() != d) throw std::domain_error("parity vector dimension does not match sequence");
  if (spec.q.dim() != d) throw std::domain_error("weight exponent dimension does not match sequence");
  if (spec.output_box.size() != d) throw std::domain_error("output box dimension does not match sequence");
  for (std::size_t j = 0; j < d; ++j) {
    const IndexRange r = spec.output_box[j];
    if (r.empty()) throw std::domain_error("empty output range on axis " + std::to_string(j));
    if (r.lo < reexpand_output_floor(spec.eta[j]))
      throw std::domain_error("output range on axis " + std::to_string(j) + " must start at m >= " +
                              std::to_string(reexpand_output_floor(spec.eta[j])));
  }
}

CoeffND without_constant(const CoeffND& a) {
  CoeffND out = a;
  const std::vector<Index> zero(a.rank(), 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    if (out.index_of(flat) == zero) {
      out.values()[flat] = 0.0;
      break;
    }
  }
  return out;
}

std::vector<std::size_t> box_dims(const IndexBox& box) {
  std::vector<std::size_t> dims;
  for (const auto& r : box) dims.push_back(r.size());
  return dims;
}

std::vector<Index> box_offsets(const IndexBox& box) {
  std::vector<Index> offs;
  for (const auto& r : box) offs.push_back(r.lo);
  return offs;
}

}  // namespace

Index reexpand_output_floor(bool cosine_source) noexcept { return cosine_source ? 1 : 0; }

Coeff1D cos_to_sin(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return dht_even_halved(a, range, algorithm) * kTwoOverPi;
}

Coeff1D sin_to_cos(const Coeff1D& a, IndexRange range, Algorithm algorithm) {
  return dht_odd_halved(a, range, algorithm) * kTwoOverPi;
}

CoeffND reexpand_nd(const CoeffND& a, const ReexpandSpec& spec) {
  check_dims(a, spec);
  if (!spec.q.is_zero()) throw std::domain_error("reexpand_nd requires q = 0; use reexpand_weighted");
  const CoeffND src = spec.subtract_mean ? without_constant(a) : a;
  CoeffND b = dht_mixed(src, spec.eta, spec.output_box, spec.algorithm);
  const double scale = std::pow(kTwoOverPi, static_cast<double>(a.rank()));
  for (auto& v : b.values()) v *= scale;
  return b;
}

WeightedReexpansion reexpand_weighted(const CoeffND& a, const ReexpandSpec& spec) {
  check_dims(a, spec);
  const std::size_t d = a.rank();
  const CoeffND src = spec.subtract_mean ? without_constant(a) : a;

  WeightedReexpansion out;
  out.boundary = boundary_vanish_check(src, spec.eta, spec.q, spec.boundary_tol);
  if (!out.boundary.all_passed()) {
    for (const auto& f : out.boundary.faces) {
      if (f.passed) continue;
      std::string order;
      for (std::size_t i = 0; i < f.order.size(); ++i) order += (i ? "," : "") + std::to_string(f.order[i]);
      out.warnings.push_back("boundary term D^(" + order + ") f does not vanish on t_" + std::to_string(f.axis) +
                             (f.at_pi ? " = pi" : " = 0") + " (max coefficient " + std::to_string(f.max_abs) +
                             "); result is formula-level");
    }
  }

  std::vector<std::uint8_t> bits(d);
  for (std::size_t j = 0; j < d; ++j) bits[j] = static_cast<std::uint8_t>(spec.eta[j] ^ (spec.q[j] % 2 != 0));
  out.effective_eta = ParityVector(bits);
  out.sign = (spec.q.total() % 2 == 0) ? 1.0 : -1.0;

  out.raw = CoeffND(box_dims(spec.output_box), box_offsets(spec.output_box));
  IndexBox inner = spec.output_box;
  bool empty = false;
  for (std::size_t j = 0; j < d; ++j) {
    inner[j].lo = std::max(inner[j].lo, reexpand_output_floor(out.effective_eta[j]));
    empty = empty || inner[j].empty();
  }
  if (!empty) {
    ReexpandSpec s = spec;
    s.eta = out.effective_eta;
    s.q = WeightExponent::zeros(d);
    s.subtract_mean = false;
    s.output_box = inner;
    const CoeffND core = reexpand_nd(weight_apply(src, spec.q), s);
    // Slabs clipped away (m_j = 0 with an odd shift) have a vanishing target basis.
    for (std::size_t flat = 0; flat < core.size(); ++flat) {
      const auto m = core.index_of(flat);
      std::size_t pos = 0;
      for (std::size_t j = 0; j < d; ++j) pos += static_cast<std::size_t>(m[j] - spec.output_box[j].lo) * out.raw.stride(j);
      out.raw.values()[pos] = out.sign * core.values()[flat] + Complex(0.0, 0.0);
    }
  }

  out.deweighted = out.raw;
  for (std::size_t flat = 0; flat < out.deweighted.size(); ++flat) {
    const auto m = out.deweighted.index_of(flat);
    double w = 1.0;
    bool undefined = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (spec.q[j] == 0) continue;
      if (m[j] == 0) undefined = true;
      w *= std::pow(static_cast<double>(m[j]), spec.q[j]);
    }
    if (undefined) {
      out.deweighted.values()[flat] = 0.0;
      out.undefined.push_back(m);
    } else {
      out.deweighted.values()[flat] /= w;
    }
  }
  return out;
}

}  // namespace reexp
