#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reexp/quadrature.hpp"
#include "reexp/reexpand.hpp"

namespace reexp {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kTolerance = 1e-10;
constexpr std::size_t kPanelBudgetFactor = 64;

std::size_t initial_panels(Index max_source, Index m) {
  return static_cast<std::size_t>(4 * (max_source + std::abs(m) + 1));
}

// Row of per-axis integrals over k = 0..max_source for a fixed target m,
// using the composite rule with `panels` panels.
std::vector<double> axis_row(bool cosine_source, int q, Index max_source, Index m, std::size_t panels) {
  const auto rule = composite_gauss_legendre(0.0, std::numbers::pi, panels);
  std::vector<double> row(static_cast<std::size_t>(max_source + 1), 0.0);
  std::vector<double> target(rule.x.size());
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    target[i] = rule.w[i] * shifted_trig(!cosine_source, static_cast<double>(m) * rule.x[i], q);
  for (Index k = 0; k <= max_source; ++k) {
    if (q > 0 && k == 0) continue;
    const double kq = std::pow(static_cast<double>(k), q);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
      s += target[i] * shifted_trig(cosine_source, static_cast<double>(k) * rule.x[i], q);
    row[static_cast<std::size_t>(k)] = kq * s;
  }
  return row;
}

std::vector<Index> max_source_index(const CoeffND& a) {
  std::vector<Index> hi(a.rank(), 0);
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    if (a.values()[flat] == Complex{}) continue;
    const auto k = a.index_of(flat);
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (k[j] < 0) throw std::domain_error("quadrature oracle requires support in k >= 0");
      hi[j] = std::max(hi[j], k[j]);
    }
  }
  return hi;
}

// sum_k a_k prod_j rows[j][k_j]
Complex contract(const CoeffND& a, const std::vector<const double*>& rows) {
  Complex s = 0.0;
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    const Complex v = a.values()[flat];
    if (v == Complex{}) continue;
    const auto k = a.index_of(flat);
    double w = 1.0;
    for (std::size_t j = 0; j < a.rank(); ++j) w *= rows[j][k[j]];
    s += v * w;
  }
  return s;
}

void check_config(const CoeffND& a, const ParityVector& eta, const WeightExponent& q) {
  if (eta.dim() != a.rank() || q.dim() != a.rank())
    throw std::domain_error("quadrature oracle: dimension mismatch");
  for (std::size_t j = 0; j < q.dim(); ++j)
    if (q[j] < 0) throw std::domain_error("weight exponents must be nonnegative");
}

}  // namespace

Complex quadrature_oracle(const CoeffND& a, const ParityVector& eta, const WeightExponent& q,
                          std::span<const Index> m) {
  check_config(a, eta, q);
  if (m.size() != a.rank()) throw std::domain_error("quadrature oracle: output index dimension mismatch");
  for (Index mj : m)
    if (mj < 0) throw std::domain_error("quadrature oracle: output index must be nonnegative");
  const std::size_t d = a.rank();
  const auto hi = max_source_index(a);

  std::vector<std::size_t> panels(d), budget(d);
  for (std::size_t j = 0; j < d; ++j) {
    panels[j] = initial_panels(hi[j], m[j]);
    budget[j] = panels[j] * kPanelBudgetFactor;
  }
  auto estimate = [&] {
    std::vector<std::vector<double>> rows(d);
    std::vector<const double*> ptrs(d);
    for (std::size_t j = 0; j < d; ++j) {
      rows[j] = axis_row(eta[j], q[j], hi[j], m[j], panels[j]);
      ptrs[j] = rows[j].data();
    }
    return contract(a, ptrs) * std::pow(kTwoOverPi, static_cast<double>(d));
  };

  Complex prev = estimate();
  while (true) {
    for (auto& p : panels) p *= 2;
    if (panels[0] > budget[0])
      throw QuadratureFailure("quadrature oracle did not reach 1e-10 within the panel budget");
    const Complex cur = estimate();
    if (std::abs(cur - prev) <= kTolerance) return cur;
    prev = cur;
  }
}

ReexpansionQuadrature::ReexpansionQuadrature(ParityVector eta, WeightExponent q, std::vector<Index> max_source,
                                             std::vector<Index> max_target, double abs_tol)
    : eta_(std::move(eta)), q_(std::move(q)), max_source_(std::move(max_source)), max_target_(std::move(max_target)) {
  const std::size_t d = eta_.dim();
  if (q_.dim() != d || max_source_.size() != d || max_target_.size() != d)
    throw std::domain_error("quadrature table: dimension mismatch");
  tables_.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (max_source_[j] < 0 || max_target_[j] < 0) throw std::domain_error("quadrature table: negative extent");
    const std::size_t ns = static_cast<std::size_t>(max_source_[j] + 1);
    const std::size_t nt = static_cast<std::size_t>(max_target_[j] + 1);
    auto& table = tables_[j];
    table.assign(ns * nt, 0.0);
    for (Index m = 0; m <= max_target_[j]; ++m) {
      std::size_t p = initial_panels(max_source_[j], m);
      const std::size_t budget = p * kPanelBudgetFactor;
      auto prev = axis_row(eta_[j], q_[j], max_source_[j], m, p);
      while (true) {
        p *= 2;
        if (p > budget) throw QuadratureFailure("quadrature table did not reach tolerance within the panel budget");
        auto cur = axis_row(eta_[j], q_[j], max_source_[j], m, p);
        double change = 0.0;
        for (std::size_t k = 0; k < ns; ++k) change = std::max(change, std::abs(cur[k] - prev[k]));
        prev = std::move(cur);
        if (change <= abs_tol) break;
      }
      for (std::size_t k = 0; k < ns; ++k) table[k * nt + static_cast<std::size_t>(m)] = prev[k];
    }
  }
}

double ReexpansionQuadrature::axis_integral(std::size_t axis, Index k, Index m) const {
  if (k < 0 || k > max_source_[axis] || m < 0 || m > max_target_[axis])
    throw std::out_of_range("quadrature table index out of range");
  const std::size_t nt = static_cast<std::size_t>(max_target_[axis] + 1);
  return tables_[axis][static_cast<std::size_t>(k) * nt + static_cast<std::size_t>(m)];
}

Complex ReexpansionQuadrature::evaluate(const CoeffND& a, std::span<const Index> m) const {
  const std::size_t d = eta_.dim();
  if (a.rank() != d || m.size() != d) throw std::domain_error("quadrature table: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    const Complex v = a.values()[flat];
    if (v == Complex{}) continue;
    const auto k = a.index_of(flat);
    double w = 1.0;
    for (std::size_t j = 0; j < d; ++j) w *= axis_integral(j, k[j], m[j]);
    s += v * w;
  }
  return s * std::pow(kTwoOverPi, static_cast<double>(d));
}

CoeffND ReexpansionQuadrature::evaluate_box(const CoeffND& a, const IndexBox& box) const {
  std::vector<std::size_t> dims;
  std::vector<Index> offs;
  for (const auto& r : box) {
    dims.push_back(r.size());
    offs.push_back(r.lo);
  }
  CoeffND out(dims, offs);
  for (std::size_t flat = 0; flat < out.size(); ++flat) out.values()[flat] = evaluate(a, out.index_of(flat));
  return out;
}

}  // namespace reexp
