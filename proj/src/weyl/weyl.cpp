#include "reexp/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "reexp/hilbert.hpp"
#include "reexp/quadrature.hpp"

namespace reexp {

RootSystem::RootSystem(std::size_t rank, std::vector<std::vector<int>> positive_roots,
                       std::optional<std::vector<std::int64_t>> gram)
    : rank_(rank), roots_(std::move(positive_roots)), two_delta_(rank, 0) {
  if (rank_ == 0) throw std::domain_error("root system rank must be positive");
  if (gram) {
    if (gram->size() != rank_ * rank_) throw std::domain_error("gram matrix must be rank x rank");
    gram_ = *gram;
  } else {
    gram_.assign(rank_ * rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) gram_[i * rank_ + i] = 1;
  }
  for (const auto& r : roots_) {
    if (r.size() != rank_) throw std::domain_error("root dimension does not match rank");
    bool nonzero = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      two_delta_[i] += r[i];
      nonzero = nonzero || r[i] != 0;
    }
    if (!nonzero) throw std::domain_error("roots must be nonzero");
  }
}

RootSystem RootSystem::su2() { return RootSystem(1, {{2}}); }

RootSystem RootSystem::su3() {
  return RootSystem(2, {{2, -1}, {-1, 2}, {1, 1}}, std::vector<std::int64_t>{2, 1, 1, 2});
}

std::int64_t RootSystem::inner(std::span<const int> u, std::span<const int> v) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(u[i]) * gram_[i * rank_ + j] * v[j];
  return s;
}

DenomConvention parse_denom_convention(std::string_view name) {
  if (name == "nonnegative") return DenomConvention::nonnegative;
  if (name == "paper_signed") return DenomConvention::paper_signed;
  throw std::invalid_argument("unknown denominator convention '" + std::string(name) + "'");
}

std::string to_string(DenomConvention c) {
  return c == DenomConvention::nonnegative ? "nonnegative" : "paper_signed";
}

std::int64_t WeylDenomSq::at(int nu) const {
  if (rank != 1) throw std::domain_error("rank-1 lookup on a higher-rank denominator");
  const auto it = coeffs.find(std::vector<int>{nu});
  return it == coeffs.end() ? 0 : it->second;
}

WeylDenomSq weyl_denom_sq_coeffs(const RootSystem& roots, DenomConvention convention) {
  WeylDenomSq out;
  out.convention = convention;
  out.rank = roots.rank();
  const std::int64_t s = convention == DenomConvention::nonnegative ? 1 : -1;
  out.coeffs[std::vector<int>(roots.rank(), 0)] = 1;
  for (const auto& alpha : roots.positive_roots()) {
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [nu, c] : out.coeffs) {
      std::vector<int> up = nu, down = nu;
      for (std::size_t i = 0; i < nu.size(); ++i) {
        up[i] += alpha[i];
        down[i] -= alpha[i];
      }
      next[nu] += 2 * s * c;
      next[up] -= s * c;
      next[down] -= s * c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    out.coeffs = std::move(next);
  }
  return out;
}

std::int64_t weyl_dimension(std::span<const int> mu, const RootSystem& roots) {
  if (mu.size() != roots.rank()) throw std::domain_error("weight dimension does not match rank");
  const auto& two_delta = roots.doubled_half_sum();
  std::vector<int> shifted(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = 2 * mu[i] + two_delta[i];
  std::int64_t num = 1, den = 1;
  for (const auto& alpha : roots.positive_roots()) {
    std::int64_t p = roots.inner(shifted, alpha);
    std::int64_t q = roots.inner(two_delta, alpha);
    if (q == 0) throw std::domain_error("(delta, alpha) vanishes");
    const std::int64_t g1 = std::gcd(p, den), g2 = std::gcd(q, num);
    num = (num / (g2 == 0 ? 1 : g2)) * (p / (g1 == 0 ? 1 : g1));
    den = (den / (g1 == 0 ? 1 : g1)) * (q / (g2 == 0 ? 1 : g2));
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0 || num % den != 0) throw std::domain_error("weight is not dominant integral");
  return num / den;
}

HighestWeightSU2::HighestWeightSU2(int two_l_value) : two_l(two_l_value) {
  if (two_l < 0) throw std::domain_error("highest weight must be nonnegative");
}

std::vector<int> su2_weights(HighestWeightSU2 l) {
  std::vector<int> w;
  for (int mu = -l.two_l; mu <= l.two_l; mu += 2) w.push_back(mu);
  return w;
}

double su2_character(HighestWeightSU2 l, double t) {
  const double s = std::sin(t);
  if (std::abs(s) > 1e-6) return std::sin(l.dim() * t) / s;
  double sum = 0.0;
  for (int mu : su2_weights(l)) sum += std::cos(mu * t);
  return sum;
}

Coeff1D su2_character_coeffs(HighestWeightSU2 l) {
  std::vector<Complex> v(static_cast<std::size_t>(2 * l.two_l + 1), 0.0);
  for (int mu : su2_weights(l)) v[static_cast<std::size_t>(mu + l.two_l)] = 1.0;
  return Coeff1D(-l.two_l, std::move(v));
}

CoeffMode parse_coeff_mode(std::string_view name) {
  if (name == "paper") return CoeffMode::paper;
  if (name == "character") return CoeffMode::character;
  throw std::invalid_argument("unknown coefficient mode '" + std::string(name) + "'");
}

std::string to_string(CoeffMode m) { return m == CoeffMode::paper ? "paper" : "character"; }

Complex weyl_pairing(const Coeff1D& f, const Coeff1D& g, const WeylDenomSq& denom) {
  if (denom.rank != 1) throw std::domain_error("weyl_pairing needs a rank-1 denominator");
  Complex s = 0.0;
  for (Index j = f.offset(); j < f.end_index(); ++j) {
    if (f[j] == Complex{}) continue;
    for (const auto& [nu, c] : denom.coeffs) s += f[j] * g[-j - nu[0]] * static_cast<double>(c);
  }
  return s / static_cast<double>(kWeylGroupOrderSU2);
}

Complex character_coeff(const Coeff1D& a, HighestWeightSU2 l) {
  const Index n = l.dim();
  return (a[n - 1] + a[1 - n] - a[n + 1] - a[-n - 1]) / (2.0 * static_cast<double>(n));
}

Complex character_coeff_quadrature(const Coeff1D& a, HighestWeightSU2 l, double abs_tol) {
  const Coeff1D t = a.trimmed();
  Index reach = 0;
  if (!t.empty()) reach = std::max(std::abs(t.offset()), std::abs(t.end_index() - 1));
  const std::size_t panels = static_cast<std::size_t>(4 * (reach + l.two_l + 3));
  auto integrand = [&](double x, bool imag) {
    Complex f = 0.0;
    for (Index k = t.offset(); k < t.end_index(); ++k) f += t[k] * std::polar(1.0, static_cast<double>(k) * x);
    const double w = su2_character(l, x) * (2.0 - 2.0 * std::cos(2.0 * x));
    return imag ? f.imag() * w : f.real() * w;
  };
  const double pi = std::numbers::pi;
  const std::size_t budget = panels * 64;
  const auto re = integrate_adaptive([&](double x) { return integrand(x, false); }, -pi, pi, panels, abs_tol, budget);
  const auto im = integrate_adaptive([&](double x) { return integrand(x, true); }, -pi, pi, panels, abs_tol, budget);
  const double scale = 1.0 / (2.0 * pi * kWeylGroupOrderSU2 * l.dim());
  return Complex(re.value, im.value) * scale;
}

std::vector<Complex> diag_fourier_coeff(const Coeff1D& a, HighestWeightSU2 l, const WeylDenomSq& denom,
                                        CoeffMode mode) {
  if (mode == CoeffMode::character) return std::vector<Complex>(static_cast<std::size_t>(l.dim()), character_coeff(a, l));
  if (denom.rank != 1) throw std::domain_error("SU(2) coefficients need a rank-1 denominator");
  std::vector<Complex> out;
  for (int mu : su2_weights(l)) {
    Complex s = 0.0;
    for (const auto& [nu, c] : denom.coeffs) s += a[mu + nu[0]] * static_cast<double>(c);
    out.push_back(s / static_cast<double>(kWeylGroupOrderSU2));
  }
  return out;
}

CentralCoeffTable ext_fourier_table(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom,
                                    CoeffMode mode) {
  CentralCoeffTable table;
  table.mode = mode;
  table.convention = denom.convention;
  for (int two_l = 0; two_l <= lmax.two_l; ++two_l) {
    const HighestWeightSU2 l(two_l);
    table.entries.push_back({l, l.dim(), su2_weights(l), diag_fourier_coeff(a, l, denom, mode)});
  }
  return table;
}

std::string to_csv(const CentralCoeffTable& table) {
  std::ostringstream os;
  os << "two_l,dim,weight,value_re,value_im,mode,convention\n";
  char buf[160];
  for (const auto& e : table.entries)
    for (std::size_t m = 0; m < e.values.size(); ++m) {
      std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g,", e.l.two_l, e.dim, e.weights[m], e.values[m].real(),
                    e.values[m].imag());
      os << buf << to_string(table.mode) << ',' << to_string(table.convention) << '\n';
    }
  return os.str();
}

double schatten_lp_norm(const CentralCoeffTable& table, double p) {
  if (!(p >= 1.0)) throw std::domain_error("Schatten exponent must satisfy p >= 1");
  double s = 0.0;
  for (const auto& e : table.entries) {
    double inner = 0.0;
    for (const auto& v : e.values) inner += std::pow(std::abs(v), p);
    s += e.dim * inner;
  }
  return std::pow(s, 1.0 / p);
}

std::vector<double> condition_q1_sum(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom,
                                     CoeffMode mode) {
  std::vector<double> out;
  double s = 0.0;
  for (int two_l = 0; two_l <= lmax.two_l; ++two_l) {
    const HighestWeightSU2 l(two_l);
    double inner = 0.0;
    for (const auto& v : diag_fourier_coeff(a, l, denom, mode)) inner += std::abs(v);
    s += l.dim() * inner;
    out.push_back(s);
  }
  return out;
}

Coeff1D q2_inner_sums(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom) {
  if (denom.rank != 1) throw std::domain_error("SU(2) coefficients need a rank-1 denominator");
  const Index w = lmax.two_l + 8;
  std::vector<Complex> v(static_cast<std::size_t>(2 * w + 1), 0.0);
  for (Index mu = -w; mu <= w; ++mu) {
    Complex s = 0.0;
    for (const auto& [nu, c] : denom.coeffs) s += a[mu + nu[0]] * static_cast<double>(c);
    v[static_cast<std::size_t>(mu + w)] = s / static_cast<double>(kWeylGroupOrderSU2);
  }
  return Coeff1D(-w, std::move(v));
}

Q2Diagnostic q2_diagnostic(const Coeff1D& a, HighestWeightSU2 lmax, const WeylDenomSq& denom, CoeffMode mode) {
  Q2Diagnostic out;
  if (parity_check(a) != Parity::even) out.warnings.push_back("sequence is not even; Q2 assumes an even function");
  const Coeff1D h = dht_full(q2_inner_sums(a, lmax, denom), {-lmax.two_l, lmax.two_l});
  double s = 0.0;
  for (int two_l = 0; two_l <= lmax.two_l; ++two_l) {
    const HighestWeightSU2 l(two_l);
    double inner = 0.0;
    for (int mu : su2_weights(l)) inner += std::abs(h[mu]);
    s += l.dim() * inner;
    out.left.push_back(s);
  }
  out.right = condition_q1_sum(a, lmax, denom, mode);
  for (std::size_t i = 0; i < out.left.size(); ++i)
    out.ratio.push_back(out.right[i] == 0.0 ? std::numeric_limits<double>::quiet_NaN() : out.left[i] / out.right[i]);
  return out;
}

SufficiencyResult su2_sufficiency(const Coeff1D& a) {
  SufficiencyResult r;
  for (Index k = a.offset(); k < a.end_index(); ++k) {
    const Complex v = a[k];
    if (v == Complex{}) continue;
    if (k <= 0) {
      ++r.ignored;
      continue;
    }
    const double n = static_cast<double>(k);
    r.value += n * std::log(n) * std::abs(v);
  }
  return r;
}

TelescopingResult telescoping_sum(const Coeff1D& input, HighestWeightSU2 l) {
  TelescopingResult r;
  Coeff1D a = input;
  if (a[0] != Complex{} || a[-1] != Complex{}) {
    r.warnings.push_back("a_0 and a_-1 set to zero");
    a = a - Coeff1D::from_pairs({{0, a[0]}, {-1, a[-1]}});
  }
  auto re = [&](Index k) { return a[k].real(); };
  const Index n = l.dim();
  for (Index m = 1; m <= n; ++m) r.brute += re(m - 2) - 2.0 * re(m) + re(m + 2);
  r.paper_form = -re(n - 1) - re(n) + re(n + 1) + re(n + 2);
  r.derived_form = re(-1) + re(0) - re(1) - re(2) - re(n - 1) - re(n) + re(n + 1) + re(n + 2);
  return r;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::neither: return "neither";
  }
  return "neither";
}

Parity parity_check(const Coeff1D& a) {
  constexpr double tol = 1e-12;
  bool even = true, odd = true;
  const Index reach = std::max(std::abs(a.offset()), std::abs(a.end_index()));
  for (Index k = 0; k <= reach; ++k) {
    if (std::abs(a[k] - a[-k]) > tol) even = false;
    if (std::abs(a[k] + a[-k]) > tol) odd = false;
  }
  if (even) return Parity::even;
  return odd ? Parity::odd : Parity::neither;
}

}  // namespace reexp
