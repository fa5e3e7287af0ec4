#include "reexp/seqcore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace reexp {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

double int_pow(Index k, int q) {
  double r = 1.0;
  const double base = static_cast<double>(k);
  for (int i = 0; i < q; ++i) r *= base;
  return r;
}

// Exact value of the shifted factor at x = k * 0 or x = k * pi.
double face_trig(bool cosine, Index k, bool at_pi, int s) {
  const double c = at_pi ? ((k % 2 == 0) ? 1.0 : -1.0) : 1.0;  // cos(k tau)
  // sin(k tau) = 0 on both faces.
  const int r = ((s % 4) + 4) % 4;
  if (cosine) {
    switch (r) {
      case 0: return c;
      case 2: return -c;
      default: return 0.0;
    }
  }
  switch (r) {
    case 1: return c;
    case 3: return -c;
    default: return 0.0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Coeff1D

Coeff1D::Coeff1D(Index offset, std::vector<Complex> values)
    : offset_(offset), values_(std::move(values)) {}

Coeff1D Coeff1D::from_pairs(std::initializer_list<std::pair<Index, Complex>> entries) {
  return from_pairs(std::span<const std::pair<Index, Complex>>(entries.begin(), entries.size()));
}

Coeff1D Coeff1D::from_pairs(std::span<const std::pair<Index, Complex>> entries) {
  if (entries.empty()) return {};
  Index lo = entries.front().first, hi = lo;
  for (const auto& [k, v] : entries) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  std::vector<Complex> values(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, v] : entries) values[static_cast<std::size_t>(k - lo)] += v;
  return Coeff1D(lo, std::move(values));
}

Coeff1D Coeff1D::impulse(Index k, Complex value) { return Coeff1D(k, {value}); }

Complex Coeff1D::operator[](Index k) const noexcept {
  if (k < offset_ || k >= end_index()) return {};
  return values_[static_cast<std::size_t>(k - offset_)];
}

Coeff1D Coeff1D::trimmed() const {
  const auto nz = [](const Complex& v) { return v != Complex{}; };
  const auto first = std::find_if(values_.begin(), values_.end(), nz);
  if (first == values_.end()) return {};
  const auto last = std::find_if(values_.rbegin(), values_.rend(), nz).base();
  return Coeff1D(offset_ + (first - values_.begin()), std::vector<Complex>(first, last));
}

bool Coeff1D::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) { return v == Complex{}; });
}

Coeff1D Coeff1D::restricted(Index lo, Index hi) const {
  lo = std::max(lo, offset_);
  hi = std::min(hi, end_index() - 1);
  if (hi < lo) return {};
  const auto b = values_.begin() + (lo - offset_);
  return Coeff1D(lo, std::vector<Complex>(b, b + (hi - lo + 1)));
}

Coeff1D Coeff1D::operator*(Complex s) const {
  Coeff1D r = *this;
  for (auto& v : r.values_) v *= s;
  return r;
}

namespace {
Coeff1D combine(const Coeff1D& a, const Coeff1D& b, double sign) {
  if (a.empty()) return b * sign;
  if (b.empty()) return a;
  const Index lo = std::min(a.offset(), b.offset());
  const Index hi = std::max(a.end_index(), b.end_index());
  std::vector<Complex> v(static_cast<std::size_t>(hi - lo));
  for (Index k = lo; k < hi; ++k) v[static_cast<std::size_t>(k - lo)] = a[k] + sign * b[k];
  return Coeff1D(lo, std::move(v));
}
}  // namespace

Coeff1D operator+(const Coeff1D& a, const Coeff1D& b) { return combine(a, b, 1.0); }
Coeff1D operator-(const Coeff1D& a, const Coeff1D& b) { return combine(a, b, -1.0); }

// ---------------------------------------------------------------------------
// ParityVector / WeightExponent

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("parity bits must be 0 or 1");
}

ParityVector ParityVector::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty parity string");
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("malformed parity string '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return ParityVector(std::move(bits));
}

std::size_t ParityVector::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

ParityVector ParityVector::complement() const {
  std::vector<std::uint8_t> c(bits_.size());
  std::transform(bits_.begin(), bits_.end(), c.begin(), [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
  return ParityVector(std::move(c));
}

std::string ParityVector::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

WeightExponent::WeightExponent(std::vector<int> exponents) : q_(std::move(exponents)) {
  for (int q : q_)
    if (q < 0) throw std::invalid_argument("weight exponents must be nonnegative");
}

WeightExponent WeightExponent::parse(std::string_view text) {
  std::vector<int> q;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
      throw std::invalid_argument("malformed weight list '" + std::string(text) + "'");
    q.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return WeightExponent(std::move(q));
}

int WeightExponent::total() const noexcept { return std::accumulate(q_.begin(), q_.end(), 0); }

WeightExponent operator+(const WeightExponent& a, const WeightExponent& b) {
  if (a.dim() != b.dim()) throw std::domain_error("weight exponent dimension mismatch");
  std::vector<int> q(a.dim());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = a[j] + b[j];
  return WeightExponent(std::move(q));
}

IndexRange IndexRange::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("range must be lo:hi, got '" + std::string(text) + "'");
  auto read = [&](std::string_view tok) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed range '" + std::string(text) + "'");
    return v;
  };
  IndexRange r{read(text.substr(0, colon)), read(text.substr(colon + 1))};
  if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

// ---------------------------------------------------------------------------
// CoeffND

CoeffND::CoeffND(std::vector<std::size_t> dims, std::vector<Index> offsets, std::vector<Complex> values)
    : dims_(std::move(dims)), offsets_(std::move(offsets)), values_(std::move(values)) {
  if (dims_.empty()) throw std::invalid_argument("CoeffND needs at least one axis");
  if (offsets_.size() != dims_.size()) throw std::invalid_argument("CoeffND offsets/dims length mismatch");
  const auto n = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  if (n != values_.size()) throw std::invalid_argument("CoeffND value count does not match extents");
}

CoeffND::CoeffND(std::vector<std::size_t> dims, std::vector<Index> offsets)
    : CoeffND(dims, std::move(offsets),
              std::vector<Complex>(std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>()))) {}

CoeffND::CoeffND(const Coeff1D& a)
    : CoeffND({a.size()}, {a.offset()}, std::vector<Complex>(a.values().begin(), a.values().end())) {}

CoeffND CoeffND::outer(std::span<const Coeff1D> factors) {
  if (factors.empty()) throw std::invalid_argument("outer product of zero factors");
  std::vector<std::size_t> dims;
  std::vector<Index> offsets;
  for (const auto& f : factors) {
    dims.push_back(f.size());
    offsets.push_back(f.offset());
  }
  CoeffND r(dims, offsets);
  for (std::size_t flat = 0; flat < r.size(); ++flat) {
    std::size_t rem = flat;
    Complex v = 1.0;
    for (std::size_t j = factors.size(); j-- > 0;) {
      v *= factors[j].values()[rem % dims[j]];
      rem /= dims[j];
    }
    r.values_[flat] = v;
  }
  return r;
}

std::size_t CoeffND::stride(std::size_t axis) const noexcept {
  std::size_t s = 1;
  for (std::size_t j = axis + 1; j < dims_.size(); ++j) s *= dims_[j];
  return s;
}

Complex CoeffND::at(std::span<const Index> k) const {
  if (k.size() != dims_.size()) throw std::domain_error("multi-index dimension mismatch");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    const Index local = k[j] - offsets_[j];
    if (local < 0 || local >= static_cast<Index>(dims_[j])) return {};
    flat = flat * dims_[j] + static_cast<std::size_t>(local);
  }
  return values_[flat];
}

std::vector<Index> CoeffND::index_of(std::size_t flat) const {
  std::vector<Index> k(dims_.size());
  for (std::size_t j = dims_.size(); j-- > 0;) {
    k[j] = offsets_[j] + static_cast<Index>(flat % dims_[j]);
    flat /= dims_[j];
  }
  return k;
}

Coeff1D CoeffND::fiber(std::size_t axis, std::size_t base) const {
  const std::size_t s = stride(axis);
  std::vector<Complex> v(dims_[axis]);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[base + i * s];
  return Coeff1D(offsets_[axis], std::move(v));
}

Coeff1D CoeffND::as_1d() const {
  if (rank() != 1) throw std::domain_error("expected a one-dimensional sequence");
  return Coeff1D(offsets_[0], values_);
}

bool CoeffND::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) { return v == Complex{}; });
}

// ---------------------------------------------------------------------------
// Norms, weights, sums

double l1_norm(const Coeff1D& a) {
  double s = 0.0;
  for (const auto& v : a.values()) s += std::abs(v);
  return s;
}

double l1_norm(const CoeffND& a) {
  double s = 0.0;
  for (const auto& v : a.values()) s += std::abs(v);
  return s;
}

Coeff1D weight_apply(const Coeff1D& a, int q) {
  return weight_apply(CoeffND(a), WeightExponent({q})).as_1d();
}

CoeffND weight_apply(const CoeffND& a, const WeightExponent& q) {
  if (q.dim() != a.rank()) throw std::domain_error("weight exponent dimension does not match sequence");
  std::vector<Complex> out(a.values().begin(), a.values().end());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    if (out[flat] == Complex{}) continue;
    const auto k = a.index_of(flat);
    double w = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (q[j] == 0) continue;
      if (k[j] < 0) throw std::domain_error("weighting requires nonnegative indices on weighted axes");
      w *= int_pow(k[j], q[j]);
    }
    out[flat] *= w;
  }
  return CoeffND(std::vector<std::size_t>(a.dims().begin(), a.dims().end()),
                 std::vector<Index>(a.offsets().begin(), a.offsets().end()), std::move(out));
}

double log_weighted_sum(const Coeff1D& a, int q) { return log_weighted_sum(CoeffND(a), WeightExponent({q})); }

double log_weighted_sum(const CoeffND& a, const WeightExponent& q) {
  if (q.dim() != a.rank()) throw std::domain_error("weight exponent dimension does not match sequence");
  double s = 0.0;
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    const double mag = std::abs(a.values()[flat]);
    if (mag == 0.0) continue;
    const auto k = a.index_of(flat);
    double w = mag;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] < 0) throw std::domain_error("log-weighted sum requires support in Z_+^d");
      w *= int_pow(k[j], q[j]) * std::log(static_cast<double>(k[j]) + 1.0);
    }
    s += w;
  }
  return s;
}

double shifted_trig(bool cosine, double x, int s) {
  const int r = ((s % 4) + 4) % 4;
  if (cosine) {
    switch (r) {
      case 0: return std::cos(x);
      case 1: return -std::sin(x);
      case 2: return -std::cos(x);
      default: return std::sin(x);
    }
  }
  switch (r) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

Complex series_eval(const CoeffND& a, const ParityVector& eta, const WeightExponent& q,
                    std::span<const double> t) {
  const std::size_t d = a.rank();
  if (eta.dim() != d || q.dim() != d || t.size() != d)
    throw std::domain_error("series_eval: dimension mismatch between sequence, parity, weight and point");
  Complex s{};
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    const Complex v = a.values()[flat];
    if (v == Complex{}) continue;
    const auto k = a.index_of(flat);
    double f = 1.0;
    for (std::size_t j = 0; j < d; ++j)
      f *= int_pow(k[j], q[j]) * shifted_trig(eta[j], static_cast<double>(k[j]) * t[j], q[j]);
    s += v * f;
  }
  return s;
}

bool BoundaryReport::all_passed() const noexcept {
  return std::all_of(faces.begin(), faces.end(), [](const FaceCheck& f) { return f.passed; });
}

BoundaryReport boundary_vanish_check(const CoeffND& a, const ParityVector& eta, const WeightExponent& q,
                                     double tol) {
  const std::size_t d = a.rank();
  if (eta.dim() != d || q.dim() != d) throw std::domain_error("boundary check: dimension mismatch");
  if (!(tol > 0.0)) throw std::domain_error("boundary check tolerance must be positive");

  BoundaryReport report;
  for (std::size_t j = 0; j < d; ++j) {
    MomentSums m;
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
      const auto k = a.index_of(flat);
      const Complex v = a.values()[flat];
      m.sum += v;
      m.alternating_sum += (k[j] % 2 == 0) ? v : -v;
    }
    report.moments.push_back(m);
  }

  for (std::size_t axis = 0; axis < d; ++axis) {
    if (q[axis] == 0) continue;
    // Enumerate s with s_axis < q_axis and s_i <= q_i elsewhere.
    std::vector<int> hi(d);
    for (std::size_t i = 0; i < d; ++i) hi[i] = (i == axis) ? q[i] - 1 : q[i];
    std::vector<int> s(d, 0);
    while (true) {
      for (bool at_pi : {false, true}) {
        // Collapse the face axis; key is the multi-index with that axis removed.
        std::map<std::vector<Index>, Complex> face;
        for (std::size_t flat = 0; flat < a.size(); ++flat) {
          const Complex v = a.values()[flat];
          if (v == Complex{}) continue;
          const auto k = a.index_of(flat);
          double w = face_trig(eta[axis], k[axis], at_pi, s[axis]);
          bool basis_vanishes = false;
          for (std::size_t i = 0; i < d; ++i) {
            w *= int_pow(k[i], s[i]);
            if (i != axis && k[i] == 0 && face_trig(eta[i], 0, false, s[i]) == 0.0) basis_vanishes = true;
          }
          if (basis_vanishes || w == 0.0) continue;
          std::vector<Index> key;
          for (std::size_t i = 0; i < d; ++i)
            if (i != axis) key.push_back(k[i]);
          face[key] += v * w;
        }
        FaceCheck check{s, axis, at_pi, 0.0, true};
        for (const auto& [key, c] : face) check.max_abs = std::max(check.max_abs, std::abs(c));
        check.passed = check.max_abs <= tol;
        report.faces.push_back(std::move(check));
      }
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (s[i] < hi[i]) {
          ++s[i];
          break;
        }
        s[i] = 0;
      }
      if (i == d) break;
    }
  }
  return report;
}

}  // namespace reexp
