#include "fft_convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <new>
#include <utility>

namespace reexp::detail {

namespace {

// FFTW planning is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class T>
class FftwArray {
 public:
  explicit FftwArray(std::size_t n) : data_(static_cast<T*>(fftw_malloc(n * sizeof(T)))) {
    if (data_ == nullptr) throw std::bad_alloc();
    std::fill_n(data_, n, T{});
  }
  ~FftwArray() { fftw_free(data_); }
  FftwArray(const FftwArray&) = delete;
  FftwArray& operator=(const FftwArray&) = delete;
  FftwArray& operator=(FftwArray&& other) noexcept {
    std::swap(data_, other.data_);
    return *this;
  }

  T* data() noexcept { return data_; }
  const T* data() const noexcept { return data_; }
  T& operator[](std::size_t i) noexcept { return data_[i]; }
  const T& operator[](std::size_t i) const noexcept { return data_[i]; }

 private:
  T* data_;
};

using RealArray = FftwArray<double>;
using SpectrumArray = FftwArray<Complex>;

fftw_complex* as_fftw(Complex* p) noexcept { return reinterpret_cast<fftw_complex*>(p); }

// Out-of-place real transforms of length p, planned once per length. All
// arrays are fftw_malloc'd, so new-array execution meets FFTW's alignment
// requirement.
class RealPlans {
 public:
  explicit RealPlans(std::size_t p) {
    std::lock_guard lock(planner_mutex());
    auto [it, inserted] = cache().try_emplace(p);
    if (inserted) {
      RealArray r(p);
      SpectrumArray c(p / 2 + 1);
      const int n = static_cast<int>(p);
      it->second.forward = fftw_plan_dft_r2c_1d(n, r.data(), as_fftw(c.data()), FFTW_ESTIMATE);
      it->second.backward = fftw_plan_dft_c2r_1d(n, as_fftw(c.data()), r.data(), FFTW_ESTIMATE);
      if (it->second.forward == nullptr || it->second.backward == nullptr) {
        cache().erase(it);
        throw std::bad_alloc();
      }
    }
    pair_ = it->second;
  }

  void forward(RealArray& in, SpectrumArray& out) const {
    fftw_execute_dft_r2c(pair_.forward, in.data(), as_fftw(out.data()));
  }
  // Destroys `in`.
  void backward(SpectrumArray& in, RealArray& out) const {
    fftw_execute_dft_c2r(pair_.backward, as_fftw(in.data()), out.data());
  }

 private:
  struct Pair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
  };
  struct Cache : std::map<std::size_t, Pair> {
    ~Cache() {
      for (auto& [p, pair] : *this) {
        if (pair.forward) fftw_destroy_plan(pair.forward);
        if (pair.backward) fftw_destroy_plan(pair.backward);
      }
    }
  };
  static Cache& cache() {
    static Cache c;
    return c;
  }

  Pair pair_;
};

// Per-thread scratch, grown to the largest transform seen and reused.
struct Workspace {
  std::size_t capacity = 0;
  RealArray real{1};
  SpectrumArray input[2]{SpectrumArray(1), SpectrumArray(1)};
  SpectrumArray acc[2]{SpectrumArray(1), SpectrumArray(1)};
  SpectrumArray kernel{1};
};

Workspace& workspace(std::size_t p) {
  thread_local Workspace ws;
  if (ws.capacity < p) {
    const std::size_t h = p / 2 + 1;
    ws.real = RealArray(p);
    for (auto& a : ws.input) a = SpectrumArray(h);
    for (auto& a : ws.acc) a = SpectrumArray(h);
    ws.kernel = SpectrumArray(h);
    ws.capacity = p;
  }
  return ws;
}

}  // namespace

std::size_t fft_size_for(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<Complex> fft_kernel_apply(std::span<const Complex> x, Index offset, IndexRange window,
                                      std::span<const KernelTerm> terms) {
  const std::size_t width = window.size();
  std::vector<Complex> y(width);
  const std::size_t len = x.size();
  if (len == 0 || width == 0 || terms.empty()) return y;

  // Circular convolution of the length-len input with the length-m kernel
  // window reproduces the linear result at positions len-1 .. m-1 whenever
  // the transform size is at least m. Kernels are real, so the real and
  // imaginary parts of x are handled separately with real transforms, and a
  // correlation term uses the conjugate input spectrum with its kernel
  // window rotated so its output lands at the same positions.
  const std::size_t m = width + len - 1;
  const std::size_t p = fft_size_for(m);
  const std::size_t h = p / 2 + 1;
  const auto sp = static_cast<std::ptrdiff_t>(p);
  const auto sh = static_cast<std::ptrdiff_t>(h);
  const RealPlans plans(p);
  Workspace& ws = workspace(p);

  const bool has_imag = std::any_of(x.begin(), x.end(), [](Complex v) { return v.imag() != 0.0; });
  const int parts = has_imag ? 2 : 1;

  for (int part = 0; part < parts; ++part) {
    std::fill_n(ws.real.data(), p, 0.0);
    for (std::size_t i = 0; i < len; ++i) ws.real[i] = part == 0 ? x[i].real() : x[i].imag();
    plans.forward(ws.real, ws.input[part]);
    std::fill_n(ws.acc[part].data(), h, Complex{});
  }

  const auto slen = static_cast<Index>(len);
  for (const auto& term : terms) {
    if (term.reversed) {
      const Index base = window.lo + offset;
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < sp; ++i) {
        const std::ptrdiff_t r = i - (slen - 1);
        const auto u = static_cast<std::size_t>(r < 0 ? r + sp : r);
        ws.real[static_cast<std::size_t>(i)] = (u < m) ? term.kernel(base + static_cast<Index>(u)) : 0.0;
      }
    } else {
      const Index m_lo = window.lo - (offset + slen - 1);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < sp; ++i)
        ws.real[static_cast<std::size_t>(i)] = (static_cast<std::size_t>(i) < m) ? term.kernel(m_lo + i) : 0.0;
    }
    plans.forward(ws.real, ws.kernel);
    const double sign = term.sign;
    const bool conj_input = term.reversed;
    for (int part = 0; part < parts; ++part) {
      SpectrumArray& a = ws.acc[part];
      const SpectrumArray& in = ws.input[part];
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < sh; ++i) {
        const auto u = static_cast<std::size_t>(i);
        a[u] += sign * (conj_input ? std::conj(in[u]) : in[u]) * ws.kernel[u];
      }
    }
  }

  const double scale = 1.0 / static_cast<double>(p);
  for (int part = 0; part < parts; ++part) {
    plans.backward(ws.acc[part], ws.real);
    for (std::size_t i = 0; i < width; ++i) {
      const double v = ws.real[i + len - 1] * scale;
      if (part == 0)
        y[i] = Complex(v, 0.0);
      else
        y[i] += Complex(0.0, v);
    }
  }
  return y;
}

}  // namespace reexp::detail
