#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "reexp/hilbert.hpp"
#include "test_support.hpp"

namespace reexp {
namespace {

constexpr HilbertKind kAllKinds[] = {HilbertKind::full, HilbertKind::even, HilbertKind::odd,
                                     HilbertKind::even_halved, HilbertKind::odd_halved};

// Oracle for the even/odd kinds: the full transform of the symmetric or
// antisymmetric extension of a (with a_0 dropped), summed directly.
Complex extension_oracle(const Coeff1D& a, Index n, double sign) {
  Complex s{};
  for (Index k = std::max<Index>(1, a.offset()); k < a.end_index(); ++k) {
    if (k != n) s += a[k] / static_cast<double>(n - k);
    if (-k != n) s += sign * a[k] / static_cast<double>(n + k);
  }
  return s;
}

// Oracle for the halved kinds from the two-reciprocal form.
Complex halved_oracle(const Coeff1D& a, Index n, bool even) {
  Complex s{};
  for (Index k = std::max<Index>(0, a.offset()); k < a.end_index(); ++k) {
    if ((k - n) % 2 == 0) continue;
    const double second = even ? 1.0 / static_cast<double>(n - k) : 1.0 / static_cast<double>(k - n);
    s += a[k] * (1.0 / static_cast<double>(n + k) + second);
  }
  return s;
}

class BothAlgorithms : public ::testing::TestWithParam<Algorithm> {};

TEST_P(BothAlgorithms, FullExamples) {
  const Algorithm alg = GetParam();
  EXPECT_TRUE(dht_full(Coeff1D{}, {-3, 3}, alg).trimmed().empty());
  const Coeff1D h0 = dht_full(Coeff1D::impulse(0), {-1, 2}, alg);
  EXPECT_NEAR(h0[-1].real(), -1.0, 1e-14);
  EXPECT_NEAR(h0[0].real(), 0.0, 1e-14);
  EXPECT_NEAR(h0[1].real(), 1.0, 1e-14);
  EXPECT_NEAR(h0[2].real(), 0.5, 1e-14);
  const Coeff1D h01 = dht_full(Coeff1D::from_pairs({{0, 1.0}, {1, 1.0}}), {0, 2}, alg);
  EXPECT_NEAR(h01[0].real(), -1.0, 1e-14);
  EXPECT_NEAR(h01[1].real(), 1.0, 1e-14);
  EXPECT_NEAR(h01[2].real(), 1.5, 1e-14);
}

TEST_P(BothAlgorithms, EvenExamples) {
  const Algorithm alg = GetParam();
  const Coeff1D h = dht_even(Coeff1D::impulse(1), {1, 3}, alg);
  EXPECT_NEAR(h[1].real(), 0.5, 1e-14);
  EXPECT_NEAR(h[2].real(), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(h[3].real(), 0.75, 1e-14);
  EXPECT_NEAR(dht_even(Coeff1D::from_pairs({{1, 1.0}, {2, 1.0}}), {1, 1}, alg)[1].real(), -1.0 / 6.0, 1e-14);
  EXPECT_TRUE(dht_even(Coeff1D{}, {1, 5}, alg).trimmed().empty());
}

TEST_P(BothAlgorithms, OddExamples) {
  const Algorithm alg = GetParam();
  const Coeff1D h = dht_odd(Coeff1D::impulse(1), {0, 2}, alg);
  EXPECT_NEAR(h[0].real(), -2.0, 1e-14);
  EXPECT_NEAR(h[1].real(), -0.5, 1e-14);
  EXPECT_NEAR(h[2].real(), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(dht_odd(Coeff1D::impulse(2), {2, 2}, alg)[2].real(), -0.25, 1e-14);
  EXPECT_NEAR(dht_odd(Coeff1D::from_pairs({{1, 1.0}, {3, 1.0}}), {2, 2}, alg)[2].real(), -8.0 / 15.0, 1e-14);
}

TEST_P(BothAlgorithms, EvenHalvedExamples) {
  const Algorithm alg = GetParam();
  const Coeff1D h = dht_even_halved(Coeff1D::impulse(1), {2, 4}, alg);
  EXPECT_NEAR(h[2].real(), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(h[3].real(), 0.0, 1e-14);
  EXPECT_NEAR(h[4].real(), 8.0 / 15.0, 1e-14);
  EXPECT_NEAR(dht_even_halved(Coeff1D::from_pairs({{1, 1.0}, {3, 1.0}}), {2, 2}, alg)[2].real(), 8.0 / 15.0,
              1e-14);
  EXPECT_TRUE(dht_even_halved(Coeff1D{}, {1, 5}, alg).trimmed().empty());
}

TEST_P(BothAlgorithms, OddHalvedExamples) {
  const Algorithm alg = GetParam();
  const Coeff1D h = dht_odd_halved(Coeff1D::impulse(1), {0, 2}, alg);
  EXPECT_NEAR(h[0].real(), 2.0, 1e-14);
  EXPECT_NEAR(h[1].real(), 0.0, 1e-14);
  EXPECT_NEAR(h[2].real(), -2.0 / 3.0, 1e-14);
  EXPECT_NEAR(dht_odd_halved(Coeff1D::impulse(2), {1, 1}, alg)[1].real(), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(dht_odd_halved(Coeff1D::from_pairs({{1, 1.0}, {3, 1.0}}), {2, 2}, alg)[2].real(), 8.0 / 15.0,
              1e-14);
}

TEST_P(BothAlgorithms, MatchesIndependentOracles) {
  const Algorithm alg = GetParam();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Coeff1D a = testing::random_complex_sequence(rng, 1 + trial, 30 + 3 * trial);
    const IndexRange r1{1, 80}, r0{0, 80};
    const Coeff1D he = dht_even(a, r1, alg), ho = dht_odd(a, r0, alg);
    const Coeff1D hem = dht_even_halved(a, r1, alg), hom = dht_odd_halved(a, r0, alg);
    for (Index n = 0; n <= 80; ++n) {
      if (n >= 1) {
        EXPECT_LE(std::abs(he[n] - extension_oracle(a, n, 1.0)), 1e-12);
        EXPECT_LE(std::abs(hem[n] - halved_oracle(a, n, true)), 1e-12);
      }
      EXPECT_LE(std::abs(ho[n] - extension_oracle(a, n, -1.0)), 1e-12);
      EXPECT_LE(std::abs(hom[n] - halved_oracle(a, n, false)), 1e-12);
    }
  }
}

TEST_P(BothAlgorithms, Linearity) {
  const Algorithm alg = GetParam();
  std::mt19937_64 rng(7);
  for (HilbertKind kind : kAllKinds) {
    const Coeff1D a = testing::random_complex_sequence(rng, 1, 50);
    const Coeff1D b = testing::random_complex_sequence(rng, 3, 70);
    const Complex alpha(0.3, -1.2), beta(-2.0, 0.5);
    const IndexRange r{1, 150};
    const TransformRequest req{kind, r, alg};
    const Coeff1D lhs = dht(a * alpha + b * beta, req);
    const Coeff1D rhs = dht(a, req) * alpha + dht(b, req) * beta;
    EXPECT_LE(testing::max_abs_diff(lhs, rhs), 1e-12 * testing::max_abs(rhs)) << to_string(kind);
  }
}

TEST_P(BothAlgorithms, FullKernelIsSkewAdjoint) {
  const Algorithm alg = GetParam();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Coeff1D a = testing::random_real_sequence(rng, -20 - trial, 25);
    const Coeff1D b = testing::random_real_sequence(rng, -5, 40 + trial);
    const IndexRange r{-60, 60};
    const Coeff1D ha = dht_full(a, r, alg), hb = dht_full(b, r, alg);
    Complex lhs{}, rhs{};
    for (Index n = r.lo; n <= r.hi; ++n) {
      lhs += ha[n] * b[n];
      rhs += a[n] * hb[n];
    }
    EXPECT_LE(std::abs(lhs + rhs), 1e-10);
  }
}

TEST_P(BothAlgorithms, HalvedParityDecoupling) {
  const Algorithm alg = GetParam();
  for (Index k = 1; k <= 9; ++k) {
    const Coeff1D e = dht_even_halved(Coeff1D::impulse(k), {1, 40}, alg);
    const Coeff1D o = dht_odd_halved(Coeff1D::impulse(k), {0, 40}, alg);
    for (Index n = 0; n <= 40; ++n) {
      if ((k - n) % 2 != 0) continue;
      if (alg == Algorithm::naive) {
        if (n >= 1) {
          EXPECT_EQ(e[n], Complex(0.0));
        }
        EXPECT_EQ(o[n], Complex(0.0));
      } else {
        // The FFT path reproduces the structural zeros only to rounding.
        if (n >= 1) {
          EXPECT_LE(std::abs(e[n]), 1e-14);
        }
        EXPECT_LE(std::abs(o[n]), 1e-14);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Hilbert, BothAlgorithms, ::testing::Values(Algorithm::naive, Algorithm::fast),
                         [](const auto& info) { return to_string(info.param); });

TEST(Hilbert, FastMatchesNaiveAcrossSizes) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1u, 2u, 7u, 64u, 333u, 1024u, 4096u}) {
    const Coeff1D a = testing::random_complex_sequence(rng, 1, static_cast<Index>(n));
    for (HilbertKind kind : kAllKinds) {
      const IndexRange r{std::max<Index>(min_output_index(kind), kind == HilbertKind::full ? -5 : 0),
                         static_cast<Index>(n) + 17};
      const Coeff1D slow = dht(a, {kind, r, Algorithm::naive});
      const Coeff1D fast = dht(a, {kind, r, Algorithm::fast});
      EXPECT_LE(testing::max_abs_diff(slow, fast), 1e-10 * testing::max_abs(slow))
          << to_string(kind) << " n=" << n;
    }
  }
}

TEST(Hilbert, FastPathHandlesOffsetWindows) {
  std::mt19937_64 rng(8);
  const Coeff1D a = testing::random_real_sequence(rng, -37, 12);
  for (IndexRange r : {IndexRange{-200, -150}, IndexRange{500, 520}, IndexRange{-40, 40}, IndexRange{3, 3}}) {
    const Coeff1D slow = dht_full(a, r, Algorithm::naive);
    const Coeff1D fast = dht_full(a, r, Algorithm::fast);
    EXPECT_LE(testing::max_abs_diff(slow, fast), 1e-12 * testing::max_abs(slow));
  }
}

TEST(Hilbert, DomainErrors) {
  EXPECT_THROW(dht_even(Coeff1D::impulse(1), {0, 3}), std::domain_error);
  EXPECT_THROW(dht_even_halved(Coeff1D::impulse(1), {0, 3}), std::domain_error);
  EXPECT_THROW(dht_odd(Coeff1D::impulse(1), {-1, 3}), std::domain_error);
  EXPECT_THROW(dht_odd_halved(Coeff1D::impulse(1), {-1, 3}), std::domain_error);
  EXPECT_THROW(dht_full(Coeff1D::impulse(1), {3, 2}), std::domain_error);
  EXPECT_THROW(dht_even(Coeff1D::impulse(-2), {1, 3}), std::domain_error);
  EXPECT_NO_THROW(dht_full(Coeff1D::impulse(-2), {-5, 3}));
  // Explicit zeros at negative indices are not support.
  EXPECT_NO_THROW(dht_even(Coeff1D(-2, {0.0, 0.0, 0.0, 1.0}), {1, 3}));
}

TEST(Hilbert, EvenAndOddIgnoreIndexZero) {
  const Coeff1D with0 = Coeff1D::from_pairs({{0, 7.0}, {2, 1.0}});
  const Coeff1D without = Coeff1D::impulse(2);
  for (Algorithm alg : {Algorithm::naive, Algorithm::fast}) {
    EXPECT_LE(testing::max_abs_diff(dht_even(with0, {1, 9}, alg), dht_even(without, {1, 9}, alg)), 1e-15);
    EXPECT_LE(testing::max_abs_diff(dht_odd(with0, {0, 9}, alg), dht_odd(without, {0, 9}, alg)), 1e-15);
  }
}

TEST(HilbertND, MixedExample) {
  CoeffND e11({1, 1}, {1, 1}, {1.0});
  for (Algorithm alg : {Algorithm::naive, Algorithm::fast}) {
    const CoeffND out = dht_mixed(e11, ParityVector::parse("10"), {{2, 2}, {2, 2}}, alg);
    EXPECT_NEAR(out.values()[0].real(), -8.0 / 9.0, 1e-14);
    EXPECT_TRUE(dht_mixed(CoeffND({2, 2}, {1, 1}), ParityVector::parse("10"), {{1, 4}, {0, 4}}, alg).is_zero());
  }
}

TEST(HilbertND, TensorExamples) {
  CoeffND e11({1, 1}, {1, 1}, {1.0});
  for (Algorithm alg : {Algorithm::naive, Algorithm::fast}) {
    const CoeffND out = dht_tensor(e11, ParityVector::parse("10"), ParityVector::parse("01"), {{2, 2}, {2, 2}}, alg);
    EXPECT_NEAR(out.values()[0].real(), 8.0 / 9.0, 1e-14);

    std::mt19937_64 rng(5);
    const CoeffND a = testing::random_nd(rng, {4, 3}, {1, 2});
    const CoeffND id = dht_tensor(a, ParityVector::zeros(2), ParityVector::zeros(2), {{1, 4}, {2, 4}}, alg);
    EXPECT_EQ(testing::max_abs_diff(id, a), 0.0);
    EXPECT_TRUE(
        dht_tensor(CoeffND({2, 2}, {1, 1}), ParityVector::parse("10"), ParityVector::parse("01"), {{1, 4}, {0, 4}}, alg)
            .is_zero());
  }
  EXPECT_THROW(dht_tensor(e11, ParityVector::parse("11"), ParityVector::parse("01"), {{2, 2}, {2, 2}}),
               std::domain_error);
}

TEST(HilbertND, MixedFactorizesOnSeparableInput) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Coeff1D u = testing::random_real_sequence(rng, 1, 12);
    const Coeff1D v = testing::random_real_sequence(rng, 2, 9);
    const Coeff1D uv[] = {u, v};
    const CoeffND a = CoeffND::outer(uv);
    const IndexBox box{{1, 30}, {0, 25}};
    const Coeff1D fu = dht_even_halved(u, box[0], Algorithm::naive);
    const Coeff1D fv = dht_odd_halved(v, box[1], Algorithm::naive);
    const Coeff1D f[] = {fu, fv};
    const CoeffND expected = CoeffND::outer(f);
    for (Algorithm alg : {Algorithm::naive, Algorithm::fast}) {
      const CoeffND got = dht_mixed(a, ParityVector::parse("10"), box, alg);
      EXPECT_LE(testing::max_abs_diff(got, expected), 1e-12 * std::max(1.0, testing::max_abs(expected)));
    }
  }
}

TEST(HilbertND, NaiveAndFastAgreeIn3D) {
  std::mt19937_64 rng(77);
  const CoeffND a = testing::random_nd(rng, {5, 4, 6}, {1, 0, 2});
  const IndexBox box{{1, 9}, {0, 7}, {1, 8}};
  const CoeffND m1 = dht_mixed(a, ParityVector::parse("101"), box, Algorithm::naive);
  const CoeffND m2 = dht_mixed(a, ParityVector::parse("101"), box, Algorithm::fast);
  EXPECT_LE(testing::max_abs_diff(m1, m2), 1e-12 * testing::max_abs(m1));
  const CoeffND t1 = dht_tensor(a, ParityVector::parse("100"), ParityVector::parse("001"), box, Algorithm::naive);
  const CoeffND t2 = dht_tensor(a, ParityVector::parse("100"), ParityVector::parse("001"), box, Algorithm::fast);
  EXPECT_LE(testing::max_abs_diff(t1, t2), 1e-12 * testing::max_abs(t1));
}

TEST(HilbertND, DimensionAndDomainErrors) {
  CoeffND a({2, 2}, {1, 1}, {1.0, 2.0, 3.0, 4.0});
  EXPECT_THROW(dht_mixed(a, ParityVector::parse("1"), {{1, 2}, {1, 2}}), std::domain_error);
  EXPECT_THROW(dht_mixed(a, ParityVector::parse("10"), {{1, 2}}), std::domain_error);
  EXPECT_THROW(dht_mixed(a, ParityVector::parse("10"), {{0, 2}, {0, 2}}), std::domain_error);
  CoeffND neg({1, 1}, {-1, 1}, {1.0});
  EXPECT_THROW(dht_mixed(neg, ParityVector::parse("10"), {{1, 2}, {0, 2}}), std::domain_error);
}

TEST(Hilbert, WindowTailBound) {
  const Coeff1D a = Coeff1D::from_pairs({{-2, 1.0}, {3, -1.0}});
  EXPECT_DOUBLE_EQ(window_tail_bound(a, 13), 2.0 / 10.0);
  EXPECT_TRUE(std::isinf(window_tail_bound(a, 3)));
  EXPECT_EQ(window_tail_bound(Coeff1D{}, 1), 0.0);
  // The bound dominates every output entry beyond the window.
  const Coeff1D h = dht_full(a, {-200, 200}, Algorithm::naive);
  for (Index n = 14; n <= 200; ++n) {
    EXPECT_LE(std::abs(h[n]), window_tail_bound(a, 13));
    EXPECT_LE(std::abs(h[-n]), window_tail_bound(a, 13));
  }
}

}  // namespace
}  // namespace reexp
