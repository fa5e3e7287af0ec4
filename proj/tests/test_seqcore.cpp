#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "reexp/seqcore.hpp"
#include "reexp/sequence_io.hpp"
#include "test_support.hpp"

namespace reexp {
namespace {

using testing::kPi;

TEST(L1Norm, ZeroAndTwoUnits) {
  EXPECT_EQ(l1_norm(Coeff1D{}), 0.0);
  EXPECT_EQ(l1_norm(Coeff1D(3, {0.0, 0.0})), 0.0);
  EXPECT_EQ(l1_norm(Coeff1D::from_pairs({{1, 1.0}, {3, -1.0}})), 2.0);
}

TEST(L1Norm, MatchesReverseOrderLongDoubleSum) {
  std::mt19937_64 rng(11);
  const Coeff1D a = testing::random_complex_sequence(rng, -50, 149);
  ASSERT_EQ(a.size(), 200u);
  long double ref = 0.0L;
  for (auto it = a.values().rbegin(); it != a.values().rend(); ++it)
    ref += std::hypot(static_cast<long double>(it->real()), static_cast<long double>(it->imag()));
  EXPECT_NEAR(l1_norm(a), static_cast<double>(ref), 1e-12 * static_cast<double>(ref));
}

TEST(WeightApply, IdentityAndPowers) {
  std::mt19937_64 rng(3);
  const Coeff1D a = testing::random_real_sequence(rng, 0, 20);
  const Coeff1D same = weight_apply(a, 0);
  for (Index k = 0; k <= 20; ++k) EXPECT_EQ(same[k], a[k]);

  const Coeff1D w = weight_apply(Coeff1D::impulse(3), 2);
  EXPECT_EQ(w[3], Complex(9.0));
  EXPECT_EQ(l1_norm(w), 9.0);

  CoeffND e25({1, 1}, {2, 5}, {1.0});
  const CoeffND w2 = weight_apply(e25, WeightExponent({1, 1}));
  const Index k[] = {2, 5};
  EXPECT_EQ(w2.at(k), Complex(10.0));
}

TEST(WeightApply, IndexZeroMapsToZero) {
  const Coeff1D w = weight_apply(Coeff1D::from_pairs({{0, 5.0}, {2, 1.0}}), 1);
  EXPECT_EQ(w[0], Complex(0.0));
  EXPECT_EQ(w[2], Complex(2.0));
}

TEST(WeightApply, NegativeIndexRejected) {
  EXPECT_THROW(weight_apply(Coeff1D::impulse(-1), 1), std::domain_error);
  // q = 0 leaves negative indices alone.
  EXPECT_NO_THROW(weight_apply(Coeff1D::impulse(-1), 0));
  CoeffND a({1, 1}, {-2, 3}, {1.0});
  EXPECT_NO_THROW(weight_apply(a, WeightExponent({0, 2})));
  EXPECT_THROW(weight_apply(a, WeightExponent({1, 0})), std::domain_error);
}

TEST(WeightApply, CompositionAddsExponents) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffND a = testing::random_nd(rng, {6, 5}, {0, 1});
    const WeightExponent q1({static_cast<int>(trial % 3), 1});
    const WeightExponent q2({1, static_cast<int>(trial % 2)});
    const CoeffND lhs = weight_apply(weight_apply(a, q1), q2);
    const CoeffND rhs = weight_apply(a, q1 + q2);
    for (std::size_t f = 0; f < lhs.size(); ++f)
      EXPECT_LE(std::abs(lhs.values()[f] - rhs.values()[f]), 1e-12 * std::max(1.0, std::abs(rhs.values()[f])));
  }
}

TEST(LogWeightedSum, Examples) {
  EXPECT_NEAR(log_weighted_sum(Coeff1D::impulse(1), 0), std::log(2.0), 1e-15);
  const double v = log_weighted_sum(Coeff1D::from_pairs({{1, 1.0}, {3, 1.0}}), 1);
  EXPECT_NEAR(v, std::log(2.0) + 3.0 * std::log(4.0), 1e-14);
  EXPECT_NEAR(v, 4.85203, 5e-6);
  EXPECT_EQ(log_weighted_sum(Coeff1D{}, 2), 0.0);
}

TEST(LogWeightedSum, EqualsUnweightedSumOfWeightedSequence) {
  std::mt19937_64 rng(17);
  for (int q = 0; q <= 3; ++q) {
    const Coeff1D a = testing::random_real_sequence(rng, 0, 40);
    EXPECT_DOUBLE_EQ(log_weighted_sum(a, q), log_weighted_sum(weight_apply(a, q), 0));
  }
}

TEST(LogWeightedSum, NegativeSupportRejected) {
  EXPECT_THROW(log_weighted_sum(Coeff1D::impulse(-2), 0), std::domain_error);
}

TEST(SeriesEval, Examples) {
  const CoeffND e1(Coeff1D::impulse(1));
  const double t0[] = {0.0};
  EXPECT_DOUBLE_EQ(series_eval(e1, ParityVector::ones(1), WeightExponent({0}), t0).real(), 1.0);
  const double th[] = {kPi / 2};
  EXPECT_NEAR(series_eval(e1, ParityVector::ones(1), WeightExponent({1}), th).real(), -1.0, 1e-15);

  CoeffND e11({1, 1}, {1, 1}, {1.0});
  const double t2[] = {kPi / 3, kPi / 2};
  EXPECT_NEAR(series_eval(e11, ParityVector::parse("10"), WeightExponent({0, 0}), t2).real(), 0.5, 1e-15);
}

TEST(SeriesEval, DimensionMismatch) {
  const CoeffND e1(Coeff1D::impulse(1));
  const double t2[] = {0.0, 0.0};
  EXPECT_THROW(series_eval(e1, ParityVector::ones(1), WeightExponent({0}), t2), std::domain_error);
  const double t1[] = {0.0};
  EXPECT_THROW(series_eval(e1, ParityVector::ones(2), WeightExponent({0}), t1), std::domain_error);
}

TEST(SeriesEval, Linearity) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffND a = testing::random_nd(rng, {5, 4}, {1, 0});
    const CoeffND b = testing::random_nd(rng, {5, 4}, {1, 0});
    const double alpha = u(rng), beta = -u(rng);
    CoeffND c = a;
    for (std::size_t f = 0; f < c.size(); ++f) c.values()[f] = alpha * a.values()[f] + beta * b.values()[f];
    const ParityVector eta = ParityVector::parse(trial % 2 ? "10" : "01");
    const WeightExponent q({trial % 3, 1});
    const double t[] = {u(rng), u(rng)};
    const Complex lhs = series_eval(c, eta, q, t);
    const Complex rhs = alpha * series_eval(a, eta, q, t) + beta * series_eval(b, eta, q, t);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(SeriesEval, DerivativeMatchesFiniteDifference) {
  const CoeffND a(Coeff1D::from_pairs({{1, 0.5}, {2, -0.25}, {5, 0.125}}));
  const double t = 0.7, h = 1e-5;
  for (bool cosine : {true, false}) {
    const ParityVector eta = cosine ? ParityVector::ones(1) : ParityVector::zeros(1);
    const double tp[] = {t + h};
    const double tm[] = {t - h};
    const double tc[] = {t};
    const double fd = (series_eval(a, eta, WeightExponent({0}), tp).real() -
                       series_eval(a, eta, WeightExponent({0}), tm).real()) /
                      (2 * h);
    EXPECT_NEAR(series_eval(a, eta, WeightExponent({1}), tc).real(), fd, 1e-8);
  }
}

TEST(Trim, Idempotent) {
  const Coeff1D a(-3, {0.0, 0.0, 1.0, 0.0, 2.0, 0.0});
  const Coeff1D t = a.trimmed();
  EXPECT_EQ(t.offset(), -1);
  EXPECT_EQ(t.size(), 3u);
  const Coeff1D tt = t.trimmed();
  EXPECT_EQ(tt.offset(), t.offset());
  ASSERT_EQ(tt.size(), t.size());
  for (Index k = tt.offset(); k < tt.end_index(); ++k) EXPECT_EQ(tt[k], t[k]);
  EXPECT_TRUE(Coeff1D(4, {0.0}).trimmed().empty());
}

TEST(BoundaryCheck, CosineImpulseFailsAtZero) {
  const auto r = boundary_vanish_check(CoeffND(Coeff1D::impulse(1)), ParityVector::ones(1), WeightExponent({1}), 1e-12);
  ASSERT_EQ(r.faces.size(), 2u);
  EXPECT_FALSE(r.faces[0].passed);  // t = 0
  EXPECT_FALSE(r.faces[0].at_pi);
  EXPECT_NEAR(r.faces[0].max_abs, 1.0, 1e-15);
  EXPECT_FALSE(r.all_passed());
}

TEST(BoundaryCheck, CosTMinusCos3tVanishesAtBothEnds) {
  const CoeffND a(Coeff1D::from_pairs({{1, 1.0}, {3, -1.0}}));
  const auto r = boundary_vanish_check(a, ParityVector::ones(1), WeightExponent({1}), 1e-12);
  EXPECT_TRUE(r.all_passed());
  ASSERT_EQ(r.moments.size(), 1u);
  EXPECT_EQ(r.moments[0].sum, Complex(0.0));
  EXPECT_EQ(r.moments[0].alternating_sum, Complex(0.0));
  // Face values agree with direct evaluation.
  for (double t : {0.0, kPi}) {
    const double tt[] = {t};
    EXPECT_NEAR(std::abs(series_eval(a, ParityVector::ones(1), WeightExponent({0}), tt)), 0.0, 1e-14);
  }
  // Second order needs f'(0) = f'(pi) = 0 too; f' = -sin t + 3 sin 3t vanishes there.
  EXPECT_TRUE(boundary_vanish_check(a, ParityVector::ones(1), WeightExponent({2}), 1e-12).all_passed());
}

TEST(BoundaryCheck, ZeroSequencePassesAllOrders) {
  CoeffND z({3, 3}, {1, 1});
  const auto r = boundary_vanish_check(z, ParityVector::parse("10"), WeightExponent({2, 2}), 1e-12);
  EXPECT_FALSE(r.faces.empty());
  EXPECT_TRUE(r.all_passed());
}

TEST(BoundaryCheck, SineSeriesVanishesAutomatically) {
  std::mt19937_64 rng(2);
  const CoeffND a(testing::random_real_sequence(rng, 1, 12));
  EXPECT_TRUE(boundary_vanish_check(a, ParityVector::zeros(1), WeightExponent({1}), 1e-12).all_passed());
}

TEST(BoundaryCheck, TwoDimensionalFace) {
  // f = (cos x - cos 3x) * cos y vanishes on x in {0, pi} but not on y.
  const Coeff1D u = Coeff1D::from_pairs({{1, 1.0}, {3, -1.0}});
  const Coeff1D v = Coeff1D::impulse(1);
  const Coeff1D uv[] = {u, v};
  const CoeffND a = CoeffND::outer(uv);
  EXPECT_TRUE(boundary_vanish_check(a, ParityVector::ones(2), WeightExponent({1, 0}), 1e-12).all_passed());
  EXPECT_FALSE(boundary_vanish_check(a, ParityVector::ones(2), WeightExponent({0, 1}), 1e-12).all_passed());
  EXPECT_THROW(boundary_vanish_check(a, ParityVector::ones(2), WeightExponent({0, 1}), 0.0), std::domain_error);
}

TEST(Parsing, ParityWeightRange) {
  EXPECT_EQ(ParityVector::parse("10").to_string(), "10");
  EXPECT_EQ(ParityVector::parse("101").weight(), 2u);
  EXPECT_EQ(ParityVector::parse("10").complement().to_string(), "01");
  EXPECT_THROW(ParityVector::parse("12"), std::invalid_argument);
  EXPECT_THROW(ParityVector::parse(""), std::invalid_argument);
  EXPECT_EQ(WeightExponent::parse("1,0,3").total(), 4);
  EXPECT_THROW(WeightExponent::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(WeightExponent::parse("-1"), std::invalid_argument);
  EXPECT_EQ(IndexRange::parse("1:64"), (IndexRange{1, 64}));
  EXPECT_EQ(IndexRange::parse("-3:-1"), (IndexRange{-3, -1}));
  EXPECT_THROW(IndexRange::parse("5:1"), std::invalid_argument);
  EXPECT_THROW(IndexRange::parse("5"), std::invalid_argument);
}

TEST(SequenceFile, RoundTripIsBitExact) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int trial = 0; trial < 25; ++trial) {
    CoeffND a = testing::random_nd(rng, {static_cast<std::size_t>(1 + trial % 4), 3}, {-trial, trial});
    for (auto& v : a.values()) v = Complex(u(rng) * 1e-7, u(rng) / 3.0);
    const CoeffND b = from_sequence_json(to_sequence_json(a));
    ASSERT_EQ(b.rank(), a.rank());
    for (std::size_t j = 0; j < a.rank(); ++j) {
      EXPECT_EQ(b.dims()[j], a.dims()[j]);
      EXPECT_EQ(b.offsets()[j], a.offsets()[j]);
    }
    for (std::size_t f = 0; f < a.size(); ++f) {
      EXPECT_EQ(b.values()[f].real(), a.values()[f].real());
      EXPECT_EQ(b.values()[f].imag(), a.values()[f].imag());
    }
  }
}

TEST(SequenceFile, MalformedDocumentsRejected) {
  EXPECT_THROW(from_sequence_json("{"), std::runtime_error);
  EXPECT_THROW(from_sequence_json(R"({"dims":[2],"offsets":[0],"values":[[1,0]]})"), std::runtime_error);
  EXPECT_THROW(from_sequence_json(R"({"dims":[1],"values":[[1,0]]})"), std::runtime_error);
  EXPECT_THROW(from_sequence_json(R"({"dims":[1],"offsets":[0],"values":[[1,0,2]]})"), std::runtime_error);
  EXPECT_NO_THROW(from_sequence_json(R"({"dims":[2],"offsets":[1],"values":[[1,0],[2,0]]})"));
}

}  // namespace
}  // namespace reexp
