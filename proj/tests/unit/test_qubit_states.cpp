#include <gtest/gtest.h>

#include <cmath>

#include "hopfq/errors.hpp"
#include "hopfq/hopf_maps.hpp"
#include "hopfq/qubit_states.hpp"

using namespace hopfq;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);
const double r3 = 1.0 / std::sqrt(3.0);

HyperComplex o(int k) { return k == 0 ? HyperComplex::real(Level::octonion, 1.0) : HyperComplex::unit(Level::octonion, k); }

}  // namespace

TEST(PureState, Validation) {
  EXPECT_THROW(PureState({1, 0, 0}), UnsupportedSize);
  EXPECT_THROW(PureState(std::vector<Complex>(16, 0.25)), UnsupportedSize);
  EXPECT_THROW(PureState({1, 1}), ContractViolation);
  EXPECT_THROW(PureState::normalized({0, 0}), ContractViolation);
  EXPECT_EQ(PureState::normalized({3, 4}), PureState({0.6, 0.8}));
}

TEST(PureState, Accessors) {
  const PureState w = PureState::w();
  EXPECT_EQ(w.qubits(), 3);
  EXPECT_EQ(w.t(0, 0, 1), r3);
  EXPECT_EQ(w.t(1, 0, 0), r3);
  EXPECT_EQ(w.t(1, 1, 1), 0.0);
  EXPECT_EQ(PureState::basis("010")[2], 1.0);
  EXPECT_NEAR(PureState::ghz().norm_sq(), 1.0, 1e-15);
}

TEST(Pack, BasisZero) {
  const AlgebraPair p = pack(PureState::basis("000"));
  EXPECT_EQ(p.first, o(0));
  EXPECT_EQ(p.second, HyperComplex(Level::octonion));
}

TEST(Pack, Ghz) {
  const AlgebraPair p = pack(PureState::ghz());
  EXPECT_LT(max_abs_diff(p.first, o(0) * r2), 1e-15);
  EXPECT_LT(max_abs_diff(p.second, mul(o(2), o(4)) * r2), 1e-15);
  EXPECT_EQ(mul(o(2), o(4)), o(6));
}

TEST(Pack, W) {
  const AlgebraPair p = pack(PureState::w());
  EXPECT_LT(max_abs_diff(p.first, (o(2) + o(4)) * r3), 1e-15);
  EXPECT_LT(max_abs_diff(p.second, o(0) * r3), 1e-15);
}

TEST(Pack, ConjugatesBetaOneAndGammaOne) {
  // beta1 = i/sqrt2 enters q2 conjugated, so o1 carries -i1 i2 i4 / sqrt2.
  const PureState s({r2, 0, 0, Complex(0, r2), 0, 0, 0, 0});
  const AlgebraPair p = pack(s);
  const HyperComplex expected = o(0) * r2 - mul(mul(o(1), o(2)), o(4)) * r2;
  EXPECT_LT(max_abs_diff(p.first, expected), 1e-15);
}

TEST(Pack, TwoQubitUsesQuaternions) {
  const AlgebraPair p = pack(PureState::bell00());
  EXPECT_EQ(p.first.level(), Level::quaternion);
  EXPECT_LT(max_abs_diff(p.first, HyperComplex::real(Level::quaternion, r2)), 1e-15);
  EXPECT_LT(max_abs_diff(p.second, HyperComplex::unit(Level::quaternion, 2) * r2), 1e-15);
}

TEST(Pack, Bijection) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const PureState s = random_state(n, seed);
      const AlgebraPair p = pack(s);
      EXPECT_NEAR(norm_sq(p.first) + norm_sq(p.second), 1.0, 1e-12);
      const PureState back = unpack(p);
      for (std::size_t i = 0; i < s.amplitudes().size(); ++i) EXPECT_LT(std::abs(back[i] - s[i]), 1e-14);
    }
  }
}

TEST(Tensor, Basics) {
  EXPECT_EQ(tensor(PureState::basis("0"), PureState::basis("0")), PureState::basis("00"));
  const PureState t = tensor(PureState::basis("1"), PureState::bell00());
  const PureState expected({0, 0, 0, 0, r2, 0, 0, r2});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(t[i] - expected[i]), 0.0, 1e-15);
  EXPECT_THROW(tensor(PureState::bell00(), PureState::bell00()), UnsupportedSize);
}

TEST(Tensor, NormAndAssociativity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PureState a = random_state(1, seed), b = random_state(1, seed + 1000), c = random_state(1, seed + 2000);
    const PureState left = tensor(tensor(a, b), c), right = tensor(a, tensor(b, c));
    EXPECT_NEAR(left.norm_sq(), 1.0, 1e-12);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_LT(std::abs(left[i] - right[i]), 1e-15);
  }
}

TEST(RandomState, DeterministicAndNormalized) {
  EXPECT_EQ(random_state(3, 42), random_state(3, 42));
  EXPECT_FALSE(random_state(3, 42) == random_state(3, 43));
  for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_NEAR(random_state(2, seed).norm_sq(), 1.0, 1e-12);
}

TEST(RandomState, BlochVectorIsCentered) {
  double mean = 0.0;
  const int count = 10000;
  for (int i = 0; i < count; ++i) mean += hopf_base(random_state(1, trial_seed(5, static_cast<std::uint64_t>(i)))).x(3);
  EXPECT_NEAR(mean / count, 0.0, 0.05);
}

TEST(BringToFront, MovesQubit) {
  const PureState s = PureState::basis("001");
  EXPECT_EQ(bring_to_front(s, 3), PureState::basis("100"));
  EXPECT_EQ(bring_to_front(s, 1), s);
  EXPECT_EQ(bring_to_front(PureState::basis("010"), 2), PureState::basis("100"));
}

TEST(ReshapeMatrix, Examples) {
  const CutMatrix z = reshape_matrix(PureState::basis("000"), 1);
  EXPECT_EQ(z(0, 0), 1.0);
  const CutMatrix g = reshape_matrix(PureState::ghz(), 1);
  EXPECT_EQ(g(0, 0), r2);
  EXPECT_EQ(g(1, 3), r2);
  EXPECT_EQ(g(0, 3), 0.0);
  EXPECT_THROW(reshape_matrix(PureState::basis("0"), 1), ContractViolation);
  EXPECT_THROW(reshape_matrix(PureState::ghz(), 4), ContractViolation);
}

TEST(ReshapeMatrix, FrobeniusNorm) {
  for (int cut = 1; cut <= 3; ++cut) {
    const CutMatrix m = reshape_matrix(random_state(3, 9), cut);
    double s = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < m.cols; ++c) s += std::norm(m(r, c));
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}
