#include "permcrit/states.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace permcrit;
using permcrit::testing::hermitian_eigenvalues;
using permcrit::testing::max_abs_diff;
using permcrit::testing::trace_norm_by_gram;

TEST(States, BasisProduct) {
  auto rho = basis_product_state(2, 2, {});
  EXPECT_EQ(rho.entries()(0, 0), Complex(1.0));
  EXPECT_EQ(rho.entries().cwiseAbs().sum(), 1.0);
  auto lifted = basis_product_state(3, 3, {2, 0, 1});
  EXPECT_EQ(lifted.entries()(2 * 9 + 0 * 3 + 1, 19), Complex(1.0));
  EXPECT_THROW(basis_product_state(2, 2, {0, 2}), StateError);
  EXPECT_THROW(basis_product_state(2, 2, {0}), StateError);
}

TEST(States, BellPairOnFirstTwo) {
  auto rho = bell_pair_state(2, 2, 1, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
  EXPECT_LE(max_abs_diff(rho.entries(), expected), 1e-15);
}

TEST(States, BellPairEmbeddedEntrywise) {
  // Phi+ on (1,3) (x) I/d on 2: rows (a, b, c), columns (x, y, z), entry
  // [a == c][x == z][b == y] / d^2.
  for (int d = 2; d <= 3; ++d) {
    auto rho = bell_pair_state(3, d, 1, 3);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
              for (int z = 0; z < d; ++z) {
                double want = (a == c && x == z && b == y) ? 1.0 / (d * d) : 0;
                EXPECT_NEAR(std::abs(rho.at({a, x, b, y, c, z}) - want), 0.0,
                            1e-15);
              }
    EXPECT_TRUE(validate_state(rho).empty());
  }
  EXPECT_EQ(bell_pair_state(3, 2, 3, 1).entries(),
            bell_pair_state(3, 2, 1, 3).entries());
  EXPECT_THROW(bell_pair_state(3, 2, 2, 2), StateError);
  EXPECT_THROW(bell_pair_state(3, 2, 1, 4), StateError);
}

TEST(States, GhzAndMixed) {
  auto ghz = ghz_state(3, 2);
  EXPECT_NEAR(ghz.entries()(0, 7).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz.entries()(7, 7).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz.entries().cwiseAbs().sum(), 2.0, 1e-14);
  auto mixed = maximally_mixed_state(3, 2);
  EXPECT_EQ(mixed.entries(), ComplexMatrix::Identity(8, 8) / 8.0);
}

TEST(States, RandomStatesAreValidAndSeeded) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sep = random_separable_state(2, 3, 4, seed);
    auto gen = random_state(2, 2, seed);
    EXPECT_TRUE(validate_state(sep).empty());
    EXPECT_TRUE(validate_state(gen).empty());
    EXPECT_EQ(sep.entries(), random_separable_state(2, 3, 4, seed).entries());
    EXPECT_EQ(gen.entries(), random_state(2, 2, seed).entries());
  }
  EXPECT_NE(random_state(2, 2, 1).entries(), random_state(2, 2, 2).entries());
  EXPECT_THROW(random_separable_state(2, 2, 0, 1), StateError);
}

TEST(States, SingleTermSeparableIsPureProduct) {
  auto rho = random_separable_state(2, 2, 1, 42);
  Eigen::VectorXd eig = hermitian_eigenvalues(rho.entries());
  EXPECT_NEAR(eig(3), 1.0, 1e-12);
  // Partial transpose of a product state is still a state.
  auto pt = apply_permutation(rho, parse_permutation("(1,2)", 4));
  EXPECT_GT(hermitian_eigenvalues(pt.entries()).minCoeff(), -1e-12);
}

TEST(States, MakeStateDispatch) {
  StateSpec spec;
  spec.kind = parse_state_kind("bell_pair");
  spec.first = 2;
  spec.second = 3;
  EXPECT_EQ(make_state(3, 2, spec).entries(),
            bell_pair_state(3, 2, 2, 3).entries());
  EXPECT_EQ(state_kind_name(StateKind::random_separable), "random_separable");
  EXPECT_THROW(parse_state_kind("werner"), StateError);
  spec.kind = StateKind::maximally_mixed;
  EXPECT_THROW(make_state(7, 4, spec), StateError);
  for (auto kind : {StateKind::basis_product, StateKind::bell_pair,
                    StateKind::ghz, StateKind::maximally_mixed,
                    StateKind::random_separable, StateKind::random_state}) {
    StateSpec s;
    s.kind = kind;
    s.seed = 3;
    s.terms = 2;
    EXPECT_EQ(parse_state_kind(state_kind_name(kind)), kind);
    EXPECT_TRUE(validate_state(make_state(2, 3, s)).empty())
        << state_kind_name(kind);
  }
}

TEST(Detector, ExponentAndValidity) {
  for (int r = 2; r <= 4; ++r)
    for (const auto &cls : enumerate_classes(r)) {
      if (cls.trivial) {
        EXPECT_THROW(detector_state(cls, 2), StateError);
        continue;
      }
      EXPECT_GE(detector_exponent(cls), 1);
      auto rho = detector_state(cls, 2);
      EXPECT_TRUE(validate_state(rho).empty()) << cls.key.to_string();
    }
}

TEST(Detector, NormsForQubitsAndQutrits) {
  for (int d = 2; d <= 3; ++d) {
    int max_r = d == 2 ? 4 : 3;
    for (int r = 2; r <= max_r; ++r)
      for (const auto &cls : enumerate_classes(r)) {
        if (cls.trivial)
          continue;
        auto rho = detector_state(cls, d);
        auto out = apply_permutation(rho, representative_permutation(cls.key));
        double expected = std::pow(d, detector_exponent(cls));
        double oracle = trace_norm_by_gram(out.entries());
        EXPECT_NEAR(trace_norm(out), expected, 1e-9)
            << cls.key.to_string() << " d=" << d;
        EXPECT_NEAR(oracle, expected, 1e-5) << cls.key.to_string();
      }
  }
}

TEST(Detector, ExamplesAtTwoAndThreeQubits) {
  auto classes = enumerate_classes(2);
  for (const auto &cls : classes) {
    if (cls.trivial)
      continue;
    // Both nontrivial classes at r = 2 are detected by Phi+.
    EXPECT_LE(max_abs_diff(detector_state(cls, 2).entries(),
                           bell_pair_state(2, 2, 1, 2).entries()),
              1e-15)
        << cls.type_label;
  }
  for (const auto &cls : enumerate_classes(3)) {
    if (cls.type_label != "R+QT")
      continue;
    auto out = apply_permutation(detector_state(cls, 2),
                                 representative_permutation(cls.key));
    // Flipped to one arrow plus no loops: Phi+ on the arrow, I/2 elsewhere.
    EXPECT_NEAR(trace_norm(out), 2.0, 1e-9);
  }
}

TEST(Detector, RequiresQudit) {
  auto cls = enumerate_classes(2).back();
  EXPECT_THROW(detector_state(cls, 1), StateError);
}
