#include "permcrit/arrows.hpp"
#include "permcrit/norm_group.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <set>

#include "test_util.hpp"

using namespace permcrit;
using permcrit::testing::all_permutations;
using permcrit::testing::random_permutation;

namespace {

Permutation P(const char *text, int degree) {
  return parse_permutation(text, degree);
}

ArrowConfiguration config(int r, std::vector<Arrow> arrows) {
  return ArrowConfiguration(r, std::move(arrows));
}

// Right cosets of S_2r, built from an explicit element list of the group
// rather than any parity rule.
std::vector<std::set<Permutation>> cosets_by_closure(int r) {
  auto group = group_elements_by_closure(r);
  std::set<Permutation> seen;
  std::vector<std::set<Permutation>> blocks;
  for (const auto &sigma : all_permutations(2 * r)) {
    if (seen.count(sigma))
      continue;
    std::set<Permutation> block;
    for (const auto &t : group)
      block.insert(compose(sigma, t));
    seen.insert(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<ArrowConfiguration> all_disjoint_configurations(int r) {
  // Each subsystem is free, a loop, a tail or a head; pair tails with heads
  // in sorted order.
  std::vector<ArrowConfiguration> out;
  std::vector<int> role(r, 0);
  for (;;) {
    std::vector<int> tails, heads;
    std::vector<Arrow> arrows;
    for (int k = 0; k < r; ++k) {
      if (role[k] == 1)
        arrows.push_back({k + 1, k + 1});
      else if (role[k] == 2)
        tails.push_back(k + 1);
      else if (role[k] == 3)
        heads.push_back(k + 1);
    }
    if (tails.size() == heads.size()) {
      for (std::size_t i = 0; i < tails.size(); ++i)
        arrows.push_back({tails[i], heads[i]});
      out.emplace_back(r, arrows);
    }
    int k = 0;
    while (k < r && role[k] == 3)
      role[k++] = 0;
    if (k == r)
      break;
    ++role[k];
  }
  return out;
}

} // namespace

TEST(ArrowConfiguration, ValidAndInvalid) {
  EXPECT_NO_THROW(config(3, {{1, 2}, {2, 3}}));  // chain: valid
  EXPECT_NO_THROW(config(2, {{1, 2}, {2, 1}}));  // closed path: valid
  EXPECT_NO_THROW(config(3, {{1, 1}, {2, 3}}));
  EXPECT_THROW(config(3, {{1, 2}, {1, 3}}), ConfigurationError); // shared tail
  EXPECT_THROW(config(3, {{1, 3}, {2, 3}}), ConfigurationError); // shared head
  EXPECT_THROW(config(2, {{1, 1}, {1, 2}}), ConfigurationError); // touches loop
  EXPECT_THROW(config(2, {{2, 1}, {1, 1}}), ConfigurationError);
  EXPECT_THROW(config(2, {{1, 3}}), ConfigurationError);         // range
  EXPECT_THROW(config(2, {{1, 1}, {1, 1}}), ConfigurationError);
}

TEST(ArrowConfiguration, Disjointness) {
  EXPECT_FALSE(config(3, {{1, 2}, {2, 3}}).is_disjoint());
  EXPECT_FALSE(config(2, {{1, 2}, {2, 1}}).is_disjoint());
  EXPECT_TRUE(config(4, {{1, 2}, {3, 4}}).is_disjoint());
  EXPECT_TRUE(config(3, {{1, 1}, {3, 2}}).is_disjoint());
  EXPECT_TRUE(ArrowConfiguration(3).is_disjoint());
}

TEST(ArrowConfiguration, Rendering) {
  EXPECT_EQ(ArrowConfiguration(2).to_string(), "()");
  EXPECT_EQ(config(6, {{6, 3}, {2, 2}, {4, 1}}).to_string(), "@2,4->1,6->3");
  auto c = config(5, {{4, 1}, {2, 2}});
  EXPECT_EQ(c.heads(), (std::vector<int>{1, 2}));
  EXPECT_EQ(c.tails(), (std::vector<int>{2, 4}));
  EXPECT_EQ(c.loops(), (std::vector<int>{2}));
  EXPECT_EQ(c.free_subsystems(), (std::vector<int>{3, 5}));
}

TEST(Prune, Examples) {
  EXPECT_EQ(prune({{{3, 12, 1, 2, 10, 8}, {4, 5, 6}}}),
            normalized({{{3, 12, 1, 8}, {5, 4}}}));
  EXPECT_TRUE(prune({{{1, 3}}}).cycles.empty());
  EXPECT_EQ(prune({{{1, 2}}}), (CycleDecomposition{{{1, 2}}}));
}

TEST(Prune, OutputAlternatesAndStaysInCoset) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    int degree = 2 * (1 + i % 6);
    auto sigma = random_permutation(degree, rng);
    auto pruned = prune(cycle_decomposition(sigma));
    for (const auto &c : pruned.cycles) {
      EXPECT_EQ(c.size() % 2, 0u);
      for (std::size_t j = 0; j < c.size(); ++j)
        EXPECT_NE(c[j] % 2, c[(j + 1) % c.size()] % 2);
    }
    auto rep = Permutation::from_cycles(pruned, degree);
    EXPECT_TRUE(parity_membership(compose(inverse(rep), sigma)));
  }
}

TEST(Chop, Examples) {
  EXPECT_EQ(chop({{{3, 12, 1, 8}, {5, 4}}}),
            (std::vector<Transposition>{{3, 12}, {1, 8}, {5, 4}}));
  EXPECT_EQ(chop({{{1, 2}}}), (std::vector<Transposition>{{1, 2}}));
  EXPECT_EQ(chop({{{2, 3, 4, 1}}}),
            (std::vector<Transposition>{{2, 3}, {4, 1}}));
  EXPECT_THROW(chop({{{1, 3}}}), std::invalid_argument);
}

TEST(ReadArrows, Dictionary) {
  auto c = read_arrows(6, {{3, 12}, {1, 8}, {5, 4}});
  // (3,12) is 6->2 read as (2*6, 2*2-1); (1,8) is 4->1; (5,4) is 2->3.
  EXPECT_EQ(c.to_string(), "2->3,4->1,6->2");
  EXPECT_EQ(read_arrows(2, {{1, 2}}).to_string(), "@1");
  EXPECT_THROW(read_arrows(2, {{1, 3}}), ConfigurationError);
}

TEST(AsPermutation, Examples) {
  EXPECT_EQ(as_permutation(config(6, {{2, 2}})), P("(3,4)", 12));
  EXPECT_EQ(as_permutation(config(2, {{1, 2}})), P("(2,3)", 4));
  EXPECT_TRUE(as_permutation(ArrowConfiguration(3)).is_identity());
  EXPECT_EQ(as_permutation(config(6, {{2, 2}, {4, 1}, {6, 3}})),
            P("(3,4)(1,8)(5,12)", 12));
}

TEST(ExchangeHeads, Examples) {
  EXPECT_EQ(exchange_heads(config(3, {{1, 2}, {2, 3}}), {1, 2}, {2, 3}),
            config(3, {{1, 3}, {2, 2}}));
  EXPECT_EQ(exchange_heads(config(2, {{1, 2}, {2, 1}}), {1, 2}, {2, 1}),
            config(2, {{1, 1}, {2, 2}}));
  // One loop: the rule's permutation gives 1->3, 2->1.
  EXPECT_EQ(exchange_heads(config(3, {{1, 1}, {2, 3}}), {1, 1}, {2, 3}),
            config(3, {{1, 3}, {2, 1}}));
}

TEST(ExchangeHeads, MatchesRightMultiplier) {
  struct Case {
    int r;
    std::vector<Arrow> arrows;
    Arrow a, b;
  };
  std::vector<Case> cases{{3, {{1, 2}, {2, 3}}, {1, 2}, {2, 3}},
                          {2, {{1, 2}, {2, 1}}, {1, 2}, {2, 1}},
                          {3, {{1, 1}, {2, 3}}, {1, 1}, {2, 3}},
                          {4, {{1, 2}, {3, 4}}, {1, 2}, {3, 4}},
                          {2, {{1, 1}, {2, 2}}, {1, 1}, {2, 2}}};
  const auto group = group_elements_by_closure(4);
  for (const auto &c : cases) {
    auto before = config(c.r, c.arrows);
    auto after = exchange_heads(before, c.a, c.b);
    const int n = 2 * c.r;
    Permutation m = compose(Permutation::transposition(n, 2 * c.a.head - 1,
                                                       2 * c.b.head - 1),
                            Permutation::transposition(n, 2 * c.a.tail,
                                                       2 * c.b.tail));
    EXPECT_EQ(as_permutation(after), compose(as_permutation(before), m))
        << before.to_string();
    if (c.r == 4)
      EXPECT_TRUE(group.count(m));
  }
}

TEST(ExchangeHeads, RejectsMissingArrow) {
  EXPECT_THROW(exchange_heads(config(3, {{1, 2}}), {1, 2}, {2, 3}),
               ConfigurationError);
}

TEST(Flip, Examples) {
  EXPECT_EQ(flip(ArrowConfiguration(2)), config(2, {{1, 1}, {2, 2}}));
  EXPECT_EQ(flip(config(3, {{1, 2}})), config(3, {{2, 1}, {3, 3}}));
  EXPECT_THROW(flip(config(3, {{1, 2}, {2, 3}})), ConfigurationError);
}

TEST(Flip, InvolutionWithoutFixedPointsOnConfigurations) {
  for (int r = 1; r <= 5; ++r) {
    auto configs = all_disjoint_configurations(r);
    for (const auto &c : configs) {
      auto f = flip(c);
      EXPECT_TRUE(f.is_disjoint());
      EXPECT_EQ(flip(f), c) << c.to_string();
      EXPECT_NE(head_tail_sets(f), head_tail_sets(c)) << c.to_string();
      EXPECT_EQ(f.loops(), c.free_subsystems());
      // Same coset: the quotient is in the group (exact parity test).
      EXPECT_TRUE(parity_membership(
          compose(inverse(as_permutation(f)), as_permutation(c))));
    }
  }
}

TEST(NormalForm, Examples) {
  auto table = P("(3,12,1,2,10,8)(4,5,6)", 12);
  auto nf = normal_form(table);
  EXPECT_EQ(nf.to_string(), "@2,4->1,6->3");
  EXPECT_EQ(as_permutation(nf), P("(3,4)(1,8)(5,12)", 12));
  EXPECT_TRUE(normal_form(Permutation(6)).empty());
  for (int r = 1; r <= 5; ++r) {
    std::vector<Arrow> loops;
    for (int k = 1; k <= r; ++k)
      loops.push_back({k, k});
    EXPECT_EQ(normal_form(Permutation::global_transpose(r)), config(r, loops));
  }
}

TEST(NormalForm, DisjointAndInCoset) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    int r = 1 + i % 6;
    auto sigma = random_permutation(2 * r, rng);
    auto nf = normal_form(sigma);
    EXPECT_TRUE(nf.is_disjoint()) << sigma.to_string();
    EXPECT_TRUE(parity_membership(compose(inverse(as_permutation(nf)), sigma)));
    // Pure arrows pair sorted tails with sorted heads.
    std::vector<Arrow> pure;
    for (const auto &a : nf.arrows())
      if (!a.is_loop())
        pure.push_back(a);
    for (std::size_t j = 1; j < pure.size(); ++j)
      EXPECT_LT(pure[j - 1].head, pure[j].head);
  }
}

TEST(Canonicalize, WorkedExampleTrace) {
  auto result = canonicalize(P("(3,12,1,2,10,8)(4,5,6)", 12));
  ASSERT_GE(result.steps.size(), 3u);
  EXPECT_EQ(result.steps[0].rule, "input");
  EXPECT_EQ(result.steps[1].rule, "prune");
  EXPECT_EQ(result.steps[2].rule, "chop");
  EXPECT_EQ(result.normal_form.to_string(), "@2,4->1,6->3");
  EXPECT_EQ(result.key.to_string(), "H={1,2,3} T={2,4,6}");
  // Every step's multiplier is an explicit group element (r = 6 is outside
  // closure range, so check that the recorded products chain up instead).
  for (std::size_t i = 1; i < result.steps.size(); ++i) {
    const auto &prev = result.steps[i - 1].permutation;
    const auto &step = result.steps[i];
    EXPECT_EQ(compose(prev, step.multiplier), step.permutation) << step.rule;
    EXPECT_TRUE(parity_membership(step.multiplier)) << step.rule;
  }
}

TEST(Canonicalize, MultipliersLieInClosureSet) {
  const auto group = group_elements_by_closure(4);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto sigma = random_permutation(8, rng);
    auto result = canonicalize(sigma);
    EXPECT_EQ(result.steps.front().permutation, sigma);
    for (std::size_t j = 1; j < result.steps.size(); ++j) {
      const auto &step = result.steps[j];
      EXPECT_TRUE(group.count(step.multiplier))
          << sigma.to_string() << " step " << step.rule;
      EXPECT_EQ(compose(result.steps[j - 1].permutation, step.multiplier),
                step.permutation);
    }
    EXPECT_EQ(result.key, canonical_key(sigma));
  }
}

TEST(CanonicalKey, Examples) {
  EXPECT_TRUE(canonical_key(Permutation(4)).is_trivial());
  EXPECT_EQ(canonical_key(Permutation(4)).to_string(), "H={} T={}");
  auto qt = canonical_key(P("(1,2)", 4));
  EXPECT_EQ(qt.heads(), (std::vector<int>{1}));
  EXPECT_EQ(qt.tails(), (std::vector<int>{1}));
  // (2,3) and (1,4) share a key; the smaller of {1->2} and its flip {2->1}.
  auto a = canonical_key(P("(2,3)", 4));
  auto b = canonical_key(P("(1,4)", 4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "H={1} T={2}");
}

TEST(CanonicalKey, Reduce) {
  HeadTailSets all_loops{3, {1, 2, 3}, {1, 2, 3}};
  EXPECT_TRUE(CanonicalKey::reduce(all_loops).is_trivial());
  HeadTailSets bad{3, {1, 2}, {1}};
  EXPECT_THROW(CanonicalKey::reduce(bad), ConfigurationError);
  EXPECT_EQ(flip(HeadTailSets{3, {2}, {1}}), (HeadTailSets{3, {1, 3}, {2, 3}}));
}

TEST(CanonicalKey, FlipFixedPointFreeOnAllSetPairs) {
  for (int r = 1; r <= 6; ++r) {
    int count = 0;
    for (unsigned h = 0; h < (1u << r); ++h)
      for (unsigned t = 0; t < (1u << r); ++t) {
        if (std::popcount(h) != std::popcount(t))
          continue;
        HeadTailSets sets{r, {}, {}};
        for (int k = 0; k < r; ++k) {
          if (h >> k & 1u)
            sets.heads.push_back(k + 1);
          if (t >> k & 1u)
            sets.tails.push_back(k + 1);
        }
        auto f = flip(sets);
        EXPECT_NE(f, sets);
        EXPECT_EQ(flip(f), sets);
        ++count;
      }
    EXPECT_EQ(static_cast<std::uint64_t>(count), binomial(2 * r, r));
  }
}

TEST(CanonicalKey, ConstantOnCosets) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 500; ++i) {
    int r = 1 + i % 4;
    auto sigma = random_permutation(2 * r, rng);
    auto t = random_norm_group_element(r, rng);
    EXPECT_EQ(canonical_key(sigma), canonical_key(compose(sigma, t)));
    EXPECT_TRUE(equivalent(sigma, compose(sigma, t)));
  }
}

TEST(CanonicalKey, SeparatesCosetsExhaustively) {
  for (int r = 1; r <= 3; ++r) {
    auto blocks = cosets_by_closure(r);
    EXPECT_EQ(blocks.size(), binomial(2 * r, r) / 2);
    std::map<CanonicalKey, std::size_t> owner;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::set<CanonicalKey> keys;
      for (const auto &sigma : blocks[b])
        keys.insert(canonical_key(sigma));
      ASSERT_EQ(keys.size(), 1u) << "coset " << b << " at r=" << r;
      EXPECT_TRUE(owner.emplace(*keys.begin(), b).second)
          << "two cosets share key " << keys.begin()->to_string();
    }
  }
}

TEST(CanonicalKey, DistinctKeyCount) {
  const std::map<int, std::size_t> expected{{2, 3}, {3, 10}, {4, 35}};
  for (auto [r, count] : expected) {
    std::set<CanonicalKey> keys;
    for (const auto &sigma : all_permutations(2 * r))
      keys.insert(canonical_key(sigma));
    EXPECT_EQ(keys.size(), count) << "r=" << r;
  }
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(P("(2,3)", 4), P("(1,4)", 4)));
  EXPECT_FALSE(equivalent(P("(1,2)", 4), P("(2,3)", 4)));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    int r = 1 + i % 5;
    auto sigma = random_permutation(2 * r, rng);
    auto t = random_norm_group_element(r, rng);
    EXPECT_TRUE(equivalent(sigma, compose(sigma, t)));
  }
}

TEST(ArrowsEdgeCases, SingleSubsystem) {
  EXPECT_TRUE(canonical_key(Permutation(2)).is_trivial());
  EXPECT_TRUE(canonical_key(P("(1,2)", 2)).is_trivial());
  EXPECT_TRUE(equivalent(Permutation(2), P("(1,2)", 2)));
  EXPECT_EQ(normal_form(P("(1,2)", 2)).to_string(), "@1");
}
