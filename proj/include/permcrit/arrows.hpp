#pragma once

// Arrow configurations and the rewrite system that reduces any permutation
// of {1, ..., 2r} to a disjoint configuration in the same right coset of the
// norm-preserving group.
//
// Dictionary between arrows and transpositions:
//   arrow t->h (t != h)   <->  (2t, 2h-1)
//   loop  @k  (t = h = k) <->  (2k-1, 2k)
// so every transposition pairing an even point with an odd point is exactly
// one arrow or loop.

#include <string>
#include <utility>
#include <vector>

#include "permcrit/permutation.hpp"

namespace permcrit {

class ConfigurationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  int tail;
  int head;

  bool is_loop() const { return tail == head; }
  auto operator<=>(const Arrow &) const = default;
};

/// A valid configuration: no shared heads, no shared tails, nothing touches a
/// loop. Arrows are kept sorted by tail.
class ArrowConfiguration {
public:
  explicit ArrowConfiguration(int subsystems);
  ArrowConfiguration(int subsystems, std::vector<Arrow> arrows);

  int subsystems() const { return r_; }
  const std::vector<Arrow> &arrows() const { return arrows_; }
  bool empty() const { return arrows_.empty(); }
  bool contains(const Arrow &a) const;

  /// No subsystem is the head of one arrow and the tail of another.
  bool is_disjoint() const;

  std::vector<int> heads() const; // loops included
  std::vector<int> tails() const; // loops included
  std::vector<int> loops() const;
  std::vector<int> free_subsystems() const;

  /// "@k" for loops, "t->h" for arrows, comma separated, "()" if empty.
  std::string to_string() const;

  bool operator==(const ArrowConfiguration &) const = default;

private:
  int r_;
  std::vector<Arrow> arrows_;
};

/// Head and tail sets of a disjoint configuration, both sorted. Not
/// necessarily flip-reduced.
struct HeadTailSets {
  int subsystems = 0;
  std::vector<int> heads;
  std::vector<int> tails;

  std::vector<int> loops() const;  // heads ∩ tails
  int arrow_count() const;         // |heads \ tails|
  int loop_count() const;
  int free_count() const;

  auto operator<=>(const HeadTailSets &) const = default;
};

/// One key per right coset. Ordered by (heads, tails).
class CanonicalKey {
public:
  /// Keeps the lexicographically smaller of sets and flip(sets).
  static CanonicalKey reduce(const HeadTailSets &sets);

  int subsystems() const { return sets_.subsystems; }
  const HeadTailSets &sets() const { return sets_; }
  const std::vector<int> &heads() const { return sets_.heads; }
  const std::vector<int> &tails() const { return sets_.tails; }
  bool is_trivial() const { return sets_.heads.empty(); }

  /// "H={1,3} T={2,3}"
  std::string to_string() const;

  auto operator<=>(const CanonicalKey &) const = default;

private:
  explicit CanonicalKey(HeadTailSets sets) : sets_(std::move(sets)) {}
  HeadTailSets sets_;
};

using Transposition = std::pair<int, int>;

/// Rule 1: removes n1 from every cyclically adjacent pair (n1, n2) of equal
/// parity, scanning for the leftmost pair and repeating to a fixpoint. Output
/// cycles are normalized and length-1 cycles dropped.
CycleDecomposition prune(const CycleDecomposition &cycles);

/// Rule 2: (n1,p1,...,nk,pk) -> (n1,p1)...(nk,pk), pairing from the first
/// point as written. Throws if a cycle is not strictly alternating in parity.
std::vector<Transposition> chop(const CycleDecomposition &cycles);

/// Reads even/odd transpositions as arrows.
ArrowConfiguration read_arrows(int subsystems,
                               const std::vector<Transposition> &pairs);

/// Rule 3: (t1->h1), (t2->h2) become (t1->h2), (t2->h1). Equivalent to
/// right-multiplying by (2h1-1, 2h2-1)(2t1, 2t2).
ArrowConfiguration exchange_heads(const ArrowConfiguration &config,
                                  const Arrow &a, const Arrow &b);

/// Rule 4 on a disjoint configuration: reverses arrows, drops loops, puts a
/// loop on every free subsystem.
ArrowConfiguration flip(const ArrowConfiguration &config);
HeadTailSets flip(const HeadTailSets &sets);

HeadTailSets head_tail_sets(const ArrowConfiguration &config);

/// Product of the configuration's transpositions. Disjoint configurations
/// give commuting factors; chained ones are applied in ascending tail order.
Permutation as_permutation(const ArrowConfiguration &config);

/// Disjoint configuration whose permutation lies in the right coset of sigma.
/// Pure arrows pair sorted tails with sorted heads.
ArrowConfiguration normal_form(const Permutation &sigma);

CanonicalKey canonical_key(const Permutation &sigma);

/// Same right coset. Both the key comparison and the parity membership test
/// on inverse(tau)*sigma are evaluated; disagreement throws std::logic_error.
bool equivalent(const Permutation &sigma, const Permutation &tau);

/// One row of a canonicalization trace.
struct RewriteStep {
  std::string rule;        // "input", "prune", "chop", "exchange-heads", ...
  std::string description; // rendering of the intermediate object
  Permutation permutation; // current representative
  Permutation multiplier;  // right factor applied in this step (in the group)
};

struct Canonicalization {
  std::vector<RewriteStep> steps;
  ArrowConfiguration normal_form;
  CanonicalKey key;
};

/// Full derivation: cycles, prune, chop, arrows, head exchanges until
/// disjoint, re-pairing, key. Every multiplier is checked for membership in
/// the norm-preserving group.
Canonicalization canonicalize(const Permutation &sigma);

} // namespace permcrit
