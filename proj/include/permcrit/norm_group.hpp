#pragma once

// The group of norm-preserving index permutations and the census of
// combinatorially independent criteria.
//
// Membership is decided by parity: an element either maps every odd point to
// an odd point (and even to even), or swaps the two parity classes. Those two
// families together have 2 (r!)^2 elements, which is the order of the group
// generated by the odd-odd and even-even transpositions and the global
// transpose, so the two descriptions coincide.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "permcrit/arrows.hpp"
#include "permcrit/permutation.hpp"

namespace permcrit {

enum class ParityKind { preserving, swapping };

/// nullopt if sigma mixes parities.
std::optional<ParityKind> parity_kind(const Permutation &sigma);

/// Raw parity test, no cross-checks.
bool parity_membership(const Permutation &sigma);

/// Parity test, asserted to agree with "canonical key is trivial".
bool is_norm_preserving(const Permutation &sigma);

class NormGroupElement {
public:
  /// nullopt unless sigma is in the group.
  static std::optional<NormGroupElement> from(const Permutation &sigma);

  const Permutation &permutation() const { return sigma_; }
  ParityKind kind() const { return kind_; }

private:
  NormGroupElement(Permutation sigma, ParityKind kind)
      : sigma_(std::move(sigma)), kind_(kind) {}
  Permutation sigma_;
  ParityKind kind_;
};

/// (2k,2l), (2k-1,2l-1) for k < l, and the global transpose.
std::vector<Permutation> norm_group_generators(int subsystems);

constexpr int kMaxFilterSubsystems = 4;
constexpr int kMaxClosureSubsystems = 5;
constexpr int kMaxCensusSubsystems = 8;

/// Filters all of S_2r by parity; r <= 4.
std::set<Permutation> group_elements_by_filter(int subsystems);
/// Breadth-first closure of the generators; r <= 5.
std::set<Permutation> group_elements_by_closure(int subsystems);
/// Closure construction, cross-checked against the filter where it runs.
std::set<Permutation> group_elements(int subsystems);

/// Uniform element: independent shuffles of odd and even points, then the
/// global transpose with probability 1/2.
Permutation random_norm_group_element(int subsystems, std::mt19937_64 &rng);

std::uint64_t binomial(int n, int k);

/// "2R+QT" style: coefficient 1 omitted, "id" when both counts are zero.
std::string type_label(int arrows, int loops);

struct ClassDescriptor {
  CanonicalKey key;
  int arrow_count;
  int loop_count;
  std::string type_label;
  bool trivial;

  int free_count() const {
    return key.subsystems() - 2 * arrow_count - loop_count;
  }
};

ClassDescriptor describe(const CanonicalKey &key);

/// All classes, 1/2 C(2r, r) of them, sorted by (arrows + loops, key).
std::vector<ClassDescriptor> enumerate_classes(int subsystems);

/// Loops on heads ∩ tails; remaining sorted tails paired with remaining
/// sorted heads. Works for unreduced sets as well.
Permutation representative_permutation(const HeadTailSets &sets);
Permutation representative_permutation(const CanonicalKey &key);
ArrowConfiguration representative_configuration(const HeadTailSets &sets);

/// Nontrivial classes grouped by structural type. Flipping maps (a, l, f) to
/// (a, f, l), so types are counted per flip pair {(a,l), (a,f)}.
struct CensusEntry {
  int arrows;      // a
  int loops;       // the smaller loop count of the pair
  int flip_loops;  // the partner's loop count (== loops when self-paired)
  std::string label;
  std::uint64_t count;
};

std::vector<CensusEntry> census_by_type(int subsystems);
std::map<std::string, std::uint64_t> census_map(int subsystems);

} // namespace permcrit
