#include "permcrit/norm_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace permcrit {

namespace {

void check_subsystems(int r, int max, const char *what) {
  if (r < 1)
    throw std::invalid_argument(std::string(what) +
                                ": subsystem count must be positive");
  if (r > max)
    throw std::invalid_argument(std::string(what) + ": r = " +
                                std::to_string(r) + " exceeds the limit " +
                                std::to_string(max));
}

std::vector<int> bits_to_set(unsigned mask, int r) {
  std::vector<int> out;
  for (int k = 0; k < r; ++k)
    if (mask & (1u << k))
      out.push_back(k + 1);
  return out;
}

std::string census_label(int arrows, int loops, int flip_loops) {
  if (loops == flip_loops || arrows == 0)
    return type_label(arrows, loops);
  return type_label(arrows, loops) + "<->" + type_label(arrows, flip_loops);
}

} // namespace

std::optional<ParityKind> parity_kind(const Permutation &sigma) {
  bool preserves = true;
  bool swaps = true;
  for (int x = 1; x <= sigma.degree(); ++x) {
    bool same = (sigma(x) - x) % 2 == 0;
    preserves = preserves && same;
    swaps = swaps && !same;
  }
  if (preserves)
    return ParityKind::preserving;
  if (swaps)
    return ParityKind::swapping;
  return std::nullopt;
}

bool parity_membership(const Permutation &sigma) {
  return parity_kind(sigma).has_value();
}

bool is_norm_preserving(const Permutation &sigma) {
  bool by_parity = parity_membership(sigma);
  bool by_key = canonical_key(sigma).is_trivial();
  if (by_parity != by_key)
    throw std::logic_error("parity test and canonical key disagree on " +
                           sigma.to_string());
  return by_parity;
}

std::optional<NormGroupElement> NormGroupElement::from(const Permutation &sigma) {
  auto kind = parity_kind(sigma);
  if (!kind)
    return std::nullopt;
  return NormGroupElement(sigma, *kind);
}

std::vector<Permutation> norm_group_generators(int subsystems) {
  check_subsystems(subsystems, 1 << 20, "norm_group_generators");
  const int degree = 2 * subsystems;
  std::vector<Permutation> out;
  for (int k = 1; k <= subsystems; ++k) {
    for (int l = k + 1; l <= subsystems; ++l) {
      out.push_back(Permutation::transposition(degree, 2 * k, 2 * l));
      out.push_back(Permutation::transposition(degree, 2 * k - 1, 2 * l - 1));
    }
  }
  out.push_back(Permutation::global_transpose(subsystems));
  return out;
}

std::set<Permutation> group_elements_by_filter(int subsystems) {
  check_subsystems(subsystems, kMaxFilterSubsystems, "group_elements_by_filter");
  std::vector<int> images(2 * subsystems);
  std::iota(images.begin(), images.end(), 1);
  std::set<Permutation> out;
  do {
    Permutation sigma = Permutation::from_images(images);
    if (parity_membership(sigma))
      out.insert(std::move(sigma));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::set<Permutation> group_elements_by_closure(int subsystems) {
  check_subsystems(subsystems, kMaxClosureSubsystems,
                   "group_elements_by_closure");
  const auto generators = norm_group_generators(subsystems);
  std::set<Permutation> seen{Permutation(2 * subsystems)};
  std::deque<Permutation> frontier{Permutation(2 * subsystems)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second)
        frontier.push_back(std::move(next));
    }
  }
  return seen;
}

std::set<Permutation> group_elements(int subsystems) {
  auto closure = group_elements_by_closure(subsystems);
  if (subsystems <= kMaxFilterSubsystems &&
      closure != group_elements_by_filter(subsystems))
    throw std::logic_error("generator closure and parity filter disagree");
  return closure;
}

Permutation random_norm_group_element(int subsystems, std::mt19937_64 &rng) {
  std::vector<int> odd_slots(subsystems), even_slots(subsystems);
  std::iota(odd_slots.begin(), odd_slots.end(), 0);
  std::iota(even_slots.begin(), even_slots.end(), 0);
  std::shuffle(odd_slots.begin(), odd_slots.end(), rng);
  std::shuffle(even_slots.begin(), even_slots.end(), rng);
  std::vector<int> images(2 * subsystems);
  for (int k = 0; k < subsystems; ++k) {
    images[2 * k] = 2 * odd_slots[k] + 1;
    images[2 * k + 1] = 2 * even_slots[k] + 2;
  }
  Permutation sigma = Permutation::from_images(std::move(images));
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1)
    sigma = compose(sigma, Permutation::global_transpose(subsystems));
  return sigma;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i)
    result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

std::string type_label(int arrows, int loops) {
  std::string out;
  if (arrows > 0)
    out += (arrows == 1 ? "" : std::to_string(arrows)) + "R";
  if (loops > 0)
    out += (out.empty() ? "" : "+") +
           (loops == 1 ? std::string() : std::to_string(loops)) + "QT";
  return out.empty() ? "id" : out;
}

ClassDescriptor describe(const CanonicalKey &key) {
  int a = key.sets().arrow_count();
  int l = key.sets().loop_count();
  return ClassDescriptor{key, a, l, type_label(a, l), key.is_trivial()};
}

std::vector<ClassDescriptor> enumerate_classes(int subsystems) {
  check_subsystems(subsystems, kMaxCensusSubsystems, "enumerate_classes");
  const unsigned limit = 1u << subsystems;
  std::set<CanonicalKey> keys;
  for (unsigned h = 0; h < limit; ++h) {
    for (unsigned t = 0; t < limit; ++t) {
      if (std::popcount(h) != std::popcount(t))
        continue;
      keys.insert(CanonicalKey::reduce(HeadTailSets{
          subsystems, bits_to_set(h, subsystems), bits_to_set(t, subsystems)}));
    }
  }
  std::vector<ClassDescriptor> out;
  for (const auto &key : keys)
    out.push_back(describe(key));
  std::stable_sort(out.begin(), out.end(),
                   [](const ClassDescriptor &a, const ClassDescriptor &b) {
                     return a.arrow_count + a.loop_count <
                            b.arrow_count + b.loop_count;
                   });
  return out;
}

ArrowConfiguration representative_configuration(const HeadTailSets &sets) {
  HeadTailSets partner = flip(sets); // validates the sets
  (void)partner;
  std::vector<int> loops = sets.loops();
  std::vector<Arrow> arrows;
  for (int k : loops)
    arrows.push_back(Arrow{k, k});
  std::vector<int> heads, tails;
  std::set_difference(sets.heads.begin(), sets.heads.end(), loops.begin(),
                      loops.end(), std::back_inserter(heads));
  std::set_difference(sets.tails.begin(), sets.tails.end(), loops.begin(),
                      loops.end(), std::back_inserter(tails));
  for (std::size_t i = 0; i < heads.size(); ++i)
    arrows.push_back(Arrow{tails[i], heads[i]});
  return ArrowConfiguration(sets.subsystems, std::move(arrows));
}

Permutation representative_permutation(const HeadTailSets &sets) {
  Permutation sigma = as_permutation(representative_configuration(sets));
  if (canonical_key(sigma) != CanonicalKey::reduce(sets))
    throw std::logic_error("representative does not reproduce its key");
  return sigma;
}

Permutation representative_permutation(const CanonicalKey &key) {
  return representative_permutation(key.sets());
}

std::vector<CensusEntry> census_by_type(int subsystems) {
  std::map<std::pair<int, int>, CensusEntry> grouped;
  for (const auto &c : enumerate_classes(subsystems)) {
    if (c.trivial)
      continue;
    int f = c.free_count();
    int lo = std::min(c.loop_count, f);
    int hi = std::max(c.loop_count, f);
    auto [it, inserted] = grouped.try_emplace(
        {c.arrow_count, lo},
        CensusEntry{c.arrow_count, lo, hi, census_label(c.arrow_count, lo, hi),
                    0});
    ++it->second.count;
  }
  std::vector<CensusEntry> out;
  for (auto &[_, entry] : grouped)
    out.push_back(std::move(entry));
  return out;
}

std::map<std::string, std::uint64_t> census_map(int subsystems) {
  std::map<std::string, std::uint64_t> out;
  for (const auto &e : census_by_type(subsystems))
    out[e.label] = e.count;
  return out;
}

} // namespace permcrit
