#include "permcrit/arrows.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permcrit/norm_group.hpp"

namespace permcrit {

namespace {

bool same_parity(int a, int b) { return (a - b) % 2 == 0; }

std::string join(const std::vector<int> &values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

std::string format_pairs(const std::vector<Transposition> &pairs) {
  if (pairs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &[a, b] : pairs)
    out << '(' << a << ',' << b << ')';
  return out.str();
}

void check_sorted_subset(const std::vector<int> &values, int r,
                         const char *what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > r)
      throw ConfigurationError(std::string(what) + " entry " +
                               std::to_string(values[i]) + " out of range");
    if (i > 0 && values[i - 1] >= values[i])
      throw ConfigurationError(std::string(what) +
                               " must be sorted and duplicate-free");
  }
}

std::vector<int> set_difference(const std::vector<int> &a,
                                 const std::vector<int> &b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int> &a,
                           const std::vector<int> &b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int> &a,
                                  const std::vector<int> &b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> complement(const std::vector<int> &a, int r) {
  std::vector<int> out;
  for (int k = 1; k <= r; ++k)
    if (!std::binary_search(a.begin(), a.end(), k))
      out.push_back(k);
  return out;
}

Transposition transposition_of(const Arrow &a) {
  if (a.is_loop())
    return {2 * a.tail - 1, 2 * a.tail};
  return {2 * a.tail, 2 * a.head - 1};
}

// Records each rewrite and checks that its right multiplier is norm
// preserving.
class Derivation {
public:
  Derivation(const Permutation &sigma, std::vector<RewriteStep> *trace)
      : current_(sigma), trace_(trace) {
    if (trace_)
      trace_->push_back(RewriteStep{"input", sigma.to_string(), sigma,
                                    Permutation(sigma.degree())});
  }

  void step(const char *rule, const Permutation &next,
            const std::string &description) {
    Permutation multiplier = compose(inverse(current_), next);
    if (!parity_membership(multiplier))
      throw std::logic_error(std::string("rewrite step '") + rule +
                             "' left the coset: multiplier " +
                             multiplier.to_string());
    if (trace_)
      trace_->push_back(RewriteStep{rule, description, next, multiplier});
    current_ = next;
  }

private:
  Permutation current_;
  std::vector<RewriteStep> *trace_;
};

ArrowConfiguration reduce_to_normal_form(const Permutation &sigma,
                                         std::vector<RewriteStep> *trace) {
  const int degree = sigma.degree();
  const int r = sigma.subsystems();
  Derivation derivation(sigma, trace);

  CycleDecomposition pruned = prune(cycle_decomposition(sigma));
  derivation.step("prune", Permutation::from_cycles(pruned, degree),
                  format_cycles(pruned));

  std::vector<Transposition> pairs = chop(pruned);
  ArrowConfiguration config = read_arrows(r, pairs);
  derivation.step("chop", as_permutation(config),
                  format_pairs(pairs) + "  " + config.to_string());

  // Collapse chains: the lowest-tail arrow whose head starts another arrow
  // takes over that arrow's head, leaving a loop behind.
  while (true) {
    const auto &arrows = config.arrows();
    const Arrow *first = nullptr;
    const Arrow *second = nullptr;
    for (const Arrow &a : arrows) {
      if (a.is_loop())
        continue;
      auto next = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow &b) {
        return !b.is_loop() && b.tail == a.head;
      });
      if (next != arrows.end()) {
        first = &a;
        second = &*next;
        break;
      }
    }
    if (!first)
      break;
    config = exchange_heads(config, *first, *second);
    derivation.step("exchange-heads", as_permutation(config),
                    config.to_string());
  }

  // Pair sorted tails with sorted heads.
  while (true) {
    std::vector<Arrow> pure;
    for (const Arrow &a : config.arrows())
      if (!a.is_loop())
        pure.push_back(a);
    std::vector<int> heads;
    for (const Arrow &a : pure)
      heads.push_back(a.head);
    std::sort(heads.begin(), heads.end());
    std::size_t i = 0;
    while (i < pure.size() && pure[i].head == heads[i])
      ++i;
    if (i == pure.size())
      break;
    auto other = std::find_if(pure.begin(), pure.end(), [&](const Arrow &b) {
      return b.head == heads[i];
    });
    config = exchange_heads(config, pure[i], *other);
    derivation.step("exchange-heads", as_permutation(config),
                    config.to_string());
  }
  return config;
}

} // namespace

// ---------------------------------------------------------------------------
// ArrowConfiguration

ArrowConfiguration::ArrowConfiguration(int subsystems)
    : ArrowConfiguration(subsystems, {}) {}

ArrowConfiguration::ArrowConfiguration(int subsystems, std::vector<Arrow> arrows)
    : r_(subsystems), arrows_(std::move(arrows)) {
  if (r_ < 1)
    throw ConfigurationError("subsystem count must be positive");
  // Valid exactly when the underlying transpositions are point-disjoint.
  std::vector<bool> used(2 * r_ + 1, false);
  for (const Arrow &a : arrows_) {
    if (a.tail < 1 || a.tail > r_ || a.head < 1 || a.head > r_)
      throw ConfigurationError("arrow " + std::to_string(a.tail) + "->" +
                               std::to_string(a.head) + " out of range 1.." +
                               std::to_string(r_));
    auto [p, q] = transposition_of(a);
    if (used[p] || used[q])
      throw ConfigurationError(
          "invalid configuration: arrow " + std::to_string(a.tail) + "->" +
          std::to_string(a.head) +
          " shares a head or tail with another arrow or touches a loop");
    used[p] = used[q] = true;
  }
  std::sort(arrows_.begin(), arrows_.end());
}

bool ArrowConfiguration::contains(const Arrow &a) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), a);
}

bool ArrowConfiguration::is_disjoint() const {
  std::vector<int> touched(r_ + 1, 0);
  for (const Arrow &a : arrows_) {
    ++touched[a.tail];
    if (!a.is_loop())
      ++touched[a.head];
  }
  return std::all_of(touched.begin(), touched.end(),
                     [](int n) { return n <= 1; });
}

std::vector<int> ArrowConfiguration::heads() const {
  std::vector<int> out;
  for (const Arrow &a : arrows_)
    out.push_back(a.head);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ArrowConfiguration::tails() const {
  std::vector<int> out;
  for (const Arrow &a : arrows_)
    out.push_back(a.tail);
  return out; // arrows are sorted by tail
}

std::vector<int> ArrowConfiguration::loops() const {
  std::vector<int> out;
  for (const Arrow &a : arrows_)
    if (a.is_loop())
      out.push_back(a.tail);
  return out;
}

std::vector<int> ArrowConfiguration::free_subsystems() const {
  return complement(set_union(heads(), tails()), r_);
}

std::string ArrowConfiguration::to_string() const {
  if (arrows_.empty())
    return "()";
  std::ostringstream out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow &a = arrows_[i];
    out << (i ? "," : "");
    if (a.is_loop())
      out << '@' << a.tail;
    else
      out << a.tail << "->" << a.head;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// HeadTailSets / CanonicalKey

std::vector<int> HeadTailSets::loops() const {
  return set_intersection(heads, tails);
}

int HeadTailSets::arrow_count() const {
  return static_cast<int>(heads.size()) - loop_count();
}

int HeadTailSets::loop_count() const {
  return static_cast<int>(loops().size());
}

int HeadTailSets::free_count() const {
  return subsystems - 2 * arrow_count() - loop_count();
}

CanonicalKey CanonicalKey::reduce(const HeadTailSets &sets) {
  HeadTailSets partner = flip(sets);
  if (std::tie(partner.heads, partner.tails) <
      std::tie(sets.heads, sets.tails))
    return CanonicalKey(std::move(partner));
  return CanonicalKey(sets);
}

std::string CanonicalKey::to_string() const {
  return "H=" + join(sets_.heads) + " T=" + join(sets_.tails);
}

// ---------------------------------------------------------------------------
// Rules

CycleDecomposition prune(const CycleDecomposition &cycles) {
  CycleDecomposition out;
  for (std::vector<int> cycle : cycles.cycles) {
    bool changed = true;
    while (changed && cycle.size() >= 2) {
      changed = false;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::size_t j = (i + 1) % cycle.size();
        if (same_parity(cycle[i], cycle[j])) {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    if (cycle.size() >= 2)
      out.cycles.push_back(std::move(cycle));
  }
  return normalized(std::move(out));
}

std::vector<Transposition> chop(const CycleDecomposition &cycles) {
  std::vector<Transposition> out;
  for (const auto &cycle : cycles.cycles) {
    if (cycle.size() < 2 || cycle.size() % 2 != 0)
      throw ConfigurationError("chop needs a pruned permutation: cycle " +
                               format_cycles(CycleDecomposition{{cycle}}) +
                               " has odd length");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (same_parity(cycle[i], cycle[(i + 1) % cycle.size()]))
        throw ConfigurationError(
            "chop needs a pruned permutation: cycle " +
            format_cycles(CycleDecomposition{{cycle}}) +
            " has adjacent points of equal parity");
    for (std::size_t i = 0; i < cycle.size(); i += 2)
      out.emplace_back(cycle[i], cycle[i + 1]);
  }
  return out;
}

ArrowConfiguration read_arrows(int subsystems,
                               const std::vector<Transposition> &pairs) {
  std::vector<Arrow> arrows;
  for (auto [a, b] : pairs) {
    if (same_parity(a, b))
      throw ConfigurationError("transposition (" + std::to_string(a) + "," +
                               std::to_string(b) +
                               ") does not pair an even and an odd point");
    int even = a % 2 == 0 ? a : b;
    int odd = a % 2 == 0 ? b : a;
    arrows.push_back(Arrow{even / 2, (odd + 1) / 2});
  }
  return ArrowConfiguration(subsystems, std::move(arrows));
}

ArrowConfiguration exchange_heads(const ArrowConfiguration &config,
                                  const Arrow &a, const Arrow &b) {
  if (!config.contains(a) || !config.contains(b))
    throw ConfigurationError("exchange_heads: arrow not in configuration");
  if (a == b)
    throw ConfigurationError("exchange_heads needs two distinct arrows");
  std::vector<Arrow> arrows;
  for (const Arrow &x : config.arrows())
    if (x != a && x != b)
      arrows.push_back(x);
  arrows.push_back(Arrow{a.tail, b.head});
  arrows.push_back(Arrow{b.tail, a.head});
  return ArrowConfiguration(config.subsystems(), std::move(arrows));
}

ArrowConfiguration flip(const ArrowConfiguration &config) {
  if (!config.is_disjoint())
    throw ConfigurationError("flip needs a disjoint configuration, got " +
                             config.to_string());
  std::vector<Arrow> arrows;
  for (const Arrow &a : config.arrows())
    if (!a.is_loop())
      arrows.push_back(Arrow{a.head, a.tail});
  for (int k : config.free_subsystems())
    arrows.push_back(Arrow{k, k});
  return ArrowConfiguration(config.subsystems(), std::move(arrows));
}

HeadTailSets flip(const HeadTailSets &sets) {
  const int r = sets.subsystems;
  check_sorted_subset(sets.heads, r, "heads");
  check_sorted_subset(sets.tails, r, "tails");
  if (sets.heads.size() != sets.tails.size())
    throw ConfigurationError("head and tail sets must have equal size");
  std::vector<int> loops = set_intersection(sets.heads, sets.tails);
  std::vector<int> free = complement(set_union(sets.heads, sets.tails), r);
  HeadTailSets out;
  out.subsystems = r;
  out.heads = set_union(set_difference(sets.tails, loops), free);
  out.tails = set_union(set_difference(sets.heads, loops), free);
  return out;
}

HeadTailSets head_tail_sets(const ArrowConfiguration &config) {
  if (!config.is_disjoint())
    throw ConfigurationError("head/tail sets need a disjoint configuration");
  return HeadTailSets{config.subsystems(), config.heads(), config.tails()};
}

Permutation as_permutation(const ArrowConfiguration &config) {
  Permutation result(2 * config.subsystems());
  for (const Arrow &a : config.arrows()) {
    auto [p, q] = transposition_of(a);
    result = compose(result, Permutation::transposition(result.degree(), p, q));
  }
  return result;
}

ArrowConfiguration normal_form(const Permutation &sigma) {
  return reduce_to_normal_form(sigma, nullptr);
}

CanonicalKey canonical_key(const Permutation &sigma) {
  return CanonicalKey::reduce(head_tail_sets(normal_form(sigma)));
}

bool equivalent(const Permutation &sigma, const Permutation &tau) {
  if (sigma.degree() != tau.degree())
    throw PermutationError("degree mismatch: " +
                           std::to_string(sigma.degree()) + " vs " +
                           std::to_string(tau.degree()));
  bool by_key = canonical_key(sigma) == canonical_key(tau);
  bool by_parity = parity_membership(compose(inverse(tau), sigma));
  if (by_key != by_parity)
    throw std::logic_error("canonical keys and parity test disagree for " +
                           sigma.to_string() + " and " + tau.to_string());
  return by_key;
}

Canonicalization canonicalize(const Permutation &sigma) {
  std::vector<RewriteStep> steps;
  ArrowConfiguration config = reduce_to_normal_form(sigma, &steps);
  HeadTailSets sets = head_tail_sets(config);
  CanonicalKey key = CanonicalKey::reduce(sets);
  if (key.sets() != sets) {
    ArrowConfiguration flipped = flip(config);
    Permutation before = steps.back().permutation;
    Permutation after = as_permutation(flipped);
    Permutation multiplier = compose(inverse(before), after);
    if (!parity_membership(multiplier))
      throw std::logic_error("flip left the coset");
    steps.push_back(
        RewriteStep{"flip", flipped.to_string(), after, multiplier});
  }
  return Canonicalization{std::move(steps), std::move(config), std::move(key)};
}

} // namespace permcrit
