#include "permcrit/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "permcrit/arrows.hpp"
#include "permcrit/criteria.hpp"
#include "permcrit/density_matrix.hpp"
#include "permcrit/norm_group.hpp"
#include "permcrit/states.hpp"

namespace permcrit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<HeadTailSets> all_head_tail_sets(int r) {
  std::vector<HeadTailSets> out;
  for (unsigned h = 0; h < (1u << r); ++h)
    for (unsigned t = 0; t < (1u << r); ++t) {
      if (std::popcount(h) != std::popcount(t))
        continue;
      HeadTailSets s{r, {}, {}};
      for (int k = 0; k < r; ++k) {
        if (h & (1u << k))
          s.heads.push_back(k + 1);
        if (t & (1u << k))
          s.tails.push_back(k + 1);
      }
      out.push_back(std::move(s));
    }
  return out;
}

Permutation random_permutation(int degree, std::mt19937_64 &rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::string format_map(const std::map<std::string, std::uint64_t> &m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto &[k, v] : m) {
    out << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  out << '}';
  return out.str();
}

// Each check fills `detail` and returns pass/fail; timing is added by the
// wrapper and compared against `time_limit` when positive.
AcceptanceCheck make_check(int id, std::string name, double time_limit,
                           std::function<bool(std::ostringstream &)> body) {
  return AcceptanceCheck{
      id, name, [=]() {
        std::ostringstream detail;
        auto start = Clock::now();
        bool ok = false;
        try {
          ok = body(detail);
        } catch (const std::exception &e) {
          detail << "exception: " << e.what();
          ok = false;
        }
        double elapsed = seconds_since(start);
        if (time_limit > 0 && elapsed >= time_limit) {
          detail << "; runtime " << elapsed << " s exceeds " << time_limit
                 << " s";
          ok = false;
        }
        return AcceptanceResult{id, name, ok, detail.str(), elapsed};
      }};
}

bool coset_counts(std::ostringstream &detail) {
  const std::map<int, std::size_t> expected{{2, 3}, {3, 10}, {4, 35}};
  bool ok = true;
  for (auto [r, count] : expected) {
    std::set<CanonicalKey> keys;
    for (const auto &sigma : all_permutations(2 * r))
      keys.insert(canonical_key(sigma));
    detail << "r=" << r << ": " << keys.size() << " keys (expected " << count
           << "); ";
    ok = ok && keys.size() == count;
  }
  return ok;
}

bool group_order(std::ostringstream &detail) {
  const std::map<int, std::size_t> expected{{2, 8}, {3, 72}, {4, 1152}};
  bool ok = true;
  for (auto [r, order] : expected) {
    auto filtered = group_elements_by_filter(r);
    auto closure = group_elements_by_closure(r);
    bool same = filtered == closure;
    detail << "r=" << r << ": filter " << filtered.size() << ", closure "
           << closure.size() << (same ? " (identical)" : " (DIFFER)") << "; ";
    ok = ok && same && filtered.size() == order;
  }
  return ok;
}

bool coset_soundness(std::ostringstream &detail) {
  bool ok = true;
  for (int r = 1; r <= 3; ++r) {
    auto perms = all_permutations(2 * r);
    std::vector<CanonicalKey> keys;
    keys.reserve(perms.size());
    for (const auto &p : perms)
      keys.push_back(canonical_key(p));
    std::vector<Permutation> inverses;
    for (const auto &p : perms)
      inverses.push_back(inverse(p));
    std::size_t checks = 0, mismatches = 0;
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = 0; j < perms.size(); ++j) {
        bool same_key = keys[i] == keys[j];
        bool member = parity_membership(compose(inverses[j], perms[i]));
        ++checks;
        if (same_key != member)
          ++mismatches;
      }
    detail << "r=" << r << ": " << checks << " pairs, " << mismatches
           << " mismatches; ";
    ok = ok && mismatches == 0;
  }
  return ok;
}

bool worked_example(std::ostringstream &detail) {
  auto a = canonical_key(parse_permutation("(3,12,1,2,10,8)(4,5,6)", 12));
  auto b = canonical_key(parse_permutation("(3,4)(1,8)(5,12)", 12));
  detail << a.to_string() << " vs " << b.to_string();
  return a == b;
}

bool census(std::ostringstream &detail) {
  const std::map<int, std::map<std::string, std::uint64_t>> expected{
      {2, {{"QT", 1}, {"R", 1}}},
      {3, {{"QT", 3}, {"R<->R+QT", 6}}},
      {4, {{"QT", 4}, {"2QT", 3}, {"R<->R+2QT", 12}, {"R+QT", 12}, {"2R", 3}}},
  };
  const std::map<int, std::uint64_t> totals{{2, 2}, {3, 9}, {4, 34}};
  bool ok = true;
  for (const auto &[r, want] : expected) {
    auto got = census_map(r);
    std::uint64_t total = 0;
    for (const auto &[_, n] : got)
      total += n;
    detail << "r=" << r << ": " << format_map(got) << " total " << total
           << "; ";
    ok = ok && got == want && total == totals.at(r) &&
         total == binomial(2 * r, r) / 2 - 1;
  }
  return ok;
}

bool norm_preservation(std::ostringstream &detail) {
  double worst = 0.0;
  std::size_t evaluations = 0;
  for (int r = 2; r <= 3; ++r) {
    std::vector<DensityMatrix> ops;
    std::vector<double> norms;
    for (int s = 0; s < 20; ++s) {
      ops.push_back(random_operator(r, 2, 1000 + 31 * r + s));
      norms.push_back(trace_norm(ops.back()));
    }
    for (const auto &t : group_elements(r))
      for (std::size_t s = 0; s < ops.size(); ++s) {
        double ratio = trace_norm(apply_permutation(ops[s], t)) / norms[s];
        worst = std::max(worst, std::abs(ratio - 1.0));
        ++evaluations;
      }
  }
  detail << evaluations << " evaluations, max |ratio - 1| = " << worst;
  return worst < 1e-9;
}

bool separability_bound(std::ostringstream &detail) {
  std::mt19937_64 rng(20240607);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    int r = 2 + static_cast<int>(rng() % 2);
    int d = 2 + static_cast<int>(rng() % 2);
    int terms = 1 + static_cast<int>(rng() % 10);
    auto rho = random_separable_state(r, d, terms, rng());
    EvaluationOptions options;
    options.seed = static_cast<std::uint64_t>(s);
    auto report = evaluate_criteria(rho, options);
    worst = std::max(worst, report.max_norm);
  }
  detail << "100 states, largest class norm " << std::setprecision(15)
         << worst;
  return worst <= 1.0 + 1e-9;
}

bool detection_witnesses(std::ostringstream &detail) {
  bool ok = true;
  for (int r = 2; r <= 4; ++r) {
    int count = 0;
    double worst = 0.0;
    for (const auto &cls : enumerate_classes(r)) {
      if (cls.trivial)
        continue;
      auto rho = detector_state(cls, 2);
      require_state(rho);
      double norm =
          trace_norm(apply_permutation(rho, representative_permutation(cls.key)));
      double expected = std::pow(2.0, detector_exponent(cls));
      worst = std::max(worst, std::abs(norm - expected));
      ok = ok && std::abs(norm - expected) < 1e-9 && norm > 1.0;
      ++count;
    }
    detail << "r=" << r << ": " << count << " detectors, max deviation "
           << worst << "; ";
  }
  return ok;
}

bool bipartite_anchors(std::ostringstream &detail) {
  auto bell = bell_pair_state(2, 2, 1, 2);
  auto mixed = maximally_mixed_state(2, 2);
  auto qt = parse_permutation("(1,2)", 4);
  auto realign = parse_permutation("(2,3)", 4);
  double bell_qt = trace_norm(apply_permutation(bell, qt));
  double bell_r = trace_norm(apply_permutation(bell, realign));
  double mixed_qt = trace_norm(apply_permutation(mixed, qt));
  double mixed_r = trace_norm(apply_permutation(mixed, realign));
  detail << std::setprecision(15) << "Bell QT " << bell_qt << ", Bell R "
         << bell_r << ", I/4 QT " << mixed_qt << ", I/4 R " << mixed_r;
  return std::abs(bell_qt - 2.0) <= 1e-9 && std::abs(bell_r - 2.0) <= 1e-9 &&
         std::abs(mixed_qt - 1.0) <= 1e-9 && std::abs(mixed_r - 0.5) <= 1e-9;
}

bool structural_properties(std::ostringstream &detail) {
  bool ok = true;

  int pairs = 0, fixed = 0, non_involutive = 0;
  for (int r = 1; r <= 6; ++r)
    for (const auto &s : all_head_tail_sets(r)) {
      auto f = flip(s);
      ++pairs;
      fixed += (f == s);
      non_involutive += (flip(f) != s);
    }
  detail << "flip: " << pairs << " (H,T) pairs, " << fixed << " fixed, "
         << non_involutive << " non-involutive; ";
  ok = ok && fixed == 0 && non_involutive == 0;

  bool identity_holds = true;
  for (int r = 0; r <= 10; ++r) {
    std::uint64_t sum = 0;
    for (int k = 0; k <= r; ++k)
      sum += binomial(r, k) * binomial(r, k);
    identity_holds = identity_holds && sum == binomial(2 * r, r);
  }
  detail << "sum C(r,k)^2 = C(2r,r) for r<=10: "
         << (identity_holds ? "yes" : "NO") << "; ";
  ok = ok && identity_holds;

  std::mt19937_64 rng(4242);
  double homo = 0.0;
  for (int i = 0; i < 200; ++i) {
    int r = 1 + static_cast<int>(rng() % 3);
    int d = 2 + static_cast<int>(rng() % 2);
    auto rho = random_operator(r, d, rng());
    auto s1 = random_permutation(2 * r, rng);
    auto s2 = random_permutation(2 * r, rng);
    auto lhs = apply_permutation(rho, compose(s1, s2));
    auto rhs = apply_permutation(apply_permutation(rho, s1), s2);
    homo = std::max(homo, max_abs_diff(lhs.entries(), rhs.entries()));
  }
  detail << "homomorphism max diff " << homo << "; ";
  ok = ok && homo <= 1e-12;

  // Odd-odd transpositions permute row indices (left multiplication by the
  // swap), even-even ones permute column indices (right multiplication).
  double swap_dev = 0.0;
  for (int r = 2; r <= 3; ++r)
    for (int d = 2; d <= 3; ++d)
      for (int k = 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
          auto rho = random_operator(r, d, rng());
          auto v = swap_operator(r, d, k, l).entries();
          auto odd = apply_permutation(
              rho, Permutation::transposition(2 * r, 2 * k - 1, 2 * l - 1));
          auto even = apply_permutation(
              rho, Permutation::transposition(2 * r, 2 * k, 2 * l));
          swap_dev = std::max(swap_dev,
                              max_abs_diff(odd.entries(), v * rho.entries()));
          swap_dev = std::max(swap_dev,
                              max_abs_diff(even.entries(), rho.entries() * v));
        }
  detail << "swap identities max diff " << swap_dev;
  ok = ok && swap_dev <= 1e-12;
  return ok;
}

} // namespace

std::vector<AcceptanceCheck> acceptance_checks() {
  return {
      make_check(1, "coset counts 3/10/35 over S_4, S_6, S_8", 10.0,
                 coset_counts),
      make_check(2, "group order 8/72/1152, filter == closure", 0.0,
                 group_order),
      make_check(3, "exhaustive coset soundness for r <= 3", 30.0,
                 coset_soundness),
      make_check(4, "worked example (3,12,1,2,10,8)(4,5,6) ~ (3,4)(1,8)(5,12)",
                 0.0, worked_example),
      make_check(5, "census of nontrivial classes for r = 2, 3, 4", 0.0,
                 census),
      make_check(6, "norm preservation on the whole group, r = 2, 3", 60.0,
                 norm_preservation),
      make_check(7, "separability bound on 100 random separable states", 0.0,
                 separability_bound),
      make_check(8, "detector states for every nontrivial class, r <= 4", 10.0,
                 detection_witnesses),
      make_check(9, "bipartite anchors (Bell, maximally mixed)", 0.0,
                 bipartite_anchors),
      make_check(10, "structural properties", 0.0, structural_properties),
  };
}

bool run_acceptance(std::ostream &out) {
  bool all = true;
  for (const auto &check : acceptance_checks()) {
    auto result = check.run();
    all = all && result.passed;
    out << (result.passed ? "PASS" : "FAIL") << "  [" << std::setw(2)
        << result.id << "] " << result.name << "  (" << std::fixed
        << std::setprecision(2) << result.seconds << " s)\n"
        << std::defaultfloat << "        " << result.detail << '\n';
    out.flush();
  }
  out << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return all;
}

} // namespace permcrit
