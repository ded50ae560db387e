#include "permcrit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace permcrit {

std::string verdict_name(Verdict v) {
  return v == Verdict::entangled ? "ENTANGLED" : "UNDETECTED";
}

CriterionReport evaluate_criteria(const DensityMatrix &rho,
                                  const EvaluationOptions &options) {
  require_state(rho, options.state_tolerances);
  const int r = rho.subsystems();

  CriterionReport report{r,   rho.local_dim(),     {}, 0.0,
                         Verdict::undetected, options.tolerance, options.seed};
  for (const auto &cls : enumerate_classes(r)) {
    if (cls.trivial)
      continue;
    Permutation rep = representative_permutation(cls.key);
    double norm = trace_norm(apply_permutation(rho, rep));
    report.classes.push_back(ClassNorm{cls.key, cls.type_label, rep, norm});
    report.max_norm = std::max(report.max_norm, norm);
  }
  report.verdict = report.max_norm > 1.0 + options.tolerance
                       ? Verdict::entangled
                       : Verdict::undetected;

  std::mt19937_64 rng(options.seed);
  const int checks = std::min<int>(options.coset_spot_checks,
                                   static_cast<int>(report.classes.size()));
  for (int i = 0; i < checks; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, report.classes.size() - 1);
    const ClassNorm &c = report.classes[pick(rng)];
    Permutation other = compose(c.representative,
                                random_norm_group_element(r, rng));
    double norm = trace_norm(apply_permutation(rho, other));
    if (std::abs(norm - c.norm) > 1e-9) {
      std::ostringstream msg;
      msg << "coset members disagree for class " << c.key.to_string() << ": "
          << c.norm << " vs " << norm << " at " << other.to_string();
      throw std::logic_error(msg.str());
    }
  }
  return report;
}

std::vector<ClassNorm> sorted_by_norm(const CriterionReport &report) {
  std::vector<ClassNorm> out = report.classes;
  std::stable_sort(out.begin(), out.end(),
                   [](const ClassNorm &a, const ClassNorm &b) {
                     // values within 1e-9 count as ties
                     return a.norm > b.norm + 1e-9;
                   });
  return out;
}

} // namespace permcrit
