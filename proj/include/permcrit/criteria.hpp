#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permcrit/density_matrix.hpp"
#include "permcrit/norm_group.hpp"

namespace permcrit {

enum class Verdict { entangled, undetected };

std::string verdict_name(Verdict v); // "ENTANGLED" / "UNDETECTED"

struct ClassNorm {
  CanonicalKey key;
  std::string type_label;
  Permutation representative;
  double norm;
};

struct CriterionReport {
  int subsystems;
  int local_dim;
  std::vector<ClassNorm> classes; // nontrivial classes, enumeration order
  double max_norm;
  Verdict verdict;                // entangled iff max_norm > 1 + tolerance
  double tolerance;
  std::uint64_t seed;
};

struct EvaluationOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Number of classes re-evaluated on representative * t for a random t in
  /// the norm-preserving group; the two norms must agree within 1e-9.
  int coset_spot_checks = 1;
  StateTolerances state_tolerances = {};
};

CriterionReport evaluate_criteria(const DensityMatrix &rho,
                                  const EvaluationOptions &options = {});

/// Classes sorted by descending norm, ties by enumeration order.
std::vector<ClassNorm> sorted_by_norm(const CriterionReport &report);

} // namespace permcrit
