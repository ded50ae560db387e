#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permcrit/density_matrix.hpp"
#include "permcrit/norm_group.hpp"

namespace permcrit {

enum class StateKind {
  basis_product,
  bell_pair,
  ghz,
  maximally_mixed,
  random_separable,
  random_state,
};

/// Parameters for make_state. Unused fields are ignored by a given kind.
struct StateSpec {
  StateKind kind = StateKind::maximally_mixed;
  std::vector<int> basis;      // basis_product: local levels, default all 0
  int first = 1, second = 2;   // bell_pair: subsystems holding the pair
  int terms = 1;               // random_separable: number of product terms
  std::uint64_t seed = 0;      // random kinds
};

StateKind parse_state_kind(const std::string &name);
std::string state_kind_name(StateKind kind);

DensityMatrix make_state(int subsystems, int local_dim, const StateSpec &spec);

/// |i_1 ... i_r><i_1 ... i_r|
DensityMatrix basis_product_state(int subsystems, int local_dim,
                                  const std::vector<int> &levels);
/// Maximally entangled pair on subsystems k != l, I/d on the others.
DensityMatrix bell_pair_state(int subsystems, int local_dim, int k, int l);
DensityMatrix ghz_state(int subsystems, int local_dim);
DensityMatrix maximally_mixed_state(int subsystems, int local_dim);
/// Convex mixture of `terms` random pure product states, seeded.
DensityMatrix random_separable_state(int subsystems, int local_dim, int terms,
                                     std::uint64_t seed);
/// Normalized G G^dagger with complex Gaussian G, seeded.
DensityMatrix random_state(int subsystems, int local_dim, std::uint64_t seed);
/// Complex Gaussian matrix, not a state.
DensityMatrix random_operator(int subsystems, int local_dim,
                              std::uint64_t seed);

/// Entangled state violating the criterion of a nontrivial class:
/// maximally entangled pairs on each arrow's (tail, head) and on each
/// (loop, free partner), I/d elsewhere. If the class has more loops than free
/// subsystems the flipped configuration is used.
DensityMatrix detector_state(const ClassDescriptor &cls, int local_dim);

/// Arrow and loop count of the configuration detector_state builds on; the
/// representative's trace norm on that state is d^(arrows + loops).
int detector_exponent(const ClassDescriptor &cls);

} // namespace permcrit
