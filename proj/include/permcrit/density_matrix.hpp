#pragma once

// Operators on (C^d)^{⊗r} addressed by 2r indices i_1 ... i_2r: odd positions
// index rows, even positions index columns. Row index is
//   sum_j (i_{2j-1}) d^{r-j}   (0-based digits, subsystem 1 most significant)
// and the column index likewise with the even positions.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcrit/permutation.hpp"

namespace permcrit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

constexpr long kMaxDimension = 4096;

class StateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws StateError unless d >= 1, r >= 1 and d^r <= 4096.
long checked_dimension(int subsystems, int local_dim);

/// Shape-checked operator. States additionally satisfy the checks in
/// validate_state(); operators produced by apply_permutation need not.
class DensityMatrix {
public:
  DensityMatrix(int subsystems, int local_dim);
  DensityMatrix(int subsystems, int local_dim, ComplexMatrix entries);

  int subsystems() const { return r_; }
  int local_dim() const { return d_; }
  long dimension() const { return entries_.rows(); }

  const ComplexMatrix &entries() const { return entries_; }
  ComplexMatrix &entries() { return entries_; }

  /// Entry at a full multi-index (i_1, ..., i_2r), 0-based digits.
  Complex at(const std::vector<int> &indices) const;

private:
  int r_;
  int d_;
  ComplexMatrix entries_;
};

struct StateTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// Empty when rho is a valid state; otherwise one message per failed check.
std::vector<std::string> validate_state(const DensityMatrix &rho,
                                        const StateTolerances &tol = {});
void require_state(const DensityMatrix &rho, const StateTolerances &tol = {});

/// [Λ_σ(ρ)] at (i_1..i_2r) = ρ at (i_σ(1)..i_σ(2r)).
DensityMatrix apply_permutation(const DensityMatrix &rho,
                                const Permutation &sigma);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);
double trace_norm(const DensityMatrix &m);

/// Swap of subsystems k < l, identity elsewhere.
DensityMatrix swap_operator(int subsystems, int local_dim, int k, int l);

/// Tensor product with subsystem counts added.
DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b);

} // namespace permcrit
