#include "permcrit/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace permcrit {

namespace {

long ipow(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i)
    out *= base;
  return out;
}

// Digit of subsystem j (1-based) in a linear row/column index.
int digit(long index, int j, int r, int d) {
  return static_cast<int>((index / ipow(d, r - j)) % d);
}

struct Split {
  long row = 0;
  long col = 0;
};

} // namespace

long checked_dimension(int subsystems, int local_dim) {
  if (subsystems < 1)
    throw StateError("subsystem count must be positive");
  if (local_dim < 1)
    throw StateError("local dimension must be positive");
  long dim = 1;
  for (int i = 0; i < subsystems; ++i) {
    dim *= local_dim;
    if (dim > kMaxDimension)
      throw StateError("dimension d^r exceeds the limit " +
                       std::to_string(kMaxDimension));
  }
  return dim;
}

DensityMatrix::DensityMatrix(int subsystems, int local_dim)
    : r_(subsystems), d_(local_dim) {
  long dim = checked_dimension(subsystems, local_dim);
  entries_ = ComplexMatrix::Zero(dim, dim);
}

DensityMatrix::DensityMatrix(int subsystems, int local_dim,
                             ComplexMatrix entries)
    : r_(subsystems), d_(local_dim), entries_(std::move(entries)) {
  long dim = checked_dimension(subsystems, local_dim);
  if (entries_.rows() != dim || entries_.cols() != dim)
    throw StateError("matrix shape " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + " does not match d^r = " +
                     std::to_string(dim));
}

Complex DensityMatrix::at(const std::vector<int> &indices) const {
  if (static_cast<int>(indices.size()) != 2 * r_)
    throw StateError("multi-index needs 2r components");
  long row = 0, col = 0;
  for (int j = 0; j < r_; ++j) {
    row = row * d_ + indices[2 * j];
    col = col * d_ + indices[2 * j + 1];
  }
  return entries_(row, col);
}

std::vector<std::string> validate_state(const DensityMatrix &rho,
                                        const StateTolerances &tol) {
  std::vector<std::string> problems;
  const ComplexMatrix &m = rho.entries();
  if (!m.allFinite()) {
    problems.push_back("matrix has non-finite entries");
    return problems;
  }
  double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.hermiticity) {
    std::ostringstream msg;
    msg << "not Hermitian: max |rho - rho^dagger| = " << asym
        << " exceeds " << tol.hermiticity;
    problems.push_back(msg.str());
  }
  Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace) {
    std::ostringstream msg;
    msg << "trace " << tr.real() << (tr.imag() < 0 ? "-" : "+")
        << std::abs(tr.imag()) << "i differs from 1 by more than " << tol.trace;
    problems.push_back(msg.str());
  }
  ComplexMatrix hermitian = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian,
                                                      Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < tol.min_eigenvalue) {
    std::ostringstream msg;
    msg << "not positive semidefinite: minimum eigenvalue " << min_eig
        << " below " << tol.min_eigenvalue;
    problems.push_back(msg.str());
  }
  return problems;
}

void require_state(const DensityMatrix &rho, const StateTolerances &tol) {
  auto problems = validate_state(rho, tol);
  if (problems.empty())
    return;
  std::string message = "invalid state:";
  for (const auto &p : problems)
    message += "\n  " + p;
  throw StateError(message);
}

DensityMatrix apply_permutation(const DensityMatrix &rho,
                                const Permutation &sigma) {
  const int r = rho.subsystems();
  const int d = rho.local_dim();
  if (sigma.degree() != 2 * r)
    throw StateError("permutation degree " + std::to_string(sigma.degree()) +
                     " does not match 2r = " + std::to_string(2 * r));
  const long dim = rho.dimension();
  const Permutation sigma_inv = inverse(sigma);

  // Output index position m carries the digit that the input reads at
  // position sigma^{-1}(m).
  std::vector<long> stride(2 * r + 1);
  std::vector<bool> to_row(2 * r + 1);
  for (int m = 1; m <= 2 * r; ++m) {
    int k = sigma_inv(m);
    int subsystem = (k + 1) / 2;
    stride[m] = ipow(d, r - subsystem);
    to_row[m] = (k % 2 == 1);
  }

  auto split = [&](long index, int parity) {
    Split s;
    for (int j = 1; j <= r; ++j) {
      int m = 2 * j - parity; // parity 1: odd positions (rows), 0: even
      long contribution = digit(index, j, r, d) * stride[m];
      if (to_row[m])
        s.row += contribution;
      else
        s.col += contribution;
    }
    return s;
  };
  std::vector<Split> from_rows(dim), from_cols(dim);
  for (long i = 0; i < dim; ++i) {
    from_rows[i] = split(i, 1);
    from_cols[i] = split(i, 0);
  }

  const ComplexMatrix &in = rho.entries();
  ComplexMatrix out(dim, dim);
  for (long c = 0; c < dim; ++c) {
    const Split &sc = from_cols[c];
    for (long row = 0; row < dim; ++row) {
      const Split &sr = from_rows[row];
      out(row, c) = in(sr.row + sc.row, sr.col + sc.col);
    }
  }
  return DensityMatrix(r, d, std::move(out));
}

double trace_norm(const ComplexMatrix &m) {
  if (m.rows() != m.cols())
    throw StateError("trace norm needs a square matrix");
  if (m.size() == 0)
    return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm(const DensityMatrix &m) { return trace_norm(m.entries()); }

DensityMatrix swap_operator(int subsystems, int local_dim, int k, int l) {
  if (!(1 <= k && k < l && l <= subsystems))
    throw StateError("swap_operator needs 1 <= k < l <= r, got k = " +
                     std::to_string(k) + ", l = " + std::to_string(l));
  DensityMatrix v(subsystems, local_dim);
  const long dim = v.dimension();
  const long sk = ipow(local_dim, subsystems - k);
  const long sl = ipow(local_dim, subsystems - l);
  for (long x = 0; x < dim; ++x) {
    long a = (x / sk) % local_dim;
    long b = (x / sl) % local_dim;
    long y = x + (b - a) * sk + (a - b) * sl;
    v.entries()(y, x) = 1.0;
  }
  return v;
}

DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.local_dim() != b.local_dim())
    throw StateError("tensor factors must share the local dimension");
  const long na = a.dimension(), nb = b.dimension();
  ComplexMatrix out(na * nb, na * nb);
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.entries()(i, j) * b.entries();
  return DensityMatrix(a.subsystems() + b.subsystems(), a.local_dim(),
                       std::move(out));
}

} // namespace permcrit
