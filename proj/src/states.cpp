#include "permcrit/states.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace permcrit {

namespace {

using Vector = Eigen::VectorXcd;

Vector random_vector(long n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (long i = 0; i < n; ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

Vector kron(const Vector &a, const Vector &b) {
  Vector out(a.size() * b.size());
  for (long i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// Tensor product with pair_op on every listed (k, l) and single_op on the
// remaining subsystems, with factors moved into subsystem order.
DensityMatrix embed_pairs(int r, int d,
                          const std::vector<std::pair<int, int>> &pairs,
                          const ComplexMatrix &pair_op,
                          const ComplexMatrix &single_op) {
  std::vector<int> order; // order[position] = subsystem
  std::vector<bool> used(r + 1, false);
  std::optional<DensityMatrix> acc;
  auto append = [&](const DensityMatrix &factor) {
    acc = acc ? kron(*acc, factor) : factor;
  };
  for (auto [k, l] : pairs) {
    append(DensityMatrix(2, d, pair_op));
    order.push_back(k);
    order.push_back(l);
    used[k] = used[l] = true;
  }
  for (int k = 1; k <= r; ++k) {
    if (used[k])
      continue;
    append(DensityMatrix(1, d, single_op));
    order.push_back(k);
  }
  // Factor position p must land on subsystem order[p]: the input's row and
  // column index of position p read the output's indices of that subsystem.
  std::vector<int> images(2 * r);
  for (int p = 0; p < r; ++p) {
    images[2 * p] = 2 * order[p] - 1;
    images[2 * p + 1] = 2 * order[p];
  }
  return apply_permutation(*acc, Permutation::from_images(std::move(images)));
}

// |Phi+><Phi+| with entries 1/d at (ii, jj), built directly so they are exact.
ComplexMatrix bell_projector(int d) {
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      p(i * d + i, j * d + j) = 1.0 / d;
  return p;
}

} // namespace

StateKind parse_state_kind(const std::string &name) {
  if (name == "basis_product")
    return StateKind::basis_product;
  if (name == "bell_pair")
    return StateKind::bell_pair;
  if (name == "ghz")
    return StateKind::ghz;
  if (name == "maximally_mixed")
    return StateKind::maximally_mixed;
  if (name == "random_separable")
    return StateKind::random_separable;
  if (name == "random_state")
    return StateKind::random_state;
  throw StateError("unknown state kind '" + name + "'");
}

std::string state_kind_name(StateKind kind) {
  switch (kind) {
  case StateKind::basis_product:
    return "basis_product";
  case StateKind::bell_pair:
    return "bell_pair";
  case StateKind::ghz:
    return "ghz";
  case StateKind::maximally_mixed:
    return "maximally_mixed";
  case StateKind::random_separable:
    return "random_separable";
  case StateKind::random_state:
    return "random_state";
  }
  return "unknown";
}

DensityMatrix make_state(int subsystems, int local_dim, const StateSpec &spec) {
  checked_dimension(subsystems, local_dim);
  switch (spec.kind) {
  case StateKind::basis_product:
    return basis_product_state(subsystems, local_dim, spec.basis);
  case StateKind::bell_pair:
    return bell_pair_state(subsystems, local_dim, spec.first, spec.second);
  case StateKind::ghz:
    return ghz_state(subsystems, local_dim);
  case StateKind::maximally_mixed:
    return maximally_mixed_state(subsystems, local_dim);
  case StateKind::random_separable:
    return random_separable_state(subsystems, local_dim, spec.terms, spec.seed);
  case StateKind::random_state:
    return random_state(subsystems, local_dim, spec.seed);
  }
  throw StateError("unknown state kind");
}

DensityMatrix basis_product_state(int subsystems, int local_dim,
                                  const std::vector<int> &levels) {
  DensityMatrix rho(subsystems, local_dim);
  std::vector<int> digits = levels;
  if (digits.empty())
    digits.assign(subsystems, 0);
  if (static_cast<int>(digits.size()) != subsystems)
    throw StateError("basis_product needs one level per subsystem");
  long index = 0;
  for (int level : digits) {
    if (level < 0 || level >= local_dim)
      throw StateError("basis level " + std::to_string(level) +
                       " out of range 0.." + std::to_string(local_dim - 1));
    index = index * local_dim + level;
  }
  rho.entries()(index, index) = 1.0;
  return rho;
}

DensityMatrix bell_pair_state(int subsystems, int local_dim, int k, int l) {
  checked_dimension(subsystems, local_dim);
  if (k < 1 || l < 1 || k > subsystems || l > subsystems || k == l)
    throw StateError("bell_pair needs two distinct subsystems in 1.." +
                     std::to_string(subsystems));
  ComplexMatrix mixed = ComplexMatrix::Identity(local_dim, local_dim) /
                        static_cast<double>(local_dim);
  return embed_pairs(subsystems, local_dim, {{k, l}}, bell_projector(local_dim),
                     mixed);
}

DensityMatrix ghz_state(int subsystems, int local_dim) {
  DensityMatrix rho(subsystems, local_dim);
  const long dim = rho.dimension();
  Vector psi = Vector::Zero(dim);
  long step = 0;
  for (int j = 0; j < subsystems; ++j)
    step = step * local_dim + 1;
  for (int i = 0; i < local_dim; ++i)
    psi(i * step) = 1.0 / std::sqrt(static_cast<double>(local_dim));
  rho.entries() = psi * psi.adjoint();
  return rho;
}

DensityMatrix maximally_mixed_state(int subsystems, int local_dim) {
  DensityMatrix rho(subsystems, local_dim);
  rho.entries() = ComplexMatrix::Identity(rho.dimension(), rho.dimension()) /
                  static_cast<double>(rho.dimension());
  return rho;
}

DensityMatrix random_separable_state(int subsystems, int local_dim, int terms,
                                     std::uint64_t seed) {
  if (terms < 1)
    throw StateError("random_separable needs at least one term");
  DensityMatrix rho(subsystems, local_dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> weights(terms);
  for (double &w : weights)
    w = uniform(rng) + 1e-3;
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (int t = 0; t < terms; ++t) {
    Vector psi = Vector::Ones(1);
    for (int k = 0; k < subsystems; ++k) {
      Vector local = random_vector(local_dim, rng);
      psi = kron(psi, Vector(local / local.norm()));
    }
    rho.entries() += (weights[t] / total) * (psi * psi.adjoint());
  }
  rho.entries() = (rho.entries() + rho.entries().adjoint()).eval() / 2.0;
  return rho;
}

DensityMatrix random_state(int subsystems, int local_dim, std::uint64_t seed) {
  DensityMatrix rho(subsystems, local_dim);
  std::mt19937_64 rng(seed);
  const long dim = rho.dimension();
  ComplexMatrix g(dim, dim);
  for (long c = 0; c < dim; ++c)
    g.col(c) = random_vector(dim, rng);
  ComplexMatrix m = g * g.adjoint();
  m = (m + m.adjoint()).eval() / 2.0;
  rho.entries() = m / m.trace().real();
  return rho;
}

DensityMatrix random_operator(int subsystems, int local_dim,
                              std::uint64_t seed) {
  DensityMatrix out(subsystems, local_dim);
  std::mt19937_64 rng(seed);
  for (long c = 0; c < out.dimension(); ++c)
    out.entries().col(c) = random_vector(out.dimension(), rng);
  return out;
}

int detector_exponent(const ClassDescriptor &cls) {
  return cls.arrow_count + std::min(cls.loop_count, cls.free_count());
}

DensityMatrix detector_state(const ClassDescriptor &cls, int local_dim) {
  if (cls.trivial)
    throw StateError("the trivial class has no detector state");
  if (local_dim < 2)
    throw StateError("detector states need local dimension >= 2");
  const int r = cls.key.subsystems();
  checked_dimension(r, local_dim);

  ArrowConfiguration config = representative_configuration(cls.key.sets());
  if (cls.loop_count > cls.free_count())
    config = flip(config);

  std::vector<std::pair<int, int>> pairs;
  for (const Arrow &a : config.arrows())
    if (!a.is_loop())
      pairs.emplace_back(a.tail, a.head);
  std::vector<int> loops = config.loops();
  std::vector<int> free = config.free_subsystems();
  for (std::size_t i = 0; i < loops.size(); ++i)
    pairs.emplace_back(loops[i], free[i]);

  ComplexMatrix mixed = ComplexMatrix::Identity(local_dim, local_dim) /
                        static_cast<double>(local_dim);
  return embed_pairs(r, local_dim, pairs, bell_projector(local_dim), mixed);
}

} // namespace permcrit
