#pragma once

// Permutations of the index set {1, ..., 2r}.
//
// Points are 1-based at every public boundary. Products are evaluated left
// to right: compose(a, b) applies a first, then b.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permcrit {

class PermutationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in cycle or one-line notation; position is a 0-based offset
/// into the parsed text.
class ParseError : public PermutationError {
public:
  ParseError(const std::string &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Disjoint cycles of length >= 2. The canonical form produced by
/// cycle_decomposition() starts each cycle at its minimum and sorts cycles by
/// that minimum; other producers (e.g. chop inputs) may use any rotation.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition &) const = default;
};

class Permutation {
public:
  /// Identity on {1, ..., degree}; degree must be even and >= 2.
  explicit Permutation(int degree);

  /// images[k-1] is the image of point k.
  static Permutation from_images(std::vector<int> images);
  /// Product of disjoint cycles; throws if a point repeats.
  static Permutation from_cycles(const CycleDecomposition &cycles, int degree);
  static Permutation transposition(int degree, int a, int b);
  /// (1,2)(3,4)...(2r-1,2r): exchanges the row and column index of every
  /// subsystem, i.e. the full matrix transpose.
  static Permutation global_transpose(int subsystems);

  int degree() const { return static_cast<int>(images_.size()); }
  int subsystems() const { return degree() / 2; }

  int operator()(int point) const;
  std::vector<int> images() const;
  bool is_identity() const;

  /// Canonical cycle notation, "()" for the identity.
  std::string to_string() const;
  /// One-line notation "[p1 p2 ... p2r]".
  std::string to_one_line() const;

  auto operator<=>(const Permutation &) const = default;

private:
  Permutation() = default;

  // 0-based internally
  std::vector<int> images_;
};

/// Accepts cycle notation "(a,b,...)(c,d,...)", the identity "()" or "",
/// and one-line notation "[p1 ... p2r]". Whitespace is ignored.
Permutation parse_permutation(std::string_view text, int degree);

Permutation compose(const Permutation &first, const Permutation &second);
Permutation inverse(const Permutation &sigma);
CycleDecomposition cycle_decomposition(const Permutation &sigma);

/// Renders cycles as written (no reordering); "()" when empty.
std::string format_cycles(const CycleDecomposition &cycles);

/// Rotates every cycle to start at its minimum and sorts by that minimum.
CycleDecomposition normalized(CycleDecomposition cycles);

} // namespace permcrit
