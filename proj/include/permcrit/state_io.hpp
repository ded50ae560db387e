#pragma once

// Text state files:
//   line 1:  r d
//   then d^r rows, each 2 d^r numbers alternating real and imaginary parts.
// Lines starting with '#' (after optional whitespace) and blank lines are
// skipped.

#include <iosfwd>
#include <string>

#include "permcrit/density_matrix.hpp"

namespace permcrit {

class StateFileError : public StateError {
public:
  StateFileError(const std::string &source, int line, const std::string &what);
  int line() const { return line_; }

private:
  int line_;
};

/// Parses the format; does not check state invariants.
DensityMatrix read_state(std::istream &in, const std::string &source = "<input>");
DensityMatrix read_state_file(const std::string &path);

/// 17 significant digits, round-trips exactly.
void write_state(std::ostream &out, const DensityMatrix &rho);
void write_state_file(const std::string &path, const DensityMatrix &rho);

} // namespace permcrit
