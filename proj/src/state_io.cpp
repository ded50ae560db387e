#include "permcrit/state_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace permcrit {

namespace {

bool is_skippable(const std::string &line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

bool parse_double(const std::string &tok, double &value) {
  try {
    std::size_t used = 0;
    value = std::stod(tok, &used);
    return used == tok.size();
  } catch (const std::exception &) {
    return false;
  }
}

bool parse_int(const std::string &tok, int &value) {
  try {
    std::size_t used = 0;
    value = std::stoi(tok, &used);
    return used == tok.size();
  } catch (const std::exception &) {
    return false;
  }
}

} // namespace

StateFileError::StateFileError(const std::string &source, int line,
                               const std::string &what)
    : StateError(source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

DensityMatrix read_state(std::istream &in, const std::string &source) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_skippable(line))
        return true;
    }
    return false;
  };

  if (!next_line())
    throw StateFileError(source, line_no, "missing header line 'r d'");
  auto header = tokens(line);
  int r = 0, d = 0;
  if (header.size() != 2 || !parse_int(header[0], r) ||
      !parse_int(header[1], d))
    throw StateFileError(source, line_no,
                         "header must be two integers 'r d', got '" + line + "'");
  long dim = 0;
  try {
    dim = checked_dimension(r, d);
  } catch (const StateError &e) {
    throw StateFileError(source, line_no, e.what());
  }

  ComplexMatrix m(dim, dim);
  for (long row = 0; row < dim; ++row) {
    if (!next_line())
      throw StateFileError(source, line_no,
                           "expected " + std::to_string(dim) +
                               " matrix rows, found " + std::to_string(row));
    auto toks = tokens(line);
    if (static_cast<long>(toks.size()) != 2 * dim)
      throw StateFileError(source, line_no,
                           "row " + std::to_string(row + 1) + " has " +
                               std::to_string(toks.size()) +
                               " numbers, expected " + std::to_string(2 * dim));
    for (long c = 0; c < dim; ++c) {
      double re = 0, im = 0;
      if (!parse_double(toks[2 * c], re))
        throw StateFileError(source, line_no,
                             "bad number '" + toks[2 * c] + "'");
      if (!parse_double(toks[2 * c + 1], im))
        throw StateFileError(source, line_no,
                             "bad number '" + toks[2 * c + 1] + "'");
      m(row, c) = Complex(re, im);
    }
  }
  if (next_line())
    throw StateFileError(source, line_no, "unexpected trailing data");
  return DensityMatrix(r, d, std::move(m));
}

DensityMatrix read_state_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw StateFileError(path, 0, "cannot open file");
  return read_state(in, path);
}

void write_state(std::ostream &out, const DensityMatrix &rho) {
  std::ostringstream buf;
  buf << std::setprecision(17);
  buf << rho.subsystems() << ' ' << rho.local_dim() << '\n';
  const auto &m = rho.entries();
  for (long row = 0; row < m.rows(); ++row) {
    for (long c = 0; c < m.cols(); ++c)
      buf << (c ? " " : "") << m(row, c).real() << ' ' << m(row, c).imag();
    buf << '\n';
  }
  out << buf.str();
}

void write_state_file(const std::string &path, const DensityMatrix &rho) {
  std::ofstream out(path);
  if (!out)
    throw StateError("cannot write " + path);
  write_state(out, rho);
}

} // namespace permcrit
