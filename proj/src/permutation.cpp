#include "permcrit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace permcrit {

ParseError::ParseError(const std::string &message, std::size_t position)
    : PermutationError(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

void check_degree(int degree) {
  if (degree < 2 || degree % 2 != 0)
    throw PermutationError("permutation degree must be even and >= 2, got " +
                           std::to_string(degree));
}

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }
  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size())
        throw ParseError(std::string("expected '") + c + "' but input ended",
                         pos_);
      throw ParseError(std::string("expected '") + c + "', found '" +
                           text_[pos_] + "'",
                       pos_);
    }
    ++pos_;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000)
        throw ParseError("integer too large", start);
      ++pos_;
    }
    if (start == pos_) {
      if (pos_ >= text_.size())
        throw ParseError("expected an integer but input ended", pos_);
      throw ParseError(std::string("expected an integer, found '") +
                           text_[pos_] + "'",
                       pos_);
    }
    return static_cast<int>(value);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Permutation parse_cycles(Scanner &in, int degree) {
  std::vector<int> images(degree);
  for (int k = 0; k < degree; ++k)
    images[k] = k + 1;
  std::vector<bool> seen(degree + 1, false);
  bool any_cycle = false;

  while (!in.at_end()) {
    std::size_t open = in.position();
    in.expect('(');
    if (in.peek() == ')') {
      // "()" is the identity and may only appear alone
      in.expect(')');
      if (!in.at_end() || any_cycle)
        throw ParseError("empty cycle '()' is only allowed as the whole input",
                         open);
      break;
    }
    std::vector<int> cycle;
    while (true) {
      std::size_t at = in.position();
      int point = in.integer();
      if (point < 1 || point > degree)
        throw ParseError("point " + std::to_string(point) +
                             " out of range 1.." + std::to_string(degree),
                         at);
      if (seen[point])
        throw ParseError("duplicate point " + std::to_string(point), at);
      seen[point] = true;
      cycle.push_back(point);
      if (in.peek() == ',') {
        in.expect(',');
        continue;
      }
      in.expect(')');
      break;
    }
    if (cycle.size() < 2)
      throw ParseError("a cycle needs at least two points", open);
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_one_line(Scanner &in, int degree) {
  in.expect('[');
  std::vector<int> images;
  std::vector<bool> seen(degree + 1, false);
  while (in.peek() != ']') {
    if (in.at_end())
      throw ParseError("expected ']' but input ended", in.position());
    std::size_t at = in.position();
    int point = in.integer();
    if (point < 1 || point > degree)
      throw ParseError("point " + std::to_string(point) + " out of range 1.." +
                           std::to_string(degree),
                       at);
    if (seen[point])
      throw ParseError("duplicate image " + std::to_string(point), at);
    seen[point] = true;
    images.push_back(point);
    if (in.peek() == ',')
      in.expect(',');
  }
  std::size_t close = in.position();
  in.expect(']');
  if (static_cast<int>(images.size()) != degree)
    throw ParseError("one-line notation needs exactly " +
                         std::to_string(degree) + " images, got " +
                         std::to_string(images.size()),
                     close);
  if (!in.at_end())
    throw ParseError("trailing input after one-line notation", in.position());
  return Permutation::from_images(std::move(images));
}

} // namespace

Permutation::Permutation(int degree) {
  check_degree(degree);
  images_.resize(degree);
  for (int k = 0; k < degree; ++k)
    images_[k] = k;
}

Permutation Permutation::from_images(std::vector<int> images) {
  int degree = static_cast<int>(images.size());
  check_degree(degree);
  std::vector<bool> hit(degree, false);
  Permutation p;
  p.images_.reserve(degree);
  for (int k = 0; k < degree; ++k) {
    int image = images[k];
    if (image < 1 || image > degree)
      throw PermutationError("image " + std::to_string(image) + " of point " +
                             std::to_string(k + 1) + " out of range");
    if (hit[image - 1])
      throw PermutationError("image " + std::to_string(image) +
                             " repeated; not a bijection");
    hit[image - 1] = true;
    p.images_.push_back(image - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(const CycleDecomposition &cycles,
                                     int degree) {
  check_degree(degree);
  std::vector<int> images(degree);
  for (int k = 0; k < degree; ++k)
    images[k] = k + 1;
  std::vector<bool> seen(degree + 1, false);
  for (const auto &cycle : cycles.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int point = cycle[i];
      if (point < 1 || point > degree)
        throw PermutationError("cycle point " + std::to_string(point) +
                               " out of range");
      if (seen[point])
        throw PermutationError("cycles are not disjoint at point " +
                               std::to_string(point));
      seen[point] = true;
      images[point - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a == b)
    throw PermutationError("a transposition needs two distinct points");
  return from_cycles(CycleDecomposition{{{a, b}}}, degree);
}

Permutation Permutation::global_transpose(int subsystems) {
  Permutation p(2 * subsystems);
  for (int k = 0; k < subsystems; ++k)
    std::swap(p.images_[2 * k], p.images_[2 * k + 1]);
  return p;
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > degree())
    throw PermutationError("point " + std::to_string(point) +
                           " out of range");
  return images_[point - 1] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    out[k] = images_[k] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k))
      return false;
  return true;
}

std::string Permutation::to_string() const {
  return format_cycles(cycle_decomposition(*this));
}

std::string Permutation::to_one_line() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < images_.size(); ++k)
    out << (k ? " " : "") << images_[k] + 1;
  out << ']';
  return out.str();
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 2 || degree % 2 != 0)
    throw ParseError("degree must be even and >= 2, got " +
                         std::to_string(degree),
                     0);
  Scanner in(text);
  if (in.peek() == '[')
    return parse_one_line(in, degree);
  return parse_cycles(in, degree);
}

Permutation compose(const Permutation &first, const Permutation &second) {
  if (first.degree() != second.degree())
    throw PermutationError("degree mismatch: " +
                           std::to_string(first.degree()) + " vs " +
                           std::to_string(second.degree()));
  std::vector<int> images(first.degree());
  for (int x = 1; x <= first.degree(); ++x)
    images[x - 1] = second(first(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation &sigma) {
  std::vector<int> images(sigma.degree());
  for (int x = 1; x <= sigma.degree(); ++x)
    images[sigma(x) - 1] = x;
  return Permutation::from_images(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation &sigma) {
  CycleDecomposition out;
  std::vector<bool> visited(sigma.degree() + 1, false);
  for (int start = 1; start <= sigma.degree(); ++start) {
    if (visited[start] || sigma(start) == start)
      continue;
    std::vector<int> cycle;
    for (int x = start; !visited[x]; x = sigma(x)) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::string format_cycles(const CycleDecomposition &cycles) {
  if (cycles.cycles.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cycles.cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? "," : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

CycleDecomposition normalized(CycleDecomposition cycles) {
  std::erase_if(cycles.cycles, [](const auto &c) { return c.empty(); });
  for (auto &cycle : cycles.cycles)
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
  std::sort(cycles.cycles.begin(), cycles.cycles.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return cycles;
}

} // namespace permcrit
