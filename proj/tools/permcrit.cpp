// permcrit: canonicalize permutation separability criteria, compare them,
// list the independent classes and evaluate them on density matrices.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 data error.
// Domain answers (EQUIVALENT/INDEPENDENT, ENTANGLED/UNDETECTED) are printed,
// never signalled through the exit code.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "permcrit/acceptance.hpp"
#include "permcrit/arrows.hpp"
#include "permcrit/criteria.hpp"
#include "permcrit/norm_group.hpp"
#include "permcrit/state_io.hpp"
#include "permcrit/states.hpp"

using namespace permcrit;

namespace {

enum class Format { text, csv };

std::string braces(const std::vector<int> &values, char sep = ',') {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? std::string(1, sep) : "") + std::to_string(values[i]);
  return out + "}";
}

std::string fixed(double value, int digits = 9) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string class_status(const CanonicalKey &key) {
  return key.is_trivial() ? "trivial (norm-preserving)" : "nontrivial";
}

int cmd_canon(const std::string &text, int r, bool trace) {
  Permutation sigma = parse_permutation(text, 2 * r);
  Canonicalization c = canonicalize(sigma);
  const ClassDescriptor cls = describe(c.key);

  if (trace) {
    std::cout << "step  " << pad("rule", 16) << pad("result", 36)
              << "right multiplier\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const RewriteStep &s = c.steps[i];
      std::string mult = s.rule == "input" ? "" : s.multiplier.to_string();
      std::cout << pad(std::to_string(i), 6) << pad(s.rule, 16)
                << pad(s.description, 36) << mult << '\n';
    }
    std::cout << '\n';
  }
  std::cout << "permutation:     " << sigma.to_string() << '\n'
            << "normal form:     " << c.normal_form.to_string() << '\n'
            << "as permutation:  " << as_permutation(c.normal_form).to_string()
            << '\n'
            << "canonical key:   " << c.key.to_string() << '\n'
            << "type:            " << cls.type_label << '\n'
            << "class:           " << class_status(c.key) << '\n'
            << "representative:  "
            << representative_permutation(c.key).to_string() << '\n';
  return 0;
}

int cmd_equiv(const std::string &first, const std::string &second, int r) {
  Permutation sigma = parse_permutation(first, 2 * r);
  Permutation tau = parse_permutation(second, 2 * r);
  CanonicalKey ks = canonical_key(sigma);
  CanonicalKey kt = canonical_key(tau);
  Permutation quotient = compose(inverse(tau), sigma);
  auto kind = parity_kind(quotient);
  bool same = equivalent(sigma, tau); // throws on internal disagreement

  std::cout << "first:   " << pad(sigma.to_string(), 24) << "key "
            << ks.to_string() << '\n'
            << "second:  " << pad(tau.to_string(), 24) << "key "
            << kt.to_string() << '\n'
            << "inverse(second)*first = " << quotient.to_string() << ": ";
  if (kind)
    std::cout << "in the norm-preserving group ("
              << (*kind == ParityKind::preserving ? "parity preserving"
                                                  : "parity swapping")
              << ")\n";
  else
    std::cout << "mixes parities, not in the norm-preserving group\n";
  std::cout << (same ? "EQUIVALENT" : "INDEPENDENT") << '\n';
  return 0;
}

void print_census(int r, Format format) {
  auto census = census_by_type(r);
  if (format == Format::csv) {
    std::cout << "r,a,l,label,count\n";
    for (const auto &e : census)
      std::cout << r << ',' << e.arrows << ',' << e.loops << ',' << e.label
                << ',' << e.count << '\n';
    return;
  }
  std::uint64_t total = 0;
  std::cout << "census by type:\n"
            << "  " << pad("type", 14) << pad("arrows", 8) << pad("loops", 8)
            << "count\n";
  for (const auto &e : census) {
    std::string loops = std::to_string(e.loops);
    if (e.flip_loops != e.loops)
      loops += "|" + std::to_string(e.flip_loops);
    std::cout << "  " << pad(e.label, 14) << pad(std::to_string(e.arrows), 8)
              << pad(loops, 8) << e.count << '\n';
    total += e.count;
  }
  std::cout << "  " << pad("total", 30) << total << '\n';
}

int cmd_list(int r, Format format) {
  auto classes = enumerate_classes(r);
  if (format == Format::csv) {
    print_census(r, format);
    return 0;
  }
  const std::uint64_t expected = binomial(2 * r, r) / 2 - 1;
  std::cout << "nontrivial classes for r = " << r << ": "
            << classes.size() - 1 << " (C(" << 2 * r << "," << r
            << ")/2 - 1 = " << expected << ")\n\n"
            << "  " << pad("#", 5) << pad("type", 10) << pad("heads", 18)
            << pad("tails", 18) << pad("configuration", 22)
            << "representative\n";
  int index = 0;
  for (const auto &c : classes) {
    if (c.trivial)
      continue;
    ++index;
    std::cout << "  " << pad(std::to_string(index), 5) << pad(c.type_label, 10)
              << pad(braces(c.key.heads()), 18)
              << pad(braces(c.key.tails()), 18)
              << pad(representative_configuration(c.key.sets()).to_string(), 22)
              << representative_permutation(c.key).to_string() << '\n';
  }
  std::cout << '\n';
  print_census(r, format);
  return 0;
}

int cmd_eval(const std::string &path, double tolerance, std::uint64_t seed,
             Format format) {
  DensityMatrix rho = read_state_file(path);
  EvaluationOptions options;
  options.tolerance = tolerance;
  options.seed = seed;
  CriterionReport report = evaluate_criteria(rho, options);
  auto rows = sorted_by_norm(report);

  if (format == Format::csv) {
    std::cout << "norm,label,heads,tails,representative\n";
    for (const auto &c : rows)
      std::cout << fixed(c.norm) << ',' << c.type_label << ','
                << braces(c.key.heads(), ' ') << ','
                << braces(c.key.tails(), ' ') << ','
                << c.representative.to_one_line() << '\n';
    std::cout << "# max_norm," << fixed(report.max_norm) << '\n'
              << "# verdict," << verdict_name(report.verdict) << '\n';
    return 0;
  }
  std::cout << "state: " << path << " (r = " << report.subsystems
            << ", d = " << report.local_dim << ")\n"
            << "  " << pad("norm", 14) << pad("type", 10) << pad("key", 26)
            << "representative\n";
  for (const auto &c : rows)
    std::cout << "  " << pad(fixed(c.norm), 14) << pad(c.type_label, 10)
              << pad(c.key.to_string(), 26) << c.representative.to_string()
              << '\n';
  std::cout << "max norm: " << fixed(report.max_norm) << '\n'
            << "verdict:  " << verdict_name(report.verdict) << " (tolerance "
            << report.tolerance << ", seed " << report.seed << ")\n";
  return 0;
}

int cmd_enumerate_cosets(int r) {
  if (r < 1 || r > kMaxFilterSubsystems)
    throw std::invalid_argument("enumerate-cosets supports 1 <= r <= " +
                                std::to_string(kMaxFilterSubsystems));
  std::vector<int> images(2 * r);
  std::iota(images.begin(), images.end(), 1);
  struct Block {
    std::size_t size = 0;
    std::string first;
  };
  std::map<CanonicalKey, Block> blocks;
  do {
    Permutation sigma = Permutation::from_images(images);
    Block &b = blocks[canonical_key(sigma)];
    if (b.size++ == 0)
      b.first = sigma.to_string();
  } while (std::next_permutation(images.begin(), images.end()));

  std::cout << "right cosets of the norm-preserving group in S_" << 2 * r
            << ": " << blocks.size() << '\n'
            << "  " << pad("key", 30) << pad("type", 10) << pad("size", 8)
            << "first member\n";
  for (const auto &[key, block] : blocks)
    std::cout << "  " << pad(key.to_string(), 30)
              << pad(describe(key).type_label, 10)
              << pad(std::to_string(block.size), 8) << block.first << '\n';
  return 0;
}

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw std::invalid_argument("expected a comma-separated integer list, "
                                  "got '" + text + "'");
    }
  }
  return out;
}

int cmd_make_state(const std::string &kind, int r, int d,
                   const std::string &pair, const std::string &basis, int terms,
                   std::uint64_t seed, const std::string &output) {
  StateSpec spec;
  spec.kind = parse_state_kind(kind);
  spec.terms = terms;
  spec.seed = seed;
  if (!basis.empty())
    spec.basis = parse_int_list(basis);
  auto p = parse_int_list(pair);
  if (p.size() != 2)
    throw std::invalid_argument("--pair needs two subsystems, e.g. 1,2");
  spec.first = p[0];
  spec.second = p[1];
  DensityMatrix rho = make_state(r, d, spec);
  if (output.empty() || output == "-") {
    std::cout << "# " << kind << " r=" << r << " d=" << d << " seed=" << seed
              << '\n';
    write_state(std::cout, rho);
  } else {
    write_state_file(output, rho);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Permutation separability criteria: canonical forms, "
               "independent classes and numerical evaluation"};
  app.require_subcommand(1);

  int r = 2;
  int d = 2;
  bool trace = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  Format format = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text},
                                              {"csv", Format::csv}};
  auto add_r = [&](CLI::App *cmd, bool required = true) {
    auto *opt = cmd->add_option("-r,--subsystems", r, "number of subsystems")
                    ->check(CLI::PositiveNumber);
    if (required)
      opt->required();
  };
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "output format: text or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string perm1, perm2, state_path;

  auto *canon = app.add_subcommand("canon", "canonicalize a permutation");
  add_r(canon);
  canon->add_option("permutation", perm1, "cycle or one-line notation")
      ->required();
  canon->add_flag("--trace", trace, "print every rewrite step");

  auto *equiv = app.add_subcommand(
      "equiv", "test whether two permutations give equivalent criteria");
  add_r(equiv);
  equiv->add_option("first", perm1)->required();
  equiv->add_option("second", perm2)->required();

  auto *list = app.add_subcommand(
      "list", "list all combinatorially independent nontrivial classes");
  add_r(list);
  add_format(list);

  auto *eval = app.add_subcommand("eval", "evaluate every class on a state");
  eval->add_option("state", state_path, "state file")->required();
  eval->add_option("--tolerance", tolerance, "verdict tolerance above 1")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--seed", seed, "seed for coset spot checks");
  add_format(eval);

  auto *cosets = app.add_subcommand(
      "enumerate-cosets", "partition all of S_2r by canonical key (r <= 4)");
  add_r(cosets);

  auto *selftest =
      app.add_subcommand("selftest", "run the acceptance checks");

  std::string kind = "maximally_mixed", pair = "1,2", basis, output;
  int terms = 1;
  auto *make = app.add_subcommand("make-state", "write a state file");
  make->add_option("--kind", kind,
                   "basis_product, bell_pair, ghz, maximally_mixed, "
                   "random_separable, random_state")
      ->required();
  add_r(make);
  make->add_option("-d,--dim", d, "local dimension")->check(CLI::PositiveNumber);
  make->add_option("--pair", pair, "bell_pair subsystems, e.g. 1,2");
  make->add_option("--basis", basis, "basis_product levels, e.g. 0,1");
  make->add_option("--terms", terms, "random_separable product terms")
      ->check(CLI::PositiveNumber);
  make->add_option("--seed", seed, "random seed");
  make->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (canon->parsed())
      return cmd_canon(perm1, r, trace);
    if (equiv->parsed())
      return cmd_equiv(perm1, perm2, r);
    if (list->parsed())
      return cmd_list(r, format);
    if (eval->parsed())
      return cmd_eval(state_path, tolerance, seed, format);
    if (cosets->parsed())
      return cmd_enumerate_cosets(r);
    if (selftest->parsed())
      return run_acceptance(std::cout) ? 0 : 1;
    if (make->parsed())
      return cmd_make_state(kind, r, d, pair, basis, terms, seed, output);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
