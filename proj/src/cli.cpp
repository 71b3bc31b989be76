#include "zdposet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"

#include "zdposet/generators.hpp"
#include "zdposet/poset_text.hpp"
#include "zdposet/report.hpp"

namespace zdp {
namespace {

int cmd_analyze(const std::string &path, const std::string &dot, bool pretty, std::istream &input,
                std::ostream &out, std::ostream &err) {
  Poset p = [&] {
    if (path == "-")
      return read_poset(input);
    std::ifstream file(path);
    if (!file)
      throw std::ios_base::failure("cannot open '" + path + "'");
    return read_poset(file);
  }();

  if (zero_divisors(p).empty()) {
    if (dot.empty())
      out << (pretty ? write_poset(p) : poset_echo_json(p).dump(2) + "\n");
    err << "no zero-divisors\n";
    return kExitNoZeroDivisors;
  }
  if (dot == "gamma") {
    out << to_dot(p, gamma(p), "gamma");
  } else if (dot == "gammaE") {
    out << to_dot(p, gamma_e(p), "gammaE");
  } else {
    const json doc = analysis_document(p);
    out << (pretty ? pretty_analysis(doc) : doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_example(const std::string &name, const std::vector<std::size_t> &params, std::ostream &out) {
  if (std::find(example_names().begin(), example_names().end(), name) == example_names().end())
    throw UnknownExampleError("unknown example '" + name + "'");
  if (example_takes_param(name) && params.size() != 1)
    throw BadParamsError(name + " takes exactly one size parameter");
  if (!example_takes_param(name) && !params.empty())
    throw BadParamsError(name + " takes no parameters");
  out << write_poset(named_example(name, params.empty() ? 0 : params.front()));
  return kExitOk;
}

int cmd_check(std::size_t max_size, std::size_t workers, bool as_json, std::ostream &out) {
  const SweepSummary s = sweep(max_size, workers);
  out << (as_json ? summary_json(s).dump(2) + "\n" : pretty_summary(s));
  return s.failures.empty() ? kExitOk : kExitFailures;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &input, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Zero-divisor graphs of finite posets with least element"};
  app.name("zdposet");
  app.require_subcommand(1);

  std::string path, dot;
  bool pretty = false;
  auto *analyze = app.add_subcommand("analyze", "Analyze a poset file ('-' reads stdin)");
  analyze->add_option("path", path, "Poset file")->required();
  analyze->add_option("--dot", dot, "Emit DOT for one graph instead of JSON")
      ->check(CLI::IsMember({"gamma", "gammaE"}));
  analyze->add_flag("--pretty", pretty, "Human-readable output");

  std::string example_name;
  std::vector<std::size_t> example_params;
  auto *example = app.add_subcommand("example", "Print a named example poset");
  example->add_option("name", example_name, "antichain | powerset | p0_trunc | "
                                            "deg_counterexample | remark41_trunc | "
                                            "bipartite_example")
      ->required();
  example->add_option("params", example_params, "Size parameter");

  std::size_t max_size = 5;
  std::size_t workers = 1;
  bool as_json = false;
  auto *check = app.add_subcommand("check", "Check every theorem on all small posets");
  check->add_option("--max-size", max_size, "Largest poset size (<= 7)");
  check->add_option("--workers", workers, "Worker threads");
  check->add_flag("--json", as_json, "JSON summary");

  std::size_t size = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  auto *random = app.add_subcommand("random", "Print a random poset with least element");
  random->add_option("--size", size, "Element count")->required();
  random->add_option("--density", density, "Probability of each forward pair");
  random->add_option("--seed", seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailures;
  }

  try {
    if (*analyze)
      return cmd_analyze(path, dot, pretty, input, out, err);
    if (*example)
      return cmd_example(example_name, example_params, out);
    if (*check)
      return cmd_check(max_size, workers, as_json, out);
    if (*random) {
      out << write_poset(random_poset(size, density, seed));
      return kExitOk;
    }
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnknownExampleError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BadParamsError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailures;
  }
  return kExitFailures;
}

} // namespace zdp
