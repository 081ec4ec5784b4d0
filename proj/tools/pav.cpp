// Command-line front end. stdout carries data only; diagnostics go to
// stderr. Exit codes: 0 success, 1 data error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pav/bjs.hpp"
#include "pav/error.hpp"
#include "pav/excursion_bijection.hpp"
#include "pav/experiments.hpp"
#include "pav/fringe.hpp"
#include "pav/petrov.hpp"
#include "pav/report.hpp"
#include "pav/tree.hpp"

namespace {

using namespace pav;

constexpr int kDataError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs come from positional arguments or, when there are none, from the
// nonblank lines of stdin.
std::vector<std::string> input_lines(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Tree text: parents of vertices 1..N-1 in preorder, e.g. "0 1 1".
std::string tree_to_string(const OrderedTree& tree) {
  std::string out;
  for (std::size_t v = 1; v < tree.size(); ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(tree.parent(v));
  }
  return out;
}

OrderedTree tree_from_string(const std::string& text) {
  std::vector<std::int64_t> parent{0};
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::DomainError, "bad parent entry in '" + text + "'");
    }
    parent.push_back(value);
    pos += used;
  }
  return OrderedTree::from_parents(std::move(parent));
}

DyckPath read_object(const std::string& kind, const std::string& text) {
  if (kind == "dyck") return DyckPath::parse(text);
  if (kind == "321") return bjs_inverse(Permutation::parse(text));
  if (kind == "231") return exc_inverse(Permutation::parse(text));
  return to_contour(tree_from_string(text));
}

std::string write_object(const std::string& kind, const DyckPath& path) {
  if (kind == "dyck") return path.to_string();
  if (kind == "321") return bjs_forward(path).to_string();
  if (kind == "231") return exc_forward(path).to_string();
  return tree_to_string(from_contour(path));
}

// "231" is shorthand for "2 3 1".
Permutation parse_pattern(std::string text) {
  if (text.find(' ') == std::string::npos) {
    std::string spaced;
    for (char ch : text) {
      if (!spaced.empty()) spaced += ' ';
      spaced += ch;
    }
    text = spaced;
  }
  return Permutation::parse(text);
}

const std::vector<std::string> kKinds{"dyck", "321", "231", "tree"};

std::string rational_line(const mpq_class& q) { return q.get_str() + " (" + format_double(q.get_d()) + ")"; }

nlohmann::ordered_json petrov_json(const PetrovReport& r) {
  auto margin = [](double v) -> nlohmann::ordered_json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  };
  nlohmann::ordered_json j{
      {"n", r.n},        {"m", r.m},
      {"a", r.cond_a},   {"b", r.cond_b},
      {"c", r.cond_c},   {"d", r.cond_d},
      {"all", r.all_hold()},
      {"vacuous_cd", r.vacuous_cd},
      {"margins", {{"a", margin(r.margin_a)}, {"b", margin(r.margin_b)}, {"c", margin(r.margin_c)}, {"d", margin(r.margin_d)}}},
  };
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  if (r.witness_a) w["a"] = {{"x", r.witness_a->x}, {"height", r.witness_a->height}};
  if (r.witness_b)
    w["b"] = {{"x", r.witness_b->x}, {"y", r.witness_b->y}, {"height_x", r.witness_b->height_x}, {"height_y", r.witness_b->height_y}};
  if (r.witness_c)
    w["c"] = {{"i", r.witness_c->i}, {"j", r.witness_c->j}, {"A_i", r.witness_c->value_i}, {"A_j", r.witness_c->value_j}};
  if (r.witness_d)
    w["d"] = {{"i", r.witness_d->i}, {"j", r.witness_d->j}, {"D_i", r.witness_d->value_i}, {"D_j", r.witness_d->value_j}};
  j["witnesses"] = w;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck paths, pattern-avoiding permutations and their scaling limits"};
  app.require_subcommand(1);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker cap (results do not depend on it)")
      ->envname("PAV_THREADS")
      ->check(CLI::PositiveNumber);

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform random objects, one per line");
  std::size_t sample_n = 0, sample_count = 1;
  std::uint64_t sample_seed = 0;
  std::string sample_as = "dyck";
  sample->add_option("--n", sample_n, "Semilength")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", sample_count, "Number of objects");
  sample->add_option("--seed", sample_seed, "Seed");
  sample->add_option("--as", sample_as, "Output form")->check(CLI::IsMember(kKinds));

  // map
  auto* map = app.add_subcommand("map", "Convert between paths, permutations and trees");
  std::string map_from, map_to;
  std::vector<std::string> map_inputs;
  map->add_option("--from", map_from)->required()->check(CLI::IsMember(kKinds));
  map->add_option("--to", map_to)->required()->check(CLI::IsMember(kKinds));
  map->add_option("input", map_inputs, "Objects (stdin lines when omitted)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Path and permutation statistics");
  std::string stats_from = "dyck";
  std::vector<std::string> stats_inputs;
  stats_cmd->add_option("--from", stats_from)->check(CLI::IsMember(kKinds));
  stats_cmd->add_option("input", stats_inputs, "Objects (stdin lines when omitted)");

  // check
  auto* check = app.add_subcommand("check", "Pass through permutations avoiding a pattern");
  std::string check_pattern;
  std::vector<std::string> check_inputs;
  check->add_option("--pattern", check_pattern, "321, 231 or any pattern of size <= 4, e.g. \"1 3 2\"")->required();
  check->add_option("input", check_inputs, "Permutations (stdin lines when omitted)");

  // expect
  auto* expect = app.add_subcommand("expect", "Exact fringe-subtree expectations");
  std::string expect_what;
  std::int64_t expect_n = 0, expect_k = 0;
  bool expect_approx = false;
  expect->add_option("what", expect_what, "xi or hat_xi")->required()->check(CLI::IsMember({"xi", "hat_xi"}));
  expect->add_option("--n", expect_n)->required()->check(CLI::NonNegativeNumber);
  expect->add_option("--k", expect_k)->required();
  expect->add_flag("--approx", expect_approx, "Floating evaluation only");

  // petrov
  auto* petrov = app.add_subcommand("petrov", "Moderate-deviation conditions as JSON");
  std::vector<std::string> petrov_inputs;
  std::optional<std::size_t> petrov_n;
  std::size_t petrov_reps = 100;
  std::uint64_t petrov_seed = 0;
  petrov->add_option("input", petrov_inputs, "Paths (stdin lines when omitted)");
  petrov->add_option("--n", petrov_n, "Estimate the frequency at this semilength instead");
  petrov->add_option("--replicates", petrov_reps);
  petrov->add_option("--seed", petrov_seed);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a convergence experiment");
  ExperimentConfig cfg;
  bool no_timing = false;
  double opt_c = 0, opt_alpha = 0;
  experiment->add_option("--theorem", cfg.theorem_id, "thm321, thm231, height, subtree, random_index, moments")->required();
  experiment->add_option("--n-grid", cfg.n_grid, "Strictly increasing semilengths")->required()->delimiter(',');
  experiment->add_option("--replicates", cfg.replicates);
  experiment->add_option("--seed", cfg.seed);
  auto* c_opt = experiment->add_option("--c", opt_c);
  auto* alpha_opt = experiment->add_option("--alpha", opt_alpha);
  experiment->add_option("--epsilon", cfg.epsilon);
  experiment->add_option("--out", cfg.output, "JSON report path (stdout when omitted)");
  experiment->add_flag("--keep-raw", cfg.keep_raw, "Also write per-replicate values as CSV");
  experiment->add_option("--raw-out", cfg.raw_output, "CSV path (default: <out>.csv)");
  experiment->add_flag("--no-timing", no_timing, "Report wall_seconds as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  int status = 0;
  try {
    if (*sample) {
      for (std::size_t k = 0; k < sample_count; ++k)
        std::cout << write_object(sample_as, sample_uniform(sample_n, substream_seed(sample_seed, sample_n, k))) << '\n';
    } else if (*map) {
      for (const auto& line : input_lines(map_inputs)) {
        try {
          std::cout << write_object(map_to, read_object(map_from, trimmed(line))) << '\n';
        } catch (const Error& e) {
          std::cerr << "pav map: " << to_string(e.code()) << ": " << e.what() << '\n';
          status = kDataError;
        }
      }
    } else if (*stats_cmd) {
      for (const auto& line : input_lines(stats_inputs)) {
        try {
          const DyckPath path = read_object(stats_from, trimmed(line));
          const Permutation sigma = exc_forward(path);
          const Permutation tau = bjs_forward(path);
          const SubtreeStats s = stats(from_contour(path));
          std::int64_t exceed = 0, deficit = 0, top = 0;
          for (std::size_t i = 1; i <= tau.size(); ++i) {
            const std::int64_t e = exceedance(tau, i);
            exceed += e > 0;
            deficit += e < 0;
            top = std::max(top, e);
          }
          std::cout << "path " << path.to_string() << '\n'
                    << "n " << path.semilength() << '\n'
                    << "M " << max_height(path) << '\n'
                    << "m " << max_deficit(sigma) << '\n'
                    << "inversions " << inversions(sigma) << '\n'
                    << "path_length " << s.path_length << '\n'
                    << "exceedances " << exceed << '\n'
                    << "deficiencies " << deficit << '\n'
                    << "fixed_points " << static_cast<std::int64_t>(tau.size()) - exceed - deficit << '\n'
                    << "max_exceedance " << top << '\n'
                    << "runs " << runs(path).m << '\n';
        } catch (const Error& e) {
          std::cerr << "pav stats: " << to_string(e.code()) << ": " << e.what() << '\n';
          status = kDataError;
        }
      }
    } else if (*check) {
      Permutation pattern;
      try {
        pattern = parse_pattern(check_pattern);
      } catch (const Error&) {
        throw UsageError("--pattern must be a permutation such as 231 or \"2 3 1\"");
      }
      if (pattern.size() < 1 || pattern.size() > 4) throw UsageError("--pattern must have size 1..4");
      const std::string name = pattern.to_string();
      for (const auto& line : input_lines(check_inputs)) {
        try {
          const Permutation perm = Permutation::parse(trimmed(line));
          bool avoids = false;
          if (name == "3 2 1") avoids = avoids_321_fast(perm);
          else if (name == "2 3 1") avoids = avoids_231_fast(perm);
          else avoids = !contains_pattern(perm, pattern);
          if (avoids) {
            std::cout << perm.to_string() << '\n';
          } else {
            std::cerr << "contains " << name << ": " << perm.to_string() << '\n';
            status = kDataError;
          }
        } catch (const Error& e) {
          std::cerr << "pav check: " << to_string(e.code()) << ": " << e.what() << '\n';
          status = kDataError;
        }
      }
    } else if (*expect) {
      if (expect_what == "xi") {
        std::cout << (expect_approx ? format_double(expected_xi_approx(expect_n, expect_k))
                                    : rational_line(expected_xi(expect_n, expect_k)))
                  << '\n';
      } else {
        std::cout << (expect_approx ? format_double(expected_hat_xi_approx(expect_n, expect_k))
                                    : rational_line(expected_hat_xi(expect_n, expect_k)))
                  << '\n';
      }
    } else if (*petrov) {
      if (petrov_n) {
        const PetrovFrequency f = petrov_frequency(*petrov_n, petrov_reps, petrov_seed, threads);
        nlohmann::ordered_json j{{"n", f.n},           {"replicates", f.replicates}, {"frequency", f.frequency},
                                 {"fail_a", f.fail_a}, {"fail_b", f.fail_b},         {"fail_c", f.fail_c},
                                 {"fail_d", f.fail_d}};
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& line : input_lines(petrov_inputs)) {
          try {
            std::cout << petrov_json(check_petrov(DyckPath::parse(trimmed(line)))).dump() << '\n';
          } catch (const Error& e) {
            std::cerr << "pav petrov: " << to_string(e.code()) << ": " << e.what() << '\n';
            status = kDataError;
          }
        }
      }
    } else if (*experiment) {
      if (*c_opt) cfg.c = opt_c;
      if (*alpha_opt) cfg.alpha = opt_alpha;
      cfg.threads = threads;
      cfg.record_timing = !no_timing;
      if (cfg.keep_raw && cfg.output.empty() && cfg.raw_output.empty())
        throw UsageError("--keep-raw needs --out or --raw-out");
      const ExperimentReport report = run_experiment(cfg);
      if (cfg.output.empty()) std::cout << report_json(report);
    }
  } catch (const UsageError& e) {
    std::cerr << "pav: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "pav: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::BadConfig ? kUsageError : kDataError;
  } catch (const std::exception& e) {
    std::cerr << "pav: " << e.what() << '\n';
    return kDataError;
  }
  return status;
}
