#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanleychar/exactpoly.hpp"
#include "stanleychar/kerov.hpp"
#include "stanleychar/maps.hpp"
#include "stanleychar/mn_oracle.hpp"
#include "stanleychar/perm.hpp"
#include "stanleychar/polynomial_json.hpp"
#include "stanleychar/stanley.hpp"
#include "verify.hpp"

namespace stanleychar::cli {
namespace {

using nlohmann::json;

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void guard(const JobSpec& job, int k, const char* what) {
  require(job.force || k <= kDefaultGuard, std::string(what) + " = " + std::to_string(k) + " exceeds the limit of " +
                                               std::to_string(kDefaultGuard) + "; pass --force to run anyway");
}

void emit(const JobSpec& job, std::ostream& out, const std::string& text, const json& doc) {
  if (job.output == OutputFormat::Json)
    out << doc.dump(2) << '\n';
  else
    out << text << '\n';
}

MultirectangularShape job_shape(const JobSpec& job) { return {job.p, job.q}; }

int run_char(const JobSpec& job, std::ostream& out) {
  const Partition& pi = *job.pi;
  if (job.lambda) {
    const Integer value = normalized_character(pi, *job.lambda);
    emit(job, out, value.get_str(),
         {{"pi", pi.to_string()}, {"lambda", job.lambda->to_string()}, {"value", value.get_str()}});
  } else {
    const MultirectangularShape shape = job_shape(job);
    const Integer value = evaluate_character(pi, shape, job.threads);
    emit(job, out, value.get_str(),
         {{"pi", pi.to_string()}, {"p", shape.p}, {"q", shape.q}, {"value", value.get_str()}});
  }
  return kExitOk;
}

int run_stanley(const JobSpec& job, std::ostream& out) {
  const Polynomial f = stanley_polynomial(*job.pi, job.ell, job.threads);
  emit(job, out, to_text(f), {{"pi", job.pi->to_string()}, {"ell", job.ell}, {"polynomial", to_json(f)}});
  return kExitOk;
}

int run_kerov(const JobSpec& job, std::ostream& out, std::ostream& err) {
  std::optional<KerovPolynomial> kk;
  const bool cached = job.use_cache && !job.cache_dir.empty();
  if (cached) kk = KerovCache(job.cache_dir).load(job.k);
  if (!kk) {
    kk = kerov_polynomial(job.k, job.threads);
    if (cached) {
      try {
        KerovCache(job.cache_dir).store(*kk);
      } catch (const std::exception& e) {
        err << "warning: could not write cache entry: " << e.what() << '\n';
      }
    }
  }
  emit(job, out, to_text(kk->expression), {{"k", kk->k}, {"polynomial", to_json(kk->expression)}});
  return kExitOk;
}

int run_cumulant(const JobSpec& job, std::ostream& out) {
  const CumulantExpression r = free_cumulant_poly(job.j, job.ell, job.threads);
  if (job.lambda) {
    const Integer value = free_cumulant_value(job.j, *job.lambda);
    emit(job, out, value.get_str(), {{"j", job.j}, {"lambda", job.lambda->to_string()}, {"value", value.get_str()}});
  } else {
    emit(job, out, to_text(r.poly), {{"j", job.j}, {"ell", job.ell}, {"polynomial", to_json(r.poly)}});
  }
  return kExitOk;
}

int run_maps(const JobSpec& job, std::ostream& out) {
  const int k = job.pi->size();
  const Permutation pi = permutation_from_partition(*job.pi);
  Permutation s1 = Permutation::identity(0);
  Permutation s2 = Permutation::identity(0);
  try {
    s1 = Permutation::parse(job.sigma1, k);
    s2 = job.sigma2.empty() ? compose(inverse(s1), pi) : Permutation::parse(job.sigma2, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require(compose(s1, s2) == pi, "sigma1*sigma2 is " + compose(s1, s2).to_string() + ", not " + pi.to_string());

  const BipartiteMap m = build_map(s1, s2);
  if (job.dot) {
    out << to_dot(m);
    return kExitOk;
  }
  const std::vector<int> genera = genus_per_component(m);
  const bool minimal = num_cycles(s1) + num_cycles(s2) == k + 1;
  json doc = {{"pi", pi.to_string()},
              {"sigma1", s1.to_string()},
              {"sigma2", s2.to_string()},
              {"edges", m.edges()},
              {"white_vertices", m.white.count()},
              {"black_vertices", m.black.count()},
              {"faces", m.faces.count()},
              {"euler_characteristic", euler_characteristic(m)},
              {"genus", genera},
              {"minimal", minimal}};
  std::string genus_text;
  for (int g : genera) genus_text += (genus_text.empty() ? "" : " ") + std::to_string(g);
  std::string text = "sigma1: " + s1.to_string() + "\nsigma2: " + s2.to_string() + "\nproduct: " + pi.to_string() +
                     "\nedges: " + std::to_string(m.edges()) +
                     "\nwhite vertices: " + std::to_string(m.white.count()) +
                     "\nblack vertices: " + std::to_string(m.black.count()) +
                     "\nfaces: " + std::to_string(m.faces.count()) +
                     "\neuler characteristic: " + std::to_string(euler_characteristic(m)) + "\ngenus: " + genus_text +
                     "\nminimal: " + (minimal ? "true" : "false");
  if (job.lambda) {
    const Integer n = count_embeddings(m, *job.lambda);
    doc["lambda"] = job.lambda->to_string();
    doc["embeddings"] = n.get_str();
    text += "\nembeddings into " + job.lambda->to_string() + ": " + n.get_str();
  }
  emit(job, out, text, doc);
  return kExitOk;
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const VerifyReport report = run_verification(job.suite, job.kmax, job.threads);
  if (job.output == OutputFormat::Json)
    out << report.to_json().dump(2) << '\n';
  else
    out << report.to_text();
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

Partition parse_partition(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<int> parse_list(const std::string& text, const char* flag) {
  try {
    return parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("STANLEYCHAR_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "stanleychar";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "stanleychar";
  return {};
}

void validate(const JobSpec& job) {
  require(job.threads >= 1, "--threads must be positive");
  switch (job.command) {
    case Command::Char:
      require(job.pi.has_value(), "char requires --pi");
      if (job.lambda) {
        require(job.p.empty() && job.q.empty(), "char takes either --lambda or --p/--q, not both");
      } else {
        require(!job.p.empty() && job.p.size() == job.q.size(), "char requires --lambda or --p/--q of equal length");
        require(job_shape(job).is_diagram(),
                "--p/--q must be non-negative with strictly decreasing positive column widths");
        guard(job, job.pi->size(), "|pi|");
      }
      break;
    case Command::Stanley:
      require(job.pi.has_value(), "stanley requires --pi");
      require(job.ell >= 1, "--ell must be at least 1");
      guard(job, job.pi->size(), "|pi|");
      break;
    case Command::Kerov:
      require(job.k >= 1, "kerov requires --k >= 1");
      guard(job, job.k, "k");
      break;
    case Command::Cumulant:
      require(job.j >= 2, "cumulant requires --j >= 2");
      require(job.ell >= 1, "--ell must be at least 1");
      guard(job, job.j - 1, "j-1");
      break;
    case Command::Maps:
      require(job.pi.has_value() && job.pi->size() >= 1, "maps requires a non-empty --pi");
      require(!job.sigma1.empty(), "maps requires --sigma1");
      break;
    case Command::Verify: {
      const auto& names = suite_names();
      require(std::find(names.begin(), names.end(), job.suite) != names.end(), "unknown suite '" + job.suite + "'");
      require(job.kmax >= 1, "--kmax must be at least 1");
      guard(job, job.kmax, "kmax");
      break;
    }
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate(job);
    switch (job.command) {
      case Command::Char: return run_char(job, out);
      case Command::Stanley: return run_stanley(job, out);
      case Command::Kerov: return run_kerov(job, out, err);
      case Command::Cumulant: return run_cumulant(job, out);
      case Command::Maps: return run_maps(job, out);
      case Command::Verify: return run_verify(job, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"Exact normalized characters, Stanley polynomials and Kerov polynomials", "stanleychar"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string output = "text";
  bool force = false;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--force", force, "Lift the complexity guard on k");

  std::string pi, lambda, p, q, sigma1, sigma2, suite = "all", cache_dir;
  int k = 0, j = 0, ell = 1, kmax = 6;
  bool no_cache = false, dot = false;

  auto* ch = app.add_subcommand("char", "Normalized character Ch_pi");
  ch->add_option("--pi", pi, "Cycle type, e.g. 3 or 2,1")->required();
  ch->add_option("--lambda", lambda, "Young diagram as row lengths");
  ch->add_option("--p", p, "Rectangle heights");
  ch->add_option("--q", q, "Rectangle widths");

  auto* st = app.add_subcommand("stanley", "Stanley character polynomial");
  st->add_option("--pi", pi, "Cycle type")->required();
  st->add_option("--ell", ell, "Number of rectangles");

  auto* ke = app.add_subcommand("kerov", "Kerov polynomial K_k");
  ke->add_option("--k", k, "Degree")->required();
  ke->add_flag("--no-cache", no_cache, "Recompute without reading or writing the cache");
  ke->add_option("--cache-dir", cache_dir, "Cache directory");

  auto* cu = app.add_subcommand("cumulant", "Free cumulant R_j");
  cu->add_option("--j", j, "Index")->required();
  cu->add_option("--ell", ell, "Number of rectangles");
  cu->add_option("--lambda", lambda, "Evaluate on this diagram instead");

  auto* ma = app.add_subcommand("maps", "Bipartite map of a factorization");
  ma->add_option("--pi", pi, "Cycle type of the product")->required();
  ma->add_option("--sigma1", sigma1, "First factor in cycle notation")->required();
  ma->add_option("--sigma2", sigma2, "Second factor (default sigma1^-1 pi)");
  ma->add_option("--lambda", lambda, "Count embeddings into this diagram");
  ma->add_flag("--dot", dot, "Print the map in Graphviz format");

  auto* ve = app.add_subcommand("verify", "Run cross-checks");
  ve->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  ve->add_option("--kmax", kmax, "Largest k to check");

  ParseOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = std::string(e.what()) + "\n";
    return outcome;
  }

  try {
    JobSpec job;
    job.threads = threads;
    job.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
    job.force = force;
    job.k = k;
    job.j = j;
    job.ell = ell;
    job.kmax = kmax;
    job.suite = suite;
    job.sigma1 = sigma1;
    job.sigma2 = sigma2;
    job.dot = dot;
    job.use_cache = !no_cache;
    job.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
    if (!pi.empty()) job.pi = parse_partition(pi, "--pi");
    if (!lambda.empty()) job.lambda = parse_partition(lambda, "--lambda");
    if (!p.empty()) job.p = parse_list(p, "--p");
    if (!q.empty()) job.q = parse_list(q, "--q");

    if (ch->parsed()) job.command = Command::Char;
    else if (st->parsed()) job.command = Command::Stanley;
    else if (ke->parsed()) job.command = Command::Kerov;
    else if (cu->parsed()) job.command = Command::Cumulant;
    else if (ma->parsed()) job.command = Command::Maps;
    else job.command = Command::Verify;

    validate(job);
    outcome.job = std::move(job);
  } catch (const UsageError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace stanleychar::cli
