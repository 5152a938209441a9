// macbeath: command-line front end.
//
// Exit status: 0 success, 1 domain error (bad reduction, inadmissible type,
// invalid argument), 2 verification failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "macbeath/census.hpp"
#include "macbeath/density.hpp"
#include "macbeath/error.hpp"
#include "macbeath/intpoly.hpp"
#include "macbeath/numkit.hpp"
#include "macbeath/report.hpp"
#include "macbeath/verify.hpp"

using namespace macbeath;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

struct Options {
  unsigned m = 3;
  unsigned n = 7;
  std::uint64_t p = 0;
  std::optional<std::size_t> first;
  std::optional<std::uint64_t> bound;
  std::string format = "table";
  std::string output;
  int workers = 0;
  std::uint64_t seed = 0;
  std::string galois_override;
  std::string cache;
  std::string strategy = "enumerate";
  std::vector<std::string> suites;
};

int default_workers() {
  if (const char* env = std::getenv("MACBEATH_WORKERS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (...) {
      throw Error(ErrorCode::InvalidArgument, std::string("MACBEATH_WORKERS is not an integer: ") + env);
    }
  }
  return 0;
}

std::optional<density::GaloisStructure> override_of(const Options& o) {
  if (o.galois_override.empty()) return std::nullopt;
  return density::parse_galois_structure(o.galois_override);
}

report::RunInfo run_info(const std::string& command, const Options& o) {
  return {command, o.workers, o.seed};
}

void require_prime(std::uint64_t p) {
  if (!numkit::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

std::vector<std::string> coefficient_strings(const intpoly::IntPoly& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(c.str());
  return out;
}

// --- subcommands -----------------------------------------------------------

int cmd_psi(const Options& o, std::ostream& out) {
  const auto f = intpoly::psi(o.n);
  const auto coeffs = coefficient_strings(f);
  switch (report::parse_format(o.format)) {
    case report::Format::Json:
      out << json{{"n", o.n}, {"degree", f.degree()}, {"coefficients", coeffs}, {"polynomial", f.to_string()}}.dump(2)
          << "\n";
      break;
    case report::Format::Csv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << "," << coeffs[i] << "\n";
      break;
    case report::Format::Table:
      out << "Psi_" << o.n << "(x) = " << f.to_string() << "\n";
      out << "coefficients (constant first): ";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i];
      out << "\n";
      break;
  }
  return 0;
}

int cmd_disc(const Options& o, std::ostream& out) {
  const auto f1 = intpoly::s_polynomial(o.m, o.n);
  const auto disc = intpoly::discriminant(f1);
  const std::uint64_t limit = o.bound.value_or(1000);
  std::vector<std::uint64_t> bad;
  for (auto p : numkit::primes_up_to(limit)) {
    if (disc % p == 0) bad.push_back(p);
  }
  switch (report::parse_format(o.format)) {
    case report::Format::Json:
      out << json{{"m", o.m},
                  {"n", o.n},
                  {"f1", f1.to_string('s')},
                  {"f1_coefficients", coefficient_strings(f1)},
                  {"discriminant", disc.str()},
                  {"bound", limit},
                  {"bad_primes", bad}}
                 .dump(2)
          << "\n";
      break;
    case report::Format::Csv:
      out << "m,n,discriminant,bad_primes\n" << o.m << "," << o.n << "," << disc.str() << ",";
      for (std::size_t i = 0; i < bad.size(); ++i) out << (i ? "|" : "") << bad[i];
      out << "\n";
      break;
    case report::Format::Table:
      out << "f1(s) = " << f1.to_string('s') << "\n";
      out << "disc f1 = " << disc.str() << "\n";
      out << "primes <= " << limit << " dividing it:";
      for (auto p : bad) out << " " << p;
      out << "\n";
      break;
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_prime(o.p);
  const auto rec = census::map_census(o.m, o.n, o.p);
  report::write_census(out, rec, report::parse_format(o.format), run_info("classify", o));
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  require_prime(o.p);
  census::OracleStrategy strategy;
  if (o.strategy == "enumerate") {
    strategy = census::OracleStrategy::Enumerate;
  } else if (o.strategy == "degenerate") {
    strategy = census::OracleStrategy::PreferDegenerate;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + o.strategy + "'");
  }
  const auto rec = census::map_census(o.m, o.n, o.p);
  const auto fmt = report::parse_format(o.format);
  bool all_agree = true;
  json rows = json::array();
  if (fmt == report::Format::Csv) out << "class,factor,chi,oracle,agrees,degenerate,conjugation_ok,r,det_w\n";
  for (std::size_t i = 0; i < rec.classes.size(); ++i) {
    const auto res = census::matrix_oracle(rec, i, strategy);
    const auto& w = res.witness;
    all_agree = all_agree && res.agrees && w.conjugation_ok;
    const auto det_w = census::det(w.w);
    switch (fmt) {
      case report::Format::Json:
        rows.push_back({{"class", i},
                        {"factor", rec.classes[i].factor.to_string('s')},
                        {"chi", rec.classes[i].chi},
                        {"oracle", std::string(census::to_string(res.verdict))},
                        {"agrees", res.agrees},
                        {"degenerate", w.degenerate},
                        {"sign", w.sign},
                        {"conjugation_ok", w.conjugation_ok},
                        {"t", w.t.to_string()},
                        {"r", w.r.to_string()},
                        {"x", {w.x.a.to_string(), w.x.b.to_string(), w.x.c.to_string(), w.x.d.to_string()}},
                        {"w", {w.w.a.to_string(), w.w.b.to_string(), w.w.c.to_string(), w.w.d.to_string()}},
                        {"det_w", det_w.to_string()}});
        break;
      case report::Format::Csv:
        out << i << "," << rec.classes[i].factor.to_string('s') << "," << rec.classes[i].chi << "," << census::to_string(res.verdict)
            << "," << res.agrees << "," << w.degenerate << "," << w.conjugation_ok << "," << w.r.to_string() << ","
            << det_w.to_string() << "\n";
        break;
      case report::Format::Table:
        out << "class " << i << " [" << rec.classes[i].factor.to_string('s') << "]: chi(s) = "
            << rec.classes[i].chi << ", oracle verdict " << census::to_string(res.verdict) << (res.agrees ? "  ok" : "  MISMATCH")
            << "\n  t = " << w.t.to_string() << ", r = " << w.r.to_string()
            << (w.degenerate ? ", degenerate branch" : "") << "\n  x = [" << w.x.a.to_string() << ", "
            << w.x.b.to_string() << "; " << w.x.c.to_string() << ", " << w.x.d.to_string() << "]"
            << "\n  w = [" << w.w.a.to_string() << ", " << w.w.b.to_string() << "; " << w.w.c.to_string() << ", "
            << w.w.d.to_string() << "], det w = " << det_w.to_string()
            << (w.conjugation_ok ? "" : "  (conjugation check FAILED)") << "\n";
        break;
    }
  }
  if (fmt == report::Format::Json) {
    out << json{{"m", o.m}, {"n", o.n}, {"p", o.p}, {"strategy", o.strategy}, {"classes", rows}}.dump(2) << "\n";
  }
  return all_agree ? 0 : kExitVerify;
}

int cmd_pattern(const Options& o, std::ostream& out) {
  const std::uint64_t bound = o.bound.value_or(100000);
  const auto pc = density::pattern_census(o.m, o.n, bound, o.workers, override_of(o));
  report::write_patterns(out, pc, report::parse_format(o.format), run_info("pattern", o));
  return pc.bridge_violations.empty() ? 0 : kExitVerify;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.first && o.bound) throw Error(ErrorCode::InvalidArgument, "--first and --bound are exclusive");
  auto spec = density::default_sweep(o.m, o.n, o.first.value_or(400));
  if (o.bound) spec.primes.limit = numkit::UpTo{*o.bound};
  spec.galois_override = override_of(o);
  density::SweepOptions opts;
  opts.workers = o.workers;
  if (!o.cache.empty()) opts.cache = o.cache;
  const auto res = density::sweep(spec, opts);
  report::write_sweep(out, res, report::parse_format(o.format), run_info("sweep", o));
  return 0;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const auto model = density::galois_model(o.m, o.n, override_of(o));
  const auto predicted = density::predicted_sigma_densities(model);
  std::optional<std::map<density::Pattern, Rational>> patterns;
  if (model.structure == density::GaloisStructure::FullWreath && model.r <= 16) {
    patterns = density::wreath_cycle_distribution(o.n);
  }
  switch (report::parse_format(o.format)) {
    case report::Format::Json: {
      auto j = report::model_to_json(model, predicted);
      if (patterns) {
        json pj = json::array();
        for (const auto& [pat, dens] : *patterns) {
          pj.push_back({{"pattern", report::pattern_string(pat)}, {"density", report::rational_string(dens)}});
        }
        j["patterns"] = pj;
      }
      out << j.dump(2) << "\n";
      break;
    }
    case report::Format::Csv:
      out << "k,predicted\n";
      if (predicted) {
        for (std::size_t k = 0; k < predicted->size(); ++k) {
          out << k << "," << report::rational_string((*predicted)[k]) << "\n";
        }
      }
      break;
    case report::Format::Table:
      out << "{" << o.m << "," << o.n << "}: r = " << model.r << ", Galois structure "
          << density::to_string(model.structure) << (model.overridden ? " (override)" : "") << "\n";
      if (model.negative_roots) out << "negative roots of f1: " << *model.negative_roots << "\n";
      if (!predicted) {
        out << "no density prediction for an unknown structure\n";
      } else {
        for (std::size_t k = 0; k < predicted->size(); ++k) {
          out << "  Sigma_" << k << ": " << report::rational_string((*predicted)[k]) << "\n";
        }
      }
      if (patterns) {
        out << "degree patterns of f2:\n";
        for (const auto& [pat, dens] : *patterns) {
          out << "  {" << report::pattern_string(pat) << "}: " << report::rational_string(dens) << "\n";
        }
      }
      break;
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = verify::suite_names();
  verify::SuiteOptions opts;
  opts.workers = o.workers;
  const auto fmt = report::parse_format(o.format);
  bool ok = true;
  json all = json::array();
  for (const auto& name : suites) {
    const auto res = verify::run_suite(name, opts);
    ok = ok && res.passed();
    if (fmt == report::Format::Json) {
      json checks = json::array();
      for (const auto& c : res.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
      }
      all.push_back({{"suite", name}, {"passed", res.passed()}, {"checks", checks}});
    } else if (fmt == report::Format::Csv) {
      if (&name == &suites.front()) out << "suite,check,passed,expected,actual\n";
      for (const auto& c : res.checks) {
        out << name << ",\"" << c.name << "\"," << c.passed << ",\"" << c.expected << "\",\"" << c.actual << "\"\n";
      }
    } else {
      out << "== " << name << (res.passed() ? " PASS" : " FAIL") << " (" << std::fixed << std::setprecision(2)
          << res.seconds << " s)\n";
      for (const auto& c : res.checks) {
        out << (c.passed ? "  pass  " : "  FAIL  ") << c.name << "\n";
        if (!c.passed) out << "        expected: " << c.expected << "\n        actual:   " << c.actual << "\n";
      }
    }
  }
  if (fmt == report::Format::Json) out << all.dump(2) << "\n";
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner/outer regularity of Macbeath maps, parity checks and Sigma_k density sweeps"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--output", o.output, "write to this file instead of stdout");
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "rotation order at vertices (3, 4 or 6)");
    sub->add_option("--n", o.n, "face order")->required();
  };
  auto add_parallel = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "OpenMP threads (default: MACBEATH_WORKERS or all cores)");
    sub->add_option("--seed", o.seed, "recorded in report headers");
    sub->add_option("--galois-override", o.galois_override, "full-wreath, even-subgroup or unknown");
  };

  auto* psi = app.add_subcommand("psi", "minimal polynomial of 2cos(2pi/n)");
  psi->add_option("--n", o.n, "n")->required();
  add_common(psi);

  auto* disc = app.add_subcommand("disc", "f1 and its discriminant");
  add_type(disc);
  disc->add_option("--bound", o.bound, "list dividing primes up to this bound (default 1000)");
  add_common(disc);

  auto* classify = app.add_subcommand("classify", "trace classes and inner/outer regularity at one prime");
  add_type(classify);
  classify->add_option("--p", o.p, "prime")->required();
  add_common(classify);

  auto* oracle = app.add_subcommand("oracle", "explicit matrix witness for each class");
  add_type(oracle);
  oracle->add_option("--p", o.p, "prime")->required();
  oracle->add_option("--strategy", o.strategy, "enumerate or degenerate")
      ->check(CLI::IsMember({"enumerate", "degenerate"}));
  add_common(oracle);

  auto* pattern = app.add_subcommand("pattern", "degree patterns of f2 over primes up to a bound");
  add_type(pattern);
  pattern->add_option("--bound", o.bound, "prime bound (default 100000)");
  add_parallel(pattern);
  add_common(pattern);

  auto* sweep = app.add_subcommand("sweep", "Sigma_k counts over primes = +-1 mod N");
  add_type(sweep);
  sweep->add_option("--first", o.first, "number of primes (default 400)");
  sweep->add_option("--bound", o.bound, "all primes up to this bound instead");
  sweep->add_option("--cache", o.cache, "JSON-lines cache of census records");
  add_parallel(sweep);
  add_common(sweep);

  auto* predict = app.add_subcommand("predict", "Galois model and predicted densities");
  add_type(predict);
  predict->add_option("--galois-override", o.galois_override, "full-wreath, even-subgroup or unknown");
  add_common(predict);

  auto* verify_cmd = app.add_subcommand("verify", "run named verification suites");
  verify_cmd->add_option("suites", o.suites, "table1 examples appendix parity oracle patterns, or all");
  verify_cmd->add_option("--workers", o.workers, "OpenMP threads");
  add_common(verify_cmd);

  try {
    o.workers = default_workers();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[invalid_argument]: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitDomain;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int status = 0;
    if (*psi) status = cmd_psi(o, buffer);
    if (*disc) status = cmd_disc(o, buffer);
    if (*classify) status = cmd_classify(o, buffer);
    if (*oracle) status = cmd_oracle(o, buffer);
    if (*pattern) status = cmd_pattern(o, buffer);
    if (*sweep) status = cmd_sweep(o, buffer);
    if (*predict) status = cmd_predict(o, buffer);
    if (*verify_cmd) status = cmd_verify(o, buffer);
    if (o.output.empty()) {
      std::cout << buffer.str();
    } else {
      file.open(o.output);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.output);
      file << buffer.str();
    }
    if (status == kExitVerify) std::cerr << "error[verification_failed]: one or more checks failed\n";
    return status;
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? kExitVerify : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return kExitVerify;
  }
}
