#include "wzw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <regex>

#include "wzw/galois_kernel.hpp"
#include "wzw/qseries.hpp"
#include "wzw/suites.hpp"
#include "wzw/wzwrep.hpp"

namespace wzw::cli {

using json = nlohmann::json;

unsigned default_workers() {
  const char* env = std::getenv("WZW_WORKERS");
  if (env == nullptr) {
    return 0;
  }
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return (end != env && *end == '\0' && v > 0) ? static_cast<unsigned>(v) : 0;
}

namespace {

enum class Format { exact, floating, both };

struct RunConfig {
  int level = 1;
  std::string matrix;
  std::string path = "auto";
  std::int64_t truncation = 10;
  double tolerance = kDefaultSTransformTolerance;
  std::string format = "both";
  std::int64_t bound = kDefaultEnumerationBound;
  unsigned workers = 0;
  int samples = 20;
  std::uint64_t seed = 42;
  std::int64_t prime = 7;
  std::string numeric_tau;
  bool list = false;
  bool check_lists = false;
  std::string out_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& f) {
  if (f == "exact") return Format::exact;
  if (f == "float") return Format::floating;
  if (f == "both") return Format::both;
  throw UsageError("unknown format '" + f + "'");
}

json cyclotomic_json(const Cyclotomic& x, Format f) {
  json j;
  if (f != Format::floating) {
    j["order"] = x.order();
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) {
      coeffs.push_back(c.get_str());
    }
    j["coeffs"] = coeffs;
  }
  if (f != Format::exact) {
    const auto z = x.embed();
    j["approx"] = {z.real(), z.imag()};
  }
  return j;
}

json matrix_json(const RepMatrix& m, Format f) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row.push_back(cyclotomic_json(m(i, j), f));
    }
    rows.push_back(row);
  }
  return rows;
}

json residue_json(const ResidueMatrix& r) { return {{r.A, r.B}, {r.C, r.D}}; }

json residue_list(const std::vector<ResidueMatrix>& v) {
  json out = json::array();
  for (const auto& r : v) {
    out.push_back(residue_json(r));
  }
  return out;
}

json series_json(const QSeries& s) {
  // Coefficients are listed at the spacing of the nonzero terms.
  std::int64_t step = 0;
  for (std::size_t j = 1; j < s.coeffs().size(); ++j) {
    if (s.coeffs()[j] != 0) {
      step = std::gcd(step, static_cast<std::int64_t>(j));
    }
  }
  if (step == 0) {
    step = 1;
  }
  json coeffs = json::array();
  for (std::size_t j = 0; j < s.coeffs().size(); j += static_cast<std::size_t>(step)) {
    coeffs.push_back(s.coeffs()[j].get_str());
  }
  return {{"denominator", s.denominator()},
          {"offset", s.offset()},
          {"step", step},
          {"coeffs", coeffs}};
}

std::complex<double> parse_tau(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*([-+]?(?:\d+\.?\d*|\.\d+))?\s*(?:([-+])\s*((?:\d+\.?\d*|\.\d+))?\s*\*?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([-+]?(?:\d+\.?\d*|\.\d+))?\s*\*?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const std::string im = m[1].str();
    return {0.0, im.empty() || im == "+" ? 1.0 : (im == "-" ? -1.0 : std::stod(im))};
  }
  if (std::regex_match(text, m, pattern) && m[1].matched) {
    const double re = std::stod(m[1].str());
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") {
        im = -im;
      }
    }
    return {re, im};
  }
  throw UsageError("cannot parse tau '" + text + "', expected e.g. 0.1+0.9i");
}

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

json suite_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}};
}

int n_of(const RunConfig& cfg) { return LevelData::from_level(cfg.level).n; }

int cmd_st_matrices(const RunConfig& cfg, std::ostream& out) {
  const int n = n_of(cfg);
  const Format f = parse_format(cfg.format);
  emit(out, {{"level", cfg.level}, {"n", n}, {"name", "S"}, {"matrix", matrix_json(rho_S(n), f)}});
  emit(out, {{"level", cfg.level}, {"n", n}, {"name", "T"}, {"matrix", matrix_json(rho_T(n), f)}});
  return kExitOk;
}

Path parse_path(const std::string& p) {
  if (p == "auto") return Path::automatic;
  if (p == "closed") return Path::closed;
  if (p == "word") return Path::word;
  if (p == "theorem1") return Path::theorem1;
  throw UsageError("unknown path '" + p + "'");
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const LevelData lv = LevelData::from_level(cfg.level);
  const Format f = parse_format(cfg.format);
  const UnimodularMatrix m = parse_matrix(cfg.matrix);
  const ResidueMatrix r = ResidueMatrix::reduce(m, lv.N);
  const Path path = parse_path(cfg.path);
  json rec{{"level", cfg.level},
           {"n", lv.n},
           {"N", lv.N},
           {"input", m.to_string()},
           {"residue", residue_json(r)},
           {"word", decompose(m).to_string()},
           {"case", to_string(closed_case(r, lv.n))},
           {"path", cfg.path},
           {"matrix", matrix_json(rho(r, lv.n, path), f)}};
  emit(out, rec);
  return kExitOk;
}

int cmd_kernel(const RunConfig& cfg, std::ostream& out) {
  const LevelData lv = LevelData::from_level(cfg.level);
  const KernelReport rep = enumerate_kernel(lv.n, cfg.workers, cfg.bound);
  json rec{{"level", cfg.level},
           {"n", lv.n},
           {"N", lv.N},
           {"group_order", rep.group_order},
           {"kernel_order", rep.kernel.size()},
           {"image_order", rep.image_order},
           {"float_candidates", rep.float_candidates},
           {"is_subgroup", rep.is_subgroup},
           {"c_never_coprime", rep.c_never_coprime},
           {"coprime_d_slice", residue_list(rep.coprime_slice)}};
  if (cfg.list) {
    rec["kernel"] = residue_list(rep.kernel);
  }
  bool ok = rep.is_subgroup && rep.c_never_coprime;
  if (cfg.check_lists) {
    rec["listed"] = residue_list(rep.listed);
    rec["matches_list"] = rep.matches_list;
    rec["extra"] = residue_list(rep.extra);
    rec["missing"] = residue_list(rep.missing);
    ok = ok && rep.matches_list;
  }
  rec["passed"] = ok;
  emit(out, rec);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_genus(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t p = cfg.prime;
  const std::int64_t g = genus(p);
  const Rational product = genus_product_form(p);
  const std::int64_t factored = genus_factored_form(p);
  const bool agree = product == Rational(g) && factored == g;
  emit(out, {{"prime", p},
             {"genus", g},
             {"product_form", product.get_str()},
             {"factored_form", factored},
             {"forms_agree", agree}});
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_image_order(const RunConfig& cfg, std::ostream& out) {
  const LevelData lv = LevelData::from_level(cfg.level);
  const KernelReport rep = enumerate_kernel(lv.n, cfg.workers, cfg.bound);
  json rec{{"level", cfg.level},
           {"n", lv.n},
           {"N", lv.N},
           {"group_order", rep.group_order},
           {"kernel_order", rep.kernel.size()},
           {"image_order", rep.image_order}};
  if (is_prime(lv.n) && mod(lv.n, 4) == 3) {
    rec["predicted_image_order"] = predicted_image_order(lv.n);
  }
  emit(out, rec);
  return kExitOk;
}

int cmd_characters(const RunConfig& cfg, std::ostream& out) {
  const int n = n_of(cfg);
  std::optional<std::complex<double>> tau;
  if (!cfg.numeric_tau.empty()) {
    tau = parse_tau(cfg.numeric_tau);
    if (tau->imag() <= 0) {
      throw UsageError("tau must lie in the upper half plane");
    }
  }
  for (int lambda = 1; lambda < n; ++lambda) {
    const QSeries chi = character(lambda, n, cfg.truncation);
    json rec{{"level", cfg.level},
             {"n", n},
             {"lambda", lambda},
             {"text", chi.to_string()},
             {"series", series_json(chi)}};
    if (tau) {
      const auto v = numeric_eval(chi, *tau);
      rec["tau"] = {tau->real(), tau->imag()};
      rec["value"] = {v.real(), v.imag()};
    }
    emit(out, rec);
  }
  return kExitOk;
}

std::vector<SuiteResult> identity_suites(const RunConfig& cfg) {
  const int n = n_of(cfg);
  std::vector<SuiteResult> results;
  auto add = [&](std::string name, bool ok, std::int64_t checked) {
    results.push_back({std::move(name), ok, checked, ok ? "" : "identity fails"});
  };
  add("eta_inverse_cubed_recurrence", log_eta_expansion_check(std::max<std::int64_t>(cfg.truncation, 1)),
      cfg.truncation);
  add("log_eta_printed_grouping", log_eta_printed_grouping_check(), 8);
  bool nonneg = true;
  for (int lambda = 1; lambda < n; ++lambda) {
    const QSeries chi = character(lambda, n, cfg.truncation);
    for (const auto& c : chi.coeffs()) {
      nonneg = nonneg && c >= 0 && c.get_den() == 1;
    }
  }
  add("character_coefficients_nonnegative n=" + std::to_string(n), nonneg, n - 1);
  if (cfg.level == 1) {
    add("k1_constant_identity", verify_k1_identity(cfg.truncation), cfg.truncation);
    add("k1_t_parametrization", verify_t_parametrization(cfg.truncation), cfg.truncation);
  }
  for (const std::complex<double> tau : {std::complex<double>(0, 1), std::complex<double>(0.1, 0.9)}) {
    std::ostringstream name;
    name << "s_transform n=" << n << " tau=" << tau.real() << "+" << tau.imag() << "i";
    const double dev = s_transform_deviation(n, tau, kDefaultNumericTruncation);
    std::ostringstream detail;
    detail << "max deviation " << std::scientific << std::setprecision(3) << dev;
    SuiteResult r{name.str(), dev < cfg.tolerance, 1, detail.str()};
    results.push_back(r);
  }
  return results;
}

int report(const std::vector<SuiteResult>& results, std::ostream& out) {
  bool ok = true;
  for (const auto& r : results) {
    emit(out, suite_json(r));
    ok = ok && r.passed;
  }
  emit(out, {{"summary", ok ? "pass" : "fail"}, {"suites", results.size()}});
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_identities(const RunConfig& cfg, std::ostream& out) {
  return report(identity_suites(cfg), out);
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
  const LevelData lv = LevelData::from_level(cfg.level);
  const int n = lv.n;
  std::vector<SuiteResult> results{
      suite_oracle_equivalence(n, cfg.samples, cfg.seed),
      suite_theorem1(n, cfg.samples, cfg.seed),
      suite_well_defined(n, cfg.samples, cfg.seed),
      suite_covariance(n, std::min(cfg.samples, 20), cfg.seed),
      suite_bantay(n),
      suite_sigma_perm(n),
      suite_kernel_sums(n),
      suite_gauss_sums(n),
  };
  if (n % 2 == 1) {
    results.push_back(suite_g_parity(n, cfg.samples, cfg.seed));
  }
  if (lv.N <= cfg.bound) {
    results.push_back(suite_kernel(n, cfg.workers, cfg.bound));
  }
  RunConfig id = cfg;
  id.truncation = std::max<std::int64_t>(cfg.truncation, 30);
  for (auto& r : identity_suites(id)) {
    results.push_back(std::move(r));
  }
  return report(results, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular representation of the affine sl2 characters"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = default_workers();

  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level,-k", cfg.level, "level k >= 1 (n = k + 2)")
        ->required()
        ->check(CLI::Range(1, 1000));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_file, "write records to FILE instead of stdout");
  };
  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--bound", cfg.bound, "largest modulus that may be enumerated")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "worker threads (0: hardware; env WZW_WORKERS)");
  };

  auto* st = app.add_subcommand("st-matrices", "print rho(S) and rho(T)");
  add_level(st);
  st->add_option("--format", cfg.format, "exact | float | both");

  auto* ev = app.add_subcommand("eval", "evaluate rho on an SL2(Z) matrix");
  add_level(ev);
  ev->add_option("--matrix", cfg.matrix, "[[a,b],[c,d]]")->required();
  ev->add_option("--path", cfg.path, "auto | closed | word | theorem1");
  ev->add_option("--format", cfg.format, "exact | float | both");

  auto* ker = app.add_subcommand("kernel", "enumerate the kernel of rho");
  add_level(ker);
  add_enum(ker);
  ker->add_flag("--list", cfg.list, "print every kernel element");
  ker->add_flag("--check-lists", cfg.check_lists,
                "compare the gcd(d, 2n) = 1 slice with the listed elements");

  auto* gen = app.add_subcommand("genus", "genus for a prime p = 3 mod 4, p >= 7");
  gen->add_option("--prime,-p", cfg.prime, "prime p")->required();

  auto* img = app.add_subcommand("image-order", "order of the image of rho");
  add_level(img);
  add_enum(img);

  auto* ch = app.add_subcommand("characters", "character q-expansions");
  add_level(ch);
  ch->add_option("--terms", cfg.truncation, "integer q-order of truncation")
      ->check(CLI::NonNegativeNumber);
  ch->add_option("--numeric", cfg.numeric_tau, "evaluate at tau, e.g. 0.1+0.9i");

  auto* vi = app.add_subcommand("verify-identities", "series identities and S-transform");
  add_level(vi);
  vi->add_option("--terms", cfg.truncation, "integer q-order of truncation")
      ->check(CLI::NonNegativeNumber);
  vi->add_option("--tolerance", cfg.tolerance, "S-transform tolerance")->check(CLI::PositiveNumber);

  auto* va = app.add_subcommand("verify-all", "every property suite");
  add_level(va);
  add_enum(va);
  va->add_option("--samples", cfg.samples, "random matrices per suite")->check(CLI::PositiveNumber);
  va->add_option("--seed", cfg.seed, "random seed");
  va->add_option("--terms", cfg.truncation, "integer q-order of truncation")
      ->check(CLI::NonNegativeNumber);
  va->add_option("--tolerance", cfg.tolerance, "S-transform tolerance")->check(CLI::PositiveNumber);

  for (auto* sub : {st, ev, ker, gen, img, ch, vi, va}) {
    add_common(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_file.empty()) {
    file.open(cfg.out_file);
    if (!file) {
      err << "error: cannot open " << cfg.out_file << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (st->parsed()) return cmd_st_matrices(cfg, *sink);
    if (ev->parsed()) return cmd_eval(cfg, *sink);
    if (ker->parsed()) return cmd_kernel(cfg, *sink);
    if (gen->parsed()) return cmd_genus(cfg, *sink);
    if (img->parsed()) return cmd_image_order(cfg, *sink);
    if (ch->parsed()) return cmd_characters(cfg, *sink);
    if (vi->parsed()) return cmd_verify_identities(cfg, *sink);
    if (va->parsed()) return cmd_verify_all(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace wzw::cli
