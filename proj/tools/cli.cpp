#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cache_file.hpp"
#include "report.hpp"
#include "schurlc/laurent.hpp"
#include "schurlc/logconcavity.hpp"
#include "schurlc/lr.hpp"
#include "schurlc/schur_ring.hpp"

namespace schurlc::cli {

namespace {

struct Globals {
  std::string output = "text";
  bool verbose = false;
  std::string cache_path;
  int parallelism = 1;

  bool json() const { return output == "json"; }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + text + "'");
  }
  while (used < text.size() && text[used] == ' ') ++used;
  if (used != text.size()) throw ParseError("not an integer: '" + text + "'");
  return v;
}

FamilySpec parse_family(const std::string& text, int terms) {
  const auto parts = split(text, ';');
  if (parts.size() != 3)
    throw ParseError("family literal needs three fields: lambda;beta;alpha");
  return FamilySpec{parse_partition(parts[0]), parse_partition(parts[1]),
                    parse_vector(parts[2]), terms};
}

FamilySpec parse_theorem1(const std::string& text, int terms) {
  const auto parts = split(text, ';');
  if (parts.size() != 3)
    throw ParseError("theorem1 literal needs three fields: lambda;k;j");
  const int k = parse_int(parts[1]);
  const int j = parse_int(parts[2]);
  if (k < 0 || j < 0) throw ParseError("k and j must be non-negative");
  return theorem1_family(parse_partition(parts[0]), k, j, terms);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int report_exit(const CheckReport& r) {
  return r.verdict == Verdict::fails ? exit_failure : exit_ok;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void add_lr(CLI::App& app);
  void add_product(CLI::App& app);
  void add_qbinom(CLI::App& app);
  void add_diagonal(CLI::App& app);
  void add_check(CLI::App& app);
  void add_scan(CLI::App& app);

  int scan_conjecture1();
  int scan_conjecture2();

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  ProductCache cache_;
  bool uses_cache_ = false;
  std::function<int()> action_;

  std::string mu_, nu_, theta_;
  std::optional<int> vars_;
  int n_ = 0, k_ = 0, alpha_ = 0, beta_ = 0, len_ = 5;
  std::optional<int> imax_;
  std::string family_, theorem1_;
  int terms_ = 4;
  bool include_zero_ = false;

  bool conj1_ = false, conj2_ = false;
  Conjecture1Bounds c1_;
  Conjecture2Bounds c2_;
  std::string alphas_ = "-1,0,1,2", betas_ = "0,1,2";
};

void Runner::add_lr(CLI::App& app) {
  auto* sub = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  sub->add_option("--mu", mu_, "partition literal, e.g. [2,1]")->required();
  sub->add_option("--nu", nu_)->required();
  sub->add_option("--theta", theta_)->required();
  sub->callback([this] {
    action_ = [this] {
      uses_cache_ = true;
      const Partition mu = parse_partition(mu_), nu = parse_partition(nu_),
                      theta = parse_partition(theta_);
      const Integer c = cache_.coefficient(mu, nu, theta);
      if (g_.json())
        emit_json(out_, json{{"command", "lr"},
                             {"params",
                              {{"mu", mu_}, {"nu", nu_}, {"theta", theta_}}},
                             {"result", integer_json(c)}});
      else
        out_ << to_string(c) << '\n';
      return int{exit_ok};
    };
  });
}

void Runner::add_product(CLI::App& app) {
  auto* sub = app.add_subcommand("product", "Schur expansion of s_mu s_nu");
  sub->add_option("--mu", mu_)->required();
  sub->add_option("--nu", nu_)->required();
  sub->add_option("--vars", vars_, "restrict to this many variables")
      ->check(CLI::NonNegativeNumber);
  sub->callback([this] {
    action_ = [this] {
      uses_cache_ = true;
      const Partition mu = parse_partition(mu_), nu = parse_partition(nu_);
      SchurExpansion f = *cache_.product(mu, nu);
      if (vars_) f = restrict_vars(f, *vars_);
      if (g_.json()) {
        json params{{"mu", mu_}, {"nu", nu_}};
        if (vars_) params["vars"] = *vars_;
        emit_json(out_, json{{"command", "product"},
                             {"params", params},
                             {"result", to_string(f)}});
      } else {
        out_ << to_string(f) << '\n';
      }
      return int{exit_ok};
    };
  });
}

void Runner::add_qbinom(CLI::App& app) {
  auto* sub = app.add_subcommand("qbinom", "quantum binomial Qbinom(n,k)");
  sub->add_option("--n", n_)->required();
  sub->add_option("--k", k_)->required();
  sub->callback([this] {
    action_ = [this] {
      const LaurentPoly p = quantum_binomial(n_, k_);
      if (g_.json())
        emit_json(out_, json{{"command", "qbinom"},
                             {"params", {{"n", n_}, {"k", k_}}},
                             {"result", to_string(p)}});
      else
        out_ << to_string(p) << '\n';
      return int{exit_ok};
    };
  });
}

void Runner::add_diagonal(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "diagonal", "Qbinom(n - t alpha, k + t beta) for t = 0, 1, ...");
  sub->add_option("--n", n_)->required();
  sub->add_option("--k", k_)->required();
  sub->add_option("--alpha", alpha_)->required();
  sub->add_option("--beta", beta_)->required();
  sub->add_option("--len", len_)->check(CLI::PositiveNumber);
  sub->add_option("--imax", imax_, "also check strong log-concavity")
      ->check(CLI::NonNegativeNumber);
  sub->callback([this] {
    action_ = [this] {
      if (!(n_ >= k_ && k_ >= 0))
        throw InvalidIndex("diagonal needs n >= k >= 0");
      const bool in_range = diagonal_in_conjecture_range(n_, k_, alpha_, beta_);
      if (!in_range) err_ << "note: (alpha, beta) outside alpha >= -1, beta >= 0\n";
      const auto terms = diagonal_terms(n_, k_, alpha_, beta_, len_);
      std::optional<CheckReport> report;
      if (imax_) report = check_strong_lc_q(terms, *imax_);
      if (g_.json()) {
        json params{{"n", n_},         {"k", k_},     {"alpha", alpha_},
                    {"beta", beta_},   {"len", len_}, {"in_conjecture", in_range}};
        if (imax_) params["imax"] = *imax_;
        json j = report ? report_json("diagonal", params, *report, g_.verbose)
                        : json{{"command", "diagonal"}, {"params", params}};
        j["terms"] = json::array();
        for (const auto& t : terms) j["terms"].push_back(to_string(t));
        emit_json(out_, j);
      } else {
        for (std::size_t t = 0; t < terms.size(); ++t)
          out_ << "t=" << t << ' ' << to_string(terms[t]) << '\n';
        if (report) print_report(out_, *report, g_.verbose);
      }
      return report ? report_exit(*report) : int{exit_ok};
    };
  });
}

void Runner::add_check(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "check", "strong Schur log-concavity of a family of Schur functions");
  auto* fam = sub->add_option("--family", family_,
                              "lambda;beta;alpha, e.g. \"[3,3];[3];[1,1]\"");
  auto* thm = sub->add_option("--theorem1", theorem1_, "lambda;k;j");
  fam->excludes(thm);
  sub->add_option("--terms", terms_)->check(CLI::Range(2, 1000));
  sub->add_option("--imax", imax_)->check(CLI::NonNegativeNumber);
  sub->add_flag("--include-zero", include_zero_,
                "also check n = 0 with f_{-1} = 0");
  sub->callback([this, fam, thm] {
    if (fam->count() + thm->count() != 1)
      throw CLI::ValidationError("check", "give exactly one of --family, --theorem1");
    action_ = [this] {
      uses_cache_ = true;
      const bool theorem1 = !theorem1_.empty();
      const FamilySpec spec = theorem1 ? parse_theorem1(theorem1_, terms_)
                                       : parse_family(family_, terms_);
      if (theorem1 && !theorem1_hypotheses(spec.lambda, spec.alpha[0],
                                           spec.beta.length()))
        err_ << "note: k, j outside the Theorem 1 hypotheses\n";
      const int imax = imax_.value_or(1);
      const auto terms = family_terms(spec);
      const CheckReport report =
          check_strong_schur_lc(terms, imax, &cache_, include_zero_);
      if (g_.json()) {
        json params = family_json(spec);
        if (theorem1) params["theorem1"] = theorem1_;
        params["imax"] = imax;
        emit_json(out_, report_json("check", params, report, g_.verbose));
      } else {
        out_ << family_text(spec) << '\n';
        print_report(out_, report, g_.verbose);
      }
      return report_exit(report);
    };
  });
}

void Runner::add_scan(CLI::App& app) {
  auto* sub = app.add_subcommand("scan", "family scans");
  auto* o1 = sub->add_flag("--conjecture1", conj1_,
                           "families lambda u^n beta + n alpha");
  auto* o2 = sub->add_flag("--conjecture2", conj2_,
                           "diagonals of the quantum Pascal triangle");
  o1->excludes(o2);
  sub->add_option("--max-size", c1_.max_lambda_size, "max |lambda|");
  sub->add_option("--max-len", c1_.max_lambda_len, "max length of lambda");
  sub->add_option("--alpha-min", c1_.alpha_min);
  sub->add_option("--alpha-max", c1_.alpha_max);
  sub->add_option("--beta-max-size", c1_.beta_max_size);
  sub->add_option("--terms", c1_.max_terms)->check(CLI::Range(2, 1000));
  sub->add_flag("--include-equal-length", c1_.include_equal_length,
                "also scan alpha with l(alpha) = l(lambda)");
  sub->add_option("--max-n", c2_.max_n);
  sub->add_option("--alphas", alphas_, "comma separated slopes alpha");
  sub->add_option("--betas", betas_, "comma separated slopes beta");
  sub->add_option("--len", c2_.len)->check(CLI::PositiveNumber);
  sub->add_option("--imax", imax_)->check(CLI::NonNegativeNumber);
  sub->callback([this, o1, o2] {
    if (o1->count() + o2->count() != 1)
      throw CLI::ValidationError("scan",
                                 "give exactly one of --conjecture1, --conjecture2");
    action_ = [this] {
      if (conj1_) return scan_conjecture1();
      return scan_conjecture2();
    };
  });
}

int Runner::scan_conjecture1() {
  uses_cache_ = true;
  c1_.i_max = imax_.value_or(1);
  const auto points = conjecture1_scan(c1_, &cache_, g_.parallelism);
  std::size_t holds = 0, fails = 0, vacuous = 0, fails_tested = 0;
  json jpoints = json::array();
  for (const auto& pt : points) {
    switch (pt.report.verdict) {
      case Verdict::holds:
        ++holds;
        break;
      case Verdict::fails:
        ++fails;
        if (pt.tested_regime) ++fails_tested;
        break;
      case Verdict::vacuous:
        ++vacuous;
        break;
    }
    const char* regime = pt.tested_regime ? "tested" : "outside";
    if (g_.json()) {
      json j = report_json("check", family_json(pt.family), pt.report,
                           g_.verbose);
      j.erase("command");
      j["regime"] = regime;
      jpoints.push_back(std::move(j));
    } else {
      out_ << family_text(pt.family) << " regime=" << regime
           << " verdict=" << to_string(pt.report.verdict);
      if (const PairRecord* f = pt.report.first_failure()) {
        out_ << " at n=" << f->n << " i=" << f->i;
        if (f->witness) out_ << " witness " << witness_text(*f->witness);
      }
      out_ << '\n';
    }
  }
  const json summary{{"points", points.size()},   {"holds", holds},
                     {"fails", fails},            {"vacuous", vacuous},
                     {"fails_tested_regime", fails_tested}};
  if (g_.json()) {
    json params{{"mode", "conjecture1"},
                {"max_size", c1_.max_lambda_size},
                {"max_len", c1_.max_lambda_len},
                {"alpha_min", c1_.alpha_min},
                {"alpha_max", c1_.alpha_max},
                {"beta_max_size", c1_.beta_max_size},
                {"terms", c1_.max_terms},
                {"imax", c1_.i_max},
                {"include_equal_length", c1_.include_equal_length}};
    emit_json(out_, json{{"command", "scan"},
                         {"params", params},
                         {"verdict", fails_tested ? "fails" : "holds"},
                         {"pairs", json::array()},
                         {"points", jpoints},
                         {"summary", summary}});
  } else {
    out_ << "points " << points.size() << " holds " << holds << " fails "
         << fails << " vacuous " << vacuous << " fails_tested_regime "
         << fails_tested << '\n';
  }
  return fails_tested ? exit_failure : exit_ok;
}

int Runner::scan_conjecture2() {
  c2_.alphas = parse_int_list(alphas_);
  c2_.betas = parse_int_list(betas_);
  c2_.i_max = imax_.value_or(2);
  const auto points = conjecture2_scan(c2_);
  std::size_t holds = 0, fails = 0, vacuous = 0, fails_in = 0;
  json jpoints = json::array();
  for (const auto& pt : points) {
    switch (pt.report.verdict) {
      case Verdict::holds:
        ++holds;
        break;
      case Verdict::fails:
        ++fails;
        if (pt.in_conjecture) ++fails_in;
        break;
      case Verdict::vacuous:
        ++vacuous;
        break;
    }
    if (g_.json()) {
      json params{{"n", pt.n}, {"k", pt.k}, {"alpha", pt.alpha},
                  {"beta", pt.beta}};
      json j = report_json("diagonal", params, pt.report, g_.verbose);
      j.erase("command");
      j["in_conjecture"] = pt.in_conjecture;
      jpoints.push_back(std::move(j));
    } else {
      out_ << "n=" << pt.n << " k=" << pt.k << " alpha=" << pt.alpha
           << " beta=" << pt.beta
           << (pt.in_conjecture ? "" : " (outside)")
           << " verdict=" << to_string(pt.report.verdict);
      if (const PairRecord* f = pt.report.first_failure()) {
        out_ << " at n=" << f->n << " i=" << f->i;
        if (f->witness) out_ << " witness " << witness_text(*f->witness);
      }
      out_ << '\n';
    }
  }
  const json summary{{"points", points.size()}, {"holds", holds},
                     {"fails", fails},          {"vacuous", vacuous},
                     {"fails_in_conjecture", fails_in}};
  if (g_.json()) {
    json params{{"mode", "conjecture2"}, {"max_n", c2_.max_n},
                {"alphas", c2_.alphas},  {"betas", c2_.betas},
                {"len", c2_.len},        {"imax", c2_.i_max}};
    emit_json(out_, json{{"command", "scan"},
                         {"params", params},
                         {"verdict", fails_in ? "fails" : "holds"},
                         {"pairs", json::array()},
                         {"points", jpoints},
                         {"summary", summary}});
  } else {
    out_ << "points " << points.size() << " holds " << holds << " fails "
         << fails << " vacuous " << vacuous << " fails_in_conjecture "
         << fails_in << '\n';
  }
  return fails_in ? exit_failure : exit_ok;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Schur log-concavity toolkit", "schurlc"};
  app.add_option("--output", g_.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose", g_.verbose, "include certificates");
  app.add_option("--cache", g_.cache_path,
                 "LR cache file (default $SCHURLC_CACHE)");
  app.add_option("--parallelism", g_.parallelism, "worker threads for scans")
      ->check(CLI::Range(1, 1024));
  app.require_subcommand(1);
  app.fallthrough();
  add_lr(app);
  add_product(app);
  add_qbinom(app);
  add_diagonal(app);
  add_check(app);
  add_scan(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (g_.cache_path.empty())
    if (const char* env = std::getenv("SCHURLC_CACHE")) g_.cache_path = env;

  try {
    if (!g_.cache_path.empty()) load_cache(g_.cache_path, cache_);
    const int code = action_();
    if (uses_cache_ && !g_.cache_path.empty()) store_cache(g_.cache_path, cache_);
    return code;
  } catch (const CacheCorruption& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_corrupt_cache;
  } catch (const CacheIoError& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidPartition& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidIndex& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace schurlc::cli
