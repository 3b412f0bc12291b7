// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schurlc/conditions.hpp"
#include "schurlc/injection.hpp"
#include "schurlc/laurent.hpp"
#include "schurlc/logconcavity.hpp"
#include "schurlc/lr.hpp"
#include "schurlc/schur_ring.hpp"

using namespace schurlc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

Partition column(int k) {
  return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

LaurentPoly qb(int n, int k) {
  return k < 0 || k > n || n < 0 ? LaurentPoly{} : quantum_binomial(n, k);
}

std::vector<Partition> lambdas(int max_size, int max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions_of(n, max_len)) out.push_back(std::move(p));
  return out;
}

std::vector<int> range_with_zero(int lo, int hi) {
  std::vector<int> out{0};
  for (int v = std::max(lo, 1); v <= hi; ++v) out.push_back(v);
  return out;
}

struct Theorem1Point {
  Partition lambda;
  int k;
  int j;
};

// k in {0} u [lambda_2, lambda_2 + 2], j in {0} u [lambda'_2, lambda'_2 + 2].
std::vector<Theorem1Point> theorem1_grid(int max_size) {
  std::vector<Theorem1Point> out;
  for (const auto& lambda : lambdas(max_size, 3)) {
    const int l2 = lambda.part(2), c2 = transpose(lambda).part(2);
    for (int k : range_with_zero(l2, l2 + 2))
      for (int j : range_with_zero(c2, c2 + 2)) out.push_back({lambda, k, j});
  }
  return out;
}

ProductCache& cache() {
  static ProductCache c;
  return c;
}

// Criterion 5 reports, reused by criterion 10.
std::vector<std::pair<FamilySpec, CheckReport>>& grid_reports() {
  static std::vector<std::pair<FamilySpec, CheckReport>> r;
  return r;
}

Outcome c1() {
  Outcome o;
  const auto S = [](std::initializer_list<int> p) { return s(Partition(p)); };
  o.require(restrict_vars(S({4, 2}) * S({4, 2}) - S({3, 3}) * S({5, 1}), 2) ==
                S({7, 5}) + S({6, 6}),
            "s42^2 - s33 s51");
  o.require(restrict_vars(S({5, 1}) * S({5, 1}) - S({4, 2}) * S({3, 3}), 2) ==
                S({10, 2}) + S({9, 3}) + S({8, 4}) + S({6, 6}),
            "s51^2 - s42 s33");
  o.require(restrict_vars(S({5, 1}) * S({4, 2}) - S({3, 3}) * S({3, 3}), 2)
                    .coefficient(Partition{6, 6}) == -1,
            "s51 s42 - s33^2 at (6,6)");
  return o;
}

Outcome c2() {
  Outcome o;
  const auto g = s(Partition{3}) + s(Partition{2, 1}) + s(column(3));
  const auto s21 = s(Partition{2, 1});
  o.require((scale(4, g * g) - scale(9, s21 * s21)).coefficient(Partition{3, 3}) ==
                -1,
            "coefficient of s33");
  const std::vector<SchurExpansion> terms{scale(3, s21), scale(2, g),
                                          scale(2, g), scale(3, s21)};
  o.require(check_strong_schur_lc(terms, 0, &cache()).verdict == Verdict::holds,
            "i_max 0 holds");
  const auto r = check_strong_schur_lc(terms, 1, &cache());
  o.require(r.verdict == Verdict::fails, "i_max 1 fails");
  return o;
}

Outcome c3() {
  Outcome o;
  const auto Q = quantum_int;
  o.require(to_string(decompose_irr(Q(3) * Q(3) - Q(5) * Q(1))) == "[3]+[1]",
            "[3]^2-[5][1]");
  o.require(to_string(decompose_irr(Q(5) * Q(5) - Q(3) * Q(1))) ==
                "[9]+[7]+[5]+[1]",
            "[5]^2-[3][1]");
  const auto d = Q(3) * Q(5) - Q(1) * Q(1);
  o.require(to_string(decompose_irr(d)) == "[7]+[5]+[3]-[1]", "[3][5]-[1]^2");
  o.require(!is_character(d), "is_character false");
  return o;
}

Outcome c4() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= 4; ++i) {
      std::vector<int> parts(static_cast<std::size_t>(n), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
      const Partition target(parts);
      o.require(e(n + i) * e(n) - e(n + i + 1) * e(n - 1) == s(target),
                "e identity n=" + std::to_string(n) + " i=" + std::to_string(i));
      o.require(h(n + i) * h(n) - h(n + i + 1) * h(n - 1) ==
                    s(transpose(target)),
                "h identity n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t points = 0;
  for (const auto& [lambda, k, j] : theorem1_grid(6)) {
    const FamilySpec spec = theorem1_family(lambda, k, j, 5);
    auto report = check_strong_schur_lc(family_terms(spec), 2, &cache());
    o.require(report.verdict != Verdict::fails,
              "fails at lambda=" + to_string(lambda) + " k=" +
                  std::to_string(k) + " j=" + std::to_string(j));
    grid_reports().emplace_back(spec, std::move(report));
    ++points;
  }
  o.detail = o.pass ? std::to_string(points) + " families" : o.detail;
  return o;
}

Outcome c6() {
  Outcome o;
  Conjecture1Bounds b;
  b.max_lambda_size = 5;
  b.max_lambda_len = 3;
  b.alpha_min = 0;
  b.alpha_max = 2;
  b.beta_max_size = 4;
  b.max_terms = 4;
  b.i_max = 1;
  const auto points = conjecture1_scan(b, &cache());
  std::size_t fails = 0;
  for (const auto& pt : points)
    if (pt.tested_regime && pt.report.verdict == Verdict::fails) {
      ++fails;
      o.require(false, "in-regime failure at " + to_string(pt.family.lambda));
    }
  const FamilySpec bad{Partition{3, 3}, Partition{3}, IntVector{1, 1}, 4};
  const auto r = check_strong_schur_lc(family_terms(bad), 1, &cache());
  const PairRecord* f = r.first_failure();
  o.require(r.verdict == Verdict::fails && f && f->n == 1 && f->i == 0,
            "(3,3),(3),(1,1) must fail at (1,0)");
  if (o.pass) o.detail = std::to_string(points.size()) + " family points";
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n = 0; n <= 8; ++n)
    o.require(check_strong_lc_q(diagonal_terms(n, 0, 0, 1, n + 1), 3).verdict !=
                  Verdict::fails,
              "row " + std::to_string(n));
  for (int k = 0; k <= 6; ++k)
    o.require(check_strong_lc_q(diagonal_terms(k, k, -1, 0, 8), 3).verdict !=
                  Verdict::fails,
              "column " + std::to_string(k));
  Conjecture2Bounds b;
  b.max_n = 7;
  b.len = 6;
  b.i_max = 2;
  const auto points = conjecture2_scan(b);
  for (const auto& pt : points)
    o.require(pt.report.verdict != Verdict::fails,
              "diagonal n=" + std::to_string(pt.n) + " k=" + std::to_string(pt.k));
  if (o.pass) o.detail = std::to_string(points.size()) + " diagonals";
  return o;
}

Outcome c8() {
  Outcome o;
  for (int n = 1; n <= 8; ++n)
    for (int l1 = 1; l1 <= 6 && l1 + 1 <= n; ++l1)
      for (int l2 = 1; l2 <= l1; ++l2) {
        const auto lhs = eval_schur_at_qpowers(transpose(Partition{l1, l2}),
                                               quantum_exponents(n));
        o.require(lhs == qb(n, l1) * qb(n, l2) - qb(n, l1 + 1) * qb(n, l2 - 1),
                  "Qbin-e n=" + std::to_string(n));
      }
  for (int k = 0; k <= 6; ++k)
    for (int l1 = 1; l1 <= 6; ++l1)
      for (int l2 = 1; l2 <= l1; ++l2) {
        const auto lhs =
            eval_schur_at_qpowers(Partition{l1, l2}, quantum_exponents(k + 1));
        o.require(lhs == qb(k + l1, k) * qb(k + l2, k) -
                             qb(k + l1 + 1, k) * qb(k + l2 - 1, k),
                  "Qbin-h k=" + std::to_string(k));
      }
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int d = 0; d <= 4; ++d) {
        std::vector<int> hook{n};
        hook.insert(hook.end(), static_cast<std::size_t>(m), 1);
        const auto lhs =
            eval_schur_at_qpowers(Partition(hook), quantum_exponents(d + 1));
        o.require(lhs == qb(n + m - 1, m) * qb(n + d, n + m),
                  "hook-content n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + " d=" + std::to_string(d));
      }
  return o;
}

Outcome c9() {
  Outcome o;
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> exps;
    for (int t = 0; t <= k; ++t) exps.push_back(t);
    std::vector<LaurentPoly> terms;
    for (int l = 0; l < 6; ++l) {
      terms.push_back(eval_schur_at_qpowers(Partition{l}, exps));
      o.require(terms.back() == gaussian_binomial(k + l, k),
                "h_l(1,...,q^k) = gaussian binomial");
    }
    o.require(check_strong_lc_coefficientwise(terms, 4).verdict ==
                  Verdict::holds,
              "column k=" + std::to_string(k));
  }
  return o;
}

Outcome c10() {
  Outcome o;
  std::size_t gr = 0;
  for (const auto& mu : lambdas(8, 8))
    for (const auto& nu : lambdas(8 - mu.size(), 8))
      for (const auto& [theta, c] : cache().product(mu, nu)->terms()) {
        o.require(gr_containment(theta, mu, nu),
                  "GR theorem at " + to_string(mu) + "," + to_string(nu));
        ++gr;
      }
  std::size_t mcn = 0;
  for (const auto& [spec, report] : grid_reports())
    for (const auto& p : report.pairs) {
      if (!is_schur_positive(std::get<SchurExpansion>(p.certificate))) continue;
      const auto t = [&](int m) { return *family_term(spec, m); };
      o.require(mcnamara_necessary(t(p.n), t(p.n + p.i), t(p.n - 1),
                                   t(p.n + p.i + 1)),
                "McNamara at " + to_string(spec.lambda));
      ++mcn;
    }
  Conjecture1Bounds b;
  b.max_lambda_size = 5;
  b.beta_max_size = 4;
  std::size_t props = 0;
  for (const auto& [spec, tested] : conjecture1_points(b))
    for (int n = 1; n + 2 < spec.max_terms; ++n)
      for (int i = 0; i <= 1 && n + i + 1 < spec.max_terms; ++i) {
        bool valid = true;
        for (int m : {n - 1, n, n + i, n + i + 1})
          if (!family_term(spec, m)) valid = false;
        if (!valid) continue;
        o.require(prop_mcnamara_family(spec, n, i),
                  "family proposition at " + to_string(spec.lambda));
        ++props;
      }
  o.require(mcn > 0, "no McNamara checks ran");
  if (o.pass)
    o.detail = std::to_string(gr) + " GR triples, " + std::to_string(mcn) +
               " McNamara pairs, " + std::to_string(props) + " family points";
  return o;
}

Outcome c11() {
  Outcome o;
  std::size_t points = 0, tableaux = 0, failing = 0;
  bool counts_ok = true, injective = true, confined = true;
  std::string first;
  for (const auto& [lambda, k, j] : theorem1_grid(5))
    for (int n = 1; n <= 2; ++n)
      for (int i = 0; i <= 1; ++i) {
        const auto r = verify_injection(lambda, k, j, n, i);
        ++points;
        tableaux += r.tableaux;
        if (r.passed()) continue;
        if (failing++ == 0) {
          const auto& f = r.failures.front();
          first = "lambda=" + to_string(lambda) + " k=" + std::to_string(k) +
                  " j=" + std::to_string(j) + " n=" + std::to_string(n) +
                  " i=" + std::to_string(i) + " " + f.kind + " " + f.detail;
        }
        for (const auto& f : r.failures) {
          if (f.kind == "count") counts_ok = false;
          if (f.kind == "injective" || f.kind == "left_inverse") injective = false;
          if (j == 0 || f.theta.length() <= r.shapes.rho.length())
            confined = false;
        }
      }
  o.pass = failing == 0;
  o.detail = std::to_string(failing) + "/" + std::to_string(points) +
             " points fail well-definedness; counts " +
             (counts_ok ? "consistent" : "INCONSISTENT") + ", injectivity " +
             (injective ? "holds" : "FAILS") +
             (confined ? ", all failures have j > 0 and theta longer than rho"
                       : ", failures outside the first-column pattern") +
             "; " + std::to_string(tableaux) + " tableaux";
  if (!o.pass) o.detail += "; first: " + first;
  return o;
}

Outcome c12() {
  Outcome o;
  std::size_t checks = 0;
  // ring axioms on random small expansions
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> deg(0, 4), coef(-3, 3);
  const auto rand_f = [&] {
    SchurExpansion f;
    const auto ps = partitions_of(deg(rng));
    for (int t = 0; t < 3; ++t)
      f.add_term(ps[static_cast<std::size_t>(rng() % ps.size())], coef(rng));
    return f;
  };
  for (int t = 0; t < 40; ++t) {
    const auto a = rand_f(), b = rand_f(), c = rand_f();
    o.require(a * b == b * a, "commutativity");
    o.require((a * b) * c == a * (b * c), "associativity");
    o.require(a * (b + c) == a * b + a * c, "distributivity");
  }
  // omega is a ring homomorphism, |f|, |g| <= 6
  const auto upto6 = lambdas(6, 6);
  for (const auto& a : upto6)
    for (const auto& b : upto6)
      {
      o.require(omega(s(a) * s(b)) == s(transpose(a)) * s(transpose(b)),
                "omega homomorphism");
      ++checks;
    }
  // LR symmetry and dimension counts
  for (const auto& mu : lambdas(6, 6))
    for (const auto& nu : lambdas(10 - mu.size(), 10)) {
      const auto f = schur_product_expand(mu, nu);
      o.require(f == schur_product_expand(nu, mu), "LR symmetry");
      ++checks;
      if (mu.size() + nu.size() > 8) continue;
      for (int n : {2, 3}) {
        Integer rhs = 0;
        for (const auto& [theta, c] : f.terms())
          rhs += c * oracle::count_ssyt(theta.parts(), n);
        o.require(rhs == Integer(oracle::count_ssyt(mu.parts(), n)) *
                             oracle::count_ssyt(nu.parts(), n),
                  "dimension count");
      }
    }
  // decompose / unimodal equivalence on centred grids, radius <= 6
  for (int parity = 0; parity <= 1; ++parity) {
    std::vector<int> exps;
    for (int x = parity; x <= 6; x += 2) exps.push_back(x);
    std::vector<int> cs(exps.size(), 0);
    for (;;) {
      LaurentPoly p;
      for (std::size_t t = 0; t < exps.size(); ++t) {
        p.add_term(exps[t], cs[t]);
        if (exps[t]) p.add_term(-exps[t], cs[t]);
      }
      o.require(is_character(p) == is_unimodal_centred(p),
                "character iff unimodal: " + to_string(p));
      ++checks;
      std::size_t t = 0;
      while (t < cs.size() && cs[t] == 3) cs[t++] = 0;
      if (t == cs.size()) break;
      ++cs[t];
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " property checks";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no hard limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two-variable restriction example", 1.0, c1},
      {2, "degree-3 example, i_max 0 holds and 1 fails", 1.0, c2},
      {3, "Clebsch-Gordan differences", 0, c3},
      {4, "e and h identity s_(2^n,1^i)", 5.0, c4},
      {5, "Theorem 1 grid, 5 terms, i_max 2", 0, c5},
      {6, "Conjecture 1 desk scan", 0, c6},
      {7, "quantum Pascal rows, columns and diagonals", 0, c7},
      {8, "Qbin-e, Qbin-h and quantum hook-content", 0, c8},
      {9, "strong q-log-concavity of columns", 0, c9},
      {10, "necessary-condition cross-checks", 0, c10},
      {11, "injection verification", 0, c11},
      {12, "property suites", 0, c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (o.pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail = "over the time budget";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id,
                o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
