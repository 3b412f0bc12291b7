#include "schurlc/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlc/errors.hpp"

namespace schurlc {

LaurentPoly::LaurentPoly(Integer constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly scale(const Integer& c, const LaurentPoly& p) {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& numerator,
                         const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw std::logic_error("division by zero");
  LaurentPoly quotient;
  LaurentPoly rest = numerator;
  const int low_bound =
      numerator.is_zero()
          ? 0
          : numerator.min_exponent() - denominator.min_exponent();
  const int lead_exp = denominator.max_exponent();
  const Integer lead = denominator.coefficient(lead_exp);
  while (!rest.is_zero()) {
    const int top = rest.max_exponent();
    const Integer c = rest.coefficient(top);
    if (top - lead_exp < low_bound || c % lead != 0)
      throw std::logic_error("inexact Laurent division");
    const LaurentPoly term = LaurentPoly::monomial(top - lead_exp, c / lead);
    quotient += term;
    rest -= term * denominator;
  }
  return quotient;
}

Integer IrrDecomp::multiplicity(int n) const {
  auto it = mults_.find(n);
  return it == mults_.end() ? Integer(0) : it->second;
}

void IrrDecomp::add(int n, const Integer& mult) {
  if (n < 1) throw std::invalid_argument("irreducible index must be >= 1");
  if (mult == 0) return;
  auto [it, inserted] = mults_.try_emplace(n, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) mults_.erase(it);
  }
}

bool IrrDecomp::is_nonnegative() const {
  return std::all_of(mults_.begin(), mults_.end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

LaurentPoly IrrDecomp::recompose() const {
  LaurentPoly p;
  for (const auto& [n, m] : mults_) p += scale(m, quantum_int(n));
  return p;
}

IrrDecomp& IrrDecomp::operator+=(const IrrDecomp& other) {
  for (const auto& [n, m] : other.mults_) add(n, m);
  return *this;
}

IrrDecomp& IrrDecomp::operator-=(const IrrDecomp& other) {
  for (const auto& [n, m] : other.mults_) add(n, -m);
  return *this;
}

LaurentPoly quantum_int(int n) {
  LaurentPoly p;
  for (int e : quantum_exponents(n)) p.add_term(e, 1);
  return p;
}

std::vector<int> quantum_exponents(int n) {
  std::vector<int> out;
  for (int e = -n + 1; e <= n - 1; e += 2) out.push_back(e);
  return out;
}

namespace {

void check_binomial_index(int n, int k) {
  if (k < 0 || k > n)
    throw InvalidIndex("binomial index (" + std::to_string(n) + ", " +
                       std::to_string(k) + ") needs n >= k >= 0");
}

Partition column(int k) {
  return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

// Peels [top+1] off a centred polynomial until nothing is left. Parity
// classes do not interact, so mixed support peels too.
IrrDecomp peel(LaurentPoly p) {
  IrrDecomp d;
  while (!p.is_zero()) {
    const int top = p.max_exponent();
    const Integer c = p.coefficient(top);
    d.add(top + 1, c);
    p -= scale(c, quantum_int(top + 1));
  }
  return d;
}

// Complete (or elementary) symmetric polynomials h_0..h_max at monomials
// q^{a_i}, by adding one variable at a time.
std::vector<LaurentPoly> symmetric_table(int max_degree,
                                         std::span<const int> exponents,
                                         bool elementary) {
  std::vector<LaurentPoly> table(static_cast<std::size_t>(max_degree + 1));
  table[0] = LaurentPoly(1);
  for (int a : exponents) {
    if (elementary) {
      for (int r = max_degree; r >= 1; --r)
        table[static_cast<std::size_t>(r)] +=
            table[static_cast<std::size_t>(r - 1)].shifted(a);
    } else {
      for (int r = 1; r <= max_degree; ++r)
        table[static_cast<std::size_t>(r)] +=
            table[static_cast<std::size_t>(r - 1)].shifted(a);
    }
  }
  return table;
}

void leibniz(const std::vector<std::vector<const LaurentPoly*>>& m,
             std::size_t row, std::vector<bool>& used, int sign,
             const LaurentPoly& partial, LaurentPoly& total) {
  if (row == m.size()) {
    if (sign > 0)
      total += partial;
    else
      total -= partial;
    return;
  }
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (used[col] || !m[row][col] || m[row][col]->is_zero()) continue;
    int inversions = 0;
    for (std::size_t k = col + 1; k < m.size(); ++k)
      if (used[k]) ++inversions;
    used[col] = true;
    leibniz(m, row + 1, used, inversions % 2 ? -sign : sign,
            partial * *m[row][col], total);
    used[col] = false;
  }
}

}  // namespace

LaurentPoly quantum_binomial(int n, int k) {
  check_binomial_index(n, k);
  return eval_schur_at_qpowers(column(k), quantum_exponents(n));
}

LaurentPoly quantum_binomial_by_division(int n, int k) {
  check_binomial_index(n, k);
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (int t = 0; t < k; ++t) {
    num = num * quantum_int(n - t);
    den = den * quantum_int(t + 1);
  }
  return divide_exact(num, den);
}

LaurentPoly gaussian_binomial(int n, int k) {
  check_binomial_index(n, k);
  std::vector<int> exps;
  for (int e = 0; e < n; ++e) exps.push_back(e);
  return eval_schur_at_qpowers(column(k), exps).shifted(-(k * (k - 1) / 2));
}

IrrDecomp clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("clebsch_gordan needs a, b >= 1");
  IrrDecomp d;
  for (int t = 0; t < std::min(a, b); ++t) d.add(a + b - 1 - 2 * t, 1);
  return d;
}

IrrDecomp decompose_irr(const LaurentPoly& p) {
  if (!p.is_centred())
    throw NotCentred("not invariant under q -> 1/q: " + to_string(p));
  if (!p.is_zero()) {
    const int parity = p.max_exponent() & 1;
    for (const auto& [exp, c] : p.terms())
      if ((exp & 1) != parity)
        throw NotDecomposable("support mixes parities: " + to_string(p));
  }
  return peel(p);
}

bool is_character(const LaurentPoly& p) {
  return p.is_centred() && peel(p).is_nonnegative();
}

bool is_unimodal_centred(const LaurentPoly& p) {
  if (!p.is_centred()) return false;
  for (const auto& [exp, c] : p.terms())
    if (c < 0) return false;
  for (int parity = 0; parity < 2; ++parity) {
    int top = -1;
    for (const auto& [exp, c] : p.terms())
      if ((exp & 1) == parity) top = std::max(top, exp);
    if (top < 0) continue;
    bool falling = false;
    Integer previous = 0;
    for (int exp = -top; exp <= top; exp += 2) {
      const Integer c = p.coefficient(exp);
      if (c < previous) falling = true;
      if (falling && c > previous) return false;
      previous = c;
    }
  }
  return true;
}

LaurentPoly eval_schur_at_qpowers(const Partition& lambda,
                                  std::span<const int> exponents) {
  if (lambda.length() > static_cast<int>(exponents.size())) return {};
  if (lambda.empty()) return LaurentPoly(1);
  // The shorter of lambda and lambda' sets the determinant size.
  const bool use_dual = lambda.first() < lambda.length();
  const Partition index = use_dual ? transpose(lambda) : lambda;
  const int n = index.length();
  const int max_degree = index.first() + n - 1;
  const auto table = symmetric_table(max_degree, exponents, use_dual);
  std::vector<std::vector<const LaurentPoly*>> m(
      static_cast<std::size_t>(n),
      std::vector<const LaurentPoly*>(static_cast<std::size_t>(n), nullptr));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int r = index.part(i + 1) - i + j;
      if (r >= 0)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            &table[static_cast<std::size_t>(r)];
    }
  LaurentPoly total;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  leibniz(m, 0, used, 1, LaurentPoly(1), total);
  return total;
}

LaurentPoly eval_expansion_at_qpowers(const SchurExpansion& f,
                                      std::span<const int> exponents) {
  LaurentPoly out;
  for (const auto& [lambda, c] : f.terms())
    out += scale(c, eval_schur_at_qpowers(lambda, exponents));
  return out;
}

IrrDecomp sl2_specialize(const SchurExpansion& f) {
  IrrDecomp d;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.length() <= 2) d.add(lambda.part(1) - lambda.part(2) + 1, c);
  return d;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : p.terms()) {
    const Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (exp == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += "q^" + std::to_string(exp);
    }
    first = false;
  }
  return out;
}

std::string to_string(const IrrDecomp& d) {
  if (d.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = d.mults().rbegin(); it != d.mults().rend(); ++it) {
    const auto& [n, m] = *it;
    const Integer magnitude = m < 0 ? Integer(-m) : m;
    if (m < 0)
      out += "-";
    else if (!first)
      out += "+";
    if (magnitude != 1) out += magnitude.str() + "*";
    out += "[" + std::to_string(n) + "]";
    first = false;
  }
  return out;
}

}  // namespace schurlc
