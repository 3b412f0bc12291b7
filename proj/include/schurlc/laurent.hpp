#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/schur_expansion.hpp"

namespace schurlc {

// Sparse Laurent polynomial in q with exact integer coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exponent, Integer coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Integer& coeff);

  // q -> q^{-1}.
  LaurentPoly inverted() const;
  bool is_centred() const { return *this == inverted(); }
  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly scale(const Integer& c, const LaurentPoly& p);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

// Quotient of an exact division. Throws std::logic_error on a nonzero
// remainder or a zero divisor.
LaurentPoly divide_exact(const LaurentPoly& numerator,
                         const LaurentPoly& denominator);

// Multiplicities over the irreducible characters [n], n >= 1.
class IrrDecomp {
 public:
  using Mults = std::map<int, Integer>;

  IrrDecomp() = default;
  const Mults& mults() const { return mults_; }
  bool is_zero() const { return mults_.empty(); }
  Integer multiplicity(int n) const;
  void add(int n, const Integer& mult);
  bool is_nonnegative() const;
  LaurentPoly recompose() const;

  IrrDecomp& operator+=(const IrrDecomp& other);
  IrrDecomp& operator-=(const IrrDecomp& other);
  friend bool operator==(const IrrDecomp&, const IrrDecomp&) = default;

 private:
  Mults mults_;
};

// [n] = q^{-n+1} + q^{-n+3} + ... + q^{n-1}; [0] = 0.
LaurentPoly quantum_int(int n);

// Exponents -n+1, -n+3, ..., n-1 of the monomials of [n].
std::vector<int> quantum_exponents(int n);

// s_(1^k) at the monomials of [n]. Throws InvalidIndex unless n >= k >= 0.
LaurentPoly quantum_binomial(int n, int k);
// Same value as [n][n-1]...[n-k+1] / [k]...[1] by exact division.
LaurentPoly quantum_binomial_by_division(int n, int k);
// Gaussian binomial in 1 + q + ... + q^{n-1} form. Throws InvalidIndex.
LaurentPoly gaussian_binomial(int n, int k);

// [a][b] = sum_{t < min(a,b)} [a+b-1-2t].
IrrDecomp clebsch_gordan(int a, int b);

// Greedy peel from the top exponent. Throws NotCentred or, for support of
// mixed parity, NotDecomposable.
IrrDecomp decompose_irr(const LaurentPoly& p);

// Centred with nonnegative multiplicities on every parity class.
bool is_character(const LaurentPoly& p);

// Nonnegative, centred, and unimodal on each parity class.
bool is_unimodal_centred(const LaurentPoly& p);

// s_lambda(q^{a_1}, ..., q^{a_m}) via the (dual) Jacobi-Trudi determinant.
LaurentPoly eval_schur_at_qpowers(const Partition& lambda,
                                  std::span<const int> exponents);
LaurentPoly eval_expansion_at_qpowers(const SchurExpansion& f,
                                      std::span<const int> exponents);

// s_(a,b) -> [a-b+1]; terms of length > 2 vanish.
IrrDecomp sl2_specialize(const SchurExpansion& f);

// `q^-2 + 1 + q^2`, `2*q^3`, `0`.
std::string to_string(const LaurentPoly& p);
// `[7]+[5]+[3]-[1]`, `2*[3]`, `0`.
std::string to_string(const IrrDecomp& d);

}  // namespace schurlc
