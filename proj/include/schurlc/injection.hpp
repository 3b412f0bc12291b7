#pragma once

#include <string>
#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/tableau.hpp"

namespace schurlc {

// With term(m) = lambda u (1^{mj}) + (mk):
// mu = term(n+i), nu = term(n), rho = term(n+i+1), delta = term(n-1).
struct InjectionShapes {
  Partition mu;
  Partition nu;
  Partition rho;
  Partition delta;
};

struct InjectionPoint {
  Partition lambda;
  int k = 0;
  int j = 0;
  int n = 1;
  int i = 0;
  Partition theta;
};

// Throws InvalidFamilyPoint unless n >= 1, i >= 0 and k, j >= 0.
InjectionShapes injection_shapes(const Partition& lambda, int k, int j, int n,
                                 int i);

// Maps T in LR^theta_{rho,delta} to LR^theta_{mu,nu}: the k cells of row 1
// in rho/mu receive 1, the j cells of column 1 in rho/mu receive
// lambda'_1+(n-1)j+1, ..., lambda'_1+nj from top to bottom.
// Throws NotLRInput if T is not an LR tableau of shape theta/rho and content
// delta, InternalNonSemistandard if the image is not semistandard.
Tableau inject(const Tableau& t, const InjectionPoint& pt);

// The same filling without the semistandardness check on the image.
Tableau inject_unchecked(const Tableau& t, const InjectionPoint& pt);

// Drops the cells of rho/mu from an image, recovering the input of inject.
Tableau uninject(const Tableau& image, const InjectionPoint& pt);

struct InjectionFailure {
  Partition theta;
  // shape, semistandard, content, yamanouchi, left_inverse, membership,
  // injective, count
  std::string kind;
  std::string detail;
};

struct InjectionTheta {
  Partition theta;
  Integer source_count;
  Integer target_count;
};

struct InjectionReport {
  bool hypotheses_hold = true;
  InjectionShapes shapes;
  std::vector<InjectionTheta> thetas;
  std::size_t tableaux = 0;
  std::vector<InjectionFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Runs inject over every LR^theta_{rho,delta} with theta in the support of
// s_rho s_delta and records every failed check; nothing is thrown for
// failures, so points outside the hypotheses can be examined too.
InjectionReport verify_injection(const Partition& lambda, int k, int j, int n,
                                 int i);

}  // namespace schurlc
