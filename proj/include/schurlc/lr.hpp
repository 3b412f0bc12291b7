#pragma once

#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/schur_expansion.hpp"
#include "schurlc/tableau.hpp"

namespace schurlc {

// LR tableaux of shape theta/mu and content nu whose reverse reading word is
// Yamanouchi. Cells are filled in reverse reading order with semistandardness,
// content and the prefix condition enforced at every step. Empty when mu is
// not inside theta or |theta| != |mu| + |nu|.
std::vector<Tableau> lr_tableaux(const Partition& mu, const Partition& nu,
                                 const Partition& theta);

// c^theta_{mu,nu}, counted by horizontal-strip additions bounded by theta.
Integer lr_coefficient(const Partition& mu, const Partition& nu,
                       const Partition& theta);

// s_mu * s_nu in the Schur basis. Builds theta by adding the letters of nu
// as horizontal strips subject to the lattice condition, so only shapes with
// a nonzero coefficient are visited.
SchurExpansion schur_product_expand(const Partition& mu, const Partition& nu);

// Number of standard Young tableaux of shape lambda (hook length formula).
Integer count_standard_tableaux(const Partition& lambda);

}  // namespace schurlc
