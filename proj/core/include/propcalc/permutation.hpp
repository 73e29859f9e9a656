#pragma once

#include <vector>

#include "propcalc/rational.hpp"

namespace propcalc {

// One-line notation: p[i] = image of i (0-based).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
int perm_sign(const Perm& p);
bool perm_is_identity(const Perm& p);

// Block permutation moving factor blocks: given factor sizes and a permutation
// s of factors (position i receives factor s[i]... see .cpp), returns the
// index permutation on positions.
Perm perm_block(const Perm& factor_perm, const std::vector<int>& sizes);

// Koszul sign of permuting homogeneous factors of the given degrees by p,
// where p maps source position i to target position p[i].
int koszul_sign(const Perm& p, const std::vector<int>& degrees);

// All permutations of n letters in lexicographic order.
std::vector<Perm> all_perms(int n);

}  // namespace propcalc
