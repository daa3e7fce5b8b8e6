#pragma once

#include <span>
#include <vector>

namespace ccs {

/// Permutation of {0..n-1}, stored as the image sequence (perm[s] = tau(s)).
using Perm = std::vector<int>;

/// Symmetric Koszul sign eps(tau) defined by
///   x_{tau(1)} ⊙ ... ⊙ x_{tau(n)} = eps(tau) x_1 ⊙ ... ⊙ x_n
/// where shifted_degrees[s] is the degree of x_{s+1} in L[1] (i.e. |x|-1).
/// Swapping two odd-degree letters costs a sign; everything else is free.
int koszul_sign(std::span<const int> shifted_degrees, std::span<const int> perm);

/// All (i,j)-unshuffles of {0..i+j-1}: tau with tau(0)<...<tau(i-1) and
/// tau(i)<...<tau(i+j-1), enumerated with the left block in lexicographic
/// order. Count = binomial(i+j, i).
std::vector<Perm> unshuffles(int i, int j);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_permutations(int n);

/// Composition (a after b): result[s] = a[b[s]].
Perm compose_perm(const Perm& a, const Perm& b);

}  // namespace ccs
