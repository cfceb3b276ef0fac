#pragma once

#include "k3cr3/abelian.hpp"

#include <set>
#include <vector>

namespace k3cr3 {

int partition_size(const Partition& lam);

// All partitions of n, optionally capped in length and largest part.
std::vector<Partition> partitions_of(int n, int max_len = -1, int max_part = -1);

// Littlewood-Richardson coefficient c^mu_{lambda,nu}: the number of LR skew
// tableaux of shape mu/lambda and content nu (semistandard filling whose
// reverse reading word is a lattice word). Memoized on (lambda, nu, mu).
long long lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu);

// Whether 0 -> sub -> total -> quot -> 0 is realizable, decided prime by
// prime through positivity of the LR coefficient of the three p-types.
bool extension_exists(const AbelianGroup& sub, const AbelianGroup& quot,
                      const AbelianGroup& total);

// All isomorphism classes fitting in 0 -> sub -> G -> quot -> 0. Per prime the
// candidate types mu run over partitions of |lambda|+|nu| containing both
// lambda and nu with at most len(lambda)+len(nu) rows; classes for different
// primes combine by direct product.
std::set<AbelianGroup> enumerate_extensions(const AbelianGroup& sub, const AbelianGroup& quot);

}  // namespace k3cr3
