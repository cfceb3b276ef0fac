#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3cr3 {

// Type of an abelian p-group: weakly decreasing positive exponents, so
// [2,1,1] over p=2 is Z/4 x Z/2 x Z/2. Doubles as a Young diagram.
using Partition = std::vector<int>;

Partition conjugate(const Partition& lam);
bool diagram_contains(const Partition& outer, const Partition& inner);

// Isomorphism class of a finite abelian group, stored prime by prime.
// The map is the canonical form: no prime maps to an empty partition, and
// two groups are isomorphic iff the maps compare equal.
struct AbelianGroup {
    std::map<long long, Partition> prime_parts;

    bool trivial() const { return prime_parts.empty(); }
    long long order() const;
    int rank() const;          // minimal number of generators
    long long exponent() const;
    std::vector<long long> invariant_factors() const;  // ascending, each divides the next
    std::string str() const;   // "2,4,4,8"; the trivial group is "1"

    auto operator<=>(const AbelianGroup&) const = default;
};

// Normal form of prod Z/factors[i]; factors equal to 1 are dropped.
// Throws std::invalid_argument on non-positive entries.
AbelianGroup canonicalize(const std::vector<long long>& factors);

AbelianGroup trivial_group();
AbelianGroup cyclic_group(long long n);

// Inverse of AbelianGroup::str().
AbelianGroup parse_group(const std::string& text);

AbelianGroup p_part(const AbelianGroup& g, long long p);
AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b);

// Subgroup test on isomorphism classes: per prime, the conjugate type of a
// must fit under the conjugate type of b. Validated against the brute-force
// oracle in the test suite.
bool embeds_in(const AbelianGroup& a, const AbelianGroup& b);

// Class of (prod Z/gen_orders[i]) / <element>, via the Smith normal form of
// the relation matrix. element[i] must lie in [0, gen_orders[i]).
AbelianGroup quotient_by_cyclic(const std::vector<long long>& gen_orders,
                                const std::vector<long long>& element);

// Diagonal automorphism class of a Fermat hypersurface in a weighted
// projective space: ((Z/(d/a_0))^{r_0} x ... ) / (Z/d) for weights (a_i, r_i).
// For complete intersections pass d = gcd of the degrees.
AbelianGroup fermat_group(const std::vector<std::pair<long long, long long>>& weights,
                          long long degree);

}  // namespace k3cr3
