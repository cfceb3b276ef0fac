#pragma once

#include "k3cr3/abelian.hpp"
#include "k3cr3/util.hpp"

#include <utility>
#include <vector>

namespace k3cr3 {

// Integer symmetric bilinear form given by its Gram matrix. All arithmetic on
// lattices is exact; nothing here touches floating point.
struct Lattice {
    std::vector<std::vector<long long>> gram;

    int rank() const { return static_cast<int>(gram.size()); }
    bool is_even() const;  // every diagonal entry even
};

// Validates squareness and symmetry.
Lattice make_lattice(std::vector<std::vector<long long>> gram);

Int lattice_determinant(const Lattice& l);

// A_Lambda = Lambda*/Lambda as the product of the nonunit Smith invariants of
// the Gram matrix. Throws on a degenerate form.
AbelianGroup discriminant_group(const Lattice& l);

// Gram of k*Lambda: entrywise multiplication by k^2.
Lattice scale(const Lattice& l, long long k);

// disc(sub) = disc(sup) * index^2 for finite-index sublattices, so the ratio
// of determinants must be a positive perfect square integer.
bool finite_index_compatible(const Int& det_sub, const Int& det_sup);

// Exact inertia (positive count, negative count) by rational symmetric
// reduction with pivoting. Throws on a degenerate form.
std::pair<int, int> signature(const Lattice& l);

// Family of candidate intermediate lattices diag(stride*a) (+) diag(tail),
// with a ranging over positive integers.
struct DiagonalFamily {
    long long stride = 1;
    std::vector<long long> tail;
};

struct SandwichReport {
    bool feasible = false;
    long long witness = 0;        // the a realizing the sandwich, when feasible
    long long exhausted_bound = 0;  // largest a the determinant bound allowed
};

// Is there a family member M with inner <= M <= outer as finite-index
// sublattices, judged by determinant divisibility on both inclusions?
// The scan stops once |det M| exceeds |det inner|, which certifies
// exhaustion. Requires inner to be a scale of outer.
SandwichReport sandwich_feasible(const Lattice& inner, const Lattice& outer,
                                 const DiagonalFamily& family);

// The divisibility argument for a transitive orbit of A1/A2 points: inner is
// the invariant form scaled by the class-group index mu, the middle family is
// diag(stride*a, curve_self_int) with stride the gcd of the values of the
// invariant form, and the orbit divisor has self-intersection -2*orbit_size.
SandwichReport orbit_class_lattice_check(long long mu, long long orbit_size,
                                         long long curve_self_int,
                                         const Lattice& invariant_gram);

}  // namespace k3cr3
