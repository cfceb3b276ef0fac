#pragma once

#include "k3cr3/abelian.hpp"
#include "k3cr3/lattice.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace k3cr3 {

// Finite abelian subgroups of Cr_1: cyclic groups and (Z/2)^2.
bool cr1_members(const AbelianGroup& g);

// Finite abelian subgroups of Cr_2, matched against the five families
// Z/n x Z/m; Z/2n x (Z/2)^2; (Z/4)^2 x Z/2; (Z/3)^3; (Z/2)^4.
bool cr2_members(const AbelianGroup& g);

// The 14 nontrivial abelian symplectic classes: Z/n for 2 <= n <= 8,
// Z/2 x Z/6, (Z/3)^2, (Z/4)^2, Z/2 x Z/4, (Z/2)^k for 2 <= k <= 4.
const std::vector<AbelianGroup>& nikulin_symplectic();

// The 20 maximal finite abelian groups faithfully acting on a K3 surface
// (not purely non-symplectic).
const std::vector<AbelianGroup>& maximal_k3_groups();

// True iff g is isomorphic to a subgroup of one of the 20 maximal groups.
bool k3_admissible(const AbelianGroup& g);

// Every isomorphism class embedding in one of the 20 maximal groups,
// computed once and cached. Sorted.
const std::vector<AbelianGroup>& k3_subgroup_classes();

// A K3-admissible group together with its symplectic splitting and the
// invariant-lattice data of its action.
struct CatalogEntry {
    AbelianGroup group;
    AbelianGroup symplectic_part;
    long long nonsymplectic_order = 1;
    int rank_min = 0;
    int rank_max = 0;
    std::vector<Lattice> gram_options;
    // The (Z/2)^5 entry is transcribed as published even though the stated
    // orders do not multiply out; its invariant is relaxed to
    // "symplectic_part embeds in group and m in {1,2}".
    bool order_identity_relaxed = false;
};

// The six K3-admissible groups that are not Cr_2 subgroups, with splitting
// and invariant-lattice data.
const std::vector<CatalogEntry>& exceptional_six();

// Number of fixed points of a symplectic automorphism of the given order.
int symplectic_fixed_count(int order);

enum class DuValKind { A, D, E };

struct DuValType {
    DuValKind kind;
    int n;  // A_n (n>=1), D_n (n>=4), E_n (n in 6..8)

    int curve_count() const { return n; }
    AbelianGroup pi1ab() const;
    std::string str() const;
};

DuValType make_du_val(DuValKind kind, int n);  // validates the subscript

// Candidate invariant Gram matrices for Z/4 x (Z/2)^3 (10 matrices).
const std::vector<Lattice>& invariant_gram_options_z4_z2_3();
// Candidate invariant Gram matrices for (Z/2)^5 (14 matrices).
const std::vector<Lattice>& invariant_gram_options_z2_5();

// The full catalog as the documented JSON interchange document.
nlohmann::json catalog_json();

}  // namespace k3cr3
