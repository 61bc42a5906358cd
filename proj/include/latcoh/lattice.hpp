#pragma once

#include "latcoh/group.hpp"
#include "latcoh/intmatrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace latcoh {

// G-lattice: free Z-module of finite rank with one integer action matrix per
// group generator. The matrices must commute pairwise and satisfy the
// generator orders.
struct Lattice {
    GroupSpec group;
    int rank = 0;
    std::vector<IntMatrix> action; // one square rank x rank matrix per generator

    Lattice() = default;
    Lattice(GroupSpec g, int r, std::vector<IntMatrix> a)
        : group(std::move(g)), rank(r), action(std::move(a)) {}

    // Action matrix of the group element with the given index.
    IntMatrix action_of_element(long index) const;
    // Matrix of tr = sum of all |G| group elements.
    IntMatrix norm_matrix() const;
};

// G-homomorphism between lattices over the same group; matrix intertwines the
// actions: target.action[i] * matrix == matrix * source.action[i].
struct ModuleMap {
    Lattice source;
    Lattice target;
    IntMatrix matrix; // target.rank x source.rank
};

// Throws RelationViolation naming the first failing relation.
void validate(const Lattice& L);

Lattice direct_sum(const Lattice& M, const Lattice& N);

// Z-linear dual with contragredient action: generator g acts by the transpose
// of the matrix of g^-1. dual(dual(M)) has bit-identical matrices.
Lattice dual(const Lattice& M);

// Z-basis of Hom_G(M, N); empty vector means the zero space.
std::vector<ModuleMap> hom_space(const Lattice& M, const Lattice& N);

enum class Iso { yes, no, inconclusive };

struct IsoResult {
    Iso verdict = Iso::no;
    std::optional<ModuleMap> witness; // intertwiner with det coprime to p, on yes

    bool is_yes() const { return verdict == Iso::yes; }
};

// p-adic isomorphism test: yes with a witness whose determinant is coprime to
// p, no when all F_p-combinations of the Hom basis are exhausted without an
// invertible one (or ranks/multiplicities already differ), inconclusive only
// when the search space exceeds max_combinations.
IsoResult is_isomorphic(const Lattice& M, const Lattice& N, long max_combinations = 65536);

// Saturated basis of the invariant sublattice M^G.
IntMatrix invariants(const Lattice& M);

// Basis of the honest image tr * M.
IntMatrix norm_image(const Lattice& M);

// Multiplicities (r++, r+-, r-+, r--) of the four rank-1 characters in the
// rational span. Klein 4-group only.
std::array<int, 4> r_multiplicities(const Lattice& M);

// Free lattice R^d with the regular action blockwise (d >= 0).
Lattice regular_lattice(const GroupSpec& G);
Lattice free_lattice(const GroupSpec& G, int d);

// Lattice structure induced on the span of `basis` (columns independent, span
// G-stable). Throws if the span is not action-stable.
Lattice sublattice(const Lattice& M, const IntMatrix& basis);

} // namespace latcoh
