#pragma once

#include "latcoh/lattice.hpp"

#include <optional>
#include <vector>

namespace latcoh {

// Element of the integral group ring: one coefficient per group element, in
// element-index order.
struct GroupRingElem {
    std::vector<mpz_class> c;

    explicit GroupRingElem(long group_order = 0) : c(group_order) {}

    bool is_zero() const;
};

GroupRingElem ring_zero(const GroupSpec& G);
GroupRingElem ring_one(const GroupSpec& G);
// g_i - 1 for generator i.
GroupRingElem ring_gen_minus_one(const GroupSpec& G, int i);
// cyclic norm 1 + g_i + ... + g_i^(order_i - 1)
GroupRingElem ring_cyclic_norm(const GroupSpec& G, int i);
// full norm = sum of all group elements
GroupRingElem ring_full_norm(const GroupSpec& G);

GroupRingElem ring_add(const GroupSpec& G, const GroupRingElem& x, const GroupRingElem& y);
GroupRingElem ring_negate(const GroupRingElem& x);
GroupRingElem ring_mul(const GroupSpec& G, const GroupRingElem& x, const GroupRingElem& y);

// Matrix over the group ring.
struct GroupRingMatrix {
    GroupSpec group;
    int rows = 0, cols = 0;
    std::vector<GroupRingElem> e;

    GroupRingMatrix() = default;
    GroupRingMatrix(GroupSpec g, int r, int c)
        : group(std::move(g)), rows(r), cols(c),
          e(static_cast<size_t>(r) * c, GroupRingElem(group.order())) {}

    GroupRingElem& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const GroupRingElem& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    GroupRingMatrix operator*(const GroupRingMatrix& o) const;
    bool is_zero() const;
};

// One stage of the tensor-product free resolution of Z over ZG. Degree-n
// basis elements are the multidegrees (d_1..d_s) with sum n, listed in
// ascending lexicographic order; rank = binomial(n+s-1, s-1).
struct ResolutionComponent {
    int degree = 0;
    int rank = 0;
    std::vector<std::vector<int>> multidegrees;
    // maps degree n to degree n-1; absent for degree 0
    std::optional<GroupRingMatrix> differential;
};

// Memoized per (G, n); thread-safe compute-once cache.
const ResolutionComponent& resolution_component(const GroupSpec& G, int n);

enum class Variance { hom, tensor };

// Expand each ring entry to its rank x rank action on M and assemble
// blockwise. hom = blockwise transpose (realizes precomposition on
// Hom_G(P, M) = M^cols); tensor = direct blocks (realizes P tensor_G M).
IntMatrix apply_ringmat(const GroupRingMatrix& T, const Lattice& M, Variance variance);

struct MinimalCover {
    int d = 0;          // number of generators = dim_{F_p} M / rad M
    ModuleMap cover;    // free lattice R^d onto M (p-adically surjective)
};

MinimalCover minimal_cover(const Lattice& M);

Lattice syzygy(const Lattice& M);
Lattice cosyzygy(const Lattice& M);

// k >= 0: syzygy k times; k < 0: cosyzygy |k| times. Intermediate rank above
// the limit raises SizeLimit.
Lattice ar_translate(const Lattice& M, int k, int rank_limit = 512);

} // namespace latcoh
