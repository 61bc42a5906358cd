#pragma once

#include "latcoh/finabgroup.hpp"
#include "latcoh/lattice.hpp"

#include <map>
#include <string>

namespace latcoh {

// Tate degree 0: invariants modulo the norm image.
FinAbGroup h0(const Lattice& M);

// Tate degree -1: kernel of the norm modulo the image of the augmentation
// ideal (honest image, no saturation).
FinAbGroup hminus1(const Lattice& M);

// Degree n via the free resolution: n >= 1 cohomology of Hom_G(P, M), n <= -2
// homology of P tensor_G M at -n-1, n = 0 / -1 delegate to the direct forms.
FinAbGroup tate_resolution(const Lattice& M, int n);

// Degree n via dimension shifting: n <= 0 is h0 of the (-n)-th syzygy, n > 0
// is h0 of the n-th cosyzygy. Rank-0 lattices short-circuit to trivial.
FinAbGroup tate_shift(const Lattice& M, int n);

enum class Method { resolution, shift, both };

struct CohomTable {
    std::string lattice_id;
    int n_min = 0, n_max = 0;
    std::map<int, FinAbGroup> values;
};

// method = both computes each degree twice and throws MethodDisagreement on
// any mismatch.
CohomTable cohomology_table(const Lattice& M, int n_min, int n_max, Method method,
                            const std::string& lattice_id = "");

} // namespace latcoh
