#pragma once

#include "latcoh/finabgroup.hpp"
#include "latcoh/intmatrix.hpp"

#include <optional>

namespace latcoh {

// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ..., di >= 0.
struct SmithForm {
    IntMatrix U, D, V;

    std::vector<mpz_class> diagonal() const;
    int rank() const; // nonzero diagonal entries
};

// Deterministic Smith normal form: pivot on the nonzero entry of minimal
// absolute value, ties broken by lowest (row, col).
SmithForm snf(const IntMatrix& A);

int rank(const IntMatrix& A);

// Columns form a Z-basis of {x : A x = 0}. The integer kernel is saturated,
// so the basis is primitive. Column count = cols - rank(A).
IntMatrix kernel_basis(const IntMatrix& A);
IntMatrix kernel_basis(const IntMatrix& A, const SmithForm& sf);

// Columns form a Z-basis of the honest image sublattice A * Z^cols (no
// saturation).
IntMatrix image_basis(const IntMatrix& A);
IntMatrix image_basis(const IntMatrix& A, const SmithForm& sf);

// X with A X = B over Z, or nullopt when no integer solution exists.
std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B);
std::optional<IntMatrix> solve(const SmithForm& sf, const IntMatrix& B);

// Elementary divisors of (Z-span of K) / (Z-span of I). K must have
// Z-independent columns; every column of I must lie in the Z-span of K
// (NotContained otherwise) and rank(I) must equal rank(K) (InfiniteQuotient
// otherwise).
FinAbGroup subquotient_group(const IntMatrix& K, const IntMatrix& I);

} // namespace latcoh
