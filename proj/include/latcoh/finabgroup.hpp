#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latcoh {

// Finite abelian group as its elementary divisor chain: each divisor > 1 and
// each divides the next. The empty list is the trivial group.
struct FinAbGroup {
    std::vector<mpz_class> divisors;

    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<mpz_class> d) : divisors(std::move(d)) {}

    static FinAbGroup trivial() { return FinAbGroup(); }

    // m copies of Z/p.
    static FinAbGroup copies(long m, long p);

    // Keeps entries > 1 of an SNF diagonal (already divisibility-sorted).
    static FinAbGroup from_snf_diagonal(const std::vector<mpz_class>& diag);

    bool is_trivial() const { return divisors.empty(); }
    mpz_class order() const;
    bool is_p_primary(long p) const; // every divisor a power of p (trivially true if trivial)

    // Elementary divisors of the direct sum, renormalized into a chain.
    FinAbGroup direct_sum(const FinAbGroup& o) const;

    bool operator==(const FinAbGroup& o) const { return divisors == o.divisors; }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

    // "[2,2,4]" multiset notation; "[]" for the trivial group.
    std::string to_string() const;
    // "Z/2 x Z/2 x Z/4" — "0" for the trivial group.
    std::string pretty() const;
};

} // namespace latcoh
