#pragma once

#include <vector>

namespace latcoh {

// Finite abelian p-group: prime p and one cyclic order (a power of p) per
// generator. Elements are indexed by exponent tuples with generator 0 varying
// fastest, so the Klein 4-group enumerates as 1, a, b, ab.
struct GroupSpec {
    long p = 2;
    std::vector<long> orders;

    GroupSpec() = default;
    GroupSpec(long p_, std::vector<long> orders_);

    static GroupSpec klein() { return GroupSpec(2, {2, 2}); }

    int num_generators() const { return static_cast<int>(orders.size()); }
    long order() const;
    bool is_klein() const { return p == 2 && orders.size() == 2 && orders[0] == 2 && orders[1] == 2; }

    std::vector<int> exponents_of(long index) const;
    long index_of(const std::vector<int>& exponents) const;
    long multiply(long i, long j) const;
    long inverse(long i) const;

    bool operator==(const GroupSpec& o) const { return p == o.p && orders == o.orders; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }
};

} // namespace latcoh
