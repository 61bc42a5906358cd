#include "latcoh/group.hpp"

#include <stdexcept>

namespace latcoh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

GroupSpec::GroupSpec(long p_, std::vector<long> orders_) : p(p_), orders(std::move(orders_)) {
    if (!is_prime(p)) throw std::invalid_argument("GroupSpec: p must be prime");
    if (orders.empty()) throw std::invalid_argument("GroupSpec: at least one generator");
    for (long o : orders) {
        long v = o;
        if (v < p) throw std::invalid_argument("GroupSpec: order must be a positive power of p");
        while (v % p == 0) v /= p;
        if (v != 1) throw std::invalid_argument("GroupSpec: order must be a positive power of p");
    }
}

long GroupSpec::order() const {
    long n = 1;
    for (long o : orders) n *= o;
    return n;
}

std::vector<int> GroupSpec::exponents_of(long index) const {
    std::vector<int> e(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) {
        e[i] = static_cast<int>(index % orders[i]);
        index /= orders[i];
    }
    return e;
}

long GroupSpec::index_of(const std::vector<int>& exponents) const {
    long idx = 0, stride = 1;
    for (size_t i = 0; i < orders.size(); ++i) {
        long e = ((exponents[i] % orders[i]) + orders[i]) % orders[i];
        idx += e * stride;
        stride *= orders[i];
    }
    return idx;
}

long GroupSpec::multiply(long i, long j) const {
    auto a = exponents_of(i), b = exponents_of(j);
    for (size_t k = 0; k < a.size(); ++k) a[k] = static_cast<int>((a[k] + b[k]) % orders[k]);
    return index_of(a);
}

long GroupSpec::inverse(long i) const {
    auto a = exponents_of(i);
    for (size_t k = 0; k < a.size(); ++k) a[k] = static_cast<int>((orders[k] - a[k]) % orders[k]);
    return index_of(a);
}

} // namespace latcoh
