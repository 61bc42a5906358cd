#include "latcoh/finabgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latcoh {

FinAbGroup FinAbGroup::copies(long m, long p) {
    FinAbGroup g;
    g.divisors.assign(static_cast<size_t>(m), mpz_class(p));
    return g;
}

FinAbGroup FinAbGroup::from_snf_diagonal(const std::vector<mpz_class>& diag) {
    FinAbGroup g;
    for (const auto& d : diag)
        if (d > 1) g.divisors.push_back(d);
    return g;
}

mpz_class FinAbGroup::order() const {
    mpz_class o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
}

bool FinAbGroup::is_p_primary(long p) const {
    for (auto d : divisors) {
        while (d % p == 0) d /= p;
        if (d != 1) return false;
    }
    return true;
}

// Factor every divisor into prime powers, then rebuild the chain by pairing
// the largest exponents of each prime.
FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& o) const {
    std::map<mpz_class, std::vector<int>> exps; // prime -> exponents, one per cyclic factor
    auto absorb = [&](const std::vector<mpz_class>& ds) {
        for (mpz_class d : ds) {
            mpz_class q = 2;
            while (d > 1) {
                if (mpz_probab_prime_p(q.get_mpz_t(), 25) != 0) {
                    int e = 0;
                    while (d % q == 0) {
                        d /= q;
                        ++e;
                    }
                    if (e) exps[q].push_back(e);
                }
                if (q * q > d && d > 1) { // remaining part is prime
                    exps[d].push_back(1);
                    break;
                }
                ++q;
            }
        }
    };
    absorb(divisors);
    absorb(o.divisors);

    size_t chain_len = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<mpz_class> chain(chain_len, mpz_class(1)); // chain[0] = largest divisor
    for (auto& [p, es] : exps)
        for (size_t i = 0; i < es.size(); ++i) {
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[i]));
            chain[i] *= pk;
        }
    std::reverse(chain.begin(), chain.end());
    return FinAbGroup(std::move(chain));
}

std::string FinAbGroup::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < divisors.size(); ++i) os << (i ? "," : "") << divisors[i].get_str();
    os << "]";
    return os.str();
}

std::string FinAbGroup::pretty() const {
    if (divisors.empty()) return "0";
    std::ostringstream os;
    size_t i = 0;
    while (i < divisors.size()) {
        size_t j = i;
        while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
        if (i) os << " x ";
        if (j - i > 1)
            os << "(Z/" << divisors[i].get_str() << ")^" << (j - i);
        else
            os << "Z/" << divisors[i].get_str();
        i = j;
    }
    return os.str();
}

} // namespace latcoh
