#include "latcoh/zoo.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/resolution.hpp"
#include "latcoh/snf.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace latcoh {

std::string ZooName::to_string() const {
    std::string s;
    switch (kind) {
    case Kind::luv:
        s = std::string("L") + (u > 0 ? "+" : "-") + (v > 0 ? "+" : "-");
        break;
    case Kind::regular:
        s = "R";
        break;
    case Kind::overring:
        s = "A";
        break;
    case Kind::radr:
        s = "radR";
        break;
    case Kind::aug:
        s = "aug";
        break;
    case Kind::induced:
        s = subgroup == 0 ? "Na" : subgroup == 1 ? "Nb" : "Nab";
        break;
    }
    if (k != 0) s += "@" + std::to_string(k);
    return s;
}

ZooName ZooName::parse(const std::string& text) {
    std::string base = text;
    int power = 0;
    auto at = text.find('@');
    if (at != std::string::npos) {
        base = text.substr(0, at);
        std::string tail = text.substr(at + 1);
        try {
            size_t used = 0;
            power = std::stoi(tail, &used);
            if (used != tail.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw BadParameters("invalid translate power in zoo name: \"" + text + "\"");
        }
    }
    ZooName n;
    n.k = power;
    if (base == "R")
        n.kind = Kind::regular;
    else if (base == "A")
        n.kind = Kind::overring;
    else if (base == "radR")
        n.kind = Kind::radr;
    else if (base == "aug")
        n.kind = Kind::aug;
    else if (base == "Na") {
        n.kind = Kind::induced;
        n.subgroup = 0;
    } else if (base == "Nb") {
        n.kind = Kind::induced;
        n.subgroup = 1;
    } else if (base == "Nab") {
        n.kind = Kind::induced;
        n.subgroup = 2;
    } else if (base.size() == 3 && base[0] == 'L' && (base[1] == '+' || base[1] == '-') &&
               (base[2] == '+' || base[2] == '-')) {
        n.kind = Kind::luv;
        n.u = base[1] == '+' ? 1 : -1;
        n.v = base[2] == '+' ? 1 : -1;
    } else {
        throw BadParameters("unknown zoo name: \"" + base + "\"");
    }
    return n;
}

std::vector<ZooName> zoo_base_names() {
    std::vector<ZooName> out;
    const char* names[] = {"L++", "L+-", "L-+", "L--", "R", "A", "radR", "aug", "Na", "Nb", "Nab"};
    for (const char* s : names) out.push_back(ZooName::parse(s));
    return out;
}

Lattice minimal_overring(const GroupSpec& G) {
    long n = G.order();
    int r = static_cast<int>(n);
    std::vector<IntMatrix> act;
    for (int i = 0; i < G.num_generators(); ++i) {
        std::vector<int> exps(G.orders.size(), 0);
        exps[static_cast<size_t>(i)] = 1;
        long g = G.index_of(exps);
        IntMatrix A = IntMatrix::zero(r, r);
        A.at(0, 0) = 1; // g * e = e
        for (long j = 1; j < n; ++j) {
            long t = G.multiply(g, j);
            int col = static_cast<int>(j);
            if (t != 0)
                A.at(static_cast<int>(t), col) = 1;
            else {
                // g * j = 1 = p*e - sum of nonidentity elements
                A.at(0, col) = G.p;
                for (int m = 1; m < r; ++m) A.at(m, col) = -1;
            }
        }
        act.push_back(std::move(A));
    }
    return Lattice(G, r, std::move(act));
}

namespace {

Lattice build_base(const ZooName& name) {
    GroupSpec K = GroupSpec::klein();
    switch (name.kind) {
    case ZooName::Kind::luv:
        return Lattice(K, 1, {IntMatrix{{name.u}}, IntMatrix{{name.v}}});
    case ZooName::Kind::regular:
        return regular_lattice(K);
    case ZooName::Kind::overring:
        return minimal_overring(K);
    case ZooName::Kind::radr: {
        Lattice R = regular_lattice(K);
        // columns: 2*1, a-1, b-1, ab-1 in the basis {1, a, b, ab}
        IntMatrix B{{2, -1, -1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        return sublattice(R, B);
    }
    case ZooName::Kind::aug: {
        Lattice R = regular_lattice(K);
        IntMatrix row(1, 4);
        for (int j = 0; j < 4; ++j) row.at(0, j) = 1;
        return sublattice(R, kernel_basis(row));
    }
    case ZooName::Kind::induced: {
        IntMatrix minus = -IntMatrix::identity(2);
        IntMatrix swap{{0, 1}, {1, 0}};
        if (name.subgroup == 0) return Lattice(K, 2, {minus, swap});
        if (name.subgroup == 1) return Lattice(K, 2, {swap, minus});
        return Lattice(K, 2, {swap, -swap});
    }
    }
    throw BadParameters("unreachable zoo kind");
}

} // namespace

Lattice zoo_build(const ZooName& name) {
    static std::mutex mu;
    static std::map<std::string, Lattice> cache;
    std::string key = name.to_string();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Lattice base = build_base(name);
    Lattice out = name.k == 0 ? base : ar_translate(base, name.k);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), out);
    return out;
}

Prediction Prediction::prop6(int u, int v, int n) {
    Prediction p;
    p.kind = Kind::prop6;
    p.u = u;
    p.v = v;
    p.n = n;
    return p;
}

Prediction Prediction::thmpj_overring(int k, int n) {
    Prediction p;
    p.kind = Kind::thmpj;
    p.base_overring = true;
    p.k = k;
    p.n = n;
    return p;
}

Prediction Prediction::thmpj_luv(int u, int v, int k, int n) {
    Prediction p;
    p.kind = Kind::thmpj;
    p.base_overring = false;
    p.u = u;
    p.v = v;
    p.k = k;
    p.n = n;
    return p;
}

Prediction Prediction::prop3(long p_, int s, int n) {
    Prediction p;
    p.kind = Kind::prop3;
    p.p = p_;
    p.s = s;
    p.n = n;
    return p;
}

Prediction Prediction::tube_hom(int d, int k, int n) {
    Prediction p;
    p.kind = Kind::tube_hom;
    p.d = d;
    p.k = k;
    p.n = n;
    return p;
}

Prediction Prediction::tube_special(int i, int k, int n) {
    Prediction p;
    p.kind = Kind::tube_special;
    p.i = i;
    p.k = k;
    p.n = n;
    return p;
}

namespace {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void check_sign(int x) {
    if (x != 1 && x != -1) throw BadParameters("character sign must be +1 or -1");
}

} // namespace

FinAbGroup predict(const Prediction& pred) {
    switch (pred.kind) {
    case Prediction::Kind::prop6:
        return predict(Prediction::thmpj_luv(pred.u, pred.v, 0, pred.n));
    case Prediction::Kind::thmpj: {
        int m = pred.n - pred.k;
        if (pred.base_overring)
            return FinAbGroup::copies(m >= 0 ? m + 1 : -m, 2);
        check_sign(pred.u);
        check_sign(pred.v);
        if (pred.u == 1 && pred.v == 1) {
            if (m == 0) return FinAbGroup({mpz_class(4)});
            int a = m < 0 ? -m : m;
            if (a % 2 == 0) return FinAbGroup::copies(a / 2 + 1, 2);
            return FinAbGroup::copies(a / 2, 2);
        }
        int a = m < 0 ? -m : m;
        return FinAbGroup::copies((a + 1) / 2, 2);
    }
    case Prediction::Kind::prop3: {
        if (pred.s < 1) throw BadParameters("prop3 requires s >= 1");
        if (pred.p < 2) throw BadParameters("prop3 requires a prime p");
        long copies = pred.n >= 0 ? binomial(pred.n + pred.s - 1, pred.s - 1)
                                  : binomial(pred.s - pred.n - 2, pred.s - 1);
        return FinAbGroup::copies(copies, pred.p);
    }
    case Prediction::Kind::tube_hom: {
        if (pred.k < 1 || pred.d < 1) throw BadParameters("tube_hom requires k >= 1 and d >= 1");
        return FinAbGroup::copies(static_cast<long>(pred.k) * pred.d, 2);
    }
    case Prediction::Kind::tube_special: {
        if (pred.k < 1) throw BadParameters("tube_special requires level k >= 1");
        if (pred.i != 1 && pred.i != 2) throw BadParameters("tube_special branch must be 1 or 2");
        if (pred.k % 2 == 0) return FinAbGroup::copies(pred.k / 2, 2);
        int m = (pred.k + 1) / 2;
        bool even_n = ((pred.n % 2) + 2) % 2 == 0;
        bool full = (pred.i == 1) ? even_n : !even_n;
        return FinAbGroup::copies(full ? m : m - 1, 2);
    }
    }
    throw BadParameters("unreachable prediction kind");
}

} // namespace latcoh
