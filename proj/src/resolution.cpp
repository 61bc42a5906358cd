#include "latcoh/resolution.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/snf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace latcoh {

bool GroupRingElem::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

GroupRingElem ring_zero(const GroupSpec& G) { return GroupRingElem(G.order()); }

GroupRingElem ring_one(const GroupSpec& G) {
    GroupRingElem r(G.order());
    r.c[0] = 1;
    return r;
}

namespace {

long generator_index(const GroupSpec& G, int i) {
    std::vector<int> e(G.orders.size(), 0);
    e[static_cast<size_t>(i)] = 1;
    return G.index_of(e);
}

} // namespace

GroupRingElem ring_gen_minus_one(const GroupSpec& G, int i) {
    GroupRingElem r(G.order());
    r.c[static_cast<size_t>(generator_index(G, i))] += 1;
    r.c[0] -= 1;
    return r;
}

GroupRingElem ring_cyclic_norm(const GroupSpec& G, int i) {
    GroupRingElem r(G.order());
    long g = generator_index(G, i);
    long cur = 0;
    for (long j = 0; j < G.orders[static_cast<size_t>(i)]; ++j) {
        r.c[static_cast<size_t>(cur)] += 1;
        cur = G.multiply(g, cur);
    }
    return r;
}

GroupRingElem ring_full_norm(const GroupSpec& G) {
    GroupRingElem r(G.order());
    for (auto& x : r.c) x = 1;
    return r;
}

GroupRingElem ring_add(const GroupSpec& G, const GroupRingElem& x, const GroupRingElem& y) {
    GroupRingElem r(G.order());
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = x.c[k] + y.c[k];
    return r;
}

GroupRingElem ring_negate(const GroupRingElem& x) {
    GroupRingElem r = x;
    for (auto& v : r.c) v = -v;
    return r;
}

GroupRingElem ring_mul(const GroupSpec& G, const GroupRingElem& x, const GroupRingElem& y) {
    GroupRingElem r(G.order());
    long n = G.order();
    for (long i = 0; i < n; ++i) {
        if (x.c[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (y.c[static_cast<size_t>(j)] == 0) continue;
            r.c[static_cast<size_t>(G.multiply(i, j))] +=
                x.c[static_cast<size_t>(i)] * y.c[static_cast<size_t>(j)];
        }
    }
    return r;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
    if (cols != o.rows || !(group == o.group))
        throw BadParameters("group ring matrix product shape mismatch");
    GroupRingMatrix r(group, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = ring_add(group, r.at(i, j), ring_mul(group, at(i, k), o.at(k, j)));
            }
        }
    return r;
}

bool GroupRingMatrix::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> multidegrees_of(int s, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(s), 0);
    // ascending lex: recurse on positions left to right
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == s - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (s == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, n);
    return out;
}

ResolutionComponent build_component(const GroupSpec& G, int n) {
    int s = G.num_generators();
    ResolutionComponent comp;
    comp.degree = n;
    comp.multidegrees = multidegrees_of(s, n);
    comp.rank = static_cast<int>(comp.multidegrees.size());
    if (n == 0) return comp;

    auto prev = multidegrees_of(s, n - 1);
    std::map<std::vector<int>, int> prev_index;
    for (size_t i = 0; i < prev.size(); ++i) prev_index[prev[i]] = static_cast<int>(i);

    GroupRingMatrix d(G, static_cast<int>(prev.size()), comp.rank);
    for (int j = 0; j < comp.rank; ++j) {
        const auto& D = comp.multidegrees[static_cast<size_t>(j)];
        int sign_exp = 0;
        for (int i = 0; i < s; ++i) {
            int di = D[static_cast<size_t>(i)];
            if (di >= 1) {
                std::vector<int> Dlow = D;
                Dlow[static_cast<size_t>(i)] = di - 1;
                int row = prev_index.at(Dlow);
                GroupRingElem entry =
                    (di % 2 == 1) ? ring_gen_minus_one(G, i) : ring_cyclic_norm(G, i);
                if (sign_exp % 2 == 1) entry = ring_negate(entry);
                d.at(row, j) = std::move(entry);
            }
            sign_exp += di;
        }
    }
    comp.differential = std::move(d);
    return comp;
}

std::string group_key(const GroupSpec& G) {
    std::string k = std::to_string(G.p) + ":";
    for (size_t i = 0; i < G.orders.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(G.orders[i]);
    }
    return k;
}

} // namespace

const ResolutionComponent& resolution_component(const GroupSpec& G, int n) {
    if (n < 0) throw BadParameters("resolution_component: negative degree");
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<ResolutionComponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(group_key(G), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto comp = std::make_unique<ResolutionComponent>(build_component(G, n));
        it = cache.emplace(key, std::move(comp)).first;
    }
    return *it->second;
}

IntMatrix apply_ringmat(const GroupRingMatrix& T, const Lattice& M, Variance variance) {
    if (!(T.group == M.group)) throw GroupMismatch("apply_ringmat: group mismatch");
    long n = M.group.order();
    int r = M.rank;
    std::vector<IntMatrix> elem_action;
    elem_action.reserve(static_cast<size_t>(n));
    for (long g = 0; g < n; ++g) elem_action.push_back(M.action_of_element(g));

    auto expand = [&](const GroupRingElem& x) {
        IntMatrix E = IntMatrix::zero(r, r);
        for (long g = 0; g < n; ++g) {
            const mpz_class& cg = x.c[static_cast<size_t>(g)];
            if (cg == 0) continue;
            E = E + elem_action[static_cast<size_t>(g)] * cg;
        }
        return E;
    };

    int brows = (variance == Variance::hom) ? T.cols : T.rows;
    int bcols = (variance == Variance::hom) ? T.rows : T.cols;
    IntMatrix out = IntMatrix::zero(brows * r, bcols * r);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j) {
            const GroupRingElem& x = T.at(i, j);
            if (x.is_zero()) continue;
            IntMatrix E = expand(x);
            int bi = (variance == Variance::hom) ? j : i;
            int bj = (variance == Variance::hom) ? i : j;
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) out.at(bi * r + a, bj * r + b) = E.at(a, b);
        }
    return out;
}

namespace {

// reduced echelon store for F_p row vectors, tracking pivot columns
struct EchelonFp {
    long p;
    int width;
    std::vector<std::vector<long>> rows; // reduced, pivot monic
    std::vector<int> pivots;

    EchelonFp(long p_, int w) : p(p_), width(w) {}

    static long inv_mod(long a, long p) {
        long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    // returns true if v was independent (rank grew)
    bool insert(std::vector<long> v) {
        for (size_t k = 0; k < rows.size(); ++k) {
            long c = v[static_cast<size_t>(pivots[k])] % p;
            if (c == 0) continue;
            for (int j = 0; j < width; ++j)
                v[static_cast<size_t>(j)] =
                    ((v[static_cast<size_t>(j)] - c * rows[k][static_cast<size_t>(j)]) % p + p) % p;
        }
        int piv = -1;
        for (int j = 0; j < width; ++j)
            if (v[static_cast<size_t>(j)] % p != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        long iv = inv_mod(((v[static_cast<size_t>(piv)] % p) + p) % p, p);
        for (int j = 0; j < width; ++j)
            v[static_cast<size_t>(j)] = ((v[static_cast<size_t>(j)] % p) * iv % p + p) % p;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

} // namespace

MinimalCover minimal_cover(const Lattice& M) {
    if (M.rank == 0) throw ZeroModule("minimal_cover: rank-0 lattice");
    const GroupSpec& G = M.group;
    long p = G.p;
    int r = M.rank;
    int s = G.num_generators();

    // span of pM + sum_i (g_i - 1)M inside F_p^r, as column vectors
    EchelonFp ech(p, r);
    for (int i = 0; i < s; ++i) {
        for (int c = 0; c < r; ++c) {
            std::vector<long> v(static_cast<size_t>(r));
            for (int a = 0; a < r; ++a) {
                mpz_class x = M.action[static_cast<size_t>(i)].at(a, c);
                if (a == c) x -= 1;
                v[static_cast<size_t>(a)] =
                    mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
            }
            ech.insert(std::move(v));
        }
    }

    // deterministic generator lifts: standard basis vectors in index order
    std::vector<int> gens;
    for (int idx = 0; idx < r; ++idx) {
        std::vector<long> v(static_cast<size_t>(r), 0);
        v[static_cast<size_t>(idx)] = 1;
        if (ech.insert(std::move(v))) gens.push_back(idx);
    }
    int d = static_cast<int>(gens.size());

    long n = G.order();
    std::vector<IntMatrix> elem_action;
    elem_action.reserve(static_cast<size_t>(n));
    for (long g = 0; g < n; ++g) elem_action.push_back(M.action_of_element(g));

    IntMatrix cover = IntMatrix::zero(r, d * static_cast<int>(n));
    for (int k = 0; k < d; ++k)
        for (long h = 0; h < n; ++h) {
            int col = k * static_cast<int>(n) + static_cast<int>(h);
            for (int a = 0; a < r; ++a)
                cover.at(a, col) = elem_action[static_cast<size_t>(h)].at(a, gens[static_cast<size_t>(k)]);
        }

    MinimalCover mc;
    mc.d = d;
    mc.cover = ModuleMap{free_lattice(G, d), M, std::move(cover)};
    return mc;
}

Lattice syzygy(const Lattice& M) {
    MinimalCover mc = minimal_cover(M);
    IntMatrix K = kernel_basis(mc.cover.matrix);
    return sublattice(mc.cover.source, K);
}

Lattice cosyzygy(const Lattice& M) {
    if (M.rank == 0) throw ZeroModule("cosyzygy: rank-0 lattice");
    return dual(syzygy(dual(M)));
}

Lattice ar_translate(const Lattice& M, int k, int rank_limit) {
    if (M.rank == 0) throw ZeroModule("ar_translate: rank-0 lattice");
    Lattice cur = M;
    for (int step = 0; step < std::abs(k); ++step) {
        if (cur.rank == 0) throw ZeroModule("ar_translate: lattice became zero mid-iteration");
        cur = (k > 0) ? syzygy(cur) : cosyzygy(cur);
        if (cur.rank > rank_limit)
            throw SizeLimit("ar_translate: intermediate rank " + std::to_string(cur.rank) +
                            " exceeds limit " + std::to_string(rank_limit));
    }
    return cur;
}

} // namespace latcoh
