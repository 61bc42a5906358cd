#include "latcoh/lattice.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/snf.hpp"

#include <string>
#include <utility>

namespace latcoh {

IntMatrix Lattice::action_of_element(long index) const {
    auto e = group.exponents_of(index);
    IntMatrix result = IntMatrix::identity(rank);
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) result = result * action[i].pow(e[i]);
    }
    return result;
}

IntMatrix Lattice::norm_matrix() const {
    // tr factors as the product of the cyclic norms of the generators.
    IntMatrix result = IntMatrix::identity(rank);
    for (size_t i = 0; i < action.size(); ++i) {
        IntMatrix cyc = IntMatrix::zero(rank, rank);
        IntMatrix pw = IntMatrix::identity(rank);
        for (long j = 0; j < group.orders[i]; ++j) {
            cyc = cyc + pw;
            if (j + 1 < group.orders[i]) pw = pw * action[i];
        }
        result = result * cyc;
    }
    return result;
}

void validate(const Lattice& L) {
    if (L.rank < 0) throw RelationViolation("negative rank");
    size_t s = L.group.orders.size();
    if (L.action.size() != s)
        throw RelationViolation("expected " + std::to_string(s) + " action matrices, got " +
                                std::to_string(L.action.size()));
    for (size_t i = 0; i < s; ++i) {
        const IntMatrix& A = L.action[i];
        if (A.rows() != L.rank || A.cols() != L.rank)
            throw RelationViolation("action matrix " + std::to_string(i) + " has shape " +
                                    std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                    ", expected " + std::to_string(L.rank) + "x" +
                                    std::to_string(L.rank));
    }
    for (size_t i = 0; i < s; ++i) {
        if (!L.action[i].pow(L.group.orders[i]).is_identity())
            throw RelationViolation("order relation fails: action matrix " + std::to_string(i) +
                                    " raised to " + std::to_string(L.group.orders[i]) +
                                    " is not the identity");
    }
    for (size_t i = 0; i < s; ++i)
        for (size_t j = i + 1; j < s; ++j) {
            if (L.action[i] * L.action[j] != L.action[j] * L.action[i])
                throw RelationViolation("commutation fails: action matrices " +
                                        std::to_string(i) + " and " + std::to_string(j) +
                                        " do not commute");
        }
}

Lattice direct_sum(const Lattice& M, const Lattice& N) {
    if (!(M.group == N.group)) throw GroupMismatch("direct_sum: lattices over different groups");
    int r = M.rank + N.rank;
    std::vector<IntMatrix> act;
    for (size_t i = 0; i < M.action.size(); ++i) {
        IntMatrix A = IntMatrix::zero(r, r);
        for (int a = 0; a < M.rank; ++a)
            for (int b = 0; b < M.rank; ++b) A.at(a, b) = M.action[i].at(a, b);
        for (int a = 0; a < N.rank; ++a)
            for (int b = 0; b < N.rank; ++b)
                A.at(M.rank + a, M.rank + b) = N.action[i].at(a, b);
        act.push_back(std::move(A));
    }
    return Lattice(M.group, r, std::move(act));
}

Lattice dual(const Lattice& M) {
    std::vector<IntMatrix> act;
    for (size_t i = 0; i < M.action.size(); ++i) {
        // inverse of A is A^(order-1); contragredient is its transpose
        act.push_back(M.action[i].pow(M.group.orders[i] - 1).transpose());
    }
    return Lattice(M.group, M.rank, std::move(act));
}

std::vector<ModuleMap> hom_space(const Lattice& M, const Lattice& N) {
    if (!(M.group == N.group)) throw GroupMismatch("hom_space: lattices over different groups");
    int rm = M.rank, rn = N.rank;
    size_t s = M.action.size();
    if (rm == 0 || rn == 0) return {};
    // unknown X is rn x rm, flattened row-major; one equation per (i, r, c)
    IntMatrix S = IntMatrix::zero((int)s * rn * rm, rn * rm);
    int row = 0;
    for (size_t i = 0; i < s; ++i) {
        const IntMatrix& AN = N.action[i];
        const IntMatrix& AM = M.action[i];
        for (int r = 0; r < rn; ++r)
            for (int c = 0; c < rm; ++c) {
                for (int k = 0; k < rn; ++k)
                    if (AN.at(r, k) != 0) S.at(row, k * rm + c) += AN.at(r, k);
                for (int l = 0; l < rm; ++l)
                    if (AM.at(l, c) != 0) S.at(row, r * rm + l) -= AM.at(l, c);
                ++row;
            }
    }
    IntMatrix K = kernel_basis(S);
    std::vector<ModuleMap> basis;
    for (int j = 0; j < K.cols(); ++j) {
        IntMatrix X = IntMatrix::zero(rn, rm);
        for (int k = 0; k < rn; ++k)
            for (int l = 0; l < rm; ++l) X.at(k, l) = K.at(k * rm + l, j);
        basis.push_back(ModuleMap{M, N, std::move(X)});
    }
    return basis;
}

IntMatrix invariants(const Lattice& M) {
    size_t s = M.action.size();
    if (M.rank == 0) return IntMatrix::zero(0, 0);
    IntMatrix S = IntMatrix::zero((int)s * M.rank, M.rank);
    for (size_t i = 0; i < s; ++i)
        for (int r = 0; r < M.rank; ++r)
            for (int c = 0; c < M.rank; ++c) {
                S.at((int)i * M.rank + r, c) = M.action[i].at(r, c);
                if (r == c) S.at((int)i * M.rank + r, c) -= 1;
            }
    return kernel_basis(S);
}

IntMatrix norm_image(const Lattice& M) {
    return image_basis(M.norm_matrix());
}

std::array<int, 4> r_multiplicities(const Lattice& M) {
    if (!M.group.is_klein()) throw NotKlein("r_multiplicities requires the Kleinian 4-group");
    std::array<int, 4> out{};
    const std::array<std::pair<int, int>, 4> signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (int q = 0; q < 4; ++q) {
        auto [u, v] = signs[q];
        if (M.rank == 0) {
            out[q] = 0;
            continue;
        }
        IntMatrix S = IntMatrix::zero(2 * M.rank, M.rank);
        for (int r = 0; r < M.rank; ++r)
            for (int c = 0; c < M.rank; ++c) {
                S.at(r, c) = M.action[0].at(r, c);
                S.at(M.rank + r, c) = M.action[1].at(r, c);
                if (r == c) {
                    S.at(r, c) -= u;
                    S.at(M.rank + r, c) -= v;
                }
            }
        out[q] = M.rank - rank(S);
    }
    return out;
}

namespace {

// index of the element whose exponent vector is the i-th standard basis vector
long generator_index(const GroupSpec& G, size_t i) {
    std::vector<int> e(G.orders.size(), 0);
    e[i] = 1;
    return G.index_of(e);
}

IsoResult yes_with(const Lattice& M, const Lattice& N, IntMatrix W) {
    IsoResult r;
    r.verdict = Iso::yes;
    r.witness = ModuleMap{M, N, std::move(W)};
    return r;
}

} // namespace

Lattice regular_lattice(const GroupSpec& G) {
    long n = G.order();
    std::vector<IntMatrix> act;
    for (size_t i = 0; i < G.orders.size(); ++i) {
        long gi = generator_index(G, i);
        IntMatrix A = IntMatrix::zero((int)n, (int)n);
        for (long j = 0; j < n; ++j) A.at((int)G.multiply(gi, j), (int)j) = 1;
        act.push_back(std::move(A));
    }
    return Lattice(G, (int)n, std::move(act));
}

Lattice free_lattice(const GroupSpec& G, int d) {
    if (d < 0) throw BadParameters("free_lattice: negative multiplicity");
    Lattice R = regular_lattice(G);
    Lattice F(G, 0, std::vector<IntMatrix>(G.orders.size(), IntMatrix::zero(0, 0)));
    for (int i = 0; i < d; ++i) F = direct_sum(F, R);
    return F;
}

Lattice sublattice(const Lattice& M, const IntMatrix& basis) {
    if (basis.rows() != M.rank) throw BadParameters("sublattice: basis has wrong row count");
    int d = basis.cols();
    if (rank(basis) != d) throw BadParameters("sublattice: basis columns are dependent");
    SmithForm sb = snf(basis);
    std::vector<IntMatrix> act;
    for (size_t i = 0; i < M.action.size(); ++i) {
        auto sol = solve(sb, M.action[i] * basis);
        if (!sol) throw NotContained("sublattice: span is not stable under generator " +
                                     std::to_string(i));
        act.push_back(std::move(*sol));
    }
    return Lattice(M.group, d, std::move(act));
}

IsoResult is_isomorphic(const Lattice& M, const Lattice& N, long max_combinations) {
    if (!(M.group == N.group)) throw GroupMismatch("is_isomorphic: lattices over different groups");
    IsoResult no;
    no.verdict = Iso::no;
    if (M.rank != N.rank) return no;
    if (M.rank == 0) return yes_with(M, N, IntMatrix::zero(0, 0));
    if (M.action == N.action) return yes_with(M, N, IntMatrix::identity(M.rank));
    if (M.group.is_klein() && r_multiplicities(M) != r_multiplicities(N)) return no;

    auto basis = hom_space(M, N);
    long h = (long)basis.size();
    if (h == 0) return no;
    long p = M.group.p;

    // An integral intertwiner invertible mod p reduces to an F_p-combination of
    // the basis reductions, and its det mod p depends only on the coefficients
    // mod p, so searching F_p^h is complete.
    std::vector<IntMatrix> red;
    red.reserve(basis.size());
    for (const auto& f : basis) {
        IntMatrix R = f.matrix;
        for (int i = 0; i < R.rows(); ++i)
            for (int j = 0; j < R.cols(); ++j) {
                mpz_class& x = R.at(i, j);
                mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), (unsigned long)p);
            }
        red.push_back(std::move(R));
    }

    auto combine = [&](const std::vector<long>& c) {
        IntMatrix T = IntMatrix::zero(N.rank, M.rank);
        for (long i = 0; i < h; ++i) {
            if (c[i] == 0) continue;
            if (c[i] == 1)
                T = T + red[i];
            else
                T = T + red[i] * mpz_class(c[i]);
        }
        return T;
    };
    auto lift = [&](const std::vector<long>& c) {
        IntMatrix T = IntMatrix::zero(N.rank, M.rank);
        for (long i = 0; i < h; ++i)
            if (c[i] != 0) T = T + basis[i].matrix * mpz_class(c[i]);
        return T;
    };
    auto try_coeffs = [&](const std::vector<long>& c) -> bool {
        return combine(c).det_mod(p) != 0;
    };

    // total combinations p^h - 1; enumerate exhaustively within budget
    mpz_class total = 1;
    for (long i = 0; i < h; ++i) total *= p;
    total -= 1;
    if (total <= max_combinations) {
        std::vector<long> c(h, 0);
        while (true) {
            long i = 0;
            while (i < h && c[i] == p - 1) c[i++] = 0;
            if (i == h) break;
            c[i] += 1;
            if (try_coeffs(c)) return yes_with(M, N, lift(c));
        }
        return no;
    }

    // over budget: deterministic probes only, then give up
    for (long i = 0; i < h; ++i) {
        std::vector<long> c(h, 0);
        c[i] = 1;
        if (try_coeffs(c)) return yes_with(M, N, lift(c));
    }
    for (long v = 1; v < p; ++v) {
        std::vector<long> c(h, v);
        if (try_coeffs(c)) return yes_with(M, N, lift(c));
    }
    IsoResult r;
    r.verdict = Iso::inconclusive;
    return r;
}

} // namespace latcoh
