#include "latcoh/tate.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/resolution.hpp"
#include "latcoh/snf.hpp"

#include <utility>

namespace latcoh {

FinAbGroup h0(const Lattice& M) {
    if (M.rank == 0) return FinAbGroup::trivial();
    return subquotient_group(invariants(M), norm_image(M));
}

namespace {

// honest image of the augmentation ideal: columns of all (g_i - 1) stacked
// side by side
IntMatrix augmentation_image(const Lattice& M) {
    int r = M.rank;
    int s = M.group.num_generators();
    IntMatrix C = IntMatrix::zero(r, s * r);
    for (int i = 0; i < s; ++i)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                C.at(a, i * r + b) = M.action[static_cast<size_t>(i)].at(a, b);
                if (a == b) C.at(a, i * r + b) -= 1;
            }
    return image_basis(C);
}

} // namespace

FinAbGroup hminus1(const Lattice& M) {
    if (M.rank == 0) return FinAbGroup::trivial();
    return subquotient_group(kernel_basis(M.norm_matrix()), augmentation_image(M));
}

FinAbGroup tate_resolution(const Lattice& M, int n) {
    if (n == 0) return h0(M);
    if (n == -1) return hminus1(M);
    if (M.rank == 0) return FinAbGroup::trivial();
    const GroupSpec& G = M.group;
    if (n >= 1) {
        const auto& dn = *resolution_component(G, n).differential;
        const auto& dn1 = *resolution_component(G, n + 1).differential;
        IntMatrix K = kernel_basis(apply_ringmat(dn1, M, Variance::hom));
        IntMatrix I = image_basis(apply_ringmat(dn, M, Variance::hom));
        return subquotient_group(K, I);
    }
    int m = -n - 1; // homology degree, >= 1
    const auto& dm = *resolution_component(G, m).differential;
    const auto& dm1 = *resolution_component(G, m + 1).differential;
    IntMatrix K = kernel_basis(apply_ringmat(dm, M, Variance::tensor));
    IntMatrix I = image_basis(apply_ringmat(dm1, M, Variance::tensor));
    return subquotient_group(K, I);
}

FinAbGroup tate_shift(const Lattice& M, int n) {
    Lattice cur = M;
    for (int step = 0; step < (n < 0 ? -n : n); ++step) {
        if (cur.rank == 0) return FinAbGroup::trivial();
        cur = (n < 0) ? syzygy(cur) : cosyzygy(cur);
        if (cur.rank > 512)
            throw SizeLimit("tate_shift: intermediate rank " + std::to_string(cur.rank) +
                            " exceeds limit 512");
    }
    return h0(cur);
}

namespace {

std::map<int, FinAbGroup> table_shift(const Lattice& M, int n_min, int n_max) {
    std::map<int, FinAbGroup> out;
    if (M.rank == 0) {
        for (int n = n_min; n <= n_max; ++n) out[n] = FinAbGroup::trivial();
        return out;
    }
    if (n_min <= 0) {
        Lattice cur = M;
        for (int n = 0; n >= n_min; --n) {
            if (n <= n_max) out[n] = h0(cur);
            if (n > n_min) {
                if (cur.rank == 0) {
                    for (int m = n - 1; m >= n_min; --m)
                        if (m <= n_max) out[m] = FinAbGroup::trivial();
                    break;
                }
                cur = syzygy(cur);
                if (cur.rank > 512)
                    throw SizeLimit("cohomology_table: intermediate rank " +
                                    std::to_string(cur.rank) + " exceeds limit 512");
            }
        }
    }
    if (n_max >= 1) {
        Lattice cur = M;
        for (int n = 1; n <= n_max; ++n) {
            if (cur.rank > 0) {
                cur = cosyzygy(cur);
                if (cur.rank > 512)
                    throw SizeLimit("cohomology_table: intermediate rank " +
                                    std::to_string(cur.rank) + " exceeds limit 512");
            }
            if (n >= n_min) out[n] = h0(cur);
        }
    }
    return out;
}

std::map<int, FinAbGroup> table_resolution(const Lattice& M, int n_min, int n_max) {
    std::map<int, FinAbGroup> out;
    if (M.rank == 0) {
        for (int n = n_min; n <= n_max; ++n) out[n] = FinAbGroup::trivial();
        return out;
    }
    const GroupSpec& G = M.group;
    struct Stage {
        IntMatrix mat;
        SmithForm sf;
    };
    auto stage_of = [&](int k, Variance v, std::map<int, Stage>& cache) -> const Stage& {
        auto it = cache.find(k);
        if (it == cache.end()) {
            Stage st;
            st.mat = apply_ringmat(*resolution_component(G, k).differential, M, v);
            st.sf = snf(st.mat);
            it = cache.emplace(k, std::move(st)).first;
        }
        return it->second;
    };
    std::map<int, Stage> hom_cache, ten_cache;
    for (int n = n_min; n <= n_max; ++n) {
        if (n == 0)
            out[n] = h0(M);
        else if (n == -1)
            out[n] = hminus1(M);
        else if (n >= 1) {
            const Stage& lo = stage_of(n, Variance::hom, hom_cache);
            const Stage& hi = stage_of(n + 1, Variance::hom, hom_cache);
            out[n] = subquotient_group(kernel_basis(hi.mat, hi.sf), image_basis(lo.mat, lo.sf));
        } else {
            int m = -n - 1;
            const Stage& at = stage_of(m, Variance::tensor, ten_cache);
            const Stage& above = stage_of(m + 1, Variance::tensor, ten_cache);
            out[n] = subquotient_group(kernel_basis(at.mat, at.sf),
                                       image_basis(above.mat, above.sf));
        }
    }
    return out;
}

} // namespace

CohomTable cohomology_table(const Lattice& M, int n_min, int n_max, Method method,
                            const std::string& lattice_id) {
    if (n_min > n_max) throw BadParameters("cohomology_table: n_min exceeds n_max");
    CohomTable t;
    t.lattice_id = lattice_id;
    t.n_min = n_min;
    t.n_max = n_max;
    switch (method) {
    case Method::resolution:
        t.values = table_resolution(M, n_min, n_max);
        break;
    case Method::shift:
        t.values = table_shift(M, n_min, n_max);
        break;
    case Method::both: {
        auto res = table_resolution(M, n_min, n_max);
        auto shi = table_shift(M, n_min, n_max);
        for (int n = n_min; n <= n_max; ++n)
            if (res[n] != shi[n])
                throw MethodDisagreement(n, res[n].to_string(), shi[n].to_string());
        t.values = std::move(res);
        break;
    }
    }
    return t;
}

} // namespace latcoh
