#include "latcoh/snf.hpp"

#include "latcoh/errors.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace latcoh {

std::vector<mpz_class> SmithForm::diagonal() const {
    std::vector<mpz_class> d;
    int n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

int SmithForm::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

// Row/column elimination working on A in place while accumulating U (rows)
// and V (cols) so that U * A_in * V = A.
struct Worker {
    IntMatrix A, U, V;

    explicit Worker(const IntMatrix& in)
        : A(in), U(IntMatrix::identity(in.rows())), V(IntMatrix::identity(in.cols())) {}

    // from: first column of A that can be nonzero in rows src/dst.
    void row_sub(int dst, int src, const mpz_class& q, int from) {
        if (q == 0) return;
        for (int j = from; j < A.cols(); ++j) A.at(dst, j) -= q * A.at(src, j);
        for (int j = 0; j < U.cols(); ++j) U.at(dst, j) -= q * U.at(src, j);
    }
    void col_sub(int dst, int src, const mpz_class& q, int from) {
        if (q == 0) return;
        for (int i = from; i < A.rows(); ++i) A.at(i, dst) -= q * A.at(i, src);
        for (int i = 0; i < V.rows(); ++i) V.at(i, dst) -= q * V.at(i, src);
    }
    void row_add(int dst, int src, int from) {
        for (int j = from; j < A.cols(); ++j) A.at(dst, j) += A.at(src, j);
        for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += U.at(src, j);
    }
    void negate_row(int i) {
        for (int j = 0; j < A.cols(); ++j) A.at(i, j) = -A.at(i, j);
        for (int j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        A.swap_rows(i, j);
        U.swap_rows(i, j);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        A.swap_cols(i, j);
        V.swap_cols(i, j);
    }

    // Minimal |entry| != 0 in A[t:, t:], ties by lowest (row, col); false if none.
    bool find_pivot(int t, int& pi, int& pj) const {
        const mpz_class* best = nullptr;
        for (int i = t; i < A.rows(); ++i)
            for (int j = t; j < A.cols(); ++j) {
                const mpz_class& x = A.at(i, j);
                if (x == 0) continue;
                if (!best || mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) < 0) {
                    best = &x;
                    pi = i;
                    pj = j;
                    if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return true;
                }
            }
        return best != nullptr;
    }
};

} // namespace

SmithForm snf(const IntMatrix& input) {
    Worker w(input);
    int m = input.rows(), n = input.cols();
    int steps = std::min(m, n);
    bool done = false;
    mpz_class q, r;
    for (int t = 0; t < steps && !done; ++t) {
        for (;;) {
            int pi, pj;
            if (!w.find_pivot(t, pi, pj)) {
                // All-zero tail: trailing diagonal entries stay 0.
                done = true;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (w.A.at(i, t) == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.A.at(i, t).get_mpz_t(),
                            w.A.at(t, t).get_mpz_t());
                w.row_sub(i, t, q, t);
                if (r != 0) dirty = true;
            }
            if (dirty) continue;
            for (int j = t + 1; j < n; ++j) {
                if (w.A.at(t, j) == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.A.at(t, j).get_mpz_t(),
                            w.A.at(t, t).get_mpz_t());
                w.col_sub(j, t, q, t);
                if (r != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility fixup so d_t divides everything below-right.
            const mpz_class& piv = w.A.at(t, t);
            if (piv != 1 && piv != -1) {
                int bad = -1;
                for (int i = t + 1; i < m && bad < 0; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (w.A.at(i, j) % piv != 0) {
                            bad = i;
                            break;
                        }
                if (bad >= 0) {
                    w.row_add(t, bad, t);
                    continue;
                }
            }
            break;
        }
        if (!done && w.A.at(t, t) < 0) w.negate_row(t);
    }
    return SmithForm{std::move(w.U), std::move(w.A), std::move(w.V)};
}

int rank(const IntMatrix& A) { return snf(A).rank(); }

IntMatrix kernel_basis(const IntMatrix& A, const SmithForm& sf) {
    int r = sf.rank();
    return sf.V.columns(r, A.cols());
}

IntMatrix kernel_basis(const IntMatrix& A) { return kernel_basis(A, snf(A)); }

IntMatrix image_basis(const IntMatrix& A, const SmithForm& sf) {
    // A * V carries the image basis in its first rank columns (the rest are zero).
    int r = sf.rank();
    return (A * sf.V).columns(0, r);
}

IntMatrix image_basis(const IntMatrix& A) { return image_basis(A, snf(A)); }

std::optional<IntMatrix> solve(const SmithForm& sf, const IntMatrix& B) {
    if (sf.U.cols() != B.rows()) throw std::invalid_argument("solve: row mismatch");
    int m = sf.D.rows(), n = sf.D.cols();
    IntMatrix C = sf.U * B;
    IntMatrix Y(n, B.cols());
    mpz_class q, r;
    for (int k = 0; k < B.cols(); ++k) {
        for (int i = 0; i < m; ++i) {
            if (i < n && sf.D.at(i, i) != 0) {
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), C.at(i, k).get_mpz_t(),
                            sf.D.at(i, i).get_mpz_t());
                if (r != 0) return std::nullopt;
                Y.at(i, k) = q;
            } else if (C.at(i, k) != 0) {
                return std::nullopt;
            }
        }
    }
    return sf.V * Y;
}

std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B) {
    return solve(snf(A), B);
}

FinAbGroup subquotient_group(const IntMatrix& K, const IntMatrix& I) {
    if (K.rows() != I.rows()) throw std::invalid_argument("subquotient_group: row mismatch");
    SmithForm sk = snf(K);
    if (sk.rank() != K.cols())
        throw std::invalid_argument("subquotient_group: columns of K are dependent");
    auto C = solve(sk, I);
    if (!C) throw NotContained("subquotient_group: a column of I is outside the span of K");
    SmithForm sc = snf(*C);
    if (sc.rank() < K.cols())
        throw InfiniteQuotient("subquotient_group: rank(I) < rank(K), quotient is infinite");
    return FinAbGroup::from_snf_diagonal(sc.diagonal());
}

} // namespace latcoh
