#include "latcoh/intmatrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace latcoh {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged initializer");
        int j = 0;
        for (long v : r) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpz_class& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const mpz_class& c) const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(long k) const {
    assert(rows_ == cols_ && k >= 0);
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

IntMatrix IntMatrix::columns(int from, int to) const {
    assert(0 <= from && from <= to && to <= cols_);
    IntMatrix r(rows_, to - from);
    for (int i = 0; i < rows_; ++i)
        for (int j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
    return r;
}

void IntMatrix::set_column(int j, const IntMatrix& src, int src_j) {
    assert(rows_ == src.rows_);
    for (int i = 0; i < rows_; ++i) at(i, j) = src.at(i, src_j);
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    assert(a.rows_ == b.rows_);
    IntMatrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols_ == b.cols_);
    IntMatrix r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) mpz_swap(at(i, c).get_mpz_t(), at(j, c).get_mpz_t());
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) mpz_swap(at(r, i).get_mpz_t(), at(r, j).get_mpz_t());
}

mpz_class IntMatrix::determinant() const {
    assert(rows_ == cols_);
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

long IntMatrix::det_mod(long p) const {
    assert(rows_ == cols_);
    int n = rows_;
    std::vector<long> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long v = static_cast<long>(mpz_fdiv_ui(at(i, j).get_mpz_t(), static_cast<unsigned long>(p)));
            a[static_cast<size_t>(i) * n + j] = v;
        }
    auto el = [&](int i, int j) -> long& { return a[static_cast<size_t>(i) * n + j]; };
    // modular inverse by Fermat for prime p
    auto inv_mod = [&](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    long det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (el(i, k) % p != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(el(k, j), el(piv, j));
            det = (p - det) % p;
        }
        det = det * el(k, k) % p;
        long ipiv = inv_mod(el(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (el(i, k) == 0) continue;
            long f = el(i, k) * ipiv % p;
            for (int j = k; j < n; ++j) el(i, j) = ((el(i, j) - f * el(k, j)) % p + p) % p;
        }
    }
    return det % p;
}

int IntMatrix::rank_mod(long p) const {
    int m = rows_, n = cols_;
    std::vector<long> a(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] =
                static_cast<long>(mpz_fdiv_ui(at(i, j).get_mpz_t(), static_cast<unsigned long>(p)));
    auto el = [&](int i, int j) -> long& { return a[static_cast<size_t>(i) * n + j]; };
    auto inv_mod = [&](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (el(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < n; ++j) std::swap(el(rank, j), el(piv, j));
        long ipiv = inv_mod(el(rank, col));
        for (int i = rank + 1; i < m; ++i) {
            if (el(i, col) == 0) continue;
            long f = el(i, col) * ipiv % p;
            for (int j = col; j < n; ++j) el(i, j) = ((el(i, j) - f * el(rank, j)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace latcoh
