#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace latcoh {

// Dense matrix of exact integers, row-major. 0xN and Nx0 matrices are legal
// (empty bases); all arithmetic is arbitrary precision.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const mpz_class& c) const;

    IntMatrix transpose() const;
    IntMatrix pow(long k) const; // square matrices, k >= 0

    // Columns [from, to) as a new matrix.
    IntMatrix columns(int from, int to) const;
    void set_column(int j, const IntMatrix& src, int src_j);

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    // Signed determinant, fraction-free (Bareiss). Square input.
    mpz_class determinant() const;
    // Determinant mod a small prime, by elimination over F_p.
    long det_mod(long p) const;
    // Rank of the reduction mod p.
    int rank_mod(long p) const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

} // namespace latcoh
