#pragma once

#include <vector>

#include "deltatopo/ring.hpp"

namespace delta {

// Dense exact matrix over a RingSpec. Entries act on column vectors, so a
// composite "first f then g" is the product g * f.
class Matrix {
  public:
    Matrix() : ring_(RingSpec::integers()), rows_(0), cols_(0) {}
    Matrix(RingSpec ring, long rows, long cols);

    static Matrix identity(const RingSpec& ring, long n);
    static Matrix zero(const RingSpec& ring, long rows, long cols) { return Matrix(ring, rows, cols); }
    static Matrix from_ints(const RingSpec& ring, const std::vector<std::vector<long>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const RingSpec& ring() const { return ring_; }

    const RingElem& at(long i, long j) const { return a_[i * cols_ + j]; }
    void set(long i, long j, RingElem v);
    void add_at(long i, long j, const RingElem& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const RingElem& s) const;
    Matrix negated() const;
    // Transpose with the ring involution applied entrywise.
    Matrix transpose_involute() const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;

    // Direct-sum style block insertion: copies src at offset (r0, c0).
    void insert_block(long r0, long c0, const Matrix& src);
    Matrix block(long r0, long c0, long nrows, long ncols) const;

    std::string to_string() const;

  private:
    RingSpec ring_;
    long rows_, cols_;
    std::vector<RingElem> a_;
};

}  // namespace delta
