#include "deltatopo/matrix.hpp"

#include <sstream>

namespace delta {

Matrix::Matrix(RingSpec ring, long rows, long cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    a_.assign(static_cast<size_t>(rows_) * cols_, re_zero(ring_));
}

Matrix Matrix::identity(const RingSpec& ring, long n) {
    Matrix m(ring, n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, re_one(ring));
    return m;
}

Matrix Matrix::from_ints(const RingSpec& ring, const std::vector<std::vector<long>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r ? static_cast<long>(rows[0].size()) : 0;
    Matrix m(ring, r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[i].size()) != c) throw DomainError("ragged matrix literal");
        for (long j = 0; j < c; ++j) m.set(i, j, re_from_int(ring, rows[i][j]));
    }
    return m;
}

void Matrix::set(long i, long j, RingElem v) {
    a_[i * cols_ + j] = re_normalize(ring_, std::move(v));
}

void Matrix::add_at(long i, long j, const RingElem& v) {
    a_[i * cols_ + j] = re_add(ring_, a_[i * cols_ + j], v);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DomainError("matrix addition: shape or ring mismatch");
    Matrix r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = re_add(ring_, a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DomainError("matrix subtraction: shape or ring mismatch");
    Matrix r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = re_sub(ring_, a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (ring_ != o.ring_) throw DomainError("matrix product: ring mismatch");
    if (cols_ != o.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const RingElem& x = at(i, k);
            if (re_is_zero(ring_, x)) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const RingElem& y = o.at(k, j);
                if (re_is_zero(ring_, y)) continue;
                r.add_at(i, j, re_mul(ring_, x, y));
            }
        }
    return r;
}

Matrix Matrix::scaled(const RingElem& s) const {
    Matrix r(ring_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(i, j, re_mul(ring_, at(i, j), s));
    return r;
}

Matrix Matrix::negated() const {
    Matrix r(ring_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(i, j, re_neg(ring_, at(i, j)));
    return r;
}

Matrix Matrix::transpose_involute() const {
    Matrix r(ring_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(j, i, re_involute(ring_, at(i, j)));
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!re_is_zero(ring_, v)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(ring_, rows_);
}

bool Matrix::operator==(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (!re_is_zero(ring_, re_sub(ring_, a_[k], o.a_[k]))) return false;
    return true;
}

void Matrix::insert_block(long r0, long c0, const Matrix& src) {
    if (src.ring_ != ring_) throw DomainError("block insert: ring mismatch");
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw DomainError("block insert: out of range");
    for (long i = 0; i < src.rows_; ++i)
        for (long j = 0; j < src.cols_; ++j) set(r0 + i, c0 + j, src.at(i, j));
}

Matrix Matrix::block(long r0, long c0, long nrows, long ncols) const {
    Matrix r(ring_, nrows, ncols);
    for (long i = 0; i < nrows; ++i)
        for (long j = 0; j < ncols; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << re_to_string(ring_, at(i, j));
    }
    os << "]";
    return os.str();
}

}  // namespace delta
