#pragma once

#include "deltatopo/matrix.hpp"

namespace delta {

// Smith normal form U * M * V = D over the integers: U, V unimodular, D
// diagonal with d1 | d2 | ... and nonnegative diagonal entries. Pivoting is
// smallest absolute value with (row, col) tie-breaking, so the output is a
// deterministic function of the input.
struct SnfResult {
    Matrix u, d, v;
    long rank = 0;
    std::vector<Int> divisors() const;  // nonzero diagonal entries, in order
};

SnfResult smith_normal_form(const Matrix& m);

long snf_rank(const Matrix& m);

// True if the column vector b lies in the integer column span of m.
bool snf_in_image(const Matrix& m, const std::vector<Int>& b);

}  // namespace delta
