#pragma once

#include <vector>

#include "qv/base.hpp"

namespace qv {

using RatRow = std::vector<BigRat>;
using RatMat = std::vector<RatRow>;

/** Reduced row echelon form with zero rows dropped.  Canonical: two row sets
    span the same space iff their forms compare equal. */
RatMat rref(RatMat m);

/** Reduces v against the pivots of an rref matrix; the result is zero iff v
    lies in the row space. */
RatRow reduce_by(const RatMat& r, RatRow v);

/** Divides out the content and makes the first nonzero entry positive.  The
    zero vector is left alone. */
void make_primitive(std::vector<Int>& v);

/** Basis of the integer kernel lattice of x -> sum a_i x_i, built by
    unimodular column elimination.  Every integer solution is an integer
    combination of the rows returned.  Requires a nonzero; size()-1 rows. */
std::vector<std::vector<Int>> kernel_basis(const std::vector<Int>& a);

}  // namespace qv
