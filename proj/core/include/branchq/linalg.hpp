#pragma once

/* Exact integer matrices.  Everything is dense row-major vector-of-rows;
 * the matrices in this library are small (tens of rows), so no sparsity.
 * Entries are arbitrary-precision integers because eigenvector checks and
 * determinants overflow 64 bits already at moderate sizes.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace branchq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<Int>>;
using IntVector = std::vector<Int>;

IntMatrix identity_matrix(int n);

IntMatrix zero_matrix(int rows, int cols);

IntMatrix transpose(const IntMatrix& m);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

IntVector mat_vec(const IntMatrix& a, const IntVector& x);

IntMatrix mat_scale(const Int& c, const IntMatrix& m);

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

bool mat_equal(const IntMatrix& a, const IntMatrix& b);

// Kronecker product: block (i,j) of the result is a(i,j) * b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

} // namespace branchq
