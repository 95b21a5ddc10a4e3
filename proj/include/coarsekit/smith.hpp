#pragma once

// Smith normal form over Z with arbitrary-precision entries, plus integer
// column-lattice membership. Used as the exact-linear-algebra oracle for
// degree-0 homology at a scale.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace coarsekit {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>; // row major, rectangular

struct SmithResult {
    std::vector<Int> divisors; // positive, d1 | d2 | ... (nonzero diagonal)
    int rank = 0;              // = divisors.size()
};

SmithResult smith_normal_form(IntMatrix M);

// Does g lie in the integer column span of M? Decided by reducing (M | g)
// with the row operations of the Smith reduction.
bool in_column_image(const IntMatrix& M, const std::vector<Int>& g);

} // namespace coarsekit
