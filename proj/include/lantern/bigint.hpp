#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lantern {

// All quadratic-form bookkeeping is exact: arbitrary-precision integers for
// linking matrices and determinants, rationals for congruence pivots.
using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = std::vector<std::vector<Int>>;
using IntVector = std::vector<Int>;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Exact determinant by fraction-free (Bareiss) elimination.
Int exact_det(IntMatrix a);

bool is_symmetric(const IntMatrix& a);

}  // namespace lantern
