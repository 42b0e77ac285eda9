#ifndef FFREP_LINALG_HPP
#define FFREP_LINALG_HPP

#include <vector>

#include "ffrep/base_field.hpp"

namespace ffrep::linalg {

using Vec = std::vector<BaseElem>;
using Mat = std::vector<Vec>;

/// In-place reduced row-echelon form over an exact field.
/// Zero rows are dropped. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Mat& m);

/// Solves A x = b. Returns false when inconsistent; free variables are
/// set to zero.
bool solve(const Mat& A, const Vec& b, Vec& x, const BaseFieldPtr& field);

/// Row basis of {x | A x = 0}, in RREF order; cols = number of unknowns.
Mat nullspace(Mat A, std::size_t cols, const BaseFieldPtr& field);

}  // namespace ffrep::linalg

#endif
