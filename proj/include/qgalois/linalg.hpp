#pragma once

#include <optional>
#include <vector>

#include "qgalois/cyclotomic.hpp"

namespace qgalois {

// Small dense exact linear algebra over Q(zeta_n).
using CVec = std::vector<Cyclotomic>;
using CMat = std::vector<CVec>;

// Row-reduce in place; returns the pivot column of each pivot row.
std::vector<int> rref(CMat& m);

int rank(CMat m);

// Solve A x = b exactly. Returns nullopt when inconsistent; when the system
// is underdetermined, free variables are set to zero.
std::optional<CVec> solve(CMat a, CVec b);

// Basis of the nullspace of A (columns = unknowns).
std::vector<CVec> nullspace(CMat a, int cols, int order);

}  // namespace qgalois
