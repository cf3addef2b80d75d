#pragma once

#include <cstdint>
#include <vector>

namespace liouville {

// Coefficients of the Dirichlet series zeta(2s-1)/zeta(s):
// c(n) = sum_{d^2 m = n} d * mu(m). Returned as c[1..N] (c[0] unused).
std::vector<int32_t> c_coefficients(uint64_t n_max);

// Upper bound on sum_{n > N} |c(n)| / n^sigma for sigma >= 3/2, using
// |c(n)| = b on n = a b^2 with a squarefree.
double c_tail_majorant(uint64_t n_cut, double sigma = 1.5);

}  // namespace liouville
