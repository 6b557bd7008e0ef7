#pragma once

// Closed-form codimension/degree formulas for secant varieties of quadric
// Veroneses and of Grassmannians of lines, dimension counts for secant
// varieties of Veronese varieties, and the (weak) defectivity tables.

#include <cstdint>
#include <optional>
#include <string>

#include "waring/exactla.hpp"

namespace waring {

/// dim S_{a,b} C^3 = 1/2 (a+2)(b+1)(a-b+1). Requires a >= b >= 0.
std::uint64_t dim_sab(int a, int b);

struct CodimDegree {
  BigInt codim;
  BigInt degree;
};

/// sigma_r(v_2(P^n)), the symmetric (n+1)x(n+1) matrices of rank <= r.
/// codim C(n-r+2, 2), degree prod_{i=0}^{n-r} C(n+1+i, n-r-i+1) / C(2i+1, i).
/// Requires 1 <= r <= n+1.
CodimDegree segre_sym(int n, int r);

/// sigma_r(G(2, n+1)), the skew (n+1)x(n+1) matrices of rank <= 2r.
/// codim C(n-2r+1, 2), degree 2^{-(n-2r)} prod_{i=0}^{n-2r-1} C(n+1+i, n-2r-i) / C(2i+1, i).
/// Requires r >= 1 and 2r <= n+1.
CodimDegree segre_grass(int n, int r);

/// deg sigma_{C(p+1,2)}(v_2(P^{p(p+3)/2})). Requires p >= 1.
BigInt sym_series_degree(int p);

/// deg sigma_{C(p+2,2)}(G(2, N)) with N = (p+1)(p+3) = dim S_{p+1,p} C^3.
/// Requires p >= 1.
BigInt grass_series_degree(int p);

/// Tabulated degrees of secant varieties of ternary Veroneses.
std::optional<BigInt> known_secant_degree(int n, int d, int r);

struct SecantDimReport {
  int n = 0, d = 0, r = 0;
  BigInt expected_dim;  ///< min(r(n+1) - 1, C(n+d, d) - 1)
  BigInt actual_dim;
  BigInt ambient_dim;   ///< C(n+d, d) - 1
  bool defective = false;
  bool weakly_defective = false;
};

SecantDimReport secant_dim(int n, int d, int r);

}  // namespace waring
