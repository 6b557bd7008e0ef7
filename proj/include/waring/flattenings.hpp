#pragma once

// Catalecticant (symmetric flattening) matrices, rank profiles and
// Grassmann skew-flattenings, with the rank-based border-rank bounds they give.

#include <map>
#include <string>
#include <vector>

#include "waring/exactla.hpp"
#include "waring/forms.hpp"

namespace waring {

/// phi_{a,d-a} : S^a V* -> S^{d-a} V. Rows are degree-(d-a) tuples and
/// columns degree-a tuples, both in the global order; entry (beta, alpha) is
/// the tensor component of phi at the merged tuple. Requires 1 <= a <= d-1.
ExactMatrix cat_matrix(const HomogForm& phi, int a);

/// Same construction allowing 0 <= a <= d (used for degenerate blocks).
ExactMatrix catalecticant_block(const HomogForm& phi, int a);

/// Ranks of phi_{a,d-a} for a = 1..floor(d/2). Requires d >= 2.
std::vector<std::size_t> rank_profile(const HomogForm& phi);

/// max over a of rank(phi_{a,d-a}); 0 for forms of degree < 2 that vanish,
/// 1 for nonzero forms of degree < 2.
std::size_t cat_border_rank_lb(const HomogForm& phi);

struct MembershipReport {
  bool consistent = false;      ///< every rank equals min(r, C(a+2,2))
  bool within_window = false;   ///< r inside the range where the criterion is proven
  std::vector<std::size_t> profile;
  std::vector<std::size_t> expected;
  std::string warning;          ///< set when outside the window
};

/// Ternary rank-profile criterion for sigma_r(v_d(P^2)): rank(phi_{a,d-a}) ==
/// min(r, C(a+2,2)) for 1 <= a <= floor(d/2). The proven range is
/// r <= C(delta+1,2) for d = 2 delta and r <= C(delta+1,2)+1 for
/// d = 2 delta+1; outside it the report carries a warning.
MembershipReport ternary_membership_consistent(const HomogForm& phi, int r);

/// Element of the exterior power Lambda^k W, dim W = nvars.
class SkewTensor {
 public:
  SkewTensor(int nvars, int step);

  int nvars() const { return nvars_; }
  int step() const { return step_; }
  const std::map<std::vector<int>, Rational>& components() const { return comps_; }

  /// Component at a strictly increasing index list.
  Rational at(const std::vector<int>& idx) const;
  /// Adds `c` at an index list in any order (the permutation sign is applied;
  /// repeated indices contribute nothing).
  void add(std::vector<int> idx, const Rational& c);

  SkewTensor& operator+=(const SkewTensor& other);
  bool is_zero() const { return comps_.empty(); }

 private:
  int nvars_;
  int step_;
  std::map<std::vector<int>, Rational> comps_;
};

/// v1 ^ ... ^ vk: components are the k x k minors of the coordinate matrix.
SkewTensor wedge(const std::vector<std::vector<Rational>>& vectors);

/// Contraction Lambda^a W* -> Lambda^{k-a} W. Rows are (k-a)-subsets J,
/// columns a-subsets I (lex order); entry (J, I) is 0 when I and J meet and
/// otherwise sign(sort(I, J)) * t_{I u J}. Requires 1 <= a <= k-1.
ExactMatrix grass_skew_flattening(const SkewTensor& t, int a);

/// ceil(rank(skew-flattening) / C(k, a)).
std::size_t grass_border_rank_lb(const SkewTensor& t, int a);

}  // namespace waring
