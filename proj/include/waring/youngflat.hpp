#pragma once

// Koszul matrices, Young flattenings YF_{d,n}(phi) : S^delta V* (x) L^a V ->
// S^e V (x) L^{a+1} V, and equivariant "twisted" flattenings that are
// defined by their value on d-th powers and extended linearly.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "waring/exactla.hpp"
#include "waring/forms.hpp"

namespace waring {

struct KoszulCell {
  int var = -1;  ///< -1 for a structural zero
  int sign = 0;
};

/// Matrix of v -> v ^ w from L^a V to L^{a+1} V, V of dimension n+1.
/// Rows are (a+1)-subsets, columns a-subsets, both lex. Cell (J, I) is
/// (i, (-1)^{pos of i in J}) when J = I u {i}.
///
/// With the volume identification (only when n = 2a) row J is relabelled by
/// its complement J^c, an a-subset, and multiplied by the sign of the
/// permutation (J, J^c). Rows then follow the column order and the matrix is
/// skew for odd a and symmetric for even a.
class KoszulPattern {
 public:
  KoszulPattern(int n, int a, bool volume_identified);

  int n() const { return n_; }
  int a() const { return a_; }
  bool volume_identified() const { return identified_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }

  /// Subset labelling each row: an (a+1)-subset, or the a-subset J^c when
  /// identified.
  const std::vector<std::vector<int>>& row_labels() const { return rows_; }
  const std::vector<std::vector<int>>& col_labels() const { return cols_; }
  const KoszulCell& cell(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }

  /// Replaces each cell (i, s) by s * v[i].
  ExactMatrix instantiate(std::span<const Rational> v) const;

 private:
  int n_;
  int a_;
  bool identified_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
  std::vector<KoszulCell> cells_;
};

/// Raw pattern when n != 2a, volume-identified pattern when n == 2a.
/// Requires 0 <= a <= n.
KoszulPattern koszul_matrix(int n, int a);

enum class Structure { Symmetric, Skew, Rectangular };
std::string to_string(Structure s);

struct YoungFlattening {
  int n = 0;
  int d = 0;
  int delta = 0;  ///< floor((d-1)/2), degree of the S^delta V* factor
  int a = 0;      ///< floor(n/2)
  ExactMatrix matrix;
  Structure structure = Structure::Rectangular;
};

/// Row/column blocks of YF_{d,n}: block (J, I) = sign * cat(d phi/dx_i, delta)
/// for the Koszul cell (i, sign), so column (I, alpha) and row (J, beta)
/// carry d * phi at alpha u beta u {i}. Requires d >= 1.
YoungFlattening young_flattening(const HomogForm& phi);

/// Structure of YF_{d,n}: skew iff n = 2a, a odd, d odd; symmetric iff
/// n = 2a, a even, d odd; rectangular otherwise.
Structure young_flattening_structure(int n, int d);

/// ceil(rank(YF) / C(n, a)).
std::size_t yf_border_rank_lb(const HomogForm& phi);

/// Kernel vectors of YF_{d,n} common to every phi when a = 1: for each
/// degree-(delta-1) tuple g the vector with a 1 at every column
/// ({i}, g u {i}). Requires floor(n/2) = 1 and delta >= 1.
std::vector<ExactVector> euler_kernel_vectors(int n, int d);

/// Column of YF_{d,n} for the pair (a-subset index, degree-delta monomial
/// index).
std::size_t yf_column(int n, int d, std::size_t subset_idx, std::size_t monomial_idx);

// ---------------------------------------------------------------------------
// Flattenings defined on powers.

/// A linear map S^d V -> matrices, known through its value at every power l^d.
struct PowerRule {
  int nvars = 0;
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::function<ExactMatrix(const LinearForm&)> at_power;
};

/// Forms l_1..l_N, N = C(n+d, n), whose d-th powers span S^d V, with the
/// inverse change of basis.
struct PowerSpanBasis {
  int nvars = 0;
  int degree = 0;
  std::vector<LinearForm> forms;
  ExactMatrix to_power_coords;  ///< c = to_power_coords * (tensor coeffs of phi)

  /// Coefficients c with phi = sum c_i l_i^d.
  ExactVector expand(const HomogForm& phi) const;
};

/// Draws forms with small integer coordinates until their powers are
/// independent (exact rank check); bounded reseed-and-retry.
PowerSpanBasis power_span_basis(int nvars, int degree, std::uint64_t seed = 1);

/// sum c_i rule(l_i) where phi = sum c_i l_i^d in a power-span basis.
ExactMatrix flattening_from_power_rule(const HomogForm& phi, const PowerRule& rule,
                                       std::uint64_t seed = 1);
ExactMatrix flattening_from_power_rule(const HomogForm& phi, const PowerRule& rule,
                                       const PowerSpanBasis& basis);

/// The power rule of YF_{d,n}: at l^d, entry ((J,beta),(I,alpha)) is
/// sign * d * l_i * l^beta * l^alpha.
PowerRule young_flattening_rule(int n, int d);

/// Ternary map S^m V* (x) S^k(L^2 V*) -> S^m V (x) S^k(L^2 V), defined at l^d
/// (d = 2m + k) by l^alpha l^beta times the k-th symmetric power of the
/// contraction L^2 V* -> V* ~ L^2 V with l. Rows (beta, C) and columns
/// (alpha, A): beta, alpha degree-m tuples, C, A degree-k tuples over the
/// pair labels {01, 02, 12}. Rank k+1 at a power; symmetric for even k and
/// skew for odd k.
PowerRule twisted_rule(int m, int k);

/// M_phi for sextic-type degrees: m = p, k = 2, d = 2p+2. Square of size
/// 6 C(p+2,2), symmetric, rank 3 at a power.
ExactMatrix symmetric_twisted_flattening(const HomogForm& phi, int p);

/// m = 2q, k = p-1, d = p+4q-1. Rank p at a power; skew for even p.
ExactMatrix q_twisted_flattening(const HomogForm& phi, int p, int q);

/// 1/2 (b-alpha+1)(a-b-beta+1)(a+beta-alpha+2). Requires a >= b >= 0,
/// 0 <= alpha <= b, 0 <= beta <= a-b.
std::uint64_t x_power_yf_rank(int a, int b, int alpha, int beta);

}  // namespace waring
