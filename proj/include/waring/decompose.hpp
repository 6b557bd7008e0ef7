#pragma once

// Waring decompositions phi = sum c_i l_i^d for binary forms (kernel of a
// catalecticant) and general ternary quintics (kernel of YF_{5,2}). The
// kernel computations are exact; only root isolation is floating point.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "waring/exactla.hpp"
#include "waring/forms.hpp"
#include "waring/upoly.hpp"

namespace waring {

struct Summand {
  Complex coef;
  std::vector<Complex> form;  ///< first nonzero coordinate scaled to 1
  std::optional<Rational> exact_coef;
  std::optional<std::vector<Rational>> exact_form;
};

struct WaringDecomposition {
  std::vector<Summand> summands;
  /// max |coefficient of (phi - sum c_i l_i^d)| / max |coefficient of phi|,
  /// monomial convention.
  double residual = 0;
  bool exact = false;
  /// Candidate points before the all-minors filter (quintic pipeline) or the
  /// raw roots (binary), for verbose output.
  std::vector<std::vector<Complex>> raw_points;
  std::vector<std::string> log;
};

enum class DecompositionFailure { NotGenericRank, RepeatedRoot, Degenerate };

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(DecompositionFailure kind, const std::string& what, nlohmann::json details = {})
      : std::runtime_error(what), kind_(kind), details_(std::move(details)) {}
  DecompositionFailure kind() const { return kind_; }
  const nlohmann::json& details() const { return details_; }

 private:
  DecompositionFailure kind_;
  nlohmann::json details_;
};

struct DecomposeOptions {
  double minor_tol = 1e-7;  ///< relative size of a minor accepted as zero
  double point_tol = 1e-8;  ///< projective distance under which points coincide
  long max_denominator = 1000000;  ///< exactness attempt: largest root denominator tried
};

/// Binary form of degree d as r powers, from the kernel of phi_{r,d-r}.
/// Requires 2 variables and 1 <= r <= d. Throws DecompositionError when the
/// kernel is not 1-dimensional (NotGenericRank) or its generator has a
/// repeated root (RepeatedRoot, also for a double root at infinity).
WaringDecomposition decompose_binary(const HomogForm& phi, int r, const DecomposeOptions& opt = {});

/// General ternary quintic as 7 fifth powers. Throws DecompositionError
/// (NotGenericRank with the rank profile) when ker YF_{5,2} is not
/// 4-dimensional, and Degenerate when the cubic system does not yield
/// exactly 7 points.
WaringDecomposition decompose_quintic(const HomogForm& phi, const DecomposeOptions& opt = {});

/// Exact kernel of phi_{a,d-a} as degree-a forms whose monomial coefficients
/// are the kernel vector entries (these vanish at every summand of phi).
std::vector<HomogForm> kernel_base_locus_hint(const HomogForm& phi, int a);

/// Section (q0, q1, q2) of the quintic pipeline: kernel of YF_{5,2}(phi)
/// modulo the Euler vectors, as ternary quadrics with monomial coefficients
/// read from the kernel vector. Throws like decompose_quintic.
std::vector<HomogForm> quintic_section(const HomogForm& phi);

/// sin of the angle between two nonzero complex vectors (0 for proportional vectors).
double projective_distance(std::span<const Complex> u, std::span<const Complex> v);

/// Residual of a candidate decomposition, in the sense of WaringDecomposition::residual.
double reconstruction_residual(const HomogForm& phi, const std::vector<Summand>& summands);

nlohmann::json decomposition_to_json(const WaringDecomposition& dec, bool verbose = false);

}  // namespace waring
