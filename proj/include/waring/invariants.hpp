#pragma once

// Point evaluation of the classical invariants (Aronhold, det phi_{3,3}) and
// the (n, d, r) -> equation table used to certify border-rank lower bounds.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "waring/exactla.hpp"
#include "waring/forms.hpp"

namespace waring {

/// Row/column index removed from YF_{3,2}(phi) before taking the 8x8
/// Pfaffian. Six of the nine principal 8-Pfaffians vanish identically
/// because the Euler vectors at indices 0, 4, 8 lie in the kernel; deleting
/// index 8 leaves a nonzero one.
constexpr std::size_t kAronholdDeletedIndex = 8;

/// Pfaffian of YF_{3,2}(phi) with row and column kAronholdDeletedIndex
/// removed. Homogeneous of degree 4 in phi; vanishes exactly on
/// sigma_3(v_3(P^2)). Requires a ternary cubic.
Rational aronhold(const HomogForm& phi);

/// rank(YF_{3,2}(phi)) <= 6.
bool aronhold_rank_test(const HomogForm& phi);

/// det(phi_{3,3}) for a ternary sextic.
Rational sextic_det33(const HomogForm& phi);

enum class Status { Ideal, Scheme, IrreducibleComponent, Set };
std::string to_string(Status s);

enum class TestKind {
  Catalecticant,   ///< rank of phi_{a,d-a}
  YoungFlattening, ///< rank of YF_{d,n}
  Aronhold,        ///< rank of YF_{3,2}, plus the Aronhold value
  Det33,           ///< rank of phi_{3,3}, plus its determinant
  Twisted          ///< rank of the symmetric twisted flattening (sextics, p = 2)
};
std::string to_string(TestKind k);

struct StrategyTest {
  TestKind kind = TestKind::Catalecticant;
  int a = 0;                       ///< split degree for catalecticant tests
  std::size_t threshold = 0;       ///< rank of the matrix at every point of sigma_r is <= threshold
  std::size_t equation_size = 0;   ///< size of the minors / sub-Pfaffians giving equations
  bool pfaffian = false;
  std::string description;

  bool same_check(const StrategyTest& o) const {
    return kind == o.kind && a == o.a && threshold == o.threshold;
  }
};

struct StrategyRow {
  int n = 0, d = 0, r = 0;
  std::vector<StrategyTest> tests;
  Status status = Status::Set;
  std::vector<std::string> references;
  std::vector<std::string> caveats;
  bool known_sharp = true;  ///< false when no tabulated equations apply
};

/// Equations known for sigma_r(v_d(P^n)). Every applicable tabulated case
/// contributes its tests; the status is the strongest among them. When no
/// case applies the generic pair (middle catalecticant with threshold r and
/// YF with threshold C(n,a) r) is returned with known_sharp = false.
/// Requires n, d, r >= 1.
StrategyRow strategy(int n, int d, int r);

enum class Verdict { Consistent, Excluded };
std::string to_string(Verdict v);

struct TestOutcome {
  StrategyTest test;
  std::size_t rows = 0, cols = 0;
  std::size_t rank = 0;
  Verdict verdict = Verdict::Consistent;
  std::optional<Rational> value;  ///< Aronhold value or det phi_{3,3}
};

struct CertificateReport {
  std::string digest;
  int n = 0, d = 0, r = 0;
  StrategyRow row;
  std::vector<TestOutcome> outcomes;
  Verdict verdict = Verdict::Consistent;
  std::size_t cat_lower_bound = 0;
  std::size_t yf_lower_bound = 0;
  std::size_t border_rank_lower_bound = 0;
};

/// Runs every test of strategy(n, d, r). EXCLUDED iff some exact rank exceeds
/// its threshold, which proves phi is not in sigma_r. Independent tests run
/// on up to WARING_THREADS threads; the report order follows the strategy.
/// Requires at least 2 variables and degree >= 1.
CertificateReport certify(const HomogForm& phi, int r);

/// The report as JSON; ranks are integers and invariant values "p/q" strings.
nlohmann::json report_to_json(const CertificateReport& rep);

/// Number of worker threads: WARING_THREADS if set and positive, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_threads();

}  // namespace waring
