#include "waring/decompose.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "waring/flattenings.hpp"
#include "waring/youngflat.hpp"

namespace waring {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Shared numeric helpers.

double max_abs(const std::vector<Rational>& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return m.get_d();
}

std::vector<Complex> monomial_power_coeffs(std::span<const Complex> l, const MonomialBasis& basis) {
  std::vector<Complex> out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Complex p = multinomial(basis[k]).get_d();
    for (std::size_t i = 0; i < l.size(); ++i)
      for (int e = 0; e < basis[k][i]; ++e) p *= l[i];
    out[k] = p;
  }
  return out;
}

std::vector<Complex> normalize_point(std::vector<Complex> p) {
  double m = 0;
  for (const auto& z : p) m = std::max(m, std::abs(z));
  for (const auto& z : p)
    if (std::abs(z) > 1e-10 * m) {
      const Complex s = z;
      for (auto& w : p) w /= s;
      break;
    }
  return p;
}

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

// Least-squares coefficients of phi in the powers of `points`, in the
// monomial convention.
std::vector<Complex> fit_coefficients(const HomogForm& phi, const std::vector<std::vector<Complex>>& points) {
  const MonomialBasis basis(phi.nvars(), phi.degree());
  const auto target = phi.monomial_coeffs();
  const double scale = std::max(max_abs(target), 1e-300);
  Eigen::MatrixXcd A(basis.size(), points.size());
  Eigen::VectorXcd b(basis.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto col = monomial_power_coeffs(points[j], basis);
    for (std::size_t k = 0; k < basis.size(); ++k) A(k, j) = col[k];
  }
  for (std::size_t k = 0; k < basis.size(); ++k) b(k) = target[k].get_d() / scale;
  const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
  std::vector<Complex> out(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) out[j] = x(j) * scale;
  return out;
}

// Exact solution of A x = b when it exists and is unique.
std::optional<ExactVector> solve_exact(const ExactMatrix& A, const ExactVector& b) {
  ExactMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const ExactMatrix red = rref(aug, &pivots);
  if (pivots.size() != A.cols()) return std::nullopt;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] != k) return std::nullopt;
  ExactVector x(A.cols());
  for (std::size_t k = 0; k < A.cols(); ++k) x[k] = red(k, A.cols());
  return x;
}

// Exact coefficients for exact points, or nothing.
std::optional<ExactVector> exact_coefficients(const HomogForm& phi, const std::vector<std::vector<Rational>>& points) {
  ExactMatrix A(phi.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const HomogForm p = power_form(LinearForm(points[j]), phi.degree());
    for (std::size_t k = 0; k < phi.size(); ++k) A(k, j) = p.tensor(k);
  }
  return solve_exact(A, ExactVector(phi.tensor_coeffs().begin(), phi.tensor_coeffs().end()));
}

std::optional<Rational> rational_value(Complex z, long max_den) {
  const double scale = std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) > 1e-9 * scale) return std::nullopt;
  const Rational q = rationalize(z.real(), max_den);
  if (std::abs(q.get_d() - z.real()) > 1e-9 * scale) return std::nullopt;
  return q;
}

WaringDecomposition assemble(const HomogForm& phi, std::vector<std::vector<Complex>> points,
                             const std::optional<std::vector<std::vector<Rational>>>& exact_points) {
  WaringDecomposition dec;
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });

  std::optional<ExactVector> exact;
  if (exact_points) exact = exact_coefficients(phi, *exact_points);
  const std::vector<Complex> coefs = fit_coefficients(phi, points);
  for (std::size_t idx : order) {
    Summand s;
    s.form = points[idx];
    if (exact) {
      s.exact_coef = (*exact)[idx];
      s.exact_form = (*exact_points)[idx];
      s.coef = s.exact_coef->get_d();
      for (std::size_t i = 0; i < s.form.size(); ++i) s.form[i] = (*s.exact_form)[i].get_d();
    } else {
      s.coef = coefs[idx];
    }
    dec.summands.push_back(std::move(s));
  }
  if (exact) {
    HomogForm sum(phi.nvars(), phi.degree());
    for (const auto& s : dec.summands) sum += *s.exact_coef * power_form(LinearForm(*s.exact_form), phi.degree());
    dec.exact = sum == phi;
  }
  dec.residual = dec.exact ? 0.0 : reconstruction_residual(phi, dec.summands);
  return dec;
}

// Exact normalized coordinates of every point, when all of them are rational
// and pass `verify`.
template <class Verify>
std::optional<std::vector<std::vector<Rational>>> rational_points(const std::vector<std::vector<Complex>>& points,
                                                                  long max_den, Verify verify) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : points) {
    std::vector<Rational> q;
    for (const auto& z : p) {
      auto v = rational_value(z, max_den);
      if (!v) return std::nullopt;
      q.push_back(*v);
    }
    if (!verify(q)) return std::nullopt;
    out.push_back(std::move(q));
  }
  return out;
}

json complex_json(Complex z) {
  const double scale = std::max(1.0, std::abs(z.real()));
  if (std::abs(z.imag()) <= 1e-12 * scale) return z.real();
  return {{"re", z.real()}, {"im", z.imag()}};
}

// ---------------------------------------------------------------------------
// Ternary polynomials with exact coefficients, for the quintic pipeline.

using Exp3 = std::array<int, 3>;
using TPoly = std::map<Exp3, Rational>;

TPoly from_form(const HomogForm& q) {
  const MonomialBasis basis(3, q.degree());
  const auto c = q.monomial_coeffs();
  TPoly p;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) p[{basis[k][0], basis[k][1], basis[k][2]}] = c[k];
  return p;
}

// x_i * a - x_j * b
TPoly minor(int i, const TPoly& a, int j, const TPoly& b) {
  TPoly out;
  for (const auto& [e, c] : a) {
    Exp3 f = e;
    ++f[i];
    out[f] += c;
  }
  for (const auto& [e, c] : b) {
    Exp3 f = e;
    ++f[j];
    out[f] -= c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Complex cpow(Complex z, int e) {
  Complex p = 1;
  for (int k = 0; k < e; ++k) p *= z;
  return p;
}

Complex eval(const TPoly& p, const std::array<Complex, 3>& x) {
  Complex v = 0;
  for (const auto& [e, c] : p) v += c.get_d() * cpow(x[0], e[0]) * cpow(x[1], e[1]) * cpow(x[2], e[2]);
  return v;
}

// Sum of |coefficient * monomial|, the scale a minor's value is compared to.
double eval_scale(const TPoly& p, const std::array<Complex, 3>& x) {
  double s = 0;
  for (const auto& [e, c] : p)
    s += std::abs(c.get_d()) * std::abs(cpow(x[0], e[0]) * cpow(x[1], e[1]) * cpow(x[2], e[2]));
  return s;
}

Complex eval_partial(const TPoly& p, int var, const std::array<Complex, 3>& x) {
  Complex v = 0;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exp3 f = e;
    --f[var];
    v += c.get_d() * static_cast<double>(e[var]) * cpow(x[0], f[0]) * cpow(x[1], f[1]) * cpow(x[2], f[2]);
  }
  return v;
}

bool vanishes_exactly(const TPoly& p, const std::vector<Rational>& x) {
  Rational v = 0;
  for (const auto& [e, c] : p) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    v += t;
  }
  return v == 0;
}

// Coefficient of w^j in p restricted to x_c = 1, as a polynomial in u.
struct Bivariate {
  // coef[j] is a polynomial in u (constant term first)
  std::vector<UPoly> coef;
  int deg_w() const { return static_cast<int>(coef.size()) - 1; }
};

Bivariate restrict_to_chart(const TPoly& p, int u, int w) {
  std::map<int, std::vector<Rational>> by_w;
  for (const auto& [e, c] : p) {
    auto& poly = by_w[e[w]];
    if (static_cast<int>(poly.size()) <= e[u]) poly.resize(e[u] + 1);
    poly[e[u]] += c;
  }
  Bivariate b;
  if (by_w.empty()) return b;
  b.coef.resize(by_w.rbegin()->first + 1);
  for (auto& [j, poly] : by_w) b.coef[j] = UPoly(poly);
  while (!b.coef.empty() && b.coef.back().is_zero()) b.coef.pop_back();
  return b;
}

// Sylvester determinant of A, B (as polynomials in w) at u = x.
Rational sylvester_at(const Bivariate& A, const Bivariate& B, const Rational& x) {
  const int m = A.deg_w(), n = B.deg_w();
  const std::size_t size = static_cast<std::size_t>(m + n);
  ExactMatrix S(size, size);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) S(r, r + (m - j)) = A.coef[j](x);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) S(n + r, r + (n - j)) = B.coef[j](x);
  return determinant(S);
}

// Exact resultant in u by evaluation at deg_bound+1 integers and
// interpolation, confirmed at one extra point.
std::optional<UPoly> resultant(const Bivariate& A, const Bivariate& B, int deg_bound) {
  if (A.deg_w() < 1 || B.deg_w() < 1) return std::nullopt;
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= deg_bound; ++k) {
    xs.emplace_back(k);
    ys.push_back(sylvester_at(A, B, xs.back()));
  }
  UPoly R = interpolate(xs, ys);
  const Rational extra(deg_bound + 1);
  if (R(extra) != sylvester_at(A, B, extra))
    throw std::logic_error("resultant interpolation disagrees with the Sylvester determinant");
  if (R.is_zero()) return std::nullopt;
  return R;
}

std::vector<Complex> chart_poly_in_w(const Bivariate& A, Complex u) {
  std::vector<Complex> out;
  for (const auto& c : A.coef) {
    Complex v = 0;
    for (int k = c.degree(); k >= 0; --k) v = v * u + c.coeff(k).get_d();
    out.push_back(v);
  }
  return out;
}

struct SolveContext {
  std::array<TPoly, 3> minors;  // C01, C02, C12
  const DecomposeOptions* opt;
};

bool passes_filter(const SolveContext& ctx, const std::array<Complex, 3>& x) {
  for (const auto& m : ctx.minors) {
    const double s = eval_scale(m, x);
    if (s == 0) continue;
    if (std::abs(eval(m, x)) > ctx.opt->minor_tol * s) return false;
  }
  return true;
}

// Gauss-Newton on the three minors with x_c fixed to 1.
std::array<Complex, 3> polish(const SolveContext& ctx, std::array<Complex, 3> x, int u, int w) {
  for (int it = 0; it < 12; ++it) {
    Eigen::Matrix<Complex, 3, 2> J;
    Eigen::Matrix<Complex, 3, 1> r;
    for (int k = 0; k < 3; ++k) {
      r(k) = eval(ctx.minors[k], x);
      J(k, 0) = eval_partial(ctx.minors[k], u, x);
      J(k, 1) = eval_partial(ctx.minors[k], w, x);
    }
    const Eigen::Matrix<Complex, 2, 1> step = J.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;
    x[u] += step(0);
    x[w] += step(1);
    const double size = std::max({1.0, std::abs(x[u]), std::abs(x[w])});
    if (step.norm() < 1e-15 * size) break;
  }
  return x;
}

void add_unique(std::vector<std::vector<Complex>>& pts, std::vector<Complex> p, double tol) {
  for (const auto& q : pts)
    if (projective_distance(p, q) < tol) return;
  pts.push_back(std::move(p));
}

struct ChartResult {
  std::vector<std::vector<Complex>> points;
  std::vector<std::vector<Complex>> raw;
  std::string note;
};

ChartResult solve_chart(const SolveContext& ctx, int c) {
  ChartResult res;
  const int u = (c + 1) % 3, w = (c + 2) % 3;
  const double dedupe = 1e-6;

  const Bivariate A = restrict_to_chart(ctx.minors[0], u, w);
  const Bivariate B = restrict_to_chart(ctx.minors[1], u, w);
  const auto R = resultant(A, B, 9);
  if (!R) {
    res.note = "chart x" + std::to_string(c) + " = 1: resultant vanishes identically";
    return res;
  }
  for (const Complex& ur : polynomial_roots(R->normalized_complex())) {
    std::vector<Complex> wpoly = chart_poly_in_w(A, ur);
    double mag = 0;
    for (const auto& z : wpoly) mag = std::max(mag, std::abs(z));
    if (mag < 1e-12) wpoly = chart_poly_in_w(B, ur);
    for (const Complex& wr : polynomial_roots(wpoly)) {
      std::array<Complex, 3> x{};
      x[c] = 1;
      x[u] = ur;
      x[w] = wr;
      res.raw.push_back({x[0], x[1], x[2]});
      const auto y = polish(ctx, x, u, w);
      if (!passes_filter(ctx, y)) continue;
      add_unique(res.points, {y[0], y[1], y[2]}, dedupe);
    }
  }

  // Points on the line x_c = 0: common roots of the restricted binary cubics.
  std::array<UPoly, 3> restricted;
  bool all_zero = true;
  bool vanish_at_w_axis = true;  // the point with x_u = 0, x_w = 1
  for (int k = 0; k < 3; ++k) {
    std::vector<Rational> coeffs(4);
    for (const auto& [e, coef] : ctx.minors[k]) {
      if (e[c] != 0) continue;
      coeffs[e[w]] += coef;  // t = x_w / x_u with x_u = 1
      if (e[u] == 0) vanish_at_w_axis = false;
    }
    restricted[k] = UPoly(coeffs);
    all_zero = all_zero && restricted[k].is_zero();
  }
  if (all_zero) {
    res.note = "the line x" + std::to_string(c) + " = 0 lies in the zero locus";
    res.points.clear();
    return res;
  }
  UPoly g;
  for (const auto& r : restricted) g = gcd(g, r);
  for (const Complex& t : polynomial_roots(g.normalized_complex())) {
    std::array<Complex, 3> x{};
    x[u] = 1;
    x[w] = t;
    res.raw.push_back({x[0], x[1], x[2]});
    add_unique(res.points, {x[0], x[1], x[2]}, dedupe);
  }
  if (vanish_at_w_axis) {
    std::array<Complex, 3> x{};
    x[w] = 1;
    res.raw.push_back({x[0], x[1], x[2]});
    add_unique(res.points, {x[0], x[1], x[2]}, dedupe);
  }
  return res;
}

json points_json(const std::vector<std::vector<Complex>>& pts) {
  json out = json::array();
  for (const auto& p : pts) {
    json row = json::array();
    for (const auto& z : p) row.push_back(complex_json(z));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

double projective_distance(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DomainError("projective_distance: dimension mismatch");
  double nu = 0, nv = 0;
  for (const auto& z : u) nu += std::norm(z);
  for (const auto& z : v) nv += std::norm(z);
  if (nu == 0 || nv == 0) throw DomainError("projective_distance: zero vector");
  nu = std::sqrt(nu);
  nv = std::sqrt(nv);
  Complex ip = 0;
  for (std::size_t i = 0; i < u.size(); ++i) ip += std::conj(u[i] / nu) * (v[i] / nv);
  double s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::norm(v[i] / nv - ip * (u[i] / nu));
  return std::sqrt(s);
}

double reconstruction_residual(const HomogForm& phi, const std::vector<Summand>& summands) {
  const MonomialBasis basis(phi.nvars(), phi.degree());
  const auto target = phi.monomial_coeffs();
  std::vector<Complex> diff(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) diff[k] = target[k].get_d();
  for (const auto& s : summands) {
    const auto col = monomial_power_coeffs(s.form, basis);
    for (std::size_t k = 0; k < basis.size(); ++k) diff[k] -= s.coef * col[k];
  }
  double num = 0;
  for (const auto& z : diff) num = std::max(num, std::abs(z));
  const double den = max_abs(target);
  return den == 0 ? num : num / den;
}

WaringDecomposition decompose_binary(const HomogForm& phi, int r, const DecomposeOptions& opt) {
  if (phi.nvars() != 2) throw DomainError("decompose_binary: form must have 2 variables");
  const int d = phi.degree();
  if (r < 1 || r > d)
    throw DomainError("decompose_binary: need 1 <= r <= d (r = " + std::to_string(r) + ", d = " +
                      std::to_string(d) + ")");
  const ExactMatrix M = catalecticant_block(phi, r);
  const auto K = kernel_basis(M);
  if (K.size() != 1)
    throw DecompositionError(DecompositionFailure::NotGenericRank,
                             "form not of generic rank " + std::to_string(r) + ": kernel of phi_{" +
                                 std::to_string(r) + "," + std::to_string(d - r) + "} has dimension " +
                                 std::to_string(K.size()),
                             {{"kernel_dim", K.size()}, {"catalecticant_rank", rank(M)}});
  // Generator G(y0, y1) = sum_k c_k y0^{r-k} y1^k; G(1, t) = g(t).
  const UPoly g(K[0]);
  const int at_infinity = r - g.degree();
  const UPoly common = gcd(g, g.derivative());
  if (at_infinity >= 2 || common.degree() >= 1)
    throw DecompositionError(DecompositionFailure::RepeatedRoot,
                             "border-rank/rank gap: decomposition as " + std::to_string(r) +
                                 " distinct powers does not exist (the apolar generator has a repeated root)",
                             {{"generator", [&] {
                                json c = json::array();
                                for (const auto& x : K[0]) c.push_back(to_string(x));
                                return c;
                              }()}});

  std::vector<std::vector<Complex>> points;
  for (const Complex& t : polynomial_roots(g.normalized_complex())) points.push_back({1.0, t});
  if (at_infinity == 1) points.push_back({0.0, 1.0});

  WaringDecomposition dec;
  dec.raw_points = points;
  auto exact = rational_points(points, opt.max_denominator, [&](const std::vector<Rational>& q) {
    return q[0] == 0 ? at_infinity == 1 : g(q[1]) == 0;
  });
  if (exact) {
    // distinct exact roots are required for a unique exact solve
    std::sort(exact->begin(), exact->end());
    if (std::adjacent_find(exact->begin(), exact->end()) != exact->end()) exact.reset();
  }
  if (exact) {
    points.clear();
    for (const auto& q : *exact) points.push_back({q[0].get_d(), q[1].get_d()});
  }
  WaringDecomposition out = assemble(phi, points, exact);
  out.raw_points = std::move(dec.raw_points);
  return out;
}

std::vector<HomogForm> quintic_section(const HomogForm& phi) {
  if (phi.nvars() != 3 || phi.degree() != 5)
    throw DomainError("quintic decomposition needs a ternary quintic (3 variables, degree 5)");
  const ExactMatrix M = young_flattening(phi).matrix;
  const auto K = kernel_basis(M);
  if (K.size() != 4) {
    json profile = json::array();
    for (auto x : rank_profile(phi)) profile.push_back(x);
    throw DecompositionError(DecompositionFailure::NotGenericRank,
                             "phi not generic of rank 7: kernel of YF_{5,2} has dimension " +
                                 std::to_string(K.size()) + " (expected 4)",
                             {{"kernel_dim", K.size()}, {"yf_rank", M.cols() - K.size()}, {"rank_profile", profile}});
  }
  const auto E = euler_kernel_vectors(2, 5);
  for (const auto& e : E) {
    const auto img = M * e;
    if (std::any_of(img.begin(), img.end(), [](const Rational& q) { return q != 0; }))
      throw std::logic_error("Euler vector outside the kernel of YF_{5,2}");
  }
  ExactMatrix four(4, M.cols());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) four(i, j) = E[i][j];
  ExactVector s;
  for (const auto& v : K) {
    for (std::size_t j = 0; j < M.cols(); ++j) four(3, j) = v[j];
    if (rank(four) == 4) {
      s = v;
      break;
    }
  }
  if (s.empty()) throw std::logic_error("kernel of YF_{5,2} is spanned by Euler vectors");
  // Remove the Euler component: E_k is the only Euler vector touching ({k}, x_k^2).
  for (int k = 0; k < 3; ++k) {
    Exponents sq(3, 0);
    sq[k] = 2;
    const std::size_t col = yf_column(2, 5, static_cast<std::size_t>(k), monomial_index(sq));
    const Rational f = s[col];
    if (f == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) s[j] -= f * E[k][j];
  }
  // Primitive integer scaling.
  BigInt l = 1, g = 0;
  for (const auto& x : s) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : s) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0)
    for (auto& x : s) x /= g;

  const MonomialBasis quad(3, 2);
  std::vector<HomogForm> q;
  for (int i = 0; i < 3; ++i) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t a = 0; a < quad.size(); ++a) terms.emplace_back(quad[a], s[yf_column(2, 5, i, a)]);
    q.push_back(from_monomial_coeffs(3, 2, terms));
  }
  return q;
}

WaringDecomposition decompose_quintic(const HomogForm& phi, const DecomposeOptions& opt) {
  const auto q = quintic_section(phi);
  const std::array<TPoly, 3> Q = {from_form(q[0]), from_form(q[1]), from_form(q[2])};
  SolveContext ctx;
  ctx.minors = {minor(0, Q[1], 1, Q[0]), minor(0, Q[2], 2, Q[0]), minor(1, Q[2], 2, Q[1])};
  ctx.opt = &opt;

  std::vector<std::string> log;
  std::vector<std::vector<Complex>> raw_all;
  std::optional<ChartResult> found;
  for (int c : {2, 0, 1}) {
    ChartResult res = solve_chart(ctx, c);
    raw_all.insert(raw_all.end(), res.raw.begin(), res.raw.end());
    if (!res.note.empty()) log.push_back(res.note);
    log.push_back("chart x" + std::to_string(c) + " = 1: " + std::to_string(res.raw.size()) + " candidates, " +
                  std::to_string(res.points.size()) + " points after the all-minors filter");
    if (res.points.size() == 7) {
      found = std::move(res);
      break;
    }
  }
  if (!found)
    throw DecompositionError(DecompositionFailure::Degenerate,
                             "degenerate configuration: the cubic minors do not vanish at exactly 7 points",
                             {{"raw_points", points_json(raw_all)}, {"log", log}});

  std::vector<std::vector<Complex>> points;
  for (auto& p : found->points) points.push_back(normalize_point(p));
  auto exact = rational_points(points, opt.max_denominator, [&](const std::vector<Rational>& x) {
    return std::all_of(ctx.minors.begin(), ctx.minors.end(), [&](const TPoly& m) { return vanishes_exactly(m, x); });
  });
  WaringDecomposition dec = assemble(phi, points, exact);
  dec.raw_points = std::move(found->raw);
  dec.log = std::move(log);
  return dec;
}

std::vector<HomogForm> kernel_base_locus_hint(const HomogForm& phi, int a) {
  const ExactMatrix M = cat_matrix(phi, a);
  const MonomialBasis basis(phi.nvars(), a);
  std::vector<HomogForm> out;
  for (const auto& v : kernel_basis(M)) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (v[k] != 0) terms.emplace_back(basis[k], v[k]);
    out.push_back(from_monomial_coeffs(phi.nvars(), a, terms));
  }
  return out;
}

json decomposition_to_json(const WaringDecomposition& dec, bool verbose) {
  json summands = json::array();
  for (const auto& s : dec.summands) {
    json form = json::array();
    if (s.exact_form)
      for (const auto& x : *s.exact_form) form.push_back(to_string(x));
    else
      for (const auto& z : s.form) form.push_back(complex_json(z));
    summands.push_back({{"coef", s.exact_coef ? json(to_string(*s.exact_coef)) : complex_json(s.coef)},
                        {"form", form}});
  }
  json out = {{"summands", summands}, {"residual", dec.residual}, {"exact", dec.exact}};
  if (verbose) {
    out["raw_points"] = points_json(dec.raw_points);
    out["log"] = dec.log;
  }
  return out;
}

}  // namespace waring
