#include "waring/flattenings.hpp"

#include <algorithm>

namespace waring {

ExactMatrix catalecticant_block(const HomogForm& phi, int a) {
  const int d = phi.degree();
  if (a < 0 || a > d) throw DomainError("catalecticant split degree out of range");
  const MonomialBasis rows(phi.nvars(), d - a);
  const MonomialBasis cols(phi.nvars(), a);
  ExactMatrix m(rows.size(), cols.size());
  Exponents merged(phi.nvars());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int v = 0; v < phi.nvars(); ++v) merged[v] = rows[i][v] + cols[j][v];
      m(i, j) = phi.tensor(monomial_index(merged));
    }
  return m;
}

ExactMatrix cat_matrix(const HomogForm& phi, int a) {
  if (a < 1 || a > phi.degree() - 1)
    throw DomainError("cat_matrix: split degree a = " + std::to_string(a) +
                      " outside 1.." + std::to_string(phi.degree() - 1));
  return catalecticant_block(phi, a);
}

std::vector<std::size_t> rank_profile(const HomogForm& phi) {
  if (phi.degree() < 2) throw DomainError("rank_profile: need degree >= 2");
  std::vector<std::size_t> out;
  for (int a = 1; a <= phi.degree() / 2; ++a) out.push_back(rank(cat_matrix(phi, a)));
  return out;
}

std::size_t cat_border_rank_lb(const HomogForm& phi) {
  if (phi.degree() < 2) return phi.is_zero() ? 0 : 1;
  const auto profile = rank_profile(phi);
  return *std::max_element(profile.begin(), profile.end());
}

MembershipReport ternary_membership_consistent(const HomogForm& phi, int r) {
  if (phi.nvars() != 3)
    throw DomainError("ternary_membership_consistent: form must have 3 variables");
  if (phi.degree() < 2) throw DomainError("ternary_membership_consistent: need degree >= 2");
  MembershipReport rep;
  const int d = phi.degree();
  const int delta = d / 2;
  const auto window = static_cast<int>(binomial(delta + 1, 2)) + (d % 2 == 1 ? 1 : 0);
  rep.within_window = r >= 0 && r <= window;
  if (!rep.within_window)
    rep.warning = "r = " + std::to_string(r) + " is outside the proven range r <= " +
                  std::to_string(window) + "; the profile test is only a necessary condition here";
  rep.profile = rank_profile(phi);
  rep.consistent = true;
  for (int a = 1; a <= delta; ++a) {
    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(r), binomial(a + 2, 2));
    rep.expected.push_back(want);
    rep.consistent = rep.consistent && rep.profile[a - 1] == want;
  }
  return rep;
}

// ---------------------------------------------------------------------------

SkewTensor::SkewTensor(int nvars, int step) : nvars_(nvars), step_(step) {
  if (nvars < 1 || step < 0 || step > nvars) throw DomainError("SkewTensor: need 0 <= step <= nvars");
}

Rational SkewTensor::at(const std::vector<int>& idx) const {
  auto it = comps_.find(idx);
  return it == comps_.end() ? Rational(0) : it->second;
}

void SkewTensor::add(std::vector<int> idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != step_) throw DomainError("SkewTensor: index list has wrong length");
  for (int i : idx)
    if (i < 0 || i >= nvars_) throw DomainError("SkewTensor: index out of range");
  const int sign = permutation_sign(idx);
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return;
  Rational& slot = comps_[idx];
  slot += sign * c;
  if (slot == 0) comps_.erase(idx);
}

SkewTensor& SkewTensor::operator+=(const SkewTensor& other) {
  if (nvars_ != other.nvars_ || step_ != other.step_) throw DomainError("SkewTensor sum: shape mismatch");
  for (const auto& [idx, c] : other.comps_) add(idx, c);
  return *this;
}

SkewTensor wedge(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) throw DomainError("wedge: no vectors");
  const int k = static_cast<int>(vectors.size());
  const int m = static_cast<int>(vectors.front().size());
  SkewTensor t(m, k);
  for (const auto& idx : subsets(m, k)) {
    ExactMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = vectors[i].at(idx[j]);
    const Rational det = determinant(minor);
    if (det != 0) t.add(idx, det);
  }
  return t;
}

ExactMatrix grass_skew_flattening(const SkewTensor& t, int a) {
  const int k = t.step();
  if (a < 1 || a > k - 1)
    throw DomainError("grass_skew_flattening: a = " + std::to_string(a) + " outside 1.." +
                      std::to_string(k - 1));
  const auto rows = subsets(t.nvars(), k - a);
  const auto cols = subsets(t.nvars(), a);
  ExactMatrix m(rows.size(), cols.size());
  std::vector<int> cat;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cat = cols[j];
      cat.insert(cat.end(), rows[i].begin(), rows[i].end());
      const int sign = permutation_sign(cat);
      std::sort(cat.begin(), cat.end());
      if (std::adjacent_find(cat.begin(), cat.end()) != cat.end()) continue;
      const Rational c = t.at(cat);
      if (c != 0) m(i, j) = sign * c;
    }
  return m;
}

std::size_t grass_border_rank_lb(const SkewTensor& t, int a) {
  const std::size_t r = rank(grass_skew_flattening(t, a));
  const std::size_t per = binomial(t.step(), a);
  return (r + per - 1) / per;
}

}  // namespace waring
