#include "elg/lie_algebra.hpp"

#include <algorithm>
#include <string>

#include "elg/error.hpp"

namespace elg {

LieAlg::LieAlg(int dim, const std::vector<StructureConstant>& entries)
    : dim_(dim), f_(static_cast<std::size_t>(dim) * dim * dim) {
  if (dim < 1) throw InputError("Lie algebra dimension must be positive");
  for (const auto& e : entries) {
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim)
      throw InputError("structure constant index out of range");
    if (e.i >= e.j) throw InputError("structure constants must be listed with i < j");
    f_[index(e.i, e.j, e.k)] += e.value;
    f_[index(e.j, e.i, e.k)] -= e.value;
  }
  if (auto fail = jacobi_failure())
    throw InputError("structure constants violate the Jacobi identity at (" + std::to_string(fail->i) + ", " +
                     std::to_string(fail->j) + ", " + std::to_string(fail->k) + ")");
}

LieAlg LieAlg::abelian(int dim) { return LieAlg(dim, {}); }

std::vector<StructureConstant> LieAlg::entries() const {
  std::vector<StructureConstant> out;
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = 1; k <= dim_; ++k)
        if (!f(i, j, k).is_zero()) out.push_back({i, j, k, f(i, j, k)});
  return out;
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw InputError("Lie bracket: vector length mismatch");
  Vec r(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (x[i - 1].is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (y[j - 1].is_zero()) continue;
      Rat xy = x[i - 1] * y[j - 1];
      for (int k = 1; k <= dim_; ++k)
        if (!f(i, j, k).is_zero()) r[k - 1] += xy * f(i, j, k);
    }
  }
  return r;
}

Matrix LieAlg::ad(int i) const { return ad(unit_vector(dim_, i - 1)); }

Matrix LieAlg::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 1; j <= dim_; ++j) {
    Vec col = bracket(x, unit_vector(dim_, j - 1));
    for (int k = 0; k < dim_; ++k) m(k, j - 1) = col[k];
  }
  return m;
}

std::optional<LieAlg::JacobiFailure> LieAlg::jacobi_failure() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        Vec ei = unit_vector(dim_, i - 1), ej = unit_vector(dim_, j - 1), ek = unit_vector(dim_, k - 1);
        Vec r = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bracket(ei, ej));
        if (!is_zero(r)) return JacobiFailure{i, j, k, r};
      }
  return std::nullopt;
}

namespace {

template <class Image>
Form derivation(const Form& a, int out_deg_shift, Image image) {
  // Replaces each factor e^{idx[pos]} in place by image(idx[pos]), a form of degree 1 + shift.
  Form r(a.dim(), a.deg() + out_deg_shift);
  MultiIndex seq;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Form& img = image(idx[pos]);
      for (const auto& [sub, x] : img.terms()) {
        seq.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(pos));
        seq.insert(seq.end(), sub.begin(), sub.end());
        seq.insert(seq.end(), idx.begin() + static_cast<std::ptrdiff_t>(pos) + 1, idx.end());
        int s = permutation_sign(seq);
        if (s == 0) continue;
        // Graded Leibniz rule: an odd-degree-shift operator passing pos one-forms picks up (-1)^pos.
        if (out_deg_shift % 2 != 0 && pos % 2 == 1) s = -s;
        std::sort(seq.begin(), seq.end());
        r.add_term(seq, s > 0 ? c * x : -(c * x));
      }
    }
  }
  return r;
}

}  // namespace

Form ce_differential(const LieAlg& k, const Form& a) {
  if (a.dim() != k.dim()) throw InputError("CE differential: form dimension does not match the Lie algebra");
  int n = k.dim();
  // δe^m = -sum_{i<j} f^m_{ij} e^i ∧ e^j
  std::vector<Form> d1;
  for (int m = 1; m <= n; ++m) {
    Form f(n, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!k.f(i, j, m).is_zero()) f.add_term({i, j}, -k.f(i, j, m));
    d1.push_back(std::move(f));
  }
  if (a.deg() >= n) return Form(n, a.deg() + 1);
  return derivation(a, 1, [&](int m) -> const Form& { return d1[m - 1]; });
}

Form ad_form(const LieAlg& k, const Vec& x, const Form& a) {
  if (a.dim() != k.dim()) throw InputError("ad_form: form dimension does not match the Lie algebra");
  // Coadjoint action is the gl action of ad_x: e^m -> -sum_j (ad_x)(m, j) e^j.
  return gl_act(k.ad(x), a);
}

}  // namespace elg
