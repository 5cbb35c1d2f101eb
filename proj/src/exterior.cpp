#include "elg/exterior.hpp"

#include <algorithm>
#include <string>

#include "elg/error.hpp"

namespace elg {

template <Variance V>
ExtElem<V>::ExtElem(int dim, int deg) : dim_(dim), deg_(deg) {
  if (dim < 0 || deg < 0) throw InputError("exterior element with negative dimension or degree");
}

template <Variance V>
ExtElem<V> ExtElem<V>::basis(int dim, MultiIndex idx, const Rat& coeff) {
  ExtElem r(dim, static_cast<int>(idx.size()));
  int s = permutation_sign(idx);
  if (s == 0) return r;
  std::sort(idx.begin(), idx.end());
  r.add_term(idx, s > 0 ? coeff : -coeff);
  return r;
}

template <Variance V>
ExtElem<V> ExtElem<V>::from_coords(int dim, int deg, const Vec& coords) {
  auto idx = combinations(dim, deg);
  if (coords.size() != idx.size()) throw InputError("exterior coordinates have wrong length");
  ExtElem r(dim, deg);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (!coords[i].is_zero()) r.terms_.emplace(idx[i], coords[i]);
  return r;
}

template <Variance V>
Rat ExtElem<V>::coeff(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rat() : it->second;
}

template <Variance V>
void ExtElem<V>::add_term(const MultiIndex& idx, const Rat& coeff) {
  if (static_cast<int>(idx.size()) != deg_ || !is_valid_multi_index(idx, dim_))
    throw InputError("invalid multi-index for an element of degree " + std::to_string(deg_) + " in dimension " +
                     std::to_string(dim_));
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Variance V>
Vec ExtElem<V>::coords() const {
  Vec v(binomial(dim_, deg_));
  for (const auto& [idx, c] : terms_) v[combination_rank(dim_, idx)] = c;
  return v;
}

template <Variance V>
void ExtElem<V>::check_compatible(const ExtElem& o) const {
  if (dim_ != o.dim_ || deg_ != o.deg_) throw InputError("exterior elements of different dimension or degree");
}

template <Variance V>
ExtElem<V>& ExtElem<V>::operator+=(const ExtElem& o) {
  check_compatible(o);
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

template <Variance V>
ExtElem<V>& ExtElem<V>::operator-=(const ExtElem& o) {
  check_compatible(o);
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

template <Variance V>
ExtElem<V>& ExtElem<V>::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

template class ExtElem<Variance::Covariant>;
template class ExtElem<Variance::Contravariant>;

template <Variance V>
ExtElem<V> wedge(const ExtElem<V>& a, const ExtElem<V>& b) {
  if (a.dim() != b.dim()) throw InputError("wedge: ambient dimension mismatch");
  ExtElem<V> r(a.dim(), a.deg() + b.deg());
  if (a.deg() + b.deg() > a.dim()) return r;
  MultiIndex joined;
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) {
      joined = i;
      joined.insert(joined.end(), j.begin(), j.end());
      int s = permutation_sign(joined);
      if (s == 0) continue;
      std::sort(joined.begin(), joined.end());
      r.add_term(joined, s > 0 ? x * y : -(x * y));
    }
  }
  return r;
}

template Form wedge(const Form&, const Form&);
template Poly wedge(const Poly&, const Poly&);

namespace {

/// Contracts J into I: returns the sign ε(J, I∖J) and fills rest = I∖J; 0 if J ⊄ I.
int contract_indices(const MultiIndex& j, const MultiIndex& i, MultiIndex& rest) {
  rest.clear();
  if (!std::includes(i.begin(), i.end(), j.begin(), j.end())) return 0;
  std::set_difference(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(rest));
  MultiIndex seq = j;
  seq.insert(seq.end(), rest.begin(), rest.end());
  return permutation_sign(seq);
}

template <Variance Out, Variance In, Variance Small>
ExtElem<Out> contract(const ExtElem<Small>& small, const ExtElem<In>& big) {
  if (small.dim() != big.dim()) throw InputError("interior: ambient dimension mismatch");
  if (small.deg() > big.deg()) throw InputError("interior: contracting element has larger degree");
  ExtElem<Out> r(big.dim(), big.deg() - small.deg());
  MultiIndex rest;
  for (const auto& [j, x] : small.terms()) {
    for (const auto& [i, y] : big.terms()) {
      int s = contract_indices(j, i, rest);
      if (s == 0) continue;
      r.add_term(rest, s > 0 ? x * y : -(x * y));
    }
  }
  return r;
}

}  // namespace

Form interior(const Poly& w, const Form& a) {
  return contract<Variance::Covariant, Variance::Covariant, Variance::Contravariant>(w, a);
}

Poly interior(const Form& a, const Poly& w) {
  return contract<Variance::Contravariant, Variance::Contravariant, Variance::Covariant>(a, w);
}

Rat pairing(const Form& a, const Poly& w) {
  if (a.dim() != w.dim()) throw InputError("pairing: ambient dimension mismatch");
  if (a.deg() != w.deg()) throw InputError("pairing: degree mismatch");
  Rat r;
  for (const auto& [idx, c] : a.terms()) {
    auto it = w.terms().find(idx);
    if (it != w.terms().end()) r += c * it->second;
  }
  return r;
}

Matrix star(const Form& a, const Poly& w) {
  if (a.dim() != w.dim()) throw InputError("star: ambient dimension mismatch");
  if (a.deg() != w.deg() || a.deg() < 1) throw InputError("star: degree mismatch");
  int n = a.dim();
  Matrix m(n, n);
  if (a.is_zero() || w.is_zero()) return m;
  for (int i = 1; i <= n; ++i) {
    Form ia = interior(Poly::basis(n, {i}), a);
    if (ia.is_zero()) continue;
    for (int j = 1; j <= n; ++j) m(j - 1, i - 1) = pairing(ia, interior(Form::basis(n, {j}), w));
  }
  return m;
}

bool TStarLambda6::is_zero() const {
  return std::all_of(slots.begin(), slots.end(), [](const Form& f) { return f.is_zero(); });
}

bool TLambda6::is_zero() const {
  return std::all_of(slots.begin(), slots.end(), [](const Poly& p) { return p.is_zero(); });
}

TStarLambda6 jmap(const Form& sigma2, const Form& sigma5) {
  if (sigma2.dim() != sigma5.dim()) throw InputError("jmap: ambient dimension mismatch");
  if (sigma2.deg() != 2 || sigma5.deg() != 5) throw InputError("jmap: expects degrees 2 and 5");
  int n = sigma2.dim();
  TStarLambda6 r;
  for (int i = 1; i <= n; ++i) r.slots.push_back(wedge(interior(Poly::basis(n, {i}), sigma2), sigma5));
  return r;
}

TLambda6 jmap(const Poly& w2, const Poly& w5) {
  if (w2.dim() != w5.dim()) throw InputError("jmap: ambient dimension mismatch");
  if (w2.deg() != 2 || w5.deg() != 5) throw InputError("jmap: expects degrees 2 and 5");
  int n = w2.dim();
  TLambda6 r;
  for (int i = 1; i <= n; ++i) r.slots.push_back(wedge(interior(Form::basis(n, {i}), w2), w5));
  return r;
}

namespace {

// Derivation extension of a linear map on generators. `image(k)` returns the coefficients
// of the image of the k-th generator as (index, coefficient) pairs.
template <Variance V, class Image>
ExtElem<V> derive(const ExtElem<V>& x, Image image) {
  ExtElem<V> r(x.dim(), x.deg());
  MultiIndex replaced;
  for (const auto& [idx, c] : x.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      for (const auto& [k, a] : image(idx[pos])) {
        replaced = idx;
        replaced[pos] = k;
        int s = permutation_sign(replaced);
        if (s == 0) continue;
        std::sort(replaced.begin(), replaced.end());
        r.add_term(replaced, s > 0 ? a * c : -(a * c));
      }
    }
  }
  return r;
}

}  // namespace

Form gl_act(const Matrix& a, const Form& f) {
  int n = f.dim();
  if (a.rows() != n || a.cols() != n) throw InputError("gl_act: matrix size mismatch");
  // e^i -> -sum_j A(i,j) e^j
  return derive(f, [&](int i) {
    std::vector<std::pair<int, Rat>> out;
    for (int j = 1; j <= n; ++j)
      if (!a(i - 1, j - 1).is_zero()) out.emplace_back(j, -a(i - 1, j - 1));
    return out;
  });
}

Poly gl_act(const Matrix& a, const Poly& p) {
  int n = p.dim();
  if (a.rows() != n || a.cols() != n) throw InputError("gl_act: matrix size mismatch");
  // e_j -> sum_i A(i,j) e_i
  return derive(p, [&](int j) {
    std::vector<std::pair<int, Rat>> out;
    for (int i = 1; i <= n; ++i)
      if (!a(i - 1, j - 1).is_zero()) out.emplace_back(i, a(i - 1, j - 1));
    return out;
  });
}

}  // namespace elg
