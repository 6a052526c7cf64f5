#include "qsa/path_algebra.hpp"

#include <algorithm>
#include <functional>

#include "qsa/error.hpp"

namespace qsa {

PathAlgebra::PathAlgebra(const AlgebraPresentation& a) : a_(a) {
  auto longest = longest_monomially_free_path(a_);
  if (!longest) throw DomainError("paths of unbounded length survive the monomial relations");
  bound_ = *longest + 1;
  const Quiver& q = a_.quiver();
  const size_t n = q.vertex_count();
  spaces_.assign(n, std::vector<Space>(n));

  // Enumerate free paths from every vertex.
  for (size_t i = 0; i < n; ++i) {
    spaces_[i][i].candidates.push_back(Path::trivial(q.vertices()[i]));
    std::vector<std::string> seq;
    std::function<void(size_t)> dfs = [&](size_t v) {
      for (size_t ar : q.out_arrows(v)) {
        seq.push_back(q.arrow(ar).id);
        if (!path_hits_monomial_relation(a_, seq)) {
          size_t w = q.target(ar);
          spaces_[i][w].candidates.push_back(Path{q.vertices()[i], q.vertices()[w], seq});
          if (seq.size() + 1 < bound_) dfs(w);
        }
        seq.pop_back();
      }
    };
    dfs(i);
  }
  for (auto& row : spaces_)
    for (auto& sp : row) {
      std::sort(sp.candidates.begin(), sp.candidates.end(), path_less);
      for (size_t c = 0; c < sp.candidates.size(); ++c) sp.column[sp.candidates[c].arrows] = c;
    }

  // Span of p*rho*q for each non-monomial relation rho.
  std::vector<std::vector<std::vector<Vec>>> gens(n, std::vector<std::vector<Vec>>(n));
  for (const auto& rel : a_.relations()) {
    if (rel.is_monomial()) continue;
    size_t s = *q.vertex_index(rel.source()), t = *q.vertex_index(rel.target());
    for (size_t i = 0; i < n; ++i) {
      for (const Path& p : spaces_[i][s].candidates) {
        for (size_t j = 0; j < n; ++j) {
          for (const Path& r : spaces_[t][j].candidates) {
            Space& sp = spaces_[i][j];
            Vec v(sp.candidates.size());
            bool any = false;
            for (const auto& [c, path] : rel.terms) {
              std::vector<std::string> seq = p.arrows;
              seq.insert(seq.end(), path.arrows.begin(), path.arrows.end());
              seq.insert(seq.end(), r.arrows.begin(), r.arrows.end());
              auto it = sp.column.find(seq);
              if (it == sp.column.end()) continue;
              v[it->second] += c;
              any = true;
            }
            if (any && !is_zero(v)) gens[i][j].push_back(std::move(v));
          }
        }
      }
    }
  }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Space& sp = spaces_[i][j];
      const size_t m = sp.candidates.size();
      std::vector<size_t> order(m);
      for (size_t c = 0; c < m; ++c) order[c] = m - 1 - c;
      sp.rows = std::move(gens[i][j]);
      sp.pivots = rref(sp.rows, m, order);
      std::vector<bool> is_pivot(m, false);
      for (size_t c : sp.pivots) is_pivot[c] = true;
      sp.basis_index.assign(m, -1);
      for (size_t c = 0; c < m; ++c)
        if (!is_pivot[c]) {
          sp.basis_index[c] = static_cast<long>(sp.basis.size());
          sp.basis.push_back(sp.candidates[c]);
          sp.basis_column.push_back(c);
        }
    }
}

size_t PathAlgebra::total_dim() const {
  size_t d = 0;
  for (const auto& row : spaces_)
    for (const auto& sp : row) d += sp.basis.size();
  return d;
}

Vec PathAlgebra::reduce_candidates(size_t i, size_t j, Vec v) const {
  const Space& sp = spaces_[i][j];
  for (size_t r = 0; r < sp.rows.size(); ++r) {
    size_t c = sp.pivots[r];
    if (v[c] != 0) axpy(v, -v[c], sp.rows[r]);
  }
  Vec out(sp.basis.size());
  for (size_t b = 0; b < sp.basis.size(); ++b) out[b] = v[sp.basis_column[b]];
  return out;
}

Vec PathAlgebra::reduce(size_t i, size_t j, const std::vector<std::pair<Rational, Path>>& combo) const {
  const Space& sp = spaces_[i][j];
  Vec v(sp.candidates.size());
  for (const auto& [c, p] : combo) {
    if (p.source != a_.quiver().vertices()[i] || p.target != a_.quiver().vertices()[j])
      throw DomainError("path '" + p.to_string() + "' does not lie in the requested space");
    auto it = sp.column.find(p.arrows);
    if (it != sp.column.end()) v[it->second] += c;
  }
  return reduce_candidates(i, j, std::move(v));
}

Vec PathAlgebra::path_element(const Path& p) const {
  size_t i = *a_.quiver().vertex_index(p.source), j = *a_.quiver().vertex_index(p.target);
  return reduce(i, j, {{Rational(1), p}});
}

Vec PathAlgebra::identity(size_t i) const { return path_element(Path::trivial(a_.quiver().vertices()[i])); }

Vec PathAlgebra::arrow_element(size_t arrow) const {
  const Arrow& ar = a_.quiver().arrow(arrow);
  return path_element(Path{ar.source, ar.target, {ar.id}});
}

Vec PathAlgebra::multiply(size_t i, size_t j, size_t k, const Vec& x, const Vec& y) const {
  const Space& left = spaces_[i][j];
  const Space& right = spaces_[j][k];
  const Space& out = spaces_[i][k];
  Vec v(out.candidates.size());
  for (size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    const Path& p = left.basis[a];
    for (size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      std::vector<std::string> seq = p.arrows;
      const Path& r = right.basis[b];
      seq.insert(seq.end(), r.arrows.begin(), r.arrows.end());
      auto it = out.column.find(seq);
      if (it != out.column.end()) v[it->second] += x[a] * y[b];
    }
  }
  return reduce_candidates(i, k, std::move(v));
}

Rational PathAlgebra::trivial_coefficient(size_t i, const Vec& x) const {
  const Space& sp = spaces_[i][i];
  for (size_t b = 0; b < sp.basis.size(); ++b)
    if (sp.basis[b].arrows.empty()) return x[b];
  return 0;
}

}  // namespace qsa
