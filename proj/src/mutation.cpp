// End(T)^op for a sum T of bounded complexes of projectives, computed as chain
// maps modulo homotopy in the normal-form coordinates of PathAlgebra.

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "qsa/error.hpp"
#include "qsa/path_algebra.hpp"
#include "qsa/transform.hpp"

namespace qsa {

ProjectiveComplex stalk_complex(const std::string& v) { return ProjectiveComplex{0, {{v}}, {{""}}, {}}; }

ProjectiveComplex sink_complex(const AlgebraPresentation& a, const std::string& x) {
  const Quiver& q = a.quiver();
  auto xi = q.vertex_index(x);
  if (!xi) throw DomainError("unknown vertex " + x);
  ProjectiveComplex c{-1, {{x}, {}}, {{""}, {}}, {{}}};
  for (size_t ar : q.in_arrows(*xi)) {
    c.terms[1].push_back(q.vertices()[q.source(ar)]);
    c.labels[1].push_back(q.arrow(ar).id);
    c.diff[0].push_back({{{Rational(1), make_path(q, {q.arrow(ar).id})}}});
  }
  return c;
}

ProjectiveComplex source_complex(const AlgebraPresentation& a, const std::string& x) {
  const Quiver& q = a.quiver();
  auto xi = q.vertex_index(x);
  if (!xi) throw DomainError("unknown vertex " + x);
  ProjectiveComplex c{0, {{}, {x}}, {{}, {""}}, {{{}}}};
  for (size_t ar : q.out_arrows(*xi)) {
    c.terms[0].push_back(q.vertices()[q.target(ar)]);
    c.labels[0].push_back(q.arrow(ar).id);
    c.diff[0][0].push_back({{Rational(1), make_path(q, {q.arrow(ar).id})}});
  }
  return c;
}

namespace {

struct Cx {
  int lowest = 0;
  std::vector<std::vector<size_t>> terms;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<Vec>>> diff;  // diff[k][q][p]

  int highest() const { return lowest + static_cast<int>(terms.size()) - 1; }
  const std::vector<size_t>& at(int g) const {
    static const std::vector<size_t> none;
    int k = g - lowest;
    return (k < 0 || k >= static_cast<int>(terms.size())) ? none : terms[k];
  }
  std::string label(int g, size_t s) const {
    int k = g - lowest;
    if (k < 0 || k >= static_cast<int>(labels.size()) || s >= labels[k].size()) return "";
    return labels[k][s];
  }
  size_t summands() const {
    size_t n = 0;
    for (const auto& t : terms) n += t.size();
    return n;
  }
};

Cx convert(const PathAlgebra& A, const ProjectiveComplex& pc, const std::string& key) {
  const Quiver& q = A.presentation().quiver();
  Cx c;
  c.lowest = pc.lowest;
  c.labels = pc.labels;
  for (const auto& t : pc.terms) {
    std::vector<size_t> idx;
    for (const auto& v : t) {
      auto i = q.vertex_index(v);
      if (!i) throw DomainError("complex for " + key + " uses unknown vertex " + v);
      idx.push_back(*i);
    }
    c.terms.push_back(idx);
  }
  if (c.terms.empty()) throw DomainError("complex for " + key + " is empty");
  if (pc.diff.size() + 1 != pc.terms.size()) throw DomainError("complex for " + key + " has the wrong number of differentials");
  for (size_t k = 0; k < pc.diff.size(); ++k) {
    const auto& d = pc.diff[k];
    if (d.size() != c.terms[k + 1].size()) throw DomainError("differential shape mismatch in complex for " + key);
    std::vector<std::vector<Vec>> m(d.size());
    for (size_t r = 0; r < d.size(); ++r) {
      if (d[r].size() != c.terms[k].size()) throw DomainError("differential shape mismatch in complex for " + key);
      for (size_t p = 0; p < d[r].size(); ++p) {
        size_t i = c.terms[k + 1][r], j = c.terms[k][p];
        Vec v = A.reduce(i, j, d[r][p]);
        if (i == j && A.trivial_coefficient(i, v) != 0)
          throw DomainError("complex for " + key + " is not minimal");
        m[r].push_back(std::move(v));
      }
    }
    c.diff.push_back(std::move(m));
  }
  return c;
}

// Graded maps C -> D of a fixed degree shift: blocks (g, q, p) hold the
// component from summand p of C^g to summand q of D^{g+shift}.
struct Block {
  int g;
  size_t q, p;
  size_t i, j;  // space (i, j) of the algebra
  size_t offset, size;
};

struct Layout {
  int shift = 0;
  std::vector<Block> blocks;
  std::map<std::tuple<int, size_t, size_t>, size_t> index;
  std::map<std::pair<int, size_t>, std::vector<size_t>> by_source;
  size_t dim = 0;
  std::vector<size_t> length;  // path length behind each coordinate
};

Layout make_layout(const PathAlgebra& A, const Cx& C, const Cx& D, int shift) {
  Layout L;
  L.shift = shift;
  for (int g = C.lowest; g <= C.highest(); ++g) {
    const auto& src = C.at(g);
    const auto& dst = D.at(g + shift);
    for (size_t p = 0; p < src.size(); ++p)
      for (size_t q = 0; q < dst.size(); ++q) {
        size_t i = dst[q], j = src[p];
        size_t sz = A.dim(i, j);
        if (sz == 0) continue;
        L.index[{g, q, p}] = L.blocks.size();
        L.by_source[{g, p}].push_back(L.blocks.size());
        L.blocks.push_back({g, q, p, i, j, L.dim, sz});
        for (const auto& path : A.basis(i, j)) L.length.push_back(path.length());
        L.dim += sz;
      }
  }
  return L;
}

Vec part(const Vec& x, const Block& b) {
  return Vec(x.begin() + static_cast<long>(b.offset), x.begin() + static_cast<long>(b.offset + b.size));
}

// (x1 o x2) laid out in `out`; x2 : C -> D in L2, x1 : D -> E in L1.
Vec compose(const PathAlgebra& A, const Layout& out, const Layout& L1, const Vec& x1, const Layout& L2,
            const Vec& x2) {
  Vec r(out.dim);
  for (const auto& b2 : L2.blocks) {
    Vec y = part(x2, b2);
    if (is_zero(y)) continue;
    auto it = L1.by_source.find({b2.g + L2.shift, b2.q});
    if (it == L1.by_source.end()) continue;
    for (size_t k : it->second) {
      const Block& b1 = L1.blocks[k];
      Vec x = part(x1, b1);
      if (is_zero(x)) continue;
      auto o = out.index.find({b2.g, b1.q, b2.p});
      if (o == out.index.end()) continue;  // the target space is zero
      const Block& bo = out.blocks[o->second];
      Vec z = A.multiply(b1.i, b1.j, b2.j, x, y);
      for (size_t t = 0; t < z.size(); ++t) r[bo.offset + t] += z[t];
    }
  }
  return r;
}

// The differential of C as a graded map of shift +1.
std::pair<Layout, Vec> differential(const PathAlgebra& A, const Cx& C) {
  Layout L = make_layout(A, C, C, 1);
  Vec v(L.dim);
  for (size_t k = 0; k < C.diff.size(); ++k) {
    int g = C.lowest + static_cast<int>(k);
    for (size_t q = 0; q < C.diff[k].size(); ++q)
      for (size_t p = 0; p < C.diff[k][q].size(); ++p) {
        auto it = L.index.find({g, q, p});
        if (it == L.index.end()) continue;
        const Block& b = L.blocks[it->second];
        for (size_t t = 0; t < b.size; ++t) v[b.offset + t] = C.diff[k][q][p][t];
      }
  }
  return {std::move(L), std::move(v)};
}

std::vector<size_t> order_by_length(const Layout& L, bool longest_first) {
  std::vector<size_t> o(L.dim);
  std::iota(o.begin(), o.end(), 0);
  std::stable_sort(o.begin(), o.end(), [&](size_t a, size_t b) {
    return longest_first ? L.length[a] > L.length[b] : L.length[a] < L.length[b];
  });
  return o;
}

// Reduce v against fully reduced echelon rows.
void reduce_rows(Vec& v, const std::vector<Vec>& rows, const std::vector<size_t>& piv) {
  for (size_t k = 0; k < rows.size(); ++k) {
    Rational c = v[piv[k]];
    if (c != 0) axpy(v, -c, rows[k]);
  }
}

// Hom(C, D) in the homotopy category.
struct HomSpace {
  Layout L;
  std::vector<Vec> B;
  std::vector<size_t> Bpiv;
  std::vector<Vec> basis;  // normal forms, reduced echelon
  std::vector<size_t> bpiv;

  size_t dim() const { return basis.size(); }
  Vec normal(Vec v) const {
    reduce_rows(v, B, Bpiv);
    return v;
  }
  Vec coords(const Vec& nf) const {
    Vec c(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) c[k] = nf[bpiv[k]];
    return c;
  }
  Vec element(const Vec& c) const {
    Vec v(L.dim);
    for (size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) axpy(v, c[k], basis[k]);
    return v;
  }
};

HomSpace hom_space(const PathAlgebra& A, const Cx& C, const Cx& D) {
  HomSpace H;
  H.L = make_layout(A, C, D, 0);
  auto [LdC, dC] = differential(A, C);
  auto [LdD, dD] = differential(A, D);

  // Chain condition dD o f = f o dC, one column per coordinate of f.
  Layout Lc = make_layout(A, C, D, 1);
  std::vector<Vec> rows(Lc.dim, Vec(H.L.dim));
  for (size_t k = 0; k < H.L.dim; ++k) {
    Vec e(H.L.dim);
    e[k] = 1;
    Vec col = compose(A, Lc, LdD, dD, H.L, e);
    axpy(col, -1, compose(A, Lc, H.L, e, LdC, dC));
    for (size_t r = 0; r < Lc.dim; ++r) rows[r][k] = col[r];
  }
  std::vector<Vec> Z = kernel(rows, H.L.dim);

  // Null-homotopic maps dD o h + h o dC.
  Layout Lh = make_layout(A, C, D, -1);
  for (size_t k = 0; k < Lh.dim; ++k) {
    Vec e(Lh.dim);
    e[k] = 1;
    Vec v = compose(A, H.L, LdD, dD, Lh, e);
    axpy(v, 1, compose(A, H.L, Lh, e, LdC, dC));
    if (!is_zero(v)) H.B.push_back(std::move(v));
  }
  H.Bpiv = rref(H.B, H.L.dim, order_by_length(H.L, true));

  for (auto& z : Z) H.basis.push_back(H.normal(z));
  H.bpiv = rref(H.basis, H.L.dim, order_by_length(H.L, false));
  return H;
}

// Trivial-path coefficients of an endomorphism, as a matrix over all summands.
std::vector<Vec> top_matrix(const PathAlgebra& A, const Cx& C, const Layout& L, const Vec& f) {
  std::vector<size_t> start;
  size_t n = 0;
  for (const auto& t : C.terms) {
    start.push_back(n);
    n += t.size();
  }
  std::vector<Vec> m(n, Vec(n));
  for (const auto& b : L.blocks) {
    if (b.i != b.j) continue;
    size_t base = start[b.g - C.lowest];
    m[base + b.q][base + b.p] = A.trivial_coefficient(b.i, part(f, b));
  }
  return m;
}

bool nilpotent(std::vector<Vec> m) {
  const size_t n = m.size();
  std::vector<Vec> p = m;
  for (size_t k = 1; k < n; ++k) {
    std::vector<Vec> r(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        if (p[i][l] != 0)
          for (size_t j = 0; j < n; ++j) r[i][j] += p[i][l] * m[l][j];
    p = std::move(r);
  }
  for (const auto& row : p)
    if (!is_zero(row)) return false;
  return true;
}

std::string fresh(const std::string& base, std::set<std::string>& used) {
  std::string s = base;
  while (used.count(s)) s += "'";
  used.insert(s);
  return s;
}

}  // namespace

AlgebraPresentation endomorphism_presentation(const AlgebraPresentation& a,
                                              const std::map<std::string, ProjectiveComplex>& summands,
                                              const std::string& name) {
  PathAlgebra A(a);
  std::vector<std::string> keys;
  for (const auto& [k, c] : summands) keys.push_back(k);
  sort_idents(keys);
  const size_t n = keys.size();
  if (n == 0) throw DomainError("no summands");
  std::vector<Cx> T;
  for (const auto& k : keys) T.push_back(convert(A, summands.at(k), k));

  // lam[u][w] = Hom(T^w, T^u): the arrows u -> w of the endomorphism algebra.
  std::vector<std::vector<HomSpace>> lam(n);
  for (size_t u = 0; u < n; ++u)
    for (size_t w = 0; w < n; ++w) lam[u].push_back(hom_space(A, T[w], T[u]));

  auto product = [&](size_t u, size_t v, size_t w, const Vec& x, const Vec& y) {
    if (is_zero(x) || is_zero(y)) return Vec(lam[u][w].dim());
    Vec f = compose(A, lam[u][w].L, lam[u][v].L, lam[u][v].element(x), lam[v][w].L, lam[v][w].element(y));
    return lam[u][w].coords(lam[u][w].normal(f));
  };
  auto top = [&](size_t u, const Vec& c) -> Rational {
    Rational tr = 0;
    auto m = top_matrix(A, T[u], lam[u][u].L, lam[u][u].element(c));
    for (size_t k = 0; k < m.size(); ++k) tr += m[k][k];
    return tr / static_cast<long>(m.size());
  };

  // Radical.
  std::vector<std::vector<std::vector<Vec>>> rad(n, std::vector<std::vector<Vec>>(n));
  for (size_t u = 0; u < n; ++u)
    for (size_t w = 0; w < n; ++w) {
      const size_t d = lam[u][w].dim();
      if (u != w) {
        for (size_t k = 0; k < d; ++k) {
          Vec e(d);
          e[k] = 1;
          rad[u][w].push_back(e);
        }
        continue;
      }
      Vec l(d);
      for (size_t k = 0; k < d; ++k) {
        Vec e(d);
        e[k] = 1;
        l[k] = top(u, e);
      }
      if (is_zero(l)) throw DomainError("summand " + keys[u] + " has no identity in its endomorphism ring");
      rad[u][u] = kernel({l}, d);
      for (const auto& r : rad[u][u])
        if (!nilpotent(top_matrix(A, T[u], lam[u][u].L, lam[u][u].element(r))))
          throw DomainError("summand " + keys[u] + " is not indecomposable");
    }
  for (size_t u = 0; u < n; ++u)
    for (size_t w = u + 1; w < n; ++w)
      for (const auto& x : rad[u][w])
        for (const auto& y : rad[w][u])
          if (top(u, product(u, w, u, x, y)) != 0)
            throw DomainError("summands " + keys[u] + " and " + keys[w] + " are isomorphic");

  // Arrows: a complement of rad^2 in rad, reduced so that long coordinates vanish.
  struct NewArrow {
    size_t u, w;
    Vec elem;
    std::string id;
  };
  std::vector<NewArrow> arrows;
  std::set<std::string> used;
  for (size_t u = 0; u < n; ++u)
    for (size_t w = 0; w < n; ++w) {
      const size_t d = lam[u][w].dim();
      if (d == 0) continue;
      std::vector<Vec> sq;
      for (size_t v = 0; v < n; ++v)
        for (const auto& x : rad[u][v])
          for (const auto& y : rad[v][w]) {
            Vec z = product(u, v, w, x, y);
            if (!is_zero(z)) sq.push_back(std::move(z));
          }
      std::vector<size_t> desc(d);
      std::iota(desc.rbegin(), desc.rend(), 0);
      auto piv = rref(sq, d, desc);
      SpanBasis span(d);
      for (const auto& r : sq) span.add(r);
      for (Vec c : rad[u][w]) {
        reduce_rows(c, sq, piv);
        if (!span.add(c)) continue;
        arrows.push_back({u, w, c, ""});
      }
    }

  // Names: stalk-to-stalk arrows keep the arrow they are; the rest are starred
  // after the arrow or summand label they involve.
  auto is_stalk = [&](size_t u) { return T[u].summands() == 1 && T[u].terms.size() == 1; };
  for (auto& ar : arrows) {
    const HomSpace& H = lam[ar.u][ar.w];
    Vec f = H.element(ar.elem);
    std::set<std::string> arrow_ids, labels;
    size_t nonzero = 0;
    for (const auto& b : H.L.blocks) {
      Vec x = part(f, b);
      for (size_t t = 0; t < x.size(); ++t) {
        if (x[t] == 0) continue;
        ++nonzero;
        const Path& p = A.basis(b.i, b.j)[t];
        if (p.length() == 1) arrow_ids.insert(p.arrows[0]);
        if (p.length() == 0) {
          std::string ls = T[ar.w].label(b.g, b.p), lt = T[ar.u].label(b.g, b.q);
          if (!ls.empty()) labels.insert(ls);
          if (!lt.empty()) labels.insert(lt);
        }
      }
    }
    std::string base;
    if (is_stalk(ar.u) && is_stalk(ar.w) && nonzero == 1 && arrow_ids.size() == 1)
      base = *arrow_ids.begin();
    else if (arrow_ids.size() == 1)
      base = *arrow_ids.begin() + "*";
    else if (arrow_ids.empty() && labels.size() == 1)
      base = *labels.begin() + "*";
    else
      base = "m" + keys[ar.u] + "_" + keys[ar.w];
    if (!is_valid_ident(base)) base = "m" + std::to_string(&ar - arrows.data());
    ar.id = base;
  }
  // Plain names first so that a kept id is never displaced by a starred one.
  std::vector<size_t> order(arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    bool sx = arrows[x].id.find('*') != std::string::npos, sy = arrows[y].id.find('*') != std::string::npos;
    return sx < sy;
  });
  for (size_t k : order) arrows[k].id = fresh(arrows[k].id, used);

  std::vector<Arrow> qa;
  for (const auto& ar : arrows) qa.push_back({ar.id, keys[ar.u], keys[ar.w]});
  Quiver out_q(keys, qa);

  // Paths of length 2 and 3 with their values.
  struct Walked {
    std::vector<size_t> arrows;
    Vec value;
  };
  std::vector<std::vector<std::vector<Walked>>> paths(4, std::vector<std::vector<Walked>>(n * n));
  for (size_t k = 0; k < arrows.size(); ++k) paths[1][arrows[k].u * n + arrows[k].w].push_back({{k}, arrows[k].elem});
  for (size_t len = 2; len <= 3; ++len)
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v)
        for (const auto& p : paths[len - 1][u * n + v])
          for (size_t k = 0; k < arrows.size(); ++k) {
            if (arrows[k].u != v) continue;
            size_t w = arrows[k].w;
            Walked nw{p.arrows, product(u, v, w, p.value, arrows[k].elem)};
            nw.arrows.push_back(k);
            paths[len][u * n + w].push_back(std::move(nw));
          }
  auto to_path = [&](const std::vector<size_t>& ks) {
    std::vector<std::string> ids;
    for (size_t k : ks) ids.push_back(arrows[k].id);
    return make_path(out_q, ids);
  };

  std::vector<RelationTerm> rels;
  // Quadratic relations first; they are needed to recognise consequences.
  std::vector<std::vector<Vec>> quad(n * n);
  for (size_t u = 0; u < n; ++u)
    for (size_t w = 0; w < n; ++w) {
      const auto& P2 = paths[2][u * n + w];
      if (P2.empty()) continue;
      const size_t d = lam[u][w].dim();
      std::vector<Vec> ev(d, Vec(P2.size()));
      for (size_t c = 0; c < P2.size(); ++c)
        for (size_t r = 0; r < d; ++r) ev[r][c] = P2[c].value[r];
      auto K = kernel(ev, P2.size());
      std::vector<size_t> desc(P2.size());
      std::iota(desc.rbegin(), desc.rend(), 0);
      rref(K, P2.size(), desc);
      quad[u * n + w] = K;
    }
  for (size_t u = 0; u < n; ++u)
    for (size_t w = 0; w < n; ++w) {
      const auto& P2 = paths[2][u * n + w];
      const auto& P3 = paths[3][u * n + w];
      const size_t m = P2.size() + P3.size();
      if (m == 0) continue;
      auto column = [&](const std::vector<size_t>& ks) -> size_t {
        const auto& pool = ks.size() == 2 ? P2 : P3;
        for (size_t c = 0; c < pool.size(); ++c)
          if (pool[c].arrows == ks) return (ks.size() == 2 ? 0 : P2.size()) + c;
        throw std::logic_error("path missing from enumeration");
      };
      SpanBasis known(m);
      for (const auto& r : quad[u * n + w]) {
        Vec v(m);
        for (size_t c = 0; c < P2.size(); ++c) v[c] = r[c];
        known.add(v);
        RelationTerm t;
        for (size_t c = 0; c < P2.size(); ++c)
          if (r[c] != 0) t.terms.push_back({r[c], to_path(P2[c].arrows)});
        rels.push_back(std::move(t));
      }
      if (P3.empty()) continue;
      // Consequences arrow * rho and rho * arrow of quadratic relations.
      for (size_t k = 0; k < arrows.size(); ++k) {
        if (arrows[k].u == u) {
          size_t v = arrows[k].w;
          const auto& P2v = paths[2][v * n + w];
          for (const auto& r : quad[v * n + w]) {
            Vec x(m);
            for (size_t c = 0; c < P2v.size(); ++c) {
              if (r[c] == 0) continue;
              std::vector<size_t> ks{k};
              ks.insert(ks.end(), P2v[c].arrows.begin(), P2v[c].arrows.end());
              x[column(ks)] += r[c];
            }
            known.add(x);
          }
        }
        if (arrows[k].w == w) {
          size_t v = arrows[k].u;
          const auto& P2v = paths[2][u * n + v];
          for (const auto& r : quad[u * n + v]) {
            Vec x(m);
            for (size_t c = 0; c < P2v.size(); ++c) {
              if (r[c] == 0) continue;
              std::vector<size_t> ks = P2v[c].arrows;
              ks.push_back(k);
              x[column(ks)] += r[c];
            }
            known.add(x);
          }
        }
      }
      const size_t d = lam[u][w].dim();
      std::vector<Vec> ev(d, Vec(m));
      for (size_t c = 0; c < m; ++c) {
        const Vec& val = c < P2.size() ? P2[c].value : P3[c - P2.size()].value;
        for (size_t r = 0; r < d; ++r) ev[r][c] = val[r];
      }
      auto K = kernel(ev, m);
      std::vector<size_t> desc(m);
      std::iota(desc.rbegin(), desc.rend(), 0);
      rref(K, m, desc);
      for (const auto& r : K) {
        if (!known.add(r)) continue;
        RelationTerm t;
        for (size_t c = 0; c < m; ++c)
          if (r[c] != 0) t.terms.push_back({r[c], to_path(c < P2.size() ? P2[c].arrows : P3[c - P2.size()].arrows)});
        rels.push_back(std::move(t));
      }
    }

  AlgebraPresentation out(name, out_q, rels);
  bool complete = true;
  try {
    PathAlgebra check(out);
    for (size_t u = 0; u < n; ++u)
      for (size_t w = 0; w < n; ++w)
        if (check.dim(*out_q.vertex_index(keys[u]), *out_q.vertex_index(keys[w])) != lam[u][w].dim()) complete = false;
  } catch (const DomainError&) {
    complete = false;
  }
  if (!complete) throw DomainError("relation search exceeds length bound");
  return out;
}

AlgebraPresentation mutate_at(const AlgebraPresentation& a, const std::string& x, MutationSign sign) {
  const Quiver& q = a.quiver();
  auto xi = q.vertex_index(x);
  if (!xi) throw DomainError("unknown vertex " + x);
  std::map<std::string, ProjectiveComplex> summands;
  for (const auto& v : q.vertices()) summands[v] = stalk_complex(v);
  if (sign == MutationSign::Minus) {
    if (!q.out_arrows(*xi).empty()) throw DomainError("vertex " + x + " is not a sink");
    summands[x] = sink_complex(a, x);
  } else {
    if (!q.in_arrows(*xi).empty()) throw DomainError("vertex " + x + " is not a source");
    summands[x] = source_complex(a, x);
  }
  std::string tag = sign == MutationSign::Minus ? "mu-" : "mu+";
  return endomorphism_presentation(a, summands, tag + x + "(" + a.name() + ")");
}

}  // namespace qsa
