#include <algorithm>
#include <functional>

#include "qsa/error.hpp"
#include "qsa/ident.hpp"
#include "qsa/presentation.hpp"

namespace qsa {

namespace {

using Seq = std::vector<std::string>;

std::set<Seq> minimal_monomials(const AlgebraPresentation& a) {
  std::vector<Seq> all;
  for (const auto& rel : a.relations()) all.push_back(rel.front().arrows);
  std::set<Seq> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < all.size() && !redundant; ++j)
      if (i != j && all[j].size() < all[i].size() && contains_subpath(all[i], all[j])) redundant = true;
    if (!redundant) out.insert(all[i]);
  }
  return out;
}

// Zero pattern of the reduced echelon form of I restricted to paths of length < n,
// one block per ordered vertex pair.  Column scaling (arrow rescaling) leaves it fixed.
using Pattern = std::vector<std::vector<std::vector<bool>>>;

Pattern ideal_pattern(const AlgebraPresentation& a, size_t n) {
  const Quiver& q = a.quiver();
  const size_t nv = q.vertex_count();
  // All paths of length < n from each vertex, grouped by target.
  std::vector<std::vector<std::vector<Seq>>> paths(nv, std::vector<std::vector<Seq>>(nv));
  for (size_t i = 0; i < nv; ++i) {
    paths[i][i].push_back({});
    Seq seq;
    std::function<void(size_t)> dfs = [&](size_t v) {
      if (seq.size() + 1 >= n) return;
      for (size_t ar : q.out_arrows(v)) {
        seq.push_back(q.arrow(ar).id);
        paths[i][q.target(ar)].push_back(seq);
        dfs(q.target(ar));
        seq.pop_back();
      }
    };
    dfs(i);
  }
  Pattern out;
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = 0; j < nv; ++j) {
      std::vector<Seq> cols = paths[i][j];
      std::sort(cols.begin(), cols.end(), [](const Seq& x, const Seq& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        for (size_t k = 0; k < x.size(); ++k) {
          int c = compare_ident(x[k], y[k]);
          if (c) return c < 0;
        }
        return false;
      });
      std::map<Seq, size_t> col;
      for (size_t c = 0; c < cols.size(); ++c) col[cols[c]] = c;
      std::vector<Vec> rows;
      for (const auto& rel : a.relations()) {
        size_t s = *q.vertex_index(rel.source()), t = *q.vertex_index(rel.target());
        for (const Seq& p : paths[i][s])
          for (const Seq& r : paths[t][j]) {
            Vec v(cols.size());
            for (const auto& [c, path] : rel.terms) {
              Seq seq = p;
              seq.insert(seq.end(), path.arrows.begin(), path.arrows.end());
              seq.insert(seq.end(), r.begin(), r.end());
              auto it = col.find(seq);
              if (it != col.end()) v[it->second] += c;
            }
            if (!is_zero(v)) rows.push_back(std::move(v));
          }
      }
      rref(rows, cols.size());
      std::vector<std::vector<bool>> block;
      for (const auto& r : rows) {
        std::vector<bool> b(r.size());
        for (size_t k = 0; k < r.size(); ++k) b[k] = r[k] != 0;
        block.push_back(std::move(b));
      }
      out.push_back(std::move(block));
    }
  return out;
}

struct Signature {
  size_t in = 0, out = 0, loops = 0;
  bool operator==(const Signature&) const = default;
};

}  // namespace

std::optional<Isomorphism> presentations_isomorphic(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                                    const IsomorphismOptions& opts) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.vertex_count() > opts.max_vertices || qb.vertex_count() > opts.max_vertices)
    throw DomainError("isomorphism search limited to " + std::to_string(opts.max_vertices) + " vertices");
  if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count()) return std::nullopt;
  const size_t n = qa.vertex_count();

  const bool monomial = a.is_monomial() && b.is_monomial();
  size_t bound = 0;
  std::set<Seq> mono_b;
  Pattern pattern_b;
  if (monomial) {
    mono_b = minimal_monomials(b);
  } else {
    auto la = longest_monomially_free_path(a), lb = longest_monomially_free_path(b);
    if (!la || !lb) throw DomainError("cannot compare ideals of presentations with unbounded free paths");
    bound = std::max(*la, *lb) + 1;
    pattern_b = ideal_pattern(b, bound);
  }

  auto multiplicity = [](const Quiver& q, size_t s, size_t t) {
    size_t m = 0;
    for (size_t ar : q.out_arrows(s))
      if (q.target(ar) == t) ++m;
    return m;
  };
  auto signature = [&](const Quiver& q, size_t v) {
    Signature s;
    for (size_t ar : q.out_arrows(v)) (q.target(ar) == v ? s.loops : s.out)++;
    for (size_t ar : q.in_arrows(v))
      if (q.source(ar) != v) s.in++;
    return s;
  };
  std::vector<Signature> sa(n), sb(n);
  for (size_t v = 0; v < n; ++v) {
    sa[v] = signature(qa, v);
    sb[v] = signature(qb, v);
  }

  // Visit vertices of a so each one after the first touches an earlier one when possible.
  std::vector<size_t> order;
  {
    std::vector<bool> seen(n, false);
    for (size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::vector<size_t> queue{root};
      seen[root] = true;
      for (size_t k = 0; k < queue.size(); ++k) {
        size_t v = queue[k];
        order.push_back(v);
        std::vector<size_t> nb;
        for (size_t ar : qa.out_arrows(v)) nb.push_back(qa.target(ar));
        for (size_t ar : qa.in_arrows(v)) nb.push_back(qa.source(ar));
        for (size_t w : nb)
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
  }

  std::vector<long> vmap(n, -1);
  std::vector<bool> used(n, false);
  std::optional<Isomorphism> found;

  auto try_arrows = [&]() -> bool {
    // Group arrows of a by endpoint pair, match with the image pair in b.
    std::map<std::pair<size_t, size_t>, std::vector<size_t>> ga, gb;
    for (size_t ar = 0; ar < qa.arrow_count(); ++ar) ga[{qa.source(ar), qa.target(ar)}].push_back(ar);
    for (size_t ar = 0; ar < qb.arrow_count(); ++ar) gb[{qb.source(ar), qb.target(ar)}].push_back(ar);
    std::vector<std::pair<std::vector<size_t>, std::vector<size_t>>> groups;
    for (auto& [key, arrows] : ga)
      groups.push_back({arrows, gb[{static_cast<size_t>(vmap[key.first]), static_cast<size_t>(vmap[key.second])}]});
    std::map<std::string, std::string> vnames, anames;
    for (size_t v = 0; v < n; ++v) vnames[qa.vertices()[v]] = qb.vertices()[vmap[v]];
    std::function<bool(size_t)> rec = [&](size_t g) -> bool {
      if (g == groups.size()) {
        AlgebraPresentation image = relabel(a, vnames, anames);
        bool same = monomial ? minimal_monomials(image) == mono_b : ideal_pattern(image, bound) == pattern_b;
        if (same) found = Isomorphism{vnames, anames};
        return same;
      }
      std::vector<size_t> perm = groups[g].second;
      std::sort(perm.begin(), perm.end());
      do {
        for (size_t k = 0; k < perm.size(); ++k) anames[qa.arrow(groups[g].first[k]).id] = qb.arrow(perm[k]).id;
        if (rec(g + 1)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    };
    return rec(0);
  };

  std::function<bool(size_t)> assign = [&](size_t k) -> bool {
    if (k == n) return try_arrows();
    size_t v = order[k];
    for (size_t w = 0; w < n; ++w) {
      if (used[w] || !(sa[v] == sb[w])) continue;
      bool ok = true;
      for (size_t u = 0; u < n && ok; ++u) {
        if (vmap[u] < 0) continue;
        size_t x = static_cast<size_t>(vmap[u]);
        if (multiplicity(qa, v, u) != multiplicity(qb, w, x) || multiplicity(qa, u, v) != multiplicity(qb, x, w))
          ok = false;
      }
      if (!ok) continue;
      vmap[v] = static_cast<long>(w);
      used[w] = true;
      if (assign(k + 1)) return true;
      vmap[v] = -1;
      used[w] = false;
    }
    return false;
  };
  assign(0);
  return found;
}

}  // namespace qsa
