#include "qsa/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qsa/error.hpp"
#include "qsa/ident.hpp"

namespace qsa {

CoverBall truncated_cover(const AlgebraPresentation& a, const std::string& base, size_t radius) {
  if (!a.is_monomial()) throw DomainError("covers are only built for monomial presentations");
  const Quiver& q = a.quiver();
  auto root = q.vertex_index(base);
  if (!root) throw DomainError("unknown vertex '" + base + "'");

  CoverBall ball;
  ball.basepoint = base;
  ball.radius = radius;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  // Per cover vertex: base vertex index, last step (arrow index, exponent).
  struct Node {
    std::string name;
    size_t base;
    long last_arrow;
    int last_exp;
  };
  std::deque<Node> queue{{base, *root, -1, 0}};
  ball.vertex_projection[base] = base;
  ball.walks[base] = Walk{base, base, {}};
  ball.depth[base] = 0;
  vertices.push_back(base);
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    size_t d = ball.depth[cur.name];
    if (d == radius) continue;
    auto add_child = [&](size_t ar, int exp) {
      std::string child = cur.name + "." + q.arrow(ar).id + (exp < 0 ? "'" : "");
      if (ball.depth.count(child)) throw DomainError("cover vertex name '" + child + "' is ambiguous");
      size_t next = exp > 0 ? q.target(ar) : q.source(ar);
      Walk w = ball.walks[cur.name];
      w.steps.push_back({q.arrow(ar).id, exp});
      w.target = q.vertices()[next];
      ball.walks[child] = w;
      ball.depth[child] = d + 1;
      ball.vertex_projection[child] = q.vertices()[next];
      vertices.push_back(child);
      const std::string& src = exp > 0 ? cur.name : child;
      const std::string& tgt = exp > 0 ? child : cur.name;
      std::string id = q.arrow(ar).id + "@" + src;
      arrows.push_back(Arrow{id, src, tgt});
      ball.arrow_projection[id] = q.arrow(ar).id;
      queue.push_back({child, next, static_cast<long>(ar), exp});
    };
    for (size_t ar : q.out_arrows(cur.base))
      if (!(cur.last_arrow == static_cast<long>(ar) && cur.last_exp == -1)) add_child(ar, +1);
    for (size_t ar : q.in_arrows(cur.base))
      if (!(cur.last_arrow == static_cast<long>(ar) && cur.last_exp == +1)) add_child(ar, -1);
  }
  Quiver cq(vertices, arrows);
  // Out-arrow lookup by base label.
  std::map<std::pair<std::string, std::string>, size_t> out_by_label;
  for (size_t ar = 0; ar < cq.arrow_count(); ++ar)
    out_by_label[{cq.arrow(ar).source, ball.arrow_projection[cq.arrow(ar).id]}] = ar;
  std::vector<RelationTerm> rels;
  for (const auto& v : cq.vertices()) {
    for (const auto& rel : a.relations()) {
      if (rel.source() != ball.vertex_projection[v]) continue;
      Path lift{v, v, {}};
      bool inside = true;
      for (const auto& label : rel.front().arrows) {
        auto it = out_by_label.find({lift.target, label});
        if (it == out_by_label.end()) {
          inside = false;
          break;
        }
        lift.arrows.push_back(cq.arrow(it->second).id);
        lift.target = cq.arrow(it->second).target;
      }
      if (inside) rels.push_back(RelationTerm::monomial(lift));
    }
  }
  ball.cover = AlgebraPresentation(a.name() + "~" + base, std::move(cq), std::move(rels));
  return ball;
}

namespace {

// Nonzero paths of positive length from each vertex of a monomial presentation.
// Returns, per source, target index -> list of arrow sequences.
std::vector<std::map<size_t, std::vector<std::vector<size_t>>>> nonzero_paths(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  auto longest = longest_monomially_free_path(a);
  if (!longest) throw DomainError("presentation is not admissible");
  std::vector<std::map<size_t, std::vector<std::vector<size_t>>>> out(q.vertex_count());
  for (size_t s = 0; s < q.vertex_count(); ++s) {
    std::vector<size_t> seq;
    std::vector<std::string> ids;
    std::function<void(size_t)> dfs = [&](size_t v) {
      for (size_t ar : q.out_arrows(v)) {
        seq.push_back(ar);
        ids.push_back(q.arrow(ar).id);
        if (!path_hits_monomial_relation(a, ids)) {
          out[s][q.target(ar)].push_back(seq);
          if (seq.size() < *longest) dfs(q.target(ar));
        }
        seq.pop_back();
        ids.pop_back();
      }
    };
    dfs(s);
  }
  return out;
}

std::string label_of(const Quiver& q, const std::vector<size_t>& seq,
                     const std::map<std::string, std::string>* projection) {
  std::vector<std::string> parts;
  for (size_t ar : seq) {
    const std::string& id = q.arrow(ar).id;
    parts.push_back(projection ? projection->at(id) : id);
  }
  return join(parts, ".");
}

}  // namespace

std::optional<AlgebraPresentation> radical_square_zero_restriction(const AlgebraPresentation& a,
                                                                   const std::vector<std::string>& vertices) {
  if (!a.is_monomial()) throw DomainError("restriction needs a monomial presentation");
  const Quiver& q = a.quiver();
  std::set<size_t> in_set;
  for (const auto& v : vertices) {
    auto i = q.vertex_index(v);
    if (!i) throw DomainError("unknown vertex '" + v + "'");
    in_set.insert(*i);
  }
  auto nz = nonzero_paths(a);
  struct DArrow {
    size_t s, t;
    std::vector<size_t> seq;
  };
  std::vector<DArrow> darrows;
  for (size_t s : in_set)
    for (const auto& [t, seqs] : nz[s]) {
      if (!in_set.count(t)) continue;
      for (const auto& seq : seqs) {
        bool factors = false;
        for (size_t k = 0; k + 1 < seq.size(); ++k)
          if (in_set.count(q.target(seq[k]))) factors = true;
        if (!factors) darrows.push_back({s, t, seq});
      }
    }
  for (const auto& p : darrows)
    for (const auto& r : darrows) {
      if (p.t != r.s) continue;
      std::vector<std::string> ids;
      for (size_t ar : p.seq) ids.push_back(q.arrow(ar).id);
      for (size_t ar : r.seq) ids.push_back(q.arrow(ar).id);
      if (!path_hits_monomial_relation(a, ids)) return std::nullopt;
    }
  std::vector<std::string> vs;
  for (size_t v : in_set) vs.push_back(q.vertices()[v]);
  std::vector<Arrow> arrows;
  for (const auto& d : darrows)
    arrows.push_back({label_of(q, d.seq, nullptr) + "@" + q.vertices()[d.s], q.vertices()[d.s], q.vertices()[d.t]});
  Quiver dq(vs, arrows);
  std::vector<RelationTerm> rels;
  for (size_t x = 0; x < dq.arrow_count(); ++x)
    for (size_t y : dq.out_arrows(dq.target(x)))
      rels.push_back(RelationTerm::monomial(make_path(dq, {dq.arrow(x).id, dq.arrow(y).id})));
  return AlgebraPresentation(a.name() + "|R2", std::move(dq), std::move(rels));
}

namespace {

// The ball with vertices renumbered by (depth, name) and its N-graph: u ~ v when a
// nonzero path joins them.  In a tree the path is unique when it exists.
struct BallIndex {
  std::vector<std::string> names;
  std::vector<std::set<size_t>> reach;           // nonzero targets from u
  std::vector<std::vector<size_t>> neighbours;   // N-graph, ascending
  std::map<std::pair<size_t, size_t>, std::vector<size_t>> path;  // (u, v) -> cover arrows
};

BallIndex index_ball(const CoverBall& ball) {
  const Quiver& q = ball.cover.quiver();
  std::vector<size_t> order(q.vertex_count());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    size_t dx = ball.depth.at(q.vertices()[x]), dy = ball.depth.at(q.vertices()[y]);
    if (dx != dy) return dx < dy;
    return compare_ident(q.vertices()[x], q.vertices()[y]) < 0;
  });
  std::vector<size_t> pos(order.size());
  BallIndex idx;
  for (size_t k = 0; k < order.size(); ++k) {
    pos[order[k]] = k;
    idx.names.push_back(q.vertices()[order[k]]);
  }
  auto nz = nonzero_paths(ball.cover);
  idx.reach.assign(order.size(), {});
  idx.neighbours.assign(order.size(), {});
  for (size_t s = 0; s < nz.size(); ++s)
    for (const auto& [t, seqs] : nz[s]) {
      size_t u = pos[s], v = pos[t];
      idx.reach[u].insert(v);
      idx.path[{u, v}] = seqs.front();
    }
  for (size_t u = 0; u < order.size(); ++u)
    for (size_t v : idx.reach[u]) {
      idx.neighbours[u].push_back(v);
      idx.neighbours[v].push_back(u);
    }
  for (auto& nb : idx.neighbours) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return idx;
}

// Adding w to the valid set s keeps every composite of nonzero paths zero.
bool still_radical_square_zero(const BallIndex& idx, const std::vector<size_t>& s, size_t w) {
  for (size_t u : s) {
    for (size_t v : s) {
      if (u == v) continue;
      // u -> v -> w and w -> u -> v and u -> w -> v
      if (idx.reach[u].count(v) && idx.reach[v].count(w) && idx.reach[u].count(w)) return false;
      if (idx.reach[w].count(u) && idx.reach[u].count(v) && idx.reach[w].count(v)) return false;
      if (idx.reach[u].count(w) && idx.reach[w].count(v) && idx.reach[u].count(v)) return false;
    }
  }
  return true;
}

MultiGraph induced_graph(const BallIndex& idx, const std::vector<size_t>& s) {
  MultiGraph g;
  for (size_t v : s) g.labels.push_back(idx.names[v]);
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = 0; b < s.size(); ++b)
      if (a != b && idx.reach[s[a]].count(s[b])) g.edges.push_back({a, b});
  return g;
}

AlgebraPresentation induced_presentation(const CoverBall& ball, const BallIndex& idx, const std::vector<size_t>& s) {
  const Quiver& q = ball.cover.quiver();
  std::vector<std::string> vs;
  for (size_t v : s) vs.push_back(idx.names[v]);
  std::vector<Arrow> arrows;
  for (size_t u : s)
    for (size_t v : s)
      if (u != v && idx.reach[u].count(v))
        arrows.push_back({label_of(q, idx.path.at({u, v}), &ball.arrow_projection) + "@" + idx.names[u],
                          idx.names[u], idx.names[v]});
  Quiver dq(vs, arrows);
  std::vector<RelationTerm> rels;
  for (size_t x = 0; x < dq.arrow_count(); ++x)
    for (size_t y : dq.out_arrows(dq.target(x)))
      rels.push_back(RelationTerm::monomial(make_path(dq, {dq.arrow(x).id, dq.arrow(y).id})));
  return AlgebraPresentation("witness", std::move(dq), std::move(rels));
}

}  // namespace

WitnessSearch find_wild_witness(const AlgebraPresentation& a, size_t radius, size_t max_size,
                                const WitnessOptions& opts) {
  if (!a.is_monomial()) throw DomainError("witness search needs a monomial presentation");
  if (!longest_monomially_free_path(a)) throw DomainError("presentation is not admissible");
  WitnessSearch result;
  std::vector<std::pair<CoverBall, BallIndex>> balls;
  for (const auto& v : a.quiver().vertices()) {
    CoverBall b = truncated_cover(a, v, radius);
    BallIndex idx = index_ball(b);
    balls.emplace_back(std::move(b), std::move(idx));
  }
  std::optional<MultiGraph> target_graph;
  if (opts.target) target_graph = underlying_graph(*opts.target);

  for (size_t k = 1; k <= max_size; ++k) {
    for (auto& [ball, idx] : balls) {
      // ESU from the root (index 0), which is the smallest index in every set it grows.
      std::vector<size_t> sub{0};
      std::vector<char> in_sub(idx.names.size(), 0);
      in_sub[0] = 1;
      std::optional<std::vector<size_t>> hit;
      std::function<bool(std::vector<size_t>)> extend = [&](std::vector<size_t> ext) -> bool {
        if (++result.visited > opts.node_budget) {
          result.budget_exhausted = true;
          return true;
        }
        if (sub.size() == k) {
          MultiGraph g = induced_graph(idx, sub);
          if (structural_graph_type(g).family != GraphFamily::Other) return false;
          if (target_graph) {
            if (g.edges.size() != target_graph->edges.size()) return false;
            if (!presentations_isomorphic(induced_presentation(ball, idx, sub), *opts.target)) return false;
          }
          hit = sub;
          return true;
        }
        while (!ext.empty()) {
          size_t w = ext.back();
          ext.pop_back();
          if (!still_radical_square_zero(idx, sub, w)) continue;
          // Exclusive neighbourhood of w: not in sub and not adjacent to sub.
          std::vector<size_t> next = ext;
          for (size_t u : idx.neighbours[w]) {
            if (u == 0 || in_sub[u]) continue;
            bool adjacent = false;
            for (size_t x : sub)
              if (std::binary_search(idx.neighbours[x].begin(), idx.neighbours[x].end(), u)) {
                adjacent = true;
                break;
              }
            if (!adjacent && std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
          }
          std::sort(next.begin(), next.end(), std::greater<>());
          sub.push_back(w);
          in_sub[w] = 1;
          bool stop = extend(next);
          sub.pop_back();
          in_sub[w] = 0;
          if (stop) return true;
        }
        return false;
      };
      std::vector<size_t> ext(idx.neighbours[0].begin(), idx.neighbours[0].end());
      std::sort(ext.begin(), ext.end(), std::greater<>());
      extend(ext);
      if (result.budget_exhausted) return result;
      if (hit) {
        WildWitness w;
        w.basepoint = ball.basepoint;
        w.radius = radius;
        for (size_t v : *hit) w.cover_vertices.push_back(idx.names[v]);
        w.induced = induced_presentation(ball, idx, *hit);
        w.type = graph_type(underlying_graph(w.induced));
        w.note = std::to_string(hit->size()) + " cover vertices around " + ball.basepoint +
                 " span a radical-square-zero full subcategory of type " + w.type.to_string();
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

}  // namespace qsa
