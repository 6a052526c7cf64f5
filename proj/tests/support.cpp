#include "support.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace qsa::test {

std::string fixture_path(const std::string& name) { return std::string(QSA_FIXTURES) + "/" + name + ".qsa"; }

AlgebraPresentation fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

AlgebraPresentation parse(const std::string& text) { return parse_presentation(text); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(QSA_FIXTURES))
    if (e.path().extension() == ".qsa") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

CliRun cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qsa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// ---- generators ------------------------------------------------------------

namespace {

struct Draft {
  size_t n = 0;
  std::vector<std::pair<size_t, size_t>> arrows;
  std::vector<int> in, out;

  explicit Draft(size_t n_) : n(n_), in(n_, 0), out(n_, 0) {}
  bool fits(size_t s, size_t t, int cap) const { return out[s] < cap && in[t] < cap; }
  void add(size_t s, size_t t) {
    arrows.emplace_back(s, t);
    ++out[s];
    ++in[t];
  }
};

Draft random_shape(std::mt19937& rng, size_t n, size_t extra, int cap) {
  for (;;) {
    Draft d(n);
    bool ok = true;
    for (size_t v = 1; v < n && ok; ++v) {
      bool placed = false;
      for (int tries = 0; tries < 30 && !placed; ++tries) {
        size_t u = std::uniform_int_distribution<size_t>(0, v - 1)(rng);
        bool forward = rng() & 1;
        size_t s = forward ? u : v, t = forward ? v : u;
        if (d.fits(s, t, cap)) {
          d.add(s, t);
          placed = true;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    for (size_t k = 0, tries = 0; k < extra && tries < 50; ++tries) {
      size_t s = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
      size_t t = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
      if (!d.fits(s, t, cap)) continue;
      d.add(s, t);
      ++k;
    }
    return d;
  }
}

AlgebraPresentation build(const Draft& d, const std::set<std::pair<size_t, size_t>>& rel, const std::string& name) {
  std::vector<std::string> vs;
  for (size_t i = 0; i < d.n; ++i) vs.push_back(std::to_string(i + 1));
  std::vector<Arrow> as;
  for (size_t k = 0; k < d.arrows.size(); ++k)
    as.push_back(Arrow{"a" + std::to_string(k + 1), vs[d.arrows[k].first], vs[d.arrows[k].second]});
  Quiver q(vs, as);
  std::vector<RelationTerm> rs;
  for (auto [x, y] : rel) rs.push_back(RelationTerm::monomial(make_path(q, {as[x].id, as[y].id})));
  return AlgebraPresentation(name, q, rs);
}

}  // namespace

AlgebraPresentation random_quadratic_string(std::mt19937& rng, size_t n, size_t extra_arrows,
                                            const std::string& name) {
  Draft d = random_shape(rng, n, extra_arrows, 2);
  const size_t m = d.arrows.size();
  std::set<std::pair<size_t, size_t>> rel;
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      if (d.arrows[x].second == d.arrows[y].first && (rng() & 1)) rel.insert({x, y});
  // at most one continuation outside I on either side of every arrow
  for (size_t x = 0; x < m; ++x) {
    bool free_seen = false;
    for (size_t y = 0; y < m; ++y) {
      if (d.arrows[x].second != d.arrows[y].first || rel.count({x, y})) continue;
      if (free_seen) rel.insert({x, y});
      free_seen = true;
    }
  }
  for (size_t y = 0; y < m; ++y) {
    bool free_seen = false;
    for (size_t x = 0; x < m; ++x) {
      if (d.arrows[x].second != d.arrows[y].first || rel.count({x, y})) continue;
      if (free_seen) rel.insert({x, y});
      free_seen = true;
    }
  }
  return build(d, rel, name);
}

AlgebraPresentation random_quadratic_monomial(std::mt19937& rng, size_t n, size_t extra_arrows,
                                              double relation_rate, const std::string& name) {
  Draft d = random_shape(rng, n, extra_arrows, 1 << 20);
  std::bernoulli_distribution coin(relation_rate);
  std::set<std::pair<size_t, size_t>> rel;
  for (size_t x = 0; x < d.arrows.size(); ++x)
    for (size_t y = 0; y < d.arrows.size(); ++y)
      if (d.arrows[x].second == d.arrows[y].first && coin(rng)) rel.insert({x, y});
  return build(d, rel, name);
}

namespace {

// Labelled trees from Pruefer sequences.
std::vector<std::vector<std::pair<size_t, size_t>>> labelled_trees(size_t n) {
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};
  std::vector<std::vector<std::pair<size_t, size_t>>> out;
  std::vector<size_t> seq(n - 2, 0);
  for (;;) {
    std::vector<size_t> degree(n, 1);
    for (size_t s : seq) ++degree[s];
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t s : seq)
      for (size_t v = 0; v < n; ++v)
        if (degree[v] == 1) {
          edges.emplace_back(v, s);
          --degree[v];
          --degree[s];
          break;
        }
    std::vector<size_t> last;
    for (size_t v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    out.push_back(edges);
    size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return out;
}

std::string tree_key(size_t n, const std::vector<std::pair<size_t, size_t>>& arcs,
                     const std::vector<std::array<size_t, 3>>& rels) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<size_t, size_t>> a;
    for (auto [s, t] : arcs) a.emplace_back(perm[s], perm[t]);
    std::vector<std::array<size_t, 3>> r;
    for (auto x : rels) r.push_back({perm[x[0]], perm[x[1]], perm[x[2]]});
    std::sort(a.begin(), a.end());
    std::sort(r.begin(), r.end());
    std::string key;
    for (auto [s, t] : a) key += std::to_string(s) + ">" + std::to_string(t) + ",";
    key += "|";
    for (auto x : r) key += std::to_string(x[0]) + ">" + std::to_string(x[1]) + ">" + std::to_string(x[2]) + ",";
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<AlgebraPresentation> tree_presentations(size_t max_n, size_t max_rel) {
  std::vector<AlgebraPresentation> out;
  std::set<std::string> seen;
  for (size_t n = 1; n <= max_n; ++n)
    for (const auto& edges : labelled_trees(n))
      for (size_t mask = 0; mask < (size_t(1) << edges.size()); ++mask) {
        std::vector<std::pair<size_t, size_t>> arcs;
        for (size_t k = 0; k < edges.size(); ++k)
          arcs.push_back((mask >> k) & 1 ? std::make_pair(edges[k].second, edges[k].first) : edges[k]);
        std::vector<std::array<size_t, 3>> composable;
        for (auto [s, t] : arcs)
          for (auto [s2, t2] : arcs)
            if (t == s2 && s != t2) composable.push_back({s, t, t2});
        std::vector<std::vector<std::array<size_t, 3>>> choices{{}};
        for (size_t i = 0; i < composable.size() && max_rel >= 1; ++i) {
          choices.push_back({composable[i]});
          for (size_t j = i + 1; j < composable.size() && max_rel >= 2; ++j)
            choices.push_back({composable[i], composable[j]});
        }
        for (const auto& rels : choices) {
          if (!seen.insert(tree_key(n, arcs, rels)).second) continue;
          std::vector<std::string> vs;
          for (size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
          auto arrow_id = [&](size_t s, size_t t) { return "a" + vs[s] + "_" + vs[t]; };
          std::vector<Arrow> as;
          for (auto [s, t] : arcs) as.push_back(Arrow{arrow_id(s, t), vs[s], vs[t]});
          Quiver q(vs, as);
          std::vector<RelationTerm> rs;
          for (auto r : rels)
            rs.push_back(RelationTerm::monomial(make_path(q, {arrow_id(r[0], r[1]), arrow_id(r[1], r[2])})));
          out.emplace_back("tree" + std::to_string(out.size()), q, rs);
        }
      }
  return out;
}

MultiGraph random_multigraph(std::mt19937& rng, size_t n, size_t edges, bool loops) {
  MultiGraph g;
  for (size_t i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i));
  for (size_t v = 1; v < n; ++v) g.edges.emplace_back(std::uniform_int_distribution<size_t>(0, v - 1)(rng), v);
  if (n < 2 && !loops) return g;  // nowhere to put another edge
  while (g.edges.size() < edges) {
    size_t s = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    size_t t = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    if (s == t && !loops) continue;
    g.edges.emplace_back(s, t);
  }
  return g;
}

std::vector<MultiGraph> all_multigraphs(size_t n, size_t edges, bool loops) {
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t s = 0; s < n; ++s)
    for (size_t t = s; t < n; ++t)
      if (s != t || loops) slots.emplace_back(s, t);
  std::vector<MultiGraph> out;
  std::vector<size_t> pick;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (pick.size() == edges) {
      MultiGraph g;
      for (size_t i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i));
      for (size_t k : pick) g.edges.push_back(slots[k]);
      if (g.connected()) out.push_back(g);
      return;
    }
    for (size_t k = from; k < slots.size(); ++k) {
      pick.push_back(k);
      rec(k);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---- oracles ---------------------------------------------------------------

std::vector<std::vector<long>> ext_euler_oracle(const AlgebraPresentation& a) {
  if (!a.is_monomial()) throw std::invalid_argument("ext oracle needs monomial relations");
  const Quiver& q = a.quiver();
  const size_t n = q.vertex_count();
  std::vector<std::vector<size_t>> rels;
  for (const auto& r : a.relations()) {
    std::vector<size_t> p;
    for (const auto& id : r.front().arrows) p.push_back(*q.arrow_index(id));
    rels.push_back(p);
  }
  auto zero = [&](const std::vector<size_t>& p) {
    for (const auto& r : rels)
      if (std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end()) return true;
    return false;
  };
  auto end_of = [&](const std::vector<size_t>& p, size_t start) { return p.empty() ? start : q.target(p.back()); };

  std::vector<std::vector<long>> chi(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    chi[i][i] += 1;  // P_i covers S_i
    // generators of the current syzygy: nonzero paths p, summand pA
    std::vector<std::vector<size_t>> gens;
    for (size_t al : q.out_arrows(i)) gens.push_back({al});
    long sign = -1;
    for (int depth = 1; !gens.empty(); ++depth, sign = -sign) {
      if (depth > 64) throw std::runtime_error("resolution does not stop");
      std::vector<std::vector<size_t>> next;
      for (const auto& p : gens) {
        size_t t = q.target(p.back());
        chi[i][t] += sign;
        // minimal nonzero paths r from t with p r = 0
        std::function<void(std::vector<size_t>&)> grow = [&](std::vector<size_t>& r) {
          for (size_t b : q.out_arrows(end_of(r, t))) {
            r.push_back(b);
            std::vector<size_t> pr = p;
            pr.insert(pr.end(), r.begin(), r.end());
            if (!zero(r)) {
              if (zero(pr))
                next.push_back(r);
              else
                grow(r);
            }
            r.pop_back();
          }
        };
        std::vector<size_t> r;
        grow(r);
      }
      gens = std::move(next);
    }
  }
  return chi;
}

long quadratic_value(const std::vector<std::vector<long>>& b, const std::vector<long>& x) {
  long s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) s += x[i] * b[i][j] * x[j];
  return s;
}

std::optional<std::vector<long>> negative_in_box(const std::vector<std::vector<long>>& b, int r) {
  const size_t n = b.size();
  std::vector<long> x(n, -r);
  if (n == 0) return std::nullopt;
  for (;;) {
    if (quadratic_value(b, x) < 0) return x;
    size_t k = 0;
    while (k < n && ++x[k] > r) x[k++] = -r;
    if (k == n) return std::nullopt;
  }
}

std::vector<std::vector<long>> integral(const std::vector<Vec>& m) {
  std::vector<std::vector<long>> out;
  for (const auto& row : m) {
    std::vector<long> r;
    for (const auto& x : row) {
      if (x.get_den() != 1) throw std::runtime_error("matrix is not integral");
      r.push_back(x.get_num().get_si());
    }
    out.push_back(r);
  }
  return out;
}

namespace {

Rational det(std::vector<Vec> m) {
  const size_t n = m.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace

TitsSign tits_sign_by_minors(const MultiGraph& g) {
  const size_t n = g.vertex_count();
  // 2q(x) = x^T S x with S_ii = 2 - 2 loops(i), S_ij = -(edges between i, j)
  std::vector<Vec> s(n, Vec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) s[i][i] = 2;
  for (auto [u, v] : g.edges) {
    if (u == v)
      s[u][u] -= 2;
    else {
      s[u][v] -= 1;
      s[v][u] -= 1;
    }
  }
  auto minor = [&](size_t mask) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    std::vector<Vec> m(idx.size(), Vec(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) m[a][b] = s[idx[a]][idx[b]];
    return det(m);
  };
  bool definite = true;
  for (size_t k = 1; k <= n; ++k) definite = definite && minor((size_t(1) << k) - 1) > 0;
  if (definite) return TitsSign::PositiveDefinite;
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask)
    if (minor(mask) < 0) return TitsSign::Indefinite;
  return TitsSign::PositiveSemidefinite;
}

std::string check_cover(const AlgebraPresentation& base, const CoverBall& ball) {
  const Quiver& bq = base.quiver();
  const Quiver& cq = ball.cover.quiver();
  MultiGraph g = underlying_graph(ball.cover);
  if (!g.connected()) return "cover ball is disconnected";
  if (g.edges.size() + 1 != g.vertex_count()) return "cover ball is not a tree";

  for (const auto& v : cq.vertices()) {
    auto it = ball.vertex_projection.find(v);
    if (it == ball.vertex_projection.end() || !bq.has_vertex(it->second)) return "vertex " + v + " has no projection";
    const Walk& w = ball.walks.at(v);
    if (!w.is_reduced()) return "walk of " + v + " is not reduced";
    if (w.length() != ball.depth.at(v) || w.length() > ball.radius) return "depth of " + v + " is wrong";
    if (w.target != it->second) return "walk of " + v + " ends at the wrong vertex";
  }
  for (const auto& ar : cq.arrows()) {
    const Arrow& b = bq.arrow(ball.arrow_projection.at(ar.id));
    if (b.source != ball.vertex_projection.at(ar.source) || b.target != ball.vertex_projection.at(ar.target))
      return "arrow " + ar.id + " does not project onto an arrow";
  }

  auto project = [&](const Path& p) {
    std::vector<std::string> out;
    for (const auto& id : p.arrows) out.push_back(ball.arrow_projection.at(id));
    return out;
  };
  std::set<std::vector<std::string>> base_rel, cover_rel;
  for (const auto& r : base.relations()) base_rel.insert(r.front().arrows);
  for (const auto& r : ball.cover.relations()) {
    if (!r.is_monomial()) return "cover relation is not monomial";
    if (!base_rel.count(project(r.front()))) return "cover relation " + r.front().to_string() + " projects outside I";
    cover_rel.insert(r.front().arrows);
  }
  for (size_t v = 0; v < cq.vertex_count(); ++v) {
    for (const auto& r : base.relations()) {
      if (r.source() != ball.vertex_projection.at(cq.vertices()[v])) continue;
      size_t cur = v;
      std::vector<std::string> lift;
      for (const auto& id : r.front().arrows) {
        std::optional<size_t> step;
        for (size_t c : cq.out_arrows(cur))
          if (ball.arrow_projection.at(cq.arrow(c).id) == id) step = c;
        if (!step) break;
        lift.push_back(cq.arrow(*step).id);
        cur = cq.target(*step);
      }
      if (lift.size() == r.front().length() && !cover_rel.count(lift))
        return "lift of " + r.front().to_string() + " at " + cq.vertices()[v] + " is not a relation";
    }
  }

  for (size_t v = 0; v < cq.vertex_count(); ++v) {
    const std::string& name = cq.vertices()[v];
    if (ball.depth.at(name) >= ball.radius) continue;
    size_t bv = *bq.vertex_index(ball.vertex_projection.at(name));
    auto same = [&](const std::vector<size_t>& cover_side, const std::vector<size_t>& base_side) {
      std::multiset<std::string> a, b;
      for (size_t c : cover_side) a.insert(ball.arrow_projection.at(cq.arrow(c).id));
      for (size_t c : base_side) b.insert(bq.arrow(c).id);
      return a == b;
    };
    if (!same(cq.out_arrows(v), bq.out_arrows(bv)) || !same(cq.in_arrows(v), bq.in_arrows(bv)))
      return "projection is not bijective around interior vertex " + name;
  }
  return {};
}

std::map<std::string, ProjectiveComplex> ten_vertex_tilting(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  std::map<std::string, ProjectiveComplex> t;
  for (const auto& v : q.vertices()) t[v] = stalk_complex(v);
  auto map_by = [&](const char* arrow) {
    return std::vector<std::pair<Rational, Path>>{{Rational(1), make_path(q, {arrow})}};
  };
  t["3"] = ProjectiveComplex{-1, {{"4", "5"}, {"3"}}, {{"gamma", "delta"}, {""}}, {{{map_by("gamma"), map_by("delta")}}}};
  t["4"] = ProjectiveComplex{-1, {{"4"}, {"3"}}, {{"gamma"}, {""}}, {{{map_by("gamma")}}}};
  t["5"] = ProjectiveComplex{-1, {{"5"}, {"3"}}, {{"delta"}, {""}}, {{{map_by("delta")}}}};
  return t;
}

}  // namespace qsa::test
