#include "qsa/graph_type.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsa/error.hpp"
#include "qsa/linalg.hpp"

namespace qsa {

std::string GraphType::to_string() const {
  switch (family) {
    case GraphFamily::Dynkin:
      return std::string(1, letter) + std::to_string(n);
    case GraphFamily::Euclidean:
      return "~" + std::string(1, letter) + std::to_string(n);
    default:
      return "Other";
  }
}

namespace {

GraphType dynkin(char l, size_t n) { return {GraphFamily::Dynkin, l, n}; }
GraphType euclid(char l, size_t n) { return {GraphFamily::Euclidean, l, n}; }
GraphType other() { return {}; }

}  // namespace

GraphType structural_graph_type(const MultiGraph& g) {
  const size_t n = g.vertex_count();
  if (n == 0) throw DomainError("graph type of an empty graph");
  if (!g.connected()) throw DomainError("graph type needs a connected graph");
  const size_t m = g.edges.size();

  std::vector<size_t> deg(n, 0);
  std::vector<std::vector<size_t>> adj(n);
  size_t loops = 0;
  std::map<std::pair<size_t, size_t>, size_t> mult;
  for (auto [u, v] : g.edges) {
    if (u == v) {
      ++loops;
      deg[u] += 2;
      continue;
    }
    ++deg[u];
    ++deg[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++mult[{std::min(u, v), std::max(u, v)}];
  }
  if (loops > 0) return (n == 1 && m == 1) ? euclid('A', 0) : other();
  for (auto& [k, c] : mult)
    if (c > 1) return (n == 2 && m == 2) ? euclid('A', 1) : other();

  if (m == n) {
    // Exactly one cycle; Euclidean only when the whole graph is that cycle.
    bool cycle = std::all_of(deg.begin(), deg.end(), [](size_t d) { return d == 2; });
    return cycle ? euclid('A', n - 1) : other();
  }
  if (m != n - 1) return other();

  // Trees.
  std::vector<size_t> branch;
  for (size_t v = 0; v < n; ++v) {
    if (deg[v] > 4) return other();
    if (deg[v] >= 3) branch.push_back(v);
  }
  if (branch.empty()) return dynkin('A', n);

  // Number of vertices on the arm leaving `from` through `next`, or 0 if it branches again.
  auto arm = [&](size_t from, size_t next) -> size_t {
    size_t len = 1, prev = from, cur = next;
    while (deg[cur] == 2) {
      size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    return deg[cur] == 1 ? len : 0;
  };

  if (branch.size() == 1) {
    size_t c = branch[0];
    std::vector<size_t> arms;
    for (size_t w : adj[c]) arms.push_back(arm(c, w));
    std::sort(arms.begin(), arms.end());
    if (deg[c] == 4) return arms == std::vector<size_t>{1, 1, 1, 1} ? euclid('D', 4) : other();
    size_t p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return dynkin('D', n);
    if (p == 1 && q == 2 && r <= 4) return dynkin('E', n);
    if ((p == 2 && q == 2 && r == 2) || (p == 1 && q == 3 && r == 3) || (p == 1 && q == 2 && r == 5))
      return euclid('E', n - 1);
    return other();
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    // ~D_{n-1}: each branch vertex carries two leaves.
    for (size_t b : branch) {
      size_t leaves = 0;
      for (size_t w : adj[b])
        if (deg[w] == 1) ++leaves;
      if (leaves != 2) return other();
    }
    return euclid('D', n - 1);
  }
  return other();
}

TitsSign tits_form_sign(const MultiGraph& g) {
  const size_t n = g.vertex_count();
  std::vector<Vec> m(n, Vec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (auto [u, v] : g.edges) {
    if (u == v) {
      m[u][u] -= 1;
    } else {
      m[u][v] -= Rational(1, 2);
      m[v][u] -= Rational(1, 2);
    }
  }
  auto c = characteristic_polynomial(m);
  for (size_t k = 0; k <= n; ++k) {
    Rational s = ((n - k) % 2 ? -1 : 1) * c[k];
    if (s < 0) return TitsSign::Indefinite;
  }
  return c[0] == 0 ? TitsSign::PositiveSemidefinite : TitsSign::PositiveDefinite;
}

GraphType graph_type(const MultiGraph& g) {
  GraphType t = structural_graph_type(g);
  TitsSign s = tits_form_sign(g);
  TitsSign expected = t.family == GraphFamily::Dynkin      ? TitsSign::PositiveDefinite
                      : t.family == GraphFamily::Euclidean ? TitsSign::PositiveSemidefinite
                                                           : TitsSign::Indefinite;
  if (s != expected) throw std::logic_error("graph recognizer disagrees with the Tits form on " + t.to_string());
  return t;
}

}  // namespace qsa
