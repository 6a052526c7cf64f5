#include <functional>

#include "qsa/error.hpp"
#include "qsa/transform.hpp"

namespace qsa {

namespace {

// Lift choice: 0 for an untouched vertex, '+' or '-' for a blown one.
using Sign = char;

struct Lifter {
  const Quiver& q;
  const VertexSet& D;

  bool blown(const std::string& v) const { return D.count(v) > 0; }
  std::vector<Sign> choices(const std::string& v) const {
    return blown(v) ? std::vector<Sign>{'+', '-'} : std::vector<Sign>{0};
  }
  static std::string vertex(const std::string& v, Sign s) { return s ? v + s : v; }
  std::string arrow(const std::string& id, Sign s, Sign t) const {
    std::string r = id;
    if (s) r += s;
    if (t) r += t;
    return r;
  }
  // signs[k] is the lift of the k-th vertex along the path.
  Path lift(const Path& p, const std::vector<Sign>& signs) const {
    Path out{vertex(p.source, signs.front()), vertex(p.target, signs.back()), {}};
    for (size_t k = 0; k < p.arrows.size(); ++k) out.arrows.push_back(arrow(p.arrows[k], signs[k], signs[k + 1]));
    return out;
  }
  std::vector<std::string> vertices_along(const Path& p) const {
    std::vector<std::string> vs{p.source};
    for (const auto& id : p.arrows) vs.push_back(q.arrow(id).target);
    return vs;
  }
};

}  // namespace

AlgebraPresentation blow_up(const AlgebraPresentation& a, const VertexSet& D) {
  if (D.empty()) return a;
  const Quiver& q = a.quiver();
  for (const auto& d : D) {
    auto v = q.vertex_index(d);
    if (!v) throw DomainError("blow-up vertex " + d + " is not in the quiver");
    for (size_t ar : q.out_arrows(*v))
      if (q.target(ar) == *v) throw DomainError("blow-up vertex " + d + " carries the loop " + q.arrow(ar).id);
  }
  Lifter L{q, D};

  std::vector<std::string> vertices;
  for (const auto& v : q.vertices())
    for (Sign s : L.choices(v)) vertices.push_back(Lifter::vertex(v, s));
  std::vector<Arrow> arrows;
  for (const auto& ar : q.arrows())
    for (Sign s : L.choices(ar.source))
      for (Sign t : L.choices(ar.target))
        arrows.push_back({L.arrow(ar.id, s, t), Lifter::vertex(ar.source, s), Lifter::vertex(ar.target, t)});
  {
    VertexSet seen;
    for (const auto& v : vertices)
      if (!seen.insert(v).second) throw DomainError("blow-up vertex name " + v + " collides with an existing vertex");
    seen.clear();
    for (const auto& ar : arrows)
      if (!seen.insert(ar.id).second) throw DomainError("blow-up arrow name " + ar.id + " collides with an existing arrow");
  }

  std::vector<RelationTerm> rels;
  for (const auto& r : a.relations()) {
    if (r.is_monomial()) {
      const Path& p = r.front();
      auto vs = L.vertices_along(p);
      std::vector<Sign> signs(vs.size());
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == vs.size()) {
          rels.push_back(RelationTerm::monomial(L.lift(p, signs)));
          return;
        }
        for (Sign s : L.choices(vs[k])) {
          signs[k] = s;
          rec(k + 1);
        }
      };
      rec(0);
      continue;
    }
    for (Sign s : L.choices(r.source()))
      for (Sign t : L.choices(r.target())) {
        RelationTerm lifted;
        for (const auto& [c, p] : r.terms) {
          auto vs = L.vertices_along(p);
          std::vector<Sign> signs(vs.size());
          for (size_t k = 1; k + 1 < vs.size(); ++k) signs[k] = L.blown(vs[k]) ? '+' : 0;
          signs.front() = s;
          signs.back() = t;
          lifted.terms.push_back({c, L.lift(p, signs)});
        }
        rels.push_back(std::move(lifted));
      }
  }

  for (const auto& d : D) {
    size_t v = *q.vertex_index(d);
    for (size_t b : q.in_arrows(v))
      for (size_t c : q.out_arrows(v)) {
        Path p = make_path(q, {q.arrow(b).id, q.arrow(c).id});
        if (path_hits_monomial_relation(a, p.arrows)) continue;
        for (Sign s : L.choices(p.source))
          for (Sign t : L.choices(p.target)) {
            RelationTerm bin;
            bin.terms.push_back({Rational(1), L.lift(p, {s, '+', t})});
            bin.terms.push_back({Rational(-1), L.lift(p, {s, '-', t})});
            rels.push_back(std::move(bin));
          }
      }
  }

  return AlgebraPresentation(a.name() + "[" + join({D.begin(), D.end()}, ",") + "]",
                             Quiver(std::move(vertices), std::move(arrows)), std::move(rels));
}

}  // namespace qsa
