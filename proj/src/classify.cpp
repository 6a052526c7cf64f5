#include "qsa/classify.hpp"

#include <algorithm>

#include "qsa/error.hpp"

namespace qsa {

namespace {

struct Local {
  const Quiver& q;
  std::set<std::pair<size_t, size_t>> rel;  // composable arrow pairs in I

  explicit Local(const AlgebraPresentation& a) : q(a.quiver()) {
    for (const auto& r : a.relations()) {
      if (!r.is_monomial() || r.front().length() != 2) continue;
      rel.insert({*q.arrow_index(r.front().arrows[0]), *q.arrow_index(r.front().arrows[1])});
    }
  }
  bool in_I(size_t a, size_t b) const { return rel.count({a, b}) > 0; }
  bool lone_source(size_t v, size_t arrow) const {
    return q.in_arrows(v).empty() && q.out_arrows(v).size() == 1 && q.out_arrows(v)[0] == arrow;
  }
  bool lone_sink(size_t v, size_t arrow) const {
    return q.out_arrows(v).empty() && q.in_arrows(v).size() == 1 && q.in_arrows(v)[0] == arrow;
  }
};

bool distinct(std::initializer_list<size_t> vs) {
  std::vector<size_t> v(vs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// First (lexicographically smallest) witness for clause `c` at x, if any.
std::optional<ExceptionalWitness> match_clause(const Local& L, size_t x, int c) {
  const Quiver& q = L.q;
  auto ins = q.in_arrows(x), outs = q.out_arrows(x);
  std::sort(ins.begin(), ins.end());
  std::sort(outs.begin(), outs.end());
  auto id = [&](size_t a) { return q.arrow(a).id; };

  if (c == 1 || c == 2) {
    for (size_t al : ins)
      for (size_t be : ins)
        for (size_t ga : outs)
          for (size_t de : outs) {
            if (al == be || ga == de) continue;
            size_t sa = q.source(al), sb = q.source(be), tg = q.target(ga), td = q.target(de);
            if (!L.lone_source(sa, al) || !L.lone_sink(tg, ga)) continue;
            if (!(L.in_I(al, ga) && L.in_I(be, ga) && L.in_I(al, de)) || L.in_I(be, de)) continue;
            if (c == 1) {
              if (!distinct({sa, sb, x, tg, td})) continue;
            } else {
              if (sb != td || !distinct({sa, sb, x, tg}) || !L.in_I(de, be)) continue;
            }
            return ExceptionalWitness{c, id(al), id(be), id(ga), id(de)};
          }
    return std::nullopt;
  }
  if (c == 3 || c == 4) {
    if (outs.size() != 1) return std::nullopt;
    size_t ga = outs[0];
    for (size_t al : ins)
      for (size_t be : ins) {
        if (al == be) continue;
        size_t sa = q.source(al), sb = q.source(be), tg = q.target(ga);
        if (!distinct({sa, sb, x, tg})) continue;
        if (!L.in_I(al, ga) || !L.in_I(be, ga)) continue;
        if (!L.lone_source(sa, al)) continue;
        if (c == 3 && !L.lone_source(sb, be)) continue;
        if (c == 4 && !L.lone_sink(tg, ga)) continue;
        return ExceptionalWitness{c, id(al), id(be), id(ga), ""};
      }
    return std::nullopt;
  }
  // clauses 5 and 6
  if (ins.size() != 1) return std::nullopt;
  size_t al = ins[0];
  for (size_t ga : outs)
    for (size_t de : outs) {
      if (ga == de) continue;
      size_t sa = q.source(al), tg = q.target(ga), td = q.target(de);
      if (!distinct({sa, x, tg, td})) continue;
      if (!L.in_I(al, ga) || !L.in_I(al, de)) continue;
      if (!L.lone_sink(tg, ga)) continue;
      if (c == 5 && !L.lone_sink(td, de)) continue;
      if (c == 6 && !L.lone_source(sa, al)) continue;
      return ExceptionalWitness{c, id(al), "", id(ga), id(de)};
    }
  return std::nullopt;
}

bool gentle_at(const Local& L, size_t x) {
  const Quiver& q = L.q;
  for (size_t out : q.out_arrows(x)) {
    size_t partners = 0;
    for (size_t in : q.in_arrows(x))
      if (L.in_I(in, out)) ++partners;
    if (partners > 1) return false;
  }
  for (size_t in : q.in_arrows(x)) {
    size_t partners = 0;
    for (size_t out : q.out_arrows(x))
      if (L.in_I(in, out)) ++partners;
    if (partners > 1) return false;
  }
  return true;
}

void require_quadratic_monomial(const AlgebraPresentation& a) {
  if (!a.is_monomial_quadratic()) throw DomainError("relations must be paths of length two");
}

}  // namespace

QsReport is_quadratic_string(const AlgebraPresentation& a) {
  QsReport r;
  const Quiver& q = a.quiver();
  for (const auto& rel : a.relations())
    if (!rel.is_monomial() || rel.front().length() != 2) {
      std::string shown = rel.is_monomial() ? rel.front().to_string() : "(" + rel.front().to_string() + ") ...";
      r.violations.push_back({3, shown, "relation is not a path of length two"});
    }
  for (size_t v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2)
      r.violations.push_back({1, q.vertices()[v], std::to_string(q.out_arrows(v).size()) + " outgoing arrows"});
    if (q.in_arrows(v).size() > 2)
      r.violations.push_back({1, q.vertices()[v], std::to_string(q.in_arrows(v).size()) + " incoming arrows"});
  }
  Local L(a);
  for (size_t ar = 0; ar < q.arrow_count(); ++ar) {
    size_t after = 0, before = 0;
    for (size_t b : q.out_arrows(q.target(ar)))
      if (!L.in_I(ar, b)) ++after;
    for (size_t g : q.in_arrows(q.source(ar)))
      if (!L.in_I(g, ar)) ++before;
    if (after > 1)
      r.violations.push_back({2, q.arrow(ar).id, std::to_string(after) + " arrows continue it outside I"});
    if (before > 1)
      r.violations.push_back({2, q.arrow(ar).id, std::to_string(before) + " arrows precede it outside I"});
  }
  r.ok = r.violations.empty();
  return r;
}

const VertexClass& VertexClassification::at(const std::string& v) const {
  for (const auto& c : vertices)
    if (c.vertex == v) return c;
  throw DomainError("unknown vertex '" + v + "'");
}

size_t VertexClassification::exceptional_count() const {
  size_t n = 0;
  for (const auto& s : E) n += s.size();
  return n;
}

VertexSet VertexClassification::exceptional() const {
  VertexSet out;
  for (const auto& s : E) out.insert(s.begin(), s.end());
  return out;
}

VertexSet VertexClassification::ordinary() const {
  VertexSet out;
  for (const auto& s : O) out.insert(s.begin(), s.end());
  return out;
}

VertexClassification classify_vertices(const AlgebraPresentation& a) {
  require_quadratic_monomial(a);
  const Quiver& q = a.quiver();
  Local L(a);
  VertexClassification out;
  out.is_quadratic_string = is_quadratic_string(a).ok;
  for (size_t x = 0; x < q.vertex_count(); ++x) {
    VertexClass vc;
    vc.vertex = q.vertices()[x];
    std::vector<ExceptionalWitness> hits;
    for (int c = 1; c <= 6; ++c)
      if (auto w = match_clause(L, x, c)) hits.push_back(*w);
    if (!hits.empty()) {
      vc.kind = VertexKind::Exceptional;
      vc.witness = hits.front();
      for (size_t k = 1; k < hits.size(); ++k) vc.also.push_back(hits[k].clause);
      if (!vc.also.empty()) {
        std::string d = "vertex " + vc.vertex + " satisfies clauses";
        for (const auto& h : hits) d += " E" + std::to_string(h.clause);
        out.diagnostics.push_back(d + "; classified as E" + std::to_string(vc.witness.clause));
      }
      if (gentle_at(L, x)) out.diagnostics.push_back("vertex " + vc.vertex + " is exceptional yet passes the gentle test");
    } else {
      vc.kind = gentle_at(L, x) ? VertexKind::Gentle : VertexKind::NonGentleNonExceptional;
    }
    out.vertices.push_back(vc);
  }
  for (const auto& vc : out.vertices) {
    if (vc.kind != VertexKind::Exceptional) continue;
    const auto& w = vc.witness;
    int i = w.clause - 1;
    out.E[i].insert(vc.vertex);
    auto src = [&](const std::string& ar) { return q.arrow(ar).source; };
    auto tgt = [&](const std::string& ar) { return q.arrow(ar).target; };
    switch (w.clause) {
      case 3:
        out.O[i].insert({src(w.alpha), src(w.beta)});
        break;
      case 5:
        out.O[i].insert({tgt(w.delta), tgt(w.gamma)});
        break;
      default:
        out.O[i].insert({src(w.alpha), tgt(w.gamma)});
    }
  }
  for (auto& vc : out.vertices)
    for (int i = 0; i < 6; ++i)
      if (out.O[i].count(vc.vertex)) vc.ordinary_in.insert(i + 1);

  out.is_gentle_algebra = std::all_of(out.vertices.begin(), out.vertices.end(),
                                      [](const VertexClass& c) { return c.kind == VertexKind::Gentle; });
  out.is_gqs = out.is_quadratic_string &&
               std::none_of(out.vertices.begin(), out.vertices.end(),
                            [](const VertexClass& c) { return c.kind == VertexKind::NonGentleNonExceptional; });
  out.is_gentle_algebra = out.is_gentle_algebra && out.is_quadratic_string;
  return out;
}

bool is_gentle_vertex(const AlgebraPresentation& a, const std::string& x) {
  require_quadratic_monomial(a);
  auto v = a.quiver().vertex_index(x);
  if (!v) throw DomainError("unknown vertex '" + x + "'");
  return gentle_at(Local(a), *v);
}

bool is_gqs(const AlgebraPresentation& a) {
  if (!a.is_monomial_quadratic()) return false;
  return classify_vertices(a).is_gqs;
}

bool is_gentle_algebra(const AlgebraPresentation& a) {
  if (!a.is_monomial_quadratic()) return false;
  return classify_vertices(a).is_gentle_algebra;
}

VertexSet SpecialReport::special_not_ordinary() const {
  VertexSet out;
  for (const auto& v : special)
    if (!special_ordinary.count(v)) out.insert(v);
  return out;
}

SpecialReport special_vertices(const AlgebraPresentation& a) {
  require_quadratic_monomial(a);
  const Quiver& q = a.quiver();
  Local L(a);
  SpecialReport r;
  VertexSet ordinary = classify_vertices(a).ordinary();
  for (size_t x = 0; x < q.vertex_count(); ++x) {
    const auto& ins = q.in_arrows(x);
    const auto& outs = q.out_arrows(x);
    if (ins.size() > 1 || outs.size() > 1) continue;
    if (ins.size() == 1 && outs.size() == 1 && L.in_I(ins[0], outs[0])) continue;
    r.special.insert(q.vertices()[x]);
    if (ordinary.count(q.vertices()[x])) r.special_ordinary.insert(q.vertices()[x]);
  }
  return r;
}

}  // namespace qsa
