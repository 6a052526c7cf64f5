// Case rewrites removing one exceptional vertex at a time.  Local names follow
// the exceptional witness: a = s(alpha), b = s(beta), x, c = t(gamma),
// e = t(delta).  Cases 5 and 6 run cases 3 and 4 on the opposite algebra.

#include <json.hpp>

#include "qsa/error.hpp"
#include "qsa/transform.hpp"

namespace qsa {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::SinkMutation:
      return "SinkMutation";
    case StepKind::SourceMutation:
      return "SourceMutation";
    case StepKind::CaseRewrite:
      return "CaseRewrite";
    case StepKind::DirectBlowupRecognition:
      return "DirectBlowupRecognition";
  }
  return "?";
}

namespace {

using Pair = std::pair<std::string, std::string>;

std::vector<Pair> quadratic_relations(const AlgebraPresentation& a) {
  std::vector<Pair> out;
  for (const auto& r : a.relations()) out.push_back({r.front().arrows[0], r.front().arrows[1]});
  return out;
}

// Arrow and relation lists under construction.
struct Draft {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<RelationTerm> relations;
  std::vector<std::vector<std::string>> monomials;
  std::set<std::string> taken;

  explicit Draft(const AlgebraPresentation& a) : vertices(a.quiver().vertices()), arrows(a.quiver().arrows()) {
    for (const auto& ar : arrows) taken.insert(ar.id);
  }
  std::string fresh(const std::string& base) {
    std::string s = base;
    while (taken.count(s)) s += "'";
    taken.insert(s);
    return s;
  }
  void drop_arrow(const std::string& id) {
    std::erase_if(arrows, [&](const Arrow& ar) { return ar.id == id; });
  }
  void drop_vertex(const std::string& v) {
    std::erase(vertices, v);
    std::erase_if(arrows, [&](const Arrow& ar) { return ar.source == v || ar.target == v; });
  }
  AlgebraPresentation build(const std::string& name) const {
    Quiver q(vertices, arrows);
    std::vector<RelationTerm> rels = relations;
    for (const auto& m : monomials) rels.push_back(RelationTerm::monomial(make_path(q, m)));
    return AlgebraPresentation(name, q, rels);
  }
};

struct Local {
  std::string a, b, x, c, e;
  std::string alpha, beta, gamma, delta;
};

Local roles(const AlgebraPresentation& A, const std::string& x, const ExceptionalWitness& w) {
  const Quiver& q = A.quiver();
  Local L;
  L.x = x;
  L.alpha = w.alpha;
  L.beta = w.beta;
  L.gamma = w.gamma;
  L.delta = w.delta;
  if (!w.alpha.empty()) L.a = q.arrow(w.alpha).source;
  if (!w.beta.empty()) L.b = q.arrow(w.beta).source;
  if (!w.gamma.empty()) L.c = q.arrow(w.gamma).target;
  if (!w.delta.empty()) L.e = q.arrow(w.delta).target;
  return L;
}

std::map<std::string, std::string> role_map(const Local& L) {
  std::map<std::string, std::string> m;
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) m[k] = v;
  };
  put("a", L.a);
  put("b", L.b);
  put("x", L.x);
  put("c", L.c);
  put("e", L.e);
  put("alpha", L.alpha);
  put("beta", L.beta);
  put("gamma", L.gamma);
  put("delta", L.delta);
  return m;
}

struct Rewrite {
  AlgebraPresentation B;
  std::optional<AlgebraPresentation> omega, gamma;
  std::string dropped, special;
  StepKind kind;
  std::vector<std::string> script;
};

std::string ren(const std::string& id, const std::map<std::string, std::string>& m) {
  auto it = m.find(id);
  return it == m.end() ? id : it->second;
}

// Cases 1 and 2: sink mutation at c, source mutation at a, then delete a.
Rewrite case_one(const AlgebraPresentation& A, const Local& L, const std::string& name) {
  const auto I = quadratic_relations(A);
  auto untouched = [&](const Pair& r) {
    return r.first != L.alpha && r.second != L.alpha && r.first != L.gamma && r.second != L.gamma;
  };
  Rewrite out;
  out.kind = StepKind::CaseRewrite;

  Draft om(A);
  for (const auto& id : {L.alpha, L.beta, L.gamma}) om.drop_arrow(id);
  std::string as = om.fresh(L.alpha + "*"), bs = om.fresh(L.beta + "*"), gs = om.fresh(L.gamma + "*");
  om.arrows.push_back({as, L.a, L.c});
  om.arrows.push_back({bs, L.b, L.c});
  om.arrows.push_back({gs, L.c, L.x});
  for (const auto& r : I)
    if (untouched(r)) om.monomials.push_back({ren(r.first, {{L.beta, bs}}), ren(r.second, {{L.beta, bs}})});
  om.monomials.push_back({as, gs, L.delta});
  out.omega = om.build("Omega(" + name + ")");

  Draft gm(A);
  for (const auto& id : {L.alpha, L.beta, L.gamma, L.delta}) gm.drop_arrow(id);
  std::string bt = gm.fresh(L.beta + "~"), at = gm.fresh(L.alpha + "~"), gt = gm.fresh(L.gamma + "~"),
              lt = gm.fresh("lambda" + L.x + "~"), dt = gm.fresh(L.delta + "~");
  gm.arrows.push_back({bt, L.b, L.c});
  gm.arrows.push_back({at, L.c, L.a});
  gm.arrows.push_back({gt, L.c, L.x});
  gm.arrows.push_back({lt, L.a, L.e});
  gm.arrows.push_back({dt, L.x, L.e});
  std::map<std::string, std::string> tilde{{L.beta, bt}, {L.delta, dt}};
  std::vector<std::vector<std::string>> kept;
  for (const auto& r : I) {
    if (!untouched(r)) continue;
    kept.push_back({ren(r.first, tilde), ren(r.second, tilde)});
    if (r.first == L.delta) gm.monomials.push_back({lt, ren(r.second, tilde)});
  }
  gm.monomials.insert(gm.monomials.end(), kept.begin(), kept.end());
  {
    Quiver q(gm.vertices, gm.arrows);
    RelationTerm bin;
    bin.terms.push_back({Rational(1), make_path(q, {at, lt})});
    bin.terms.push_back({Rational(-1), make_path(q, {gt, dt})});
    gm.relations.push_back(std::move(bin));
  }
  out.gamma = gm.build("Gamma(" + name + ")");

  Draft bd(A);
  for (const auto& id : {L.beta, L.gamma, L.delta}) bd.drop_arrow(id);
  bd.taken = gm.taken;
  bd.drop_vertex(L.a);
  bd.arrows.push_back({bt, L.b, L.c});
  bd.arrows.push_back({gt, L.c, L.x});
  bd.arrows.push_back({dt, L.x, L.e});
  bd.monomials = kept;
  out.B = bd.build(name);
  out.dropped = L.a;
  out.special = L.x;
  out.script = {"sink mutation at " + L.c, "source mutation at " + L.a,
                "delete " + L.a + "; the result blown up at " + L.x + " is the mutated algebra"};
  return out;
}

// Case 3: A is B blown up at a, with b playing the role of a-.
Rewrite case_three(const AlgebraPresentation& A, const Local& L, const std::string& name) {
  Draft bd(A);
  bd.drop_vertex(L.b);
  for (const auto& r : quadratic_relations(A))
    if (r.first != L.beta && r.second != L.beta) bd.monomials.push_back({r.first, r.second});
  Rewrite out;
  out.kind = StepKind::DirectBlowupRecognition;
  out.B = bd.build(name);
  out.dropped = L.b;
  out.special = L.a;
  out.script = {"delete " + L.b + "; the input is the result blown up at " + L.a};
  return out;
}

// Case 4: sink mutation at c, source mutation at a, then delete a.
Rewrite case_four(const AlgebraPresentation& A, const Local& L, const std::string& name) {
  const auto I = quadratic_relations(A);
  Rewrite out;
  out.kind = StepKind::CaseRewrite;
  Draft om(A);
  for (const auto& id : {L.alpha, L.beta, L.gamma}) om.drop_arrow(id);
  std::string gs = om.fresh(L.gamma + "*"), bs = om.fresh(L.beta + "*"), as = om.fresh(L.alpha + "*");
  om.arrows.push_back({gs, L.c, L.x});
  om.arrows.push_back({bs, L.b, L.c});
  std::vector<std::vector<std::string>> kept;
  for (const auto& r : I)
    if (r.first != L.alpha && r.second != L.alpha && r.first != L.gamma && r.second != L.gamma)
      kept.push_back({ren(r.first, {{L.beta, bs}}), ren(r.second, {{L.beta, bs}})});
  om.monomials = kept;

  Draft gm = om;
  std::string at = gm.fresh(L.alpha + "~");
  gm.arrows.push_back({at, L.c, L.a});
  om.arrows.push_back({as, L.a, L.c});
  out.omega = om.build("Omega(" + name + ")");
  out.gamma = gm.build("Gamma(" + name + ")");

  Draft bd = om;
  bd.drop_vertex(L.a);
  out.B = bd.build(name);
  out.dropped = L.a;
  out.special = L.x;
  out.script = {"sink mutation at " + L.c, "source mutation at " + L.a,
                "delete " + L.a + "; the result blown up at " + L.x + " is the mutated algebra"};
  return out;
}

VertexSet excluded(int clause, const Local& L) {
  if (clause == 3) return {L.a, L.b, L.x};
  return {L.a, L.x, L.c};
}

std::string join_set(const VertexSet& s) { return "{" + join({s.begin(), s.end()}, ", ") + "}"; }

void require_special(const AlgebraPresentation& a, const VertexSet& D, const std::string& what) {
  SpecialReport sr = special_vertices(a);
  VertexSet ok = sr.special_not_ordinary();
  for (const auto& d : D) {
    if (!a.quiver().has_vertex(d)) throw DomainError(what + ": " + d + " is not a vertex");
    if (!ok.count(d)) throw DomainError(what + ": " + d + " is not special and not ordinary");
  }
}

VertexClassification classify_gqs(const AlgebraPresentation& a) {
  VertexClassification vc;
  try {
    vc = classify_vertices(a);
  } catch (const DomainError& e) {
    throw DomainError(std::string("input is not gqs: ") + e.what());
  }
  if (!vc.is_gqs) throw DomainError("input is not gqs");
  return vc;
}

}  // namespace

ReductionOutcome reduce_step(const AlgebraPresentation& a, const VertexSet& D, const std::optional<std::string>& vertex) {
  VertexClassification vc = classify_gqs(a);
  VertexSet ex = vc.exceptional();
  if (ex.empty()) throw DomainError("no exceptional vertex");
  std::string x = vertex ? *vertex : *ex.begin();
  if (!ex.count(x)) throw DomainError("vertex " + x + " is not exceptional");
  require_special(a, D, "D");

  const ExceptionalWitness& w = vc.at(x).witness;
  const int clause = w.clause;
  const bool dual = clause == 5 || clause == 6;
  const AlgebraPresentation work = dual ? opposite(a) : a;
  ExceptionalWitness ww = w;
  if (dual) {
    VertexClassification oc = classify_vertices(work);
    ww = oc.at(x).witness;
    if (ww.clause != clause - 2)
      throw std::logic_error("dual of clause " + std::to_string(clause) + " at " + x + " is not clause " +
                             std::to_string(clause - 2));
  }
  Local L = roles(work, x, ww);
  VertexSet bad;
  for (const auto& v : excluded(ww.clause, L))
    if (D.count(v)) bad.insert(v);
  if (!bad.empty()) throw DomainError("D meets the vertices rewritten at " + x + ": " + join_set(bad));

  const std::string name = a.name() + ".r" + x;
  Rewrite rw;
  switch (ww.clause) {
    case 1:
    case 2:
      rw = case_one(work, L, name);
      break;
    case 3:
      rw = case_three(work, L, name);
      break;
    case 4:
      rw = case_four(work, L, name);
      break;
    default:
      throw std::logic_error("unexpected clause");
  }
  if (dual) {
    rw.B = opposite(rw.B).renamed(name);
    if (rw.omega) rw.omega = opposite(*rw.omega).renamed(rw.omega->name());
    if (rw.gamma) rw.gamma = opposite(*rw.gamma).renamed(rw.gamma->name());
    for (auto& s : rw.script) s = "dually, " + s;
  }

  ReductionStep st;
  st.kind = rw.kind;
  st.case_number = clause;
  st.vertex = x;
  st.local = role_map(L);
  st.dropped = rw.dropped;
  st.special = rw.special;
  st.script = rw.script;
  st.before_name = a.name();
  st.after_name = name;
  st.before = a;
  st.after = rw.B;
  st.omega = rw.omega;
  st.gamma = rw.gamma;
  st.D_before = D;
  st.S_after = D;
  st.S_after.insert(rw.special);
  st.exceptional_before = ex.size();

  VertexClassification after = classify_vertices(rw.B);
  st.exceptional_after = after.exceptional_count();
  if (!after.is_gqs || st.exceptional_after + 1 != st.exceptional_before)
    throw std::logic_error("rewrite at " + x + " did not remove exactly one exceptional vertex");
  require_special(rw.B, st.S_after, "S after rewrite at " + x);
  return {rw.B, st.S_after, st};
}

ReductionCertificate reduce_to_skewed_gentle(const AlgebraPresentation& a) {
  classify_gqs(a);
  ReductionCertificate c;
  c.input = a;
  c.B = a;
  while (classify_vertices(c.B).exceptional_count() > 0) {
    ReductionOutcome o = reduce_step(c.B, c.S);
    c.B = o.B;
    c.S = o.S;
    c.steps.push_back(std::move(o.step));
  }
  if (!is_gentle_algebra(c.B)) throw std::logic_error("reduction ended in a non-gentle algebra");
  return c;
}

namespace {

using nlohmann::json;

json set_json(const VertexSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

VertexSet json_set(const json& j) {
  VertexSet s;
  for (const auto& v : j) s.insert(v.get<std::string>());
  return s;
}

}  // namespace

std::string certificate_to_json(const ReductionCertificate& c, int indent) {
  json doc;
  doc["input"] = serialize_presentation(c.input);
  doc["steps"] = json::array();
  for (const auto& s : c.steps) {
    json j;
    j["kind"] = to_string(s.kind);
    j["case"] = s.case_number;
    j["vertex"] = s.vertex;
    j["local"] = s.local;
    j["dropped"] = s.dropped;
    j["special"] = s.special;
    j["script"] = s.script;
    j["before_name"] = s.before_name;
    j["after_name"] = s.after_name;
    j["before"] = serialize_presentation(s.before);
    j["after"] = serialize_presentation(s.after);
    j["omega"] = s.omega ? json(serialize_presentation(*s.omega)) : json(nullptr);
    j["gamma"] = s.gamma ? json(serialize_presentation(*s.gamma)) : json(nullptr);
    j["D_before"] = set_json(s.D_before);
    j["S_after"] = set_json(s.S_after);
    j["exceptional_before"] = s.exceptional_before;
    j["exceptional_after"] = s.exceptional_after;
    doc["steps"].push_back(std::move(j));
  }
  doc["B"] = serialize_presentation(c.B);
  doc["S"] = set_json(c.S);
  return doc.dump(indent);
}

ReductionCertificate replay_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    ReductionCertificate c;
    c.input = parse_presentation(doc.at("input").get<std::string>());
    c.B = c.input;
    size_t k = 0;
    for (const auto& j : doc.at("steps")) {
      ++k;
      ReductionOutcome o = reduce_step(c.B, c.S, j.at("vertex").get<std::string>());
      auto where = "step " + std::to_string(k);
      if (to_string(o.step.kind) != j.at("kind").get<std::string>() || o.step.case_number != j.at("case").get<int>())
        throw DomainError(where + ": recorded move does not match");
      if (serialize_presentation(o.B) != j.at("after").get<std::string>())
        throw DomainError(where + ": replayed presentation differs from the recording");
      if (o.S != json_set(j.at("S_after"))) throw DomainError(where + ": replayed special set differs");
      c.B = o.B;
      c.S = o.S;
      c.steps.push_back(std::move(o.step));
    }
    if (serialize_presentation(c.B) != doc.at("B").get<std::string>() || c.S != json_set(doc.at("S")))
      throw DomainError("replayed final algebra differs from the recording");
    return c;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace qsa
