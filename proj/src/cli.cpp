#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qsa/decide.hpp"
#include "qsa/error.hpp"

namespace qsa {

namespace {

using nlohmann::json;

const char* const kSynopsis =
    "usage: qsa <command> FILE [options] [--json]\n"
    "commands:\n"
    "  check FILE                          validate a presentation\n"
    "  classify FILE                       vertex kinds, E_i and O_i\n"
    "  decide FILE [--radius r] [--max-size n]\n"
    "  blowup FILE --vertices v1,v2,...\n"
    "  mutate FILE --vertex v --sign minus|plus\n"
    "  reduce FILE [--certificate OUT]\n"
    "  euler FILE [--eval x1,x2,...]\n"
    "  cover FILE --base v --radius r [--dot OUT]\n"
    "  witness FILE [--radius r] [--max-size n] [--dot OUT]\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraPresentation read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

json num(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(to_string(q));
}

json vec_json(const Vec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(num(x));
  return j;
}

json matrix_json(const std::vector<Vec>& m) {
  json j = json::array();
  for (const auto& r : m) j.push_back(vec_json(r));
  return j;
}

json set_json(const VertexSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

std::string set_text(const VertexSet& s) { return "{" + join({s.begin(), s.end()}, ", ") + "}"; }

std::string vec_text(const Vec& v) {
  std::vector<std::string> p;
  for (const auto& x : v) p.push_back(to_string(x));
  return "(" + join(p, ", ") + ")";
}

std::string dot(const AlgebraPresentation& a) {
  std::ostringstream o;
  o << "digraph \"" << a.name() << "\" {\n";
  for (const auto& v : a.quiver().vertices()) o << "  \"" << v << "\";\n";
  for (const auto& ar : a.quiver().arrows())
    o << "  \"" << ar.source << "\" -> \"" << ar.target << "\" [label=\"" << ar.id << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string kind_text(const VertexClass& c) {
  switch (c.kind) {
    case VertexKind::Gentle:
      return "gentle";
    case VertexKind::Exceptional: {
      std::vector<std::string> arrows;
      for (const auto& s : {c.witness.alpha, c.witness.beta, c.witness.gamma, c.witness.delta})
        if (!s.empty()) arrows.push_back(s);
      return "E" + std::to_string(c.witness.clause) + " (" + join(arrows, ", ") + ")";
    }
    default:
      return "neither gentle nor exceptional";
  }
}

json witness_json(const WildWitness& w) {
  return json{{"basepoint", w.basepoint},
              {"radius", w.radius},
              {"cover_vertices", w.cover_vertices},
              {"type", w.type.to_string()},
              {"note", w.note},
              {"presentation", serialize_presentation(w.induced)}};
}

json pattern_json(const LocalPatternReport& p) {
  return json{{"pattern", p.pattern},
              {"mirrored", p.mirrored},
              {"arrows", p.arrows},
              {"vertices", p.vertices},
              {"description", p.description}};
}

json qs_json(const QsReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"condition", x.condition}, {"where", x.where}, {"detail", x.detail}});
  return json{{"ok", r.ok}, {"violations", v}};
}

Vec parse_vector(const std::string& s, size_t n) {
  Vec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(parse_rational(tok));
    } catch (const DomainError&) {
      throw UsageError("--eval expects comma-separated numbers, got '" + tok + "'");
    }
  }
  if (v.size() != n) throw UsageError("--eval needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return v;
}

VertexSet parse_vertex_list(const std::string& s) {
  VertexSet out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(tok);
  return out;
}

// ---- subcommands ---------------------------------------------------------

void cmd_check(const AlgebraPresentation& a, bool as_json, std::ostream& out) {
  ValidationReport r = validate(a);
  QsReport qs = is_quadratic_string(a);
  if (as_json) {
    json j{{"name", a.name()},
           {"vertices", a.quiver().vertex_count()},
           {"arrows", a.quiver().arrow_count()},
           {"relations", a.relations().size()},
           {"connected", r.connected},
           {"components", r.components},
           {"monomial", r.monomial},
           {"monomial_quadratic", r.monomial_quadratic},
           {"acyclic", r.acyclic},
           {"admissible", r.admissible},
           {"bound", r.bound ? json(*r.bound) : json(nullptr)},
           {"admissibility_note", r.admissibility_note},
           {"loop_free", r.loop_free},
           {"looped", r.looped},
           {"quadratic_string", qs_json(qs)}};
    out << j.dump(2) << "\n";
    return;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << a.name() << ": " << a.quiver().vertex_count() << " vertices, " << a.quiver().arrow_count() << " arrows, "
      << a.relations().size() << " relations\n";
  out << "connected: " << yn(r.connected) << " (" << r.components << " component" << (r.components == 1 ? "" : "s")
      << ")\n";
  out << "monomial: " << yn(r.monomial) << ", quadratic monomial: " << yn(r.monomial_quadratic) << "\n";
  out << "acyclic: " << yn(r.acyclic) << "\n";
  out << "admissible: " << yn(r.admissible);
  if (r.bound) out << " (paths of length >= " << *r.bound << " vanish)";
  out << "\n";
  if (!r.admissibility_note.empty()) out << "  " << r.admissibility_note << "\n";
  out << "loop-free vertices: " << join(r.loop_free, " ") << "\n";
  if (!r.looped.empty()) out << "vertices with loops: " << join(r.looped, " ") << "\n";
  out << "quadratic string: " << yn(qs.ok) << "\n";
  for (const auto& v : qs.violations) out << "  condition " << v.condition << " at " << v.where << ": " << v.detail << "\n";
}

void cmd_classify(const AlgebraPresentation& a, bool as_json, std::ostream& out) {
  VertexClassification vc = classify_vertices(a);
  if (as_json) {
    json vs = json::array();
    for (const auto& c : vc.vertices) {
      json v{{"vertex", c.vertex}};
      switch (c.kind) {
        case VertexKind::Gentle:
          v["kind"] = "gentle";
          break;
        case VertexKind::Exceptional:
          v["kind"] = "exceptional";
          v["clause"] = c.witness.clause;
          v["witness"] = {{"alpha", c.witness.alpha}, {"beta", c.witness.beta}, {"gamma", c.witness.gamma}, {"delta", c.witness.delta}};
          if (!c.also.empty()) v["also"] = c.also;
          break;
        default:
          v["kind"] = "other";
      }
      v["ordinary_in"] = std::vector<int>(c.ordinary_in.begin(), c.ordinary_in.end());
      vs.push_back(v);
    }
    json E, O;
    for (int i = 0; i < 6; ++i) {
      E[std::to_string(i + 1)] = set_json(vc.E[i]);
      O[std::to_string(i + 1)] = set_json(vc.O[i]);
    }
    json j{{"vertices", vs},
           {"E", E},
           {"O", O},
           {"flags", {{"quadratic_string", vc.is_quadratic_string}, {"gentle", vc.is_gentle_algebra}, {"gqs", vc.is_gqs}}},
           {"diagnostics", vc.diagnostics}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& c : vc.vertices) out << c.vertex << ": " << kind_text(c) << "\n";
  for (int i = 0; i < 6; ++i)
    if (!vc.E[i].empty() || !vc.O[i].empty())
      out << "E" << i + 1 << " = " << set_text(vc.E[i]) << "  O" << i + 1 << " = " << set_text(vc.O[i]) << "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "quadratic string: " << yn(vc.is_quadratic_string) << "  gentle: " << yn(vc.is_gentle_algebra)
      << "  gqs: " << yn(vc.is_gqs) << "\n";
  for (const auto& d : vc.diagnostics) out << "note: " << d << "\n";
}

json certificate_doc(const ReductionCertificate& c) { return json::parse(certificate_to_json(c, -1)); }

void cmd_decide(const AlgebraPresentation& a, const DecideOptions& o, bool as_json, std::ostream& out) {
  Verdict v = decide_derived_type(a, o);
  if (as_json) {
    json j{{"tag", to_string(v.tag)}, {"branch", to_string(v.branch)}, {"summary", v.summary()}};
    json ev;
    if (v.qs_report) ev["quadratic_string"] = qs_json(*v.qs_report);
    if (v.euler) {
      ev["cartan"] = matrix_json(v.euler->C);
      ev["euler"] = matrix_json(v.euler->E);
      ev["form"] = form_polynomial(*v.euler);
    }
    if (v.form) {
      ev["nonnegative"] = v.form->nonnegative;
      if (v.form->witness) {
        ev["negative_vector"] = vec_json(*v.form->witness);
        ev["negative_value"] = num(v.form->witness_value);
      }
    }
    if (v.certificate) ev["certificate"] = certificate_doc(*v.certificate);
    if (v.violating_vertex) ev["violating_vertex"] = *v.violating_vertex;
    if (v.pattern) ev["local_pattern"] = pattern_json(*v.pattern);
    if (v.branch == Branch::GqsCycles || v.branch == Branch::CoverWitness) {
      ev["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
      ev["witness_bounds"] = {{"radius", o.witness_radius}, {"max_size", o.witness_size},
                              {"budget_exhausted", v.witness_budget_exhausted}};
    }
    j["evidence"] = ev;
    out << j.dump(2) << "\n";
    return;
  }
  out << v.summary() << "\n";
  if (v.pattern) out << "local configuration: " << v.pattern->description << "\n";
  if (v.witness) out << "witness: " << v.witness->note << "\n";
  else if (v.tag != VerdictTag::Tame && (v.branch == Branch::GqsCycles || v.branch == Branch::CoverWitness))
    out << "witness: none within bounds (radius " << o.witness_radius << ", size " << o.witness_size << ")\n";
}

void cmd_blowup(const AlgebraPresentation& a, const std::string& vertices, bool as_json, std::ostream& out) {
  AlgebraPresentation b = blow_up(a, parse_vertex_list(vertices));
  if (as_json)
    out << json{{"presentation", serialize_presentation(b)}}.dump(2) << "\n";
  else
    out << serialize_presentation(b);
}

void cmd_mutate(const AlgebraPresentation& a, const std::string& x, const std::string& sign, bool as_json,
                std::ostream& out) {
  if (sign != "minus" && sign != "plus") throw UsageError("--sign must be minus or plus");
  AlgebraPresentation m = mutate_at(a, x, sign == "minus" ? MutationSign::Minus : MutationSign::Plus);
  if (as_json)
    out << json{{"presentation", serialize_presentation(m)}}.dump(2) << "\n";
  else
    out << serialize_presentation(m);
}

void cmd_reduce(const AlgebraPresentation& a, const std::string& cert_out, bool as_json, std::ostream& out) {
  ReductionCertificate c = reduce_to_skewed_gentle(a);
  std::string doc = certificate_to_json(c);
  if (!cert_out.empty()) write_file(cert_out, doc + "\n");
  if (as_json) {
    out << doc << "\n";
    return;
  }
  size_t k = 0;
  for (const auto& s : c.steps) {
    out << "step " << ++k << ": case " << s.case_number << " at " << s.vertex << " (" << to_string(s.kind)
        << "), exceptional " << s.exceptional_before << " -> " << s.exceptional_after << ", S = " << set_text(s.S_after)
        << "\n";
    for (const auto& line : s.script) out << "  " << line << "\n";
  }
  out << "gentle algebra B:\n" << serialize_presentation(c.B);
  out << "special vertices S = " << set_text(c.S) << "\n";
}

void cmd_euler(const AlgebraPresentation& a, const std::string& eval, bool as_json, std::ostream& out) {
  EulerData e = euler_matrix(cartan_matrix(a));
  NonnegativityReport r = is_nonnegative_form(e);
  std::optional<Vec> x;
  if (!eval.empty()) x = parse_vector(eval, e.vertices.size());
  if (as_json) {
    json j{{"vertices", e.vertices},
           {"cartan", matrix_json(e.C)},
           {"euler", matrix_json(e.E)},
           {"form", form_polynomial(e)},
           {"nonnegative", r.nonnegative},
           {"char_poly", vec_json(r.char_poly)}};
    if (r.witness) {
      j["negative_vector"] = vec_json(*r.witness);
      j["negative_value"] = num(r.witness_value);
    }
    if (x) j["eval"] = {{"vector", vec_json(*x)}, {"value", num(euler_eval(e, *x))}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "dimension vectors are indexed by vertices " << join(e.vertices, " ") << "\n";
  auto print = [&](const char* title, const std::vector<Vec>& m) {
    out << title << ":\n";
    for (const auto& row : m) {
      std::vector<std::string> p;
      for (const auto& v : row) p.push_back(to_string(v));
      out << "  " << join(p, " ") << "\n";
    }
  };
  print("C", e.C);
  print("E", e.E);
  out << "chi(x) = " << form_polynomial(e) << "\n";
  out << "non-negative: " << (r.nonnegative ? "yes" : "no") << "\n";
  if (r.witness) out << "negative at " << vec_text(*r.witness) << " with value " << to_string(r.witness_value) << "\n";
  if (x) out << "chi" << vec_text(*x) << " = " << to_string(euler_eval(e, *x)) << "\n";
}

void cmd_cover(const AlgebraPresentation& a, const std::string& base, size_t radius, const std::string& dot_out,
               bool as_json, std::ostream& out) {
  CoverBall b = truncated_cover(a, base, radius);
  if (!dot_out.empty()) write_file(dot_out, dot(b.cover));
  if (as_json) {
    out << json{{"basepoint", b.basepoint},
                {"radius", b.radius},
                {"presentation", serialize_presentation(b.cover)},
                {"vertex_projection", b.vertex_projection},
                {"arrow_projection", b.arrow_projection}}
               .dump(2)
        << "\n";
    return;
  }
  out << serialize_presentation(b.cover);
}

void cmd_witness(const AlgebraPresentation& a, size_t radius, size_t size, const std::string& dot_out, bool as_json,
                 std::ostream& out) {
  WitnessSearch s = find_wild_witness(a, radius, size);
  if (s.witness && !dot_out.empty()) write_file(dot_out, dot(s.witness->induced));
  if (as_json) {
    out << json{{"witness", s.witness ? witness_json(*s.witness) : json(nullptr)},
                {"radius", radius},
                {"max_size", size},
                {"visited", s.visited},
                {"budget_exhausted", s.budget_exhausted}}
               .dump(2)
        << "\n";
    return;
  }
  if (!s.witness) {
    out << "none within bounds" << (s.budget_exhausted ? " (search budget exhausted)" : "") << "\n";
    return;
  }
  out << s.witness->note << "\n";
  out << "cover vertices: " << join(s.witness->cover_vertices, " ") << "\n";
  out << serialize_presentation(s.witness->induced);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived representation type of quadratic string algebras", "qsa"};
  app.require_subcommand(1);
  std::string file, vertices, vertex, sign, cert_out, eval, base, dot_out;
  bool as_json = false;
  size_t radius = 0;
  std::optional<size_t> opt_radius, opt_size;

  auto sub = [&](const char* name, const char* what) {
    CLI::App* s = app.add_subcommand(name, what);
    s->add_option("FILE", file, "presentation file")->required();
    s->add_flag("--json", as_json, "structured output");
    return s;
  };
  sub("check", "validate a presentation");
  sub("classify", "vertex kinds and exceptional classes");
  CLI::App* decide = sub("decide", "derived tame or wild");
  decide->add_option("--radius", opt_radius, "witness search radius");
  decide->add_option("--max-size", opt_size, "largest witness tried");
  CLI::App* blow = sub("blowup", "blow up at a vertex set");
  blow->add_option("--vertices", vertices, "comma-separated vertices")->required();
  CLI::App* mut = sub("mutate", "sink or source mutation");
  mut->add_option("--vertex", vertex, "vertex")->required();
  mut->add_option("--sign", sign, "minus (sink) or plus (source)")->required();
  CLI::App* red = sub("reduce", "reduce a gqs algebra to a gentle one");
  red->add_option("--certificate", cert_out, "write the certificate here");
  CLI::App* eul = sub("euler", "Cartan matrix and Euler form");
  eul->add_option("--eval", eval, "comma-separated dimension vector");
  CLI::App* cov = sub("cover", "ball in the universal cover");
  cov->add_option("--base", base, "basepoint")->required();
  cov->add_option("--radius", radius, "radius")->required();
  cov->add_option("--dot", dot_out, "write DOT here");
  CLI::App* wit = sub("witness", "search the cover for a wild subcategory");
  wit->add_option("--radius", opt_radius, "radius");
  wit->add_option("--max-size", opt_size, "largest witness tried");
  wit->add_option("--dot", dot_out, "write DOT here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qsa: " << e.what() << "\n" << kSynopsis;
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    AlgebraPresentation a = read_file(file);
    if (cmd == "check") {
      cmd_check(a, as_json, out);
    } else if (cmd == "classify") {
      cmd_classify(a, as_json, out);
    } else if (cmd == "decide") {
      DecideOptions o = decide_options_from_env();
      if (opt_radius) o.witness_radius = *opt_radius;
      if (opt_size) o.witness_size = *opt_size;
      cmd_decide(a, o, as_json, out);
    } else if (cmd == "blowup") {
      cmd_blowup(a, vertices, as_json, out);
    } else if (cmd == "mutate") {
      cmd_mutate(a, vertex, sign, as_json, out);
    } else if (cmd == "reduce") {
      cmd_reduce(a, cert_out, as_json, out);
    } else if (cmd == "euler") {
      cmd_euler(a, eval, as_json, out);
    } else if (cmd == "cover") {
      cmd_cover(a, base, radius, dot_out, as_json, out);
    } else if (cmd == "witness") {
      DecideOptions o = decide_options_from_env();
      cmd_witness(a, opt_radius.value_or(o.witness_radius), opt_size.value_or(o.witness_size), dot_out, as_json, out);
    }
  } catch (const UsageError& e) {
    err << "qsa: " << e.what() << "\n" << kSynopsis;
    return 2;
  } catch (const DomainError& e) {
    err << "qsa: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qsa
