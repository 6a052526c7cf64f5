#include "qsa/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qsa/error.hpp"
#include "qsa/ident.hpp"

namespace qsa {

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  sort_idents(vertices_);
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_valid_ident(vertices_[i])) throw DomainError("invalid vertex id '" + vertices_[i] + "'");
    if (i && vertices_[i] == vertices_[i - 1]) throw DomainError("duplicate vertex '" + vertices_[i] + "'");
  }
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return compare_ident(a.id, b.id) < 0; });
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!is_valid_ident(a.id)) throw DomainError("invalid arrow id '" + a.id + "'");
    if (i && a.id == arrows_[i - 1].id) throw DomainError("duplicate arrow '" + a.id + "'");
    auto s = vertex_index(a.source), t = vertex_index(a.target);
    if (!s) throw DomainError("arrow '" + a.id + "' has unknown source '" + a.source + "'");
    if (!t) throw DomainError("arrow '" + a.id + "' has unknown target '" + a.target + "'");
    src_.push_back(*s);
    tgt_.push_back(*t);
    out_[*s].push_back(i);
    in_[*t].push_back(i);
  }
}

std::optional<size_t> Quiver::vertex_index(std::string_view v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const std::string& a, std::string_view b) { return compare_ident(a, b) < 0; });
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<size_t>(it - vertices_.begin());
}

std::optional<size_t> Quiver::arrow_index(std::string_view a) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a,
                             [](const Arrow& x, std::string_view b) { return compare_ident(x.id, b) < 0; });
  if (it == arrows_.end() || it->id != a) return std::nullopt;
  return static_cast<size_t>(it - arrows_.begin());
}

const Arrow& Quiver::arrow(std::string_view id) const {
  auto i = arrow_index(id);
  if (!i) throw DomainError("unknown arrow '" + std::string(id) + "'");
  return arrows_[*i];
}

// ---------------------------------------------------------------- paths and walks

std::string Path::to_string() const {
  if (arrows.empty()) return "e_" + source;
  return join(arrows, " ");
}

bool path_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  for (size_t i = 0; i < a.arrows.size(); ++i) {
    int c = compare_ident(a.arrows[i], b.arrows[i]);
    if (c) return c < 0;
  }
  int c = compare_ident(a.source, b.source);
  if (c) return c < 0;
  return compare_ident(a.target, b.target) < 0;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrows) {
  if (arrows.empty()) throw DomainError("empty arrow sequence");
  Path p;
  for (size_t i = 0; i < arrows.size(); ++i) {
    auto idx = q.arrow_index(arrows[i]);
    if (!idx) throw DomainError("unknown arrow '" + arrows[i] + "'");
    const Arrow& a = q.arrow(*idx);
    if (i == 0) {
      p.source = a.source;
    } else if (a.source != p.target) {
      throw DomainError("arrows '" + arrows[i - 1] + "' and '" + arrows[i] + "' do not compose");
    }
    p.target = a.target;
    p.arrows.push_back(arrows[i]);
  }
  return p;
}

bool contains_subpath(const std::vector<std::string>& path, const std::vector<std::string>& sub) {
  if (sub.empty() || sub.size() > path.size()) return false;
  return std::search(path.begin(), path.end(), sub.begin(), sub.end()) != path.end();
}

bool Walk::is_reduced() const {
  for (size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i].arrow == steps[i + 1].arrow && steps[i].exponent == -steps[i + 1].exponent) return false;
  return true;
}

size_t RelationTerm::max_length() const {
  size_t m = 0;
  for (const auto& [c, p] : terms) m = std::max(m, p.length());
  return m;
}

// ---------------------------------------------------------------- AlgebraPresentation

namespace {

bool term_list_less(const RelationTerm& a, const RelationTerm& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    const Path& p = a.terms[i].second;
    const Path& q = b.terms[i].second;
    if (path_less(p, q)) return true;
    if (path_less(q, p)) return false;
    if (a.terms[i].first != b.terms[i].first) return a.terms[i].first < b.terms[i].first;
  }
  return a.terms.size() < b.terms.size();
}

void check_path(const Quiver& q, const Path& p) {
  Path rebuilt = make_path(q, p.arrows);
  if (rebuilt.source != p.source || rebuilt.target != p.target)
    throw DomainError("path '" + p.to_string() + "' has inconsistent endpoints");
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(std::string name, Quiver quiver, std::vector<RelationTerm> relations)
    : name_(std::move(name)), quiver_(std::move(quiver)) {
  for (auto& rel : relations) {
    if (rel.terms.empty()) throw DomainError("empty relation");
    for (const auto& [c, p] : rel.terms) {
      if (c == 0) throw DomainError("zero coefficient in relation");
      if (p.length() < 2) throw DomainError("relation path '" + p.to_string() + "' has length < 2");
      check_path(quiver_, p);
      if (p.source != rel.source() || p.target != rel.target())
        throw DomainError("relation paths '" + rel.front().to_string() + "' and '" + p.to_string() +
                          "' are not parallel");
    }
    std::sort(rel.terms.begin(), rel.terms.end(),
              [](const auto& x, const auto& y) { return path_less(x.second, y.second); });
    for (size_t i = 1; i < rel.terms.size(); ++i)
      if (rel.terms[i].second == rel.terms[i - 1].second)
        throw DomainError("repeated path '" + rel.terms[i].second.to_string() + "' in one relation");
    Rational lead = rel.terms.front().first;
    for (auto& t : rel.terms) t.first /= lead;
    relations_.push_back(std::move(rel));
  }
  std::sort(relations_.begin(), relations_.end(), term_list_less);
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
}

bool AlgebraPresentation::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const auto& r) { return r.is_monomial(); });
}

bool AlgebraPresentation::is_monomial_quadratic() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const auto& r) { return r.is_monomial() && r.front().length() == 2; });
}

AlgebraPresentation AlgebraPresentation::renamed(std::string name) const {
  AlgebraPresentation out = *this;
  out.name_ = std::move(name);
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits on whitespace and makes parentheses separate tokens.
std::vector<std::string> tokenize_relation(const std::string& s) {
  std::string spaced;
  for (char c : s) {
    if (c == '(' || c == ')') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  return split_ws(spaced);
}

bool looks_like_coefficient(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/')) return false;
  return std::isdigit(static_cast<unsigned char>(t[0]));
}

struct RawRelation {
  int line;
  std::vector<std::pair<Rational, std::vector<std::string>>> terms;
};

RawRelation parse_relation_line(const std::string& body, int line) {
  RawRelation raw{line, {}};
  std::vector<std::string> toks = tokenize_relation(body);
  bool combination = std::find(toks.begin(), toks.end(), "(") != toks.end();
  if (!combination) {
    raw.terms.push_back({Rational(1), toks});
    return raw;
  }
  size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    Rational sign = 1;
    if (toks[i] == "+" || toks[i] == "-") {
      sign = toks[i] == "-" ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError(line, "expected '+' or '-' before '" + toks[i] + "'");
    }
    Rational coef = 1;
    if (i < toks.size() && looks_like_coefficient(toks[i])) {
      try {
        coef = parse_rational(toks[i]);
      } catch (const DomainError& e) {
        throw ParseError(line, e.what());
      }
      ++i;
    }
    if (i >= toks.size() || toks[i] != "(") throw ParseError(line, "expected '(' to open a path");
    ++i;
    std::vector<std::string> arrows;
    while (i < toks.size() && toks[i] != ")") {
      if (toks[i] == "(") throw ParseError(line, "nested parenthesis");
      arrows.push_back(toks[i++]);
    }
    if (i >= toks.size()) throw ParseError(line, "unterminated path");
    ++i;
    if (arrows.empty()) throw ParseError(line, "empty path");
    raw.terms.push_back({sign * coef, std::move(arrows)});
    first = false;
  }
  return raw;
}

}  // namespace

AlgebraPresentation parse_presentation(std::string_view text) {
  std::string name;
  bool have_header = false, in_relations = false;
  std::vector<std::pair<int, std::string>> vertex_tokens;
  struct RawArrow {
    int line;
    Arrow arrow;
  };
  std::vector<RawArrow> raw_arrows;
  std::vector<RawRelation> raw_relations;

  std::istringstream in{std::string(text)};
  std::string raw_line;
  int line = 0;
  while (std::getline(in, raw_line)) {
    ++line;
    std::string content = raw_line.substr(0, raw_line.find('#'));
    std::string s = trim(content);
    if (s.empty()) continue;
    if (!have_header) {
      if (s.rfind("quiver", 0) != 0 || (s.size() > 6 && !std::isspace(static_cast<unsigned char>(s[6]))))
        throw ParseError(line, "expected 'quiver <name>' header");
      name = trim(s.substr(6));
      have_header = true;
      continue;
    }
    if (in_relations) {
      raw_relations.push_back(parse_relation_line(s, line));
      continue;
    }
    if (s.rfind("vertices:", 0) == 0) {
      for (auto& v : split_ws(s.substr(9))) vertex_tokens.push_back({line, v});
    } else if (s.rfind("arrow", 0) == 0 && s.size() > 5 && std::isspace(static_cast<unsigned char>(s[5]))) {
      std::string rest = trim(s.substr(5));
      size_t colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError(line, "expected 'arrow <id>: <src> -> <tgt>'");
      std::string id = trim(rest.substr(0, colon));
      std::vector<std::string> ends = split_ws(rest.substr(colon + 1));
      if (ends.size() != 3 || ends[1] != "->") throw ParseError(line, "expected 'arrow <id>: <src> -> <tgt>'");
      if (!is_valid_ident(id)) throw ParseError(line, "invalid arrow id '" + id + "'");
      raw_arrows.push_back({line, Arrow{id, ends[0], ends[2]}});
    } else if (s == "relations:") {
      in_relations = true;
    } else {
      throw ParseError(line, "unrecognised line '" + s + "'");
    }
  }
  if (!have_header) throw ParseError(line == 0 ? 1 : line, "missing 'quiver <name>' header");

  std::vector<std::string> vertices;
  std::set<std::string> seen_vertices;
  for (auto& [ln, v] : vertex_tokens) {
    if (!is_valid_ident(v)) throw ParseError(ln, "invalid vertex id '" + v + "'");
    if (!seen_vertices.insert(v).second) throw ParseError(ln, "duplicate vertex '" + v + "'");
    vertices.push_back(v);
  }
  std::vector<Arrow> arrows;
  std::set<std::string> seen_arrows;
  for (auto& ra : raw_arrows) {
    if (!seen_vertices.count(ra.arrow.source))
      throw ParseError(ra.line, "arrow '" + ra.arrow.id + "' has undeclared source '" + ra.arrow.source + "'");
    if (!seen_vertices.count(ra.arrow.target))
      throw ParseError(ra.line, "arrow '" + ra.arrow.id + "' has undeclared target '" + ra.arrow.target + "'");
    if (!seen_arrows.insert(ra.arrow.id).second) throw ParseError(ra.line, "duplicate arrow '" + ra.arrow.id + "'");
    arrows.push_back(ra.arrow);
  }
  Quiver q(vertices, arrows);

  std::vector<RelationTerm> relations;
  for (auto& rr : raw_relations) {
    RelationTerm rel;
    for (auto& [c, seq] : rr.terms) {
      for (auto& a : seq)
        if (!q.has_arrow(a)) throw ParseError(rr.line, "unknown arrow '" + a + "'");
      Path p;
      try {
        p = make_path(q, seq);
      } catch (const DomainError& e) {
        throw ParseError(rr.line, e.what());
      }
      if (p.length() < 2) throw ParseError(rr.line, "relation of length < 2");
      if (c == 0) throw ParseError(rr.line, "zero coefficient");
      rel.terms.push_back({c, p});
    }
    for (size_t i = 1; i < rel.terms.size(); ++i) {
      if (rel.terms[i].second.source != rel.source() || rel.terms[i].second.target != rel.target())
        throw ParseError(rr.line, "paths in one relation are not parallel");
      for (size_t j = 0; j < i; ++j)
        if (rel.terms[i].second == rel.terms[j].second) throw ParseError(rr.line, "repeated path in relation");
    }
    relations.push_back(std::move(rel));
  }
  return AlgebraPresentation(name, std::move(q), std::move(relations));
}

std::string serialize_presentation(const AlgebraPresentation& a) {
  std::ostringstream out;
  out << "quiver " << a.name() << "\n";
  out << "vertices:";
  for (const auto& v : a.quiver().vertices()) out << " " << v;
  out << "\n";
  for (const auto& ar : a.quiver().arrows()) out << "arrow " << ar.id << ": " << ar.source << " -> " << ar.target << "\n";
  if (!a.relations().empty()) {
    out << "relations:\n";
    for (const auto& rel : a.relations()) {
      if (rel.is_monomial()) {
        out << join(rel.front().arrows, " ") << "\n";
        continue;
      }
      for (size_t i = 0; i < rel.terms.size(); ++i) {
        const auto& [c, p] = rel.terms[i];
        Rational mag = abs(c);
        if (i == 0) {
          if (c < 0) out << "- ";
        } else {
          out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << to_string(mag) << " ";
        out << "(" << join(p.arrows, " ") << ")";
      }
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- structure

bool MultiGraph::connected() const {
  if (labels.empty()) return true;
  std::vector<size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  size_t comps = labels.size();
  for (auto [u, v] : edges) {
    size_t a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

MultiGraph underlying_graph(const AlgebraPresentation& a) {
  MultiGraph g;
  g.labels = a.quiver().vertices();
  for (size_t i = 0; i < a.quiver().arrow_count(); ++i) g.edges.push_back({a.quiver().source(i), a.quiver().target(i)});
  return g;
}

bool is_connected(const AlgebraPresentation& a) { return underlying_graph(a).connected(); }

bool is_tree(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  return q.vertex_count() > 0 && is_connected(a) && q.arrow_count() + 1 == q.vertex_count();
}

bool has_oriented_cycle(const Quiver& q) {
  std::vector<int> color(q.vertex_count(), 0);
  std::function<bool(size_t)> dfs = [&](size_t v) {
    color[v] = 1;
    for (size_t a : q.out_arrows(v)) {
      size_t w = q.target(a);
      if (color[w] == 1) return true;
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (size_t v = 0; v < q.vertex_count(); ++v)
    if (color[v] == 0 && dfs(v)) return true;
  return false;
}

namespace {

struct MonomialIndex {
  std::vector<std::vector<size_t>> relations;  // arrow index sequences
  size_t max_len = 0;
};

MonomialIndex monomial_index(const AlgebraPresentation& a) {
  MonomialIndex m;
  for (const auto& rel : a.relations()) {
    if (!rel.is_monomial()) continue;
    std::vector<size_t> seq;
    for (const auto& id : rel.front().arrows) seq.push_back(*a.quiver().arrow_index(id));
    m.max_len = std::max(m.max_len, seq.size());
    m.relations.push_back(std::move(seq));
  }
  return m;
}

// Does appending the last arrow of `path` create a monomial relation as a suffix?
bool suffix_hits(const MonomialIndex& m, const std::vector<size_t>& path) {
  for (const auto& r : m.relations) {
    if (r.size() > path.size()) continue;
    if (std::equal(r.begin(), r.end(), path.end() - static_cast<long>(r.size()))) return true;
  }
  return false;
}

}  // namespace

std::optional<size_t> longest_monomially_free_path(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  MonomialIndex m = monomial_index(a);
  if (m.relations.empty()) {
    if (has_oriented_cycle(q)) return std::nullopt;
    // Longest path in a DAG.
    std::vector<long> memo(q.vertex_count(), -1);
    std::function<long(size_t)> longest = [&](size_t v) -> long {
      if (memo[v] >= 0) return memo[v];
      long best = 0;
      for (size_t ar : q.out_arrows(v)) best = std::max(best, 1 + longest(q.target(ar)));
      return memo[v] = best;
    };
    size_t best = 0;
    for (size_t v = 0; v < q.vertex_count(); ++v) best = std::max(best, static_cast<size_t>(longest(v)));
    return best;
  }
  // States are free paths of length k = max_len - 1; a free path is a walk in the state graph.
  const size_t k = m.max_len - 1;
  size_t best = 0;
  std::map<std::vector<size_t>, size_t> state_id;
  std::vector<std::vector<size_t>> states;
  std::function<void(std::vector<size_t>&)> grow = [&](std::vector<size_t>& p) {
    best = std::max(best, p.size());
    if (p.size() == k) {
      if (!state_id.count(p)) {
        state_id[p] = states.size();
        states.push_back(p);
      }
      return;
    }
    for (size_t ar : q.out_arrows(q.target(p.back()))) {
      p.push_back(ar);
      if (!suffix_hits(m, p)) grow(p);
      p.pop_back();
    }
  };
  for (size_t ar = 0; ar < q.arrow_count(); ++ar) {
    std::vector<size_t> p{ar};
    grow(p);
  }
  std::vector<std::vector<size_t>> succ(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    std::vector<size_t> p = states[s];
    for (size_t ar : q.out_arrows(q.target(p.back()))) {
      p.push_back(ar);
      if (!suffix_hits(m, p)) succ[s].push_back(state_id.at(std::vector<size_t>(p.begin() + 1, p.end())));
      p.pop_back();
    }
  }
  std::vector<int> color(states.size(), 0);
  std::vector<size_t> memo(states.size(), 0);
  bool cyclic = false;
  std::function<size_t(size_t)> walk = [&](size_t s) -> size_t {
    if (color[s] == 2) return memo[s];
    color[s] = 1;
    size_t b = 0;
    for (size_t t : succ[s]) {
      if (color[t] == 1) {
        cyclic = true;
        continue;
      }
      b = std::max(b, 1 + walk(t));
    }
    color[s] = 2;
    return memo[s] = b;
  };
  for (size_t s = 0; s < states.size(); ++s) {
    best = std::max(best, k + walk(s));
    if (cyclic) return std::nullopt;
  }
  return best;
}

ValidationReport validate(const AlgebraPresentation& a) {
  ValidationReport r;
  const Quiver& q = a.quiver();
  MultiGraph g = underlying_graph(a);
  {
    std::vector<size_t> parent(q.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    size_t comps = q.vertex_count();
    for (auto [u, v] : g.edges) {
      size_t x = find(u), y = find(v);
      if (x != y) {
        parent[x] = y;
        --comps;
      }
    }
    r.components = comps;
    r.connected = comps <= 1;
  }
  r.monomial = a.is_monomial();
  r.monomial_quadratic = a.is_monomial_quadratic();
  r.acyclic = !has_oriented_cycle(q);
  for (size_t v = 0; v < q.vertex_count(); ++v) {
    bool loop = false;
    for (size_t ar : q.out_arrows(v))
      if (q.target(ar) == v) loop = true;
    (loop ? r.looped : r.loop_free).push_back(q.vertices()[v]);
  }
  auto longest = longest_monomially_free_path(a);
  if (longest) {
    r.admissible = true;
    r.bound = *longest + 1;
    r.admissibility_note = r.acyclic ? "acyclic quiver" : "every long path contains a monomial relation";
  } else if (r.monomial) {
    r.admissibility_note = "an oriented cycle can be traversed without meeting a relation";
  } else {
    r.admissibility_note = "not certifiable: monomial relations leave an oriented cycle free";
  }
  return r;
}

bool path_hits_monomial_relation(const AlgebraPresentation& a, const std::vector<std::string>& path) {
  for (const auto& rel : a.relations())
    if (rel.is_monomial() && contains_subpath(path, rel.front().arrows)) return true;
  return false;
}

std::vector<Path> path_basis(const AlgebraPresentation& a, const std::string& i, const std::string& j) {
  if (!a.is_monomial()) throw DomainError("path basis requires a monomial presentation");
  const Quiver& q = a.quiver();
  auto si = q.vertex_index(i), sj = q.vertex_index(j);
  if (!si || !sj) throw DomainError("unknown vertex");
  auto longest = longest_monomially_free_path(a);
  if (!longest) throw DomainError("presentation is not admissible");
  MonomialIndex m = monomial_index(a);
  std::vector<Path> out;
  if (*si == *sj) out.push_back(Path::trivial(i));
  std::vector<size_t> p;
  std::function<void(size_t)> dfs = [&](size_t v) {
    for (size_t ar : q.out_arrows(v)) {
      p.push_back(ar);
      if (!suffix_hits(m, p)) {
        if (q.target(ar) == *sj) {
          Path path{i, j, {}};
          for (size_t x : p) path.arrows.push_back(q.arrow(x).id);
          out.push_back(std::move(path));
        }
        if (p.size() < *longest) dfs(q.target(ar));
      }
      p.pop_back();
    }
  };
  dfs(*si);
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

AlgebraPresentation opposite(const AlgebraPresentation& a) {
  std::vector<Arrow> arrows;
  for (const auto& ar : a.quiver().arrows()) arrows.push_back(Arrow{ar.id, ar.target, ar.source});
  std::vector<RelationTerm> rels;
  for (const auto& rel : a.relations()) {
    RelationTerm r;
    for (const auto& [c, p] : rel.terms) {
      Path op{p.target, p.source, std::vector<std::string>(p.arrows.rbegin(), p.arrows.rend())};
      r.terms.push_back({c, op});
    }
    rels.push_back(std::move(r));
  }
  return AlgebraPresentation(a.name() + "^op", Quiver(a.quiver().vertices(), arrows), rels);
}

AlgebraPresentation full_subpresentation(const AlgebraPresentation& a, const std::set<std::string>& keep,
                                         std::string name) {
  std::vector<std::string> vertices;
  for (const auto& v : a.quiver().vertices())
    if (keep.count(v)) vertices.push_back(v);
  std::vector<Arrow> arrows;
  std::set<std::string> kept_arrows;
  for (const auto& ar : a.quiver().arrows())
    if (keep.count(ar.source) && keep.count(ar.target)) {
      arrows.push_back(ar);
      kept_arrows.insert(ar.id);
    }
  std::vector<RelationTerm> rels;
  for (const auto& rel : a.relations()) {
    bool inside = true;
    for (const auto& [c, p] : rel.terms)
      for (const auto& id : p.arrows)
        if (!kept_arrows.count(id)) inside = false;
    if (inside) rels.push_back(rel);
  }
  return AlgebraPresentation(std::move(name), Quiver(vertices, arrows), rels);
}

AlgebraPresentation relabel(const AlgebraPresentation& a, const std::map<std::string, std::string>& vertex_map,
                            const std::map<std::string, std::string>& arrow_map) {
  auto mv = [&](const std::string& v) {
    auto it = vertex_map.find(v);
    return it == vertex_map.end() ? v : it->second;
  };
  auto ma = [&](const std::string& x) {
    auto it = arrow_map.find(x);
    return it == arrow_map.end() ? x : it->second;
  };
  std::vector<std::string> vertices;
  for (const auto& v : a.quiver().vertices()) vertices.push_back(mv(v));
  std::vector<Arrow> arrows;
  for (const auto& ar : a.quiver().arrows()) arrows.push_back(Arrow{ma(ar.id), mv(ar.source), mv(ar.target)});
  std::vector<RelationTerm> rels;
  for (const auto& rel : a.relations()) {
    RelationTerm r;
    for (const auto& [c, p] : rel.terms) {
      Path np{mv(p.source), mv(p.target), {}};
      for (const auto& id : p.arrows) np.arrows.push_back(ma(id));
      r.terms.push_back({c, np});
    }
    rels.push_back(std::move(r));
  }
  return AlgebraPresentation(a.name(), Quiver(vertices, arrows), rels);
}

}  // namespace qsa
