#include <algorithm>
#include <functional>

#include "qsa/covering.hpp"
#include "qsa/error.hpp"

namespace qsa {

namespace {

bool composite_in_I(const AlgebraPresentation& a, size_t x, size_t y) {
  const Quiver& q = a.quiver();
  return path_hits_monomial_relation(a, {q.arrow(x).id, q.arrow(y).id});
}

// alpha, gamma a two-cycle (alpha = gamma allowed for a loop) with beta feeding into it.
std::optional<LocalPatternReport> two_cycle(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  const size_t n = q.arrow_count();
  for (size_t al = 0; al < n; ++al)
    for (size_t ga = 0; ga < n; ++ga)
      for (size_t be = 0; be < n; ++be) {
        if (al == be) continue;
        if (q.target(ga) != q.source(al) || q.source(ga) != q.target(al)) continue;
        if (!composite_in_I(a, al, ga) || !composite_in_I(a, ga, al)) continue;
        LocalPatternReport r;
        r.pattern = 1;
        r.arrows = {{"alpha", q.arrow(al).id}, {"beta", q.arrow(be).id}, {"gamma", q.arrow(ga).id}};
        if (q.target(be) == q.target(al) && composite_in_I(a, be, ga)) {
          r.vertices = {q.vertices()[q.source(al)], q.vertices()[q.target(al)], q.vertices()[q.source(be)]};
          r.description = "arrows " + q.arrow(al).id + ", " + q.arrow(ga).id + " form a cycle with both composites in I, and " +
                          q.arrow(be).id + " " + q.arrow(ga).id + " is in I";
          return r;
        }
        if (q.source(be) == q.source(al) && composite_in_I(a, ga, be)) {
          r.mirrored = true;
          r.vertices = {q.vertices()[q.source(al)], q.vertices()[q.target(al)], q.vertices()[q.target(be)]};
          r.description = "arrows " + q.arrow(al).id + ", " + q.arrow(ga).id + " form a cycle with both composites in I, and " +
                          q.arrow(ga).id + " " + q.arrow(be).id + " is in I";
          return r;
        }
      }
  return std::nullopt;
}

// Fork x with in-arrows alpha, beta and out-arrows gamma, delta, all composites in I,
// plus a five-edge walk leaving s(alpha); the ten vertices must span a full
// subcategory that is radical-square-zero on exactly these nine arrows.
std::optional<LocalPatternReport> fork_with_tail(const AlgebraPresentation& a) {
  const Quiver& q = a.quiver();
  const auto& vs = q.vertices();
  for (size_t x = 0; x < q.vertex_count(); ++x) {
    const auto& ins = q.in_arrows(x);
    const auto& outs = q.out_arrows(x);
    for (size_t al : ins)
      for (size_t be : ins)
        for (size_t ga : outs)
          for (size_t de : outs) {
            if (al == be || ga == de) continue;
            if (q.target(ga) > q.target(de)) continue;  // gamma/delta are symmetric
            std::vector<size_t> fork{q.source(al), q.source(be), x, q.target(ga), q.target(de)};
            {
              auto s = fork;
              std::sort(s.begin(), s.end());
              if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
            }
            if (!composite_in_I(a, al, ga) || !composite_in_I(a, al, de) || !composite_in_I(a, be, ga) ||
                !composite_in_I(a, be, de))
              continue;
            std::vector<size_t> path{q.source(al)};
            std::vector<size_t> tail_arrows;
            std::optional<LocalPatternReport> found;
            std::function<bool()> walk = [&]() -> bool {
              if (tail_arrows.size() == 5) {
                std::vector<size_t> patch = fork;
                patch.insert(patch.end(), path.begin() + 1, path.end());
                std::vector<size_t> patch_arrows{al, be, ga, de};
                patch_arrows.insert(patch_arrows.end(), tail_arrows.begin(), tail_arrows.end());
                for (size_t u : patch)
                  for (size_t v : patch) {
                    size_t expected = u == v ? 1 : 0;
                    for (size_t ar : patch_arrows)
                      if (q.source(ar) == u && q.target(ar) == v) ++expected;
                    if (path_basis(a, vs[u], vs[v]).size() != expected) return false;
                  }
                LocalPatternReport r;
                r.pattern = 2;
                for (size_t v : patch) r.vertices.push_back(vs[v]);
                r.arrows = {{"alpha", q.arrow(al).id},
                            {"beta", q.arrow(be).id},
                            {"gamma", q.arrow(ga).id},
                            {"delta", q.arrow(de).id}};
                for (size_t k = 0; k < 5; ++k) r.arrows["omega" + std::to_string(k + 1)] = q.arrow(tail_arrows[k]).id;
                r.description = "fork at " + vs[x] + " with a five-edge radical-square-zero tail from " +
                                vs[q.source(al)];
                found = r;
                return true;
              }
              size_t cur = path.back();
              std::vector<std::pair<size_t, size_t>> steps;  // arrow, next vertex
              for (size_t ar : q.out_arrows(cur)) steps.push_back({ar, q.target(ar)});
              for (size_t ar : q.in_arrows(cur)) steps.push_back({ar, q.source(ar)});
              for (auto [ar, nxt] : steps) {
                if (std::find(fork.begin(), fork.end(), nxt) != fork.end()) continue;
                if (std::find(path.begin(), path.end(), nxt) != path.end()) continue;
                path.push_back(nxt);
                tail_arrows.push_back(ar);
                bool done = walk();
                path.pop_back();
                tail_arrows.pop_back();
                if (done) return true;
              }
              return false;
            };
            if (walk()) return found;
          }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalPatternReport> detect_local_wild_pattern(const AlgebraPresentation& a) {
  if (!a.is_monomial()) throw DomainError("local patterns are only defined for monomial presentations");
  if (auto r = two_cycle(a)) return r;
  if (auto r = fork_with_tail(a)) return r;
  if (auto r = fork_with_tail(opposite(a))) {
    r->mirrored = true;
    return r;
  }
  return std::nullopt;
}

}  // namespace qsa
