#pragma once

// Shared helpers for the test programs: fixture loading, random generators and
// the independent oracles the library is checked against.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsa/decide.hpp"
#include "qsa/path_algebra.hpp"

namespace qsa::test {

AlgebraPresentation fixture(const std::string& name);
std::string fixture_path(const std::string& name);
AlgebraPresentation parse(const std::string& text);

// Every fixture file, by stem.
std::vector<std::string> fixture_names();

// Runs the CLI in-process.
struct CliRun {
  int status = 0;
  std::string out, err;
};
CliRun cli(const std::vector<std::string>& args);

// ---- generators ------------------------------------------------------------

// Connected quiver on n vertices with in- and out-degree at most 2 and
// quadratic monomial relations meeting the unique-continuation rule.  Not
// necessarily admissible; callers filter with validate().
AlgebraPresentation random_quadratic_string(std::mt19937& rng, size_t n, size_t extra_arrows,
                                            const std::string& name);

// Connected quadratic monomial presentation without degree restrictions.
AlgebraPresentation random_quadratic_monomial(std::mt19937& rng, size_t n, size_t extra_arrows,
                                              double relation_rate, const std::string& name);

// Monomial tree presentations on 1..max_n vertices with at most max_rel
// relations of length two, one per isomorphism class.
std::vector<AlgebraPresentation> tree_presentations(size_t max_n, size_t max_rel);

MultiGraph random_multigraph(std::mt19937& rng, size_t n, size_t edges, bool loops);

// All connected multigraphs on n vertices with the given number of edges,
// generated edge multiset by edge multiset (no isomorphism reduction).
std::vector<MultiGraph> all_multigraphs(size_t n, size_t edges, bool loops);

// ---- oracles ---------------------------------------------------------------

// chi(S_i, S_j) = sum_k (-1)^k dim Ext^k(S_i, S_j), read off minimal projective
// resolutions of the simple right modules of a monomial algebra of finite
// global dimension.  Rows and columns in canonical vertex order.
std::vector<std::vector<long>> ext_euler_oracle(const AlgebraPresentation& a);

// Value of x^T B x for an integral bilinear matrix.
long quadratic_value(const std::vector<std::vector<long>>& b, const std::vector<long>& x);

// First x in [-r, r]^n with x^T B x < 0, if any.
std::optional<std::vector<long>> negative_in_box(const std::vector<std::vector<long>>& b, int r);

std::vector<std::vector<long>> integral(const std::vector<Vec>& m);

// Sign of the Tits form by principal minors: positive definite iff all leading
// minors are positive, semidefinite iff every principal minor is >= 0.
TitsSign tits_sign_by_minors(const MultiGraph& g);

// Projection checks on a cover ball; returns the first failure, empty if fine.
std::string check_cover(const AlgebraPresentation& base, const CoverBall& ball);

// Hand-entered complexes for the ten-vertex tree: stalks everywhere except
// [P4 + P5 -> P3] at 3, [P4 -> P3] at 4 and [P5 -> P3] at 5.
std::map<std::string, ProjectiveComplex> ten_vertex_tilting(const AlgebraPresentation& a);

}  // namespace qsa::test
