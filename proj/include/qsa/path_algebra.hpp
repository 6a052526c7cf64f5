#pragma once

// KQ/I as a finite-dimensional algebra with normal forms.
//
// Space (i, j) holds the paths from i to j.  Paths containing a monomial
// relation are zero; the remaining ("free") paths are reduced modulo the span of
// all p*rho*q for non-monomial rho.  The basis of (i, j) consists of the free
// paths that are not pivots of that span; pivots are always taken on the largest
// path, so the basis prefers short, early paths.

#include <map>
#include <vector>

#include "qsa/presentation.hpp"

namespace qsa {

class PathAlgebra {
 public:
  // Throws DomainError when the monomial relations leave arbitrarily long paths.
  explicit PathAlgebra(const AlgebraPresentation& a);

  const AlgebraPresentation& presentation() const { return a_; }
  size_t vertex_count() const { return a_.quiver().vertex_count(); }
  // Every path of length >= bound() contains a monomial relation.
  size_t bound() const { return bound_; }

  size_t dim(size_t i, size_t j) const { return spaces_[i][j].basis.size(); }
  size_t total_dim() const;
  const std::vector<Path>& basis(size_t i, size_t j) const { return spaces_[i][j].basis; }

  // Coordinates of a combination of parallel paths i -> j in the basis of (i, j).
  Vec reduce(size_t i, size_t j, const std::vector<std::pair<Rational, Path>>& combo) const;
  Vec path_element(const Path& p) const;
  Vec identity(size_t i) const;
  Vec arrow_element(size_t arrow) const;

  // x in (i, j), y in (j, k); returns x*y in (i, k).
  Vec multiply(size_t i, size_t j, size_t k, const Vec& x, const Vec& y) const;

  // Coefficient of the trivial path in an element of (i, i).
  Rational trivial_coefficient(size_t i, const Vec& x) const;

 private:
  struct Space {
    std::vector<Path> candidates;                  // free paths, canonical order
    std::map<std::vector<std::string>, size_t> column;  // arrow sequence -> candidate index
    std::vector<Vec> rows;                         // reduced echelon rows over candidates
    std::vector<size_t> pivots;
    std::vector<Path> basis;
    std::vector<size_t> basis_column;              // basis position -> candidate index
    std::vector<long> basis_index;                 // candidate index -> basis position or -1
  };

  Vec reduce_candidates(size_t i, size_t j, Vec v) const;

  AlgebraPresentation a_;
  size_t bound_ = 0;
  std::vector<std::vector<Space>> spaces_;
};

}  // namespace qsa
