#pragma once

// Cartan matrix, Euler matrix and Euler form of a monomial acyclic presentation.
// Dimension vectors are indexed in canonical vertex order.

#include <optional>
#include <string>
#include <vector>

#include "qsa/linalg.hpp"
#include "qsa/presentation.hpp"

namespace qsa {

struct CartanMatrix {
  std::vector<std::string> vertices;
  std::vector<Vec> entries;  // entries[i][j] = number of nonzero paths from j to i
};

struct EulerData {
  std::vector<std::string> vertices;
  std::vector<Vec> C;  // Cartan matrix
  std::vector<Vec> E;  // inverse transpose of C; chi(x) = x^T E x
  std::vector<Vec> M;  // (E + E^T) / 2
};

// Requires a monomial presentation on an acyclic quiver.
CartanMatrix cartan_matrix(const AlgebraPresentation& a);
// Throws DomainError unless det C = +-1.
EulerData euler_matrix(const CartanMatrix& c);

Rational euler_eval(const EulerData& e, const Vec& x);

struct NonnegativityReport {
  bool nonnegative = true;
  std::vector<Rational> char_poly;  // c_0..c_n of det(t I - M)
  std::optional<Vec> witness;       // integral, with negative form value
  Rational witness_value;
};

// Semidefiniteness of the symmetric matrix m, decided by the signs of its
// characteristic polynomial; an integral negative vector accompanies a "no".
NonnegativityReport is_nonnegative_form(const std::vector<Vec>& m);
NonnegativityReport is_nonnegative_form(const EulerData& e);

// "x1^2 + x2^2 - x1*x2" style rendering of x^T E x, variables named x<vertex>.
std::string form_polynomial(const EulerData& e);

}  // namespace qsa
