#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qsa {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

std::string to_string(const Rational& q);
// Accepts "n", "-n" and "p/q"; throws DomainError otherwise.
Rational parse_rational(const std::string& s);

bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Rational& c);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c*x

// Reduces rows in place to reduced row echelon form, dropping zero rows.
// Columns are visited in the order given by `column_order` (all columns when empty).
// Returns the pivot column of each remaining row.
std::vector<size_t> rref(std::vector<Vec>& rows, size_t ncols, const std::vector<size_t>& column_order = {});

// Basis of {x : A x = 0} where A is given by its rows.
std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t ncols);

// Incrementally grown subspace with coordinates relative to the accepted generators.
class SpanBasis {
 public:
  explicit SpanBasis(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }

  // Adds v if it is independent of the current span; returns whether it was added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  // Remainder of v after elimination against the span.
  Vec reduce(const Vec& v) const;
  // Coefficients of v over the accepted generators, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  size_t dim_;
  std::vector<Vec> rows_;   // echelon rows, pivot entry 1
  std::vector<size_t> pivots_;
  std::vector<Vec> transforms_;  // rows_[k] = sum transforms_[k][g] * generator g
};

// Coefficients c_0..c_n (c_n = 1) of det(lambda*I - M), by the Faddeev-LeVerrier recursion.
std::vector<Rational> characteristic_polynomial(const std::vector<Vec>& m);

Rational determinant(std::vector<Vec> m);
// Inverse of a square matrix; nullopt when singular.
std::optional<std::vector<Vec>> inverse(std::vector<Vec> m);

}  // namespace qsa
