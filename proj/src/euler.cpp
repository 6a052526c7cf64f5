#include "qsa/euler.hpp"

#include <numeric>

#include "qsa/error.hpp"

namespace qsa {

CartanMatrix cartan_matrix(const AlgebraPresentation& a) {
  if (!a.is_monomial()) throw DomainError("Cartan matrix needs a monomial presentation");
  if (has_oriented_cycle(a.quiver())) throw DomainError("Cartan matrix is only computed for acyclic quivers");
  const auto& vs = a.quiver().vertices();
  CartanMatrix c{vs, std::vector<Vec>(vs.size(), Vec(vs.size()))};
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) c.entries[i][j] = static_cast<long>(path_basis(a, vs[j], vs[i]).size());
  return c;
}

EulerData euler_matrix(const CartanMatrix& c) {
  const size_t n = c.entries.size();
  Rational det = determinant(c.entries);
  if (det != 1 && det != -1) throw DomainError("Cartan matrix is not unimodular (det " + to_string(det) + ")");
  auto inv = inverse(c.entries);
  EulerData e{c.vertices, c.entries, std::vector<Vec>(n, Vec(n)), std::vector<Vec>(n, Vec(n))};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) e.E[i][j] = (*inv)[j][i];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) e.M[i][j] = (e.E[i][j] + e.E[j][i]) / 2;
  return e;
}

Rational euler_eval(const EulerData& e, const Vec& x) {
  if (x.size() != e.E.size())
    throw DomainError("vector has " + std::to_string(x.size()) + " entries, expected " + std::to_string(e.E.size()));
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) s += x[i] * e.E[i][j] * x[j];
  return s;
}

namespace {

Rational quad(const std::vector<Vec>& m, const Vec& x) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) s += x[i] * m[i][j] * x[j];
  return s;
}

// Vector with x^T m x < 0, or nullopt when m is positive semidefinite.
// Symmetric elimination: a negative or "hollow" diagonal gives a direct witness,
// otherwise pivot on a positive diagonal entry and lift a witness of the Schur complement.
std::optional<Vec> negative_direction(const std::vector<Vec>& m) {
  const size_t n = m.size();
  if (n == 0) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (m[i][i] < 0) {
      Vec x(n);
      x[i] = 1;
      return x;
    }
  for (size_t i = 0; i < n; ++i) {
    if (m[i][i] != 0) continue;
    for (size_t j = 0; j < n; ++j)
      if (j != i && m[i][j] != 0) {
        Vec x(n);
        x[i] = -(m[j][j] + 1) / (2 * m[i][j]);
        x[j] = 1;
        return x;
      }
  }
  // Rows with zero diagonal are now entirely zero; pivot on the first positive diagonal.
  size_t k = n;
  for (size_t i = 0; i < n; ++i)
    if (m[i][i] > 0) {
      k = i;
      break;
    }
  if (k == n) return std::nullopt;
  std::vector<size_t> rest;
  for (size_t i = 0; i < n; ++i)
    if (i != k) rest.push_back(i);
  std::vector<Vec> s(rest.size(), Vec(rest.size()));
  for (size_t a = 0; a < rest.size(); ++a)
    for (size_t b = 0; b < rest.size(); ++b)
      s[a][b] = m[rest[a]][rest[b]] - m[rest[a]][k] * m[k][rest[b]] / m[k][k];
  auto y = negative_direction(s);
  if (!y) return std::nullopt;
  Vec x(n);
  Rational dot = 0;
  for (size_t a = 0; a < rest.size(); ++a) {
    x[rest[a]] = (*y)[a];
    dot += m[k][rest[a]] * (*y)[a];
  }
  x[k] = -dot / m[k][k];
  return x;
}

Vec make_integral(Vec x) {
  mpz_class l = 1;
  for (const auto& v : x) l = lcm(l, mpz_class(v.get_den()));
  mpz_class g = 0;
  for (auto& v : x) {
    v *= l;
    g = gcd(g, mpz_class(v.get_num()));
  }
  if (g > 1)
    for (auto& v : x) v /= g;
  return x;
}

}  // namespace

NonnegativityReport is_nonnegative_form(const std::vector<Vec>& m) {
  NonnegativityReport r;
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("form matrix is not square");
  r.char_poly = characteristic_polynomial(m);
  for (size_t k = 0; k <= n; ++k) {
    Rational signed_c = ((n - k) % 2 ? -1 : 1) * r.char_poly[k];
    if (signed_c < 0) r.nonnegative = false;
  }
  auto dir = negative_direction(m);
  if (r.nonnegative != !dir.has_value())
    throw std::logic_error("characteristic polynomial and elimination disagree on semidefiniteness");
  if (dir) {
    r.witness = make_integral(*dir);
    r.witness_value = quad(m, *r.witness);
  }
  return r;
}

NonnegativityReport is_nonnegative_form(const EulerData& e) { return is_nonnegative_form(e.M); }

std::string form_polynomial(const EulerData& e) {
  const size_t n = e.E.size();
  std::vector<std::pair<Rational, std::string>> terms;
  for (size_t i = 0; i < n; ++i)
    if (e.E[i][i] != 0) terms.push_back({e.E[i][i], "x" + e.vertices[i] + "^2"});
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Rational c = e.E[i][j] + e.E[j][i];
      if (c != 0) terms.push_back({c, "x" + e.vertices[i] + "*x" + e.vertices[j]});
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    const auto& [c, mono] = terms[k];
    Rational mag = abs(c);
    if (k == 0)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += mono;
  }
  return out;
}

}  // namespace qsa
