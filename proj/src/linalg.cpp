#include "qsa/linalg.hpp"

#include <numeric>

#include "qsa/error.hpp"

namespace qsa {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto digits = [](const std::string& t, size_t from) {
    if (from >= t.size()) return false;
    for (size_t i = from; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  size_t start = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits(num, start)) throw DomainError("malformed coefficient '" + s + "'");
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(mpz_class(num));
  } else {
    std::string den = s.substr(slash + 1);
    if (!digits(den, 0)) throw DomainError("malformed coefficient '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw DomainError("zero denominator in '" + s + "'");
    q = Rational(mpz_class(num), d);
    q.canonicalize();
  }
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec scaled(const Vec& v, const Rational& c) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (c == 0) return;
  for (size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += c * x[i];
}

std::vector<size_t> rref(std::vector<Vec>& rows, size_t ncols, const std::vector<size_t>& column_order) {
  std::vector<size_t> order = column_order;
  if (order.empty()) {
    order.resize(ncols);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col : order) {
    if (r == rows.size()) break;
    size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      axpy(rows[i], -f, rows[r]);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t ncols) {
  std::vector<Vec> m = rows;
  std::vector<size_t> piv = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols);
    v[f] = 1;
    for (size_t i = 0; i < m.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec SpanBasis::reduce(const Vec& v) const {
  Vec w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = w[pivots_[k]];
    if (c != 0) axpy(w, -c, rows_[k]);
  }
  return w;
}

bool SpanBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool SpanBasis::add(const Vec& v) {
  const size_t gen = transforms_.empty() ? 0 : transforms_.front().size();
  Vec w = v;
  Vec t(gen + 1);
  t[gen] = 1;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = w[pivots_[k]];
    if (c == 0) continue;
    axpy(w, -c, rows_[k]);
    for (size_t g = 0; g < gen; ++g) t[g] -= c * transforms_[k][g];
  }
  size_t p = 0;
  while (p < w.size() && w[p] == 0) ++p;
  if (p == w.size()) return false;
  Rational inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  for (auto& x : t) x *= inv;
  for (auto& tr : transforms_) tr.push_back(0);
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  transforms_.push_back(std::move(t));
  return true;
}

std::optional<Vec> SpanBasis::coordinates(const Vec& v) const {
  const size_t gen = transforms_.empty() ? 0 : transforms_.front().size();
  Vec w = v;
  Vec coeff(gen);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = w[pivots_[k]];
    if (c == 0) continue;
    axpy(w, -c, rows_[k]);
    axpy(coeff, c, transforms_[k]);
  }
  if (!is_zero(w)) return std::nullopt;
  return coeff;
}

std::vector<Rational> characteristic_polynomial(const std::vector<Vec>& m) {
  const size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  if (n == 0) return c;
  auto mul = [&](const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    return out;
  };
  // M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Vec> mk(n, Vec(n));
  for (size_t k = 1; k <= n; ++k) {
    std::vector<Vec> next = mul(m, mk);
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    std::vector<Vec> am = mul(m, mk);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

Rational determinant(std::vector<Vec> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      axpy(m[i], -f, m[col]);
    }
  }
  return det;
}

std::optional<std::vector<Vec>> inverse(std::vector<Vec> m) {
  const size_t n = m.size();
  std::vector<Vec> aug(n, Vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<size_t> piv = rref(aug, 2 * n, order);
  if (piv.size() != n) return std::nullopt;
  std::vector<Vec> inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace qsa
