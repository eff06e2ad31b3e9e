#include "k3cone/integer.hpp"

#include "k3cone/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace k3cone {

Int dot(const IntVec& a, const IntVec& b) {
  check_dims(b.size(), a.size(), "dot");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    if (sgn(x) == 0)
      continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

IntVec negated(IntVec v) {
  for (Int& x : v)
    x = -x;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  check_dims(b.size(), a.size(), "add");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

IntVec scaled(const IntVec& v, const Int& s) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = v[i] * s;
  return r;
}

bool lex_positive(const IntVec& v) {
  for (const Int& x : v)
    if (sgn(x) != 0)
      return sgn(x) > 0;
  return false;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

IntVec parse_csv(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    Int x;
    if (item.empty() || x.set_str(item, 10) != 0)
      throw ParseError("not an integer list: '" + text + "'");
    out.push_back(x);
  }
  if (out.empty())
    throw ParseError("empty integer list");
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      t(c, r) = m(r, c);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  check_dims(b.rows(), a.cols(), "matrix product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0)
          p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntVec multiply(const IntMatrix& m, const IntVec& v) {
  check_dims(v.size(), m.cols(), "matrix-vector product");
  IntVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0)
        r[i] += m(i, j) * v[j];
  return r;
}

IntMatrix matrix_from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    check_dims(cols[c].size(), rows, "matrix column");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

Int determinant(const IntMatrix& m) {
  if (!m.square())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<IntVec> a = rows;
  for (const IntVec& r : a)
    check_dims(r.size(), cols, "rank");
  std::size_t rk = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && sgn(a[p][c]) == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[rk], a[p]);
    for (std::size_t i = rk + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square())
    throw DimensionMismatch("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j)
          continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i)
            continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Int d = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : Int(-d);
    }
  return adj;
}

std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<std::vector<Rational>> a;
  a.reserve(rows.size());
  for (const IntVec& r : rows) {
    check_dims(r.size(), cols, "rref");
    a.emplace_back(r.begin(), r.end());
  }
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && sgn(a[p][c]) == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[rk], a[p]);
    Rational piv = a[rk][c];
    for (Rational& x : a[rk])
      x /= piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rk || sgn(a[i][c]) == 0)
        continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[rk][j];
    }
    ++rk;
  }
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < rk; ++i) {
    Int l = 1;
    for (const Rational& x : a[i])
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec v(cols);
    for (std::size_t j = 0; j < cols; ++j)
      v[j] = a[i][j].get_num() * (l / a[i][j].get_den());
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

IntVec reduce_modulo(IntVec v, const std::vector<IntVec>& rref) {
  for (const IntVec& p : rref) {
    std::size_t c = 0;
    while (sgn(p[c]) == 0)
      ++c;
    if (sgn(v[c]) == 0)
      continue;
    Int f = v[c];
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = p[c] * v[j] - f * p[j];
  }
  return primitive(std::move(v));
}

std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<IntVec> r = rref_basis(rows, cols);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const IntVec& row : r) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0)
      ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<IntVec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    // x_f = L, x_p = -L * row[f] / row[p] with L the lcm of the pivots.
    Int l = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r[i][pivot_of_row[i]].get_mpz_t());
    IntVec x(cols);
    x[f] = l;
    for (std::size_t i = 0; i < r.size(); ++i)
      x[pivot_of_row[i]] = -(l / r[i][pivot_of_row[i]]) * r[i][f];
    out.push_back(primitive(std::move(x)));
  }
  return out;
}

namespace {

void column_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (sgn(m(r, src)) != 0)
      m(r, dst) -= q * m(r, src);
}

void column_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    std::swap(m(r, a), m(r, b));
}

void column_negate(IntMatrix& m, std::size_t a) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, a) = -m(r, a);
}

}  // namespace

ColumnReduction column_reduce(const IntMatrix& a) {
  ColumnReduction out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = a.cols();
  std::size_t k = 0;
  for (std::size_t r = 0; r < a.rows() && k < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = k; c < n; ++c)
        if (sgn(h(r, c)) != 0 && (best == n || abs(h(r, c)) < abs(h(r, best))))
          best = c;
      if (best == n)
        break;
      if (best != k) {
        column_swap(h, k, best);
        column_swap(u, k, best);
      }
      bool done = true;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (sgn(h(r, c)) == 0)
          continue;
        Int q = floor_div(h(r, c), h(r, k));
        column_axpy(h, c, k, q);
        column_axpy(u, c, k, q);
        if (sgn(h(r, c)) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (k < n && sgn(h(r, k)) != 0) {
      if (sgn(h(r, k)) < 0) {
        column_negate(h, k);
        column_negate(u, k);
      }
      ++k;
    }
  }
  out.rank = k;
  return out;
}

std::vector<IntVec> integer_kernel(const IntMatrix& a) {
  ColumnReduction cr = column_reduce(a);
  std::vector<IntVec> basis;
  for (std::size_t c = cr.rank; c < a.cols(); ++c)
    basis.push_back(cr.u.col(c));
  return hermite_normal_form(basis, a.cols());
}

std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<IntVec> a = rows;
  for (const IntVec& r : a)
    check_dims(r.size(), cols, "hermite_normal_form");
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols && i < a.size(); ++c) {
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t r = i; r < a.size(); ++r)
        if (sgn(a[r][c]) != 0 && (best == a.size() || abs(a[r][c]) < abs(a[best][c])))
          best = r;
      if (best == a.size())
        break;
      std::swap(a[i], a[best]);
      bool done = true;
      for (std::size_t r = i + 1; r < a.size(); ++r) {
        if (sgn(a[r][c]) == 0)
          continue;
        Int q = floor_div(a[r][c], a[i][c]);
        for (std::size_t j = c; j < cols; ++j)
          a[r][j] -= q * a[i][j];
        if (sgn(a[r][c]) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (sgn(a[i][c]) == 0)
      continue;
    if (sgn(a[i][c]) < 0)
      a[i] = negated(std::move(a[i]));
    for (std::size_t r = 0; r < i; ++r) {
      Int q = floor_div(a[r][c], a[i][c]);
      if (sgn(q) != 0)
        for (std::size_t j = c; j < cols; ++j)
          a[r][j] -= q * a[i][j];
    }
    ++i;
  }
  a.resize(i);
  return a;
}

Int isqrt(const Int& n) {
  if (sgn(n) < 0)
    throw PreconditionError("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace k3cone
