// Slow, independent reference computations used to check the library.
// None of these call into the elimination, enumeration or double
// description code they are compared against.

#ifndef K3CONE_TESTS_ORACLES_HPP_
#define K3CONE_TESTS_ORACLES_HPP_

#include "k3cone/integer.hpp"
#include "k3cone/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using k3cone::Int;
using k3cone::IntMatrix;
using k3cone::IntVec;
using k3cone::Rational;

// Sum over permutations; fine up to n = 7.
inline Int leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Gaussian elimination over Q; returns the row echelon form and its rank.
inline std::size_t rational_echelon(std::vector<std::vector<Rational>>& a, std::size_t cols, Rational* det = nullptr) {
  std::size_t r = 0;
  if (det)
    *det = 1;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size()) {
      if (det)
        *det = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      if (det)
        *det = -*det;
    }
    if (det)
      *det *= a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0)
        continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Rational>> to_rational(const std::vector<IntVec>& rows) {
  std::vector<std::vector<Rational>> a;
  for (const IntVec& r : rows) {
    std::vector<Rational> q;
    for (const Int& x : r)
      q.emplace_back(x);
    a.push_back(std::move(q));
  }
  return a;
}

inline Int rational_det(const IntMatrix& m) {
  auto a = to_rational(m.to_rows());
  Rational det;
  if (rational_echelon(a, m.cols(), &det) < m.rows())
    return 0;
  return det.get_num();
}

inline std::size_t rank_q(const std::vector<IntVec>& rows, std::size_t cols) {
  auto a = to_rational(rows);
  return rational_echelon(a, cols);
}

// Characteristic polynomial by Faddeev-LeVerrier; coefficient of x^k at [k].
inline std::vector<Rational> charpoly(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n)), mk(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // mk = A * (mk + c[n-k+1] I)
    std::vector<std::vector<Rational>> prev = mk;
    for (std::size_t i = 0; i < n; ++i)
      prev[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l)
          s += a[i][l] * prev[l][j];
        mk[i][j] = s;
      }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += mk[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

inline std::size_t sign_changes(const std::vector<Rational>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const Rational& x : c) {
    int s = sgn(x);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

// Symmetric, nondegenerate: all roots real and nonzero, so Descartes'
// rule counts them exactly.
inline std::pair<std::size_t, std::size_t> descartes_signature(const IntMatrix& m) {
  std::vector<Rational> p = charpoly(m), q = p;
  for (std::size_t k = 1; k < q.size(); k += 2)
    q[k] = -q[k];
  return {sign_changes(p), sign_changes(q)};
}

inline Int inner(const IntMatrix& g, const IntVec& x, const IntVec& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      s += x[i] * g(i, j) * y[j];
  return s;
}

// All x in [-box, box]^n with x.x = -2 and x.v0 = level, sorted.
inline std::vector<IntVec> box_roots(const IntMatrix& g, const IntVec& v0, const Int& level, long box) {
  const std::size_t n = g.rows();
  std::vector<IntVec> out;
  IntVec x(n, Int(-box));
  while (true) {
    if (inner(g, x, x) == -2 && inner(g, x, v0) == level)
      out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == box) {
      x[i] = -box;
      ++i;
    }
    if (i == n)
      break;
    x[i] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IntVec primitive_of(IntVec v) {
  Int g = 0;
  for (const Int& x : v)
    g = gcd(g, x);
  if (g > 1)
    for (Int& x : v)
      x /= g;
  return v;
}

// One-dimensional rational nullspace of `rows` (rank cols-1), as a primitive vector.
inline std::optional<IntVec> normal_of(const std::vector<IntVec>& rows, std::size_t cols) {
  auto a = to_rational(rows);
  std::size_t r = rational_echelon(a, cols);
  if (r != cols - 1)
    return std::nullopt;
  // Back substitution: find the free column, set it to 1.
  std::vector<std::size_t> pivot_col;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (a[i][c] == 0)
      ++c;
    pivot_col.push_back(c);
  }
  std::size_t free = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end())
    ++free;
  std::vector<Rational> x(cols);
  x[free] = 1;
  for (std::size_t i = r; i-- > 0;) {
    Rational s = 0;
    for (std::size_t k = pivot_col[i] + 1; k < cols; ++k)
      s += a[i][k] * x[k];
    x[pivot_col[i]] = -s / a[i][pivot_col[i]];
  }
  Int den = 1;
  for (const Rational& q : x)
    den = lcm(den, q.get_den());
  IntVec v(cols);
  for (std::size_t i = 0; i < cols; ++i)
    v[i] = Rational(x[i] * den).get_num();
  return primitive_of(v);
}

// y with sum_j y_j basis[j] = v, scaled to a primitive integer vector
// (positive multiples only). nullopt when v is outside the span.
inline std::optional<IntVec> coordinates(const std::vector<IntVec>& basis, const IntVec& v) {
  const std::size_t k = basis.size(), n = v.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  const std::size_t r = rational_echelon(a, k + 1);
  std::vector<Rational> y(k);
  for (std::size_t i = r; i-- > 0;) {
    std::size_t c = 0;
    while (a[i][c] == 0)
      ++c;
    if (c == k)
      return std::nullopt;
    Rational s = a[i][k];
    for (std::size_t j = c + 1; j < k; ++j)
      s -= a[i][j] * y[j];
    y[c] = s / a[i][c];
  }
  Int den = 1;
  for (const Rational& q : y)
    den = lcm(den, q.get_den());
  IntVec out(k);
  for (std::size_t j = 0; j < k; ++j)
    out[j] = Rational(y[j] * den).get_num();
  return primitive_of(out);
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// Facets of a full-dimensional pointed cone by trying every (d-1)-subset of generators.
inline std::vector<IntVec> subset_facets(const std::vector<IntVec>& gens, std::size_t d) {
  std::set<IntVec> facets;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() + 1 == d) {
      std::vector<IntVec> rows;
      for (std::size_t i : pick)
        rows.push_back(gens[i]);
      auto nrm = normal_of(rows, d);
      if (!nrm)
        return;
      int sign = 0;
      for (const IntVec& g : gens) {
        int s = sgn(dot(*nrm, g));
        if (s == 0)
          continue;
        if (sign == 0)
          sign = s;
        else if (s != sign)
          return;
      }
      IntVec f = *nrm;
      if (sign < 0)
        for (Int& x : f)
          x = -x;
      facets.insert(f);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return {facets.begin(), facets.end()};
}

// Extreme rays among the generators: tight facets of rank d-1.
inline std::vector<IntVec> extreme_generators(const std::vector<IntVec>& gens, const std::vector<IntVec>& facets,
                                              std::size_t d) {
  std::set<IntVec> out;
  for (const IntVec& g : gens) {
    std::vector<IntVec> tight;
    for (const IntVec& f : facets)
      if (dot(f, g) == 0)
        tight.push_back(f);
    if (rank_q(tight, d) + 1 == d)
      out.insert(primitive_of(g));
  }
  return {out.begin(), out.end()};
}

// Faces of a pointed cone given by (rays, facets): every facet subset,
// keyed by the set of rays it leaves, filtered to dimension target.
inline std::set<std::vector<IntVec>> subset_faces(const std::vector<IntVec>& rays, const std::vector<IntVec>& facets,
                                                  std::size_t d, std::size_t target) {
  std::set<std::vector<IntVec>> out;
  const std::size_t f = facets.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
    std::vector<IntVec> face;
    for (const IntVec& r : rays) {
      bool tight = true;
      for (std::size_t i = 0; i < f && tight; ++i)
        if ((mask >> i) & 1)
          tight = dot(facets[i], r) == 0;
      if (tight)
        face.push_back(r);
    }
    if (rank_q(face, d) == target) {
      std::sort(face.begin(), face.end());
      out.insert(face);
    }
  }
  return out;
}

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline IntVec apply(const IntMatrix& m, const IntVec& v) {
  IntVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

inline bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  return a.to_rows() < b.to_rows();
}

// Closure of a finite matrix group; nullopt when it exceeds `limit`.
inline std::optional<std::vector<IntMatrix>> group_closure(const std::vector<IntMatrix>& gens, std::size_t n,
                                                           std::size_t limit) {
  std::vector<IntMatrix> elems{IntMatrix::identity(n)};
  std::set<std::vector<IntVec>> seen{elems[0].to_rows()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const IntMatrix& g : gens) {
      IntMatrix p = mul(g, elems[i]);
      if (seen.insert(p.to_rows()).second) {
        elems.push_back(p);
        if (elems.size() > limit)
          return std::nullopt;
      }
    }
  return elems;
}

// Canonical key of a pointed cone from its generators: primitive images, sorted.
inline std::vector<IntVec> ray_key(const std::vector<IntVec>& rays) {
  std::vector<IntVec> k;
  for (const IntVec& r : rays)
    k.push_back(primitive_of(r));
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntVec random_vec(Rng& rng, std::size_t n, long box) {
  IntVec v(n);
  for (Int& x : v)
    x = uniform(rng, -box, box);
  return v;
}

// Roots reached from the norm -2 vectors in `seeds` by a random walk of
// reflections, each step computed directly from x + (x.a) a.
inline std::vector<IntVec> random_roots(Rng& rng, const IntMatrix& g, const std::vector<IntVec>& seeds,
                                        std::size_t count, std::size_t steps) {
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntVec r = seeds[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(seeds.size()) - 1))];
    for (std::size_t s = 0; s < steps; ++s) {
      const IntVec& a = seeds[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(seeds.size()) - 1))];
      const Int c = inner(g, r, a);
      for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += c * a[i];
    }
    out.push_back(r);
  }
  return out;
}

inline IntMatrix random_signed_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, perm[i]) = uniform(rng, 0, 1) ? 1 : -1;
  return m;
}

// Orbits of `keys` under a finite group: i ~ j when some element maps the
// rays of i onto the rays of j. Classes as sorted index lists.
inline std::set<std::vector<std::size_t>> brute_orbits(const std::vector<std::vector<IntVec>>& keys,
                                                       const std::vector<IntMatrix>& group) {
  const std::size_t m = keys.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < m; ++i)
    for (const IntMatrix& g : group) {
      std::vector<IntVec> image;
      for (const IntVec& r : keys[i])
        image.push_back(apply(g, r));
      image = ray_key(image);
      for (std::size_t j = 0; j < m; ++j)
        if (keys[j] == image)
          parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < m; ++i)
    classes[find(i)].push_back(i);
  std::set<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes)
    out.insert(members);
  return out;
}

}  // namespace oracle

#endif
