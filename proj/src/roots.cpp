#include "k3cone/roots.hpp"

#include "k3cone/error.hpp"

#include <algorithm>
#include <utility>

namespace k3cone {

Root::Root(const GramLattice& lattice, LatticeVector vec) : vec_(std::move(vec)) {
  check_dims(vec_.size(), lattice.rank(), "root");
  if (lattice.norm(vec_) != -2)
    fail("vector " + to_string(vec_) + " has norm " + lattice.norm(vec_).get_str() + ", not -2");
}

LatticeVector reflect(const GramLattice& lattice, const Root& alpha, const LatticeVector& x) {
  check_dims(x.size(), lattice.rank(), "reflect");
  check_dims(alpha.vec().size(), lattice.rank(), "reflect");
  if (lattice.norm(alpha.vec()) != -2)
    fail("reflect: " + to_string(alpha.vec()) + " is not a root of this lattice");
  const Int c = lattice.inner(x, alpha.vec());
  LatticeVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += c * alpha.vec()[i];
  return out;
}

Isometry reflection_matrix(const GramLattice& lattice, const Root& alpha) {
  const std::size_t n = lattice.rank();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    LatticeVector e(n);
    e[j] = 1;
    LatticeVector image = reflect(lattice, alpha, e);
    for (std::size_t i = 0; i < n; ++i)
      m(i, j) = image[i];
  }
  return Isometry(lattice, std::move(m));
}

RootSlicer::RootSlicer(const GramLattice& lattice, LatticeVector v0)
  : lattice_(lattice), v0_(std::move(v0)) {
  check_dims(v0_.size(), lattice_.rank(), "controlling vector");
  if (!signature(lattice_).hyperbolic())
    fail("lattice is not hyperbolic (signature must be (1, rank-1))");
  if (lattice_.norm(v0_) <= 0)
    fail("controlling vector " + to_string(v0_) + " must have positive norm");

  const std::size_t n = lattice_.rank();
  v0_covector_ = lattice_.covector(v0_);
  IntMatrix w(1, n);
  for (std::size_t j = 0; j < n; ++j)
    w(0, j) = v0_covector_[j];
  ColumnReduction cr = column_reduce(w);
  gcd_ = cr.h(0, 0);
  unit_ = cr.u.col(0);
  basis_ = IntMatrix(n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      basis_(i, j - 1) = cr.u(i, j);
  IntMatrix form = multiply(transpose(basis_), multiply(lattice_.gram(), basis_));
  neg_form_ = IntMatrix(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      neg_form_(i, j) = -form(i, j);
}

namespace {

struct SliceSearch {
  std::size_t m;
  IntMatrix elim;        // Bareiss-eliminated augmented matrix
  std::vector<Int> piv;  // elim(k,k)
  std::vector<Int> weight;
  IntVec y;
  const IntMatrix* basis;
  const LatticeVector* offset;
  const std::function<bool(const LatticeVector&)>* visit;
  std::size_t visited = 0;
  bool stopped = false;

  void run(std::size_t k_plus_one, const Int& remaining) {
    if (stopped)
      return;
    if (k_plus_one == 0) {
      if (sgn(remaining) != 0)
        return;
      LatticeVector x = *offset;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (sgn(y[j]) != 0 && sgn((*basis)(i, j)) != 0)
            x[i] += (*basis)(i, j) * y[j];
      ++visited;
      if (!(*visit)(x))
        stopped = true;
      return;
    }
    const std::size_t k = k_plus_one - 1;
    Int e = elim(k, m);
    for (std::size_t j = k + 1; j < m; ++j)
      if (sgn(y[j]) != 0)
        e += elim(k, j) * y[j];
    const Int r = isqrt(floor_div(remaining, weight[k]));
    const Int lo = ceil_div(-r - e, piv[k]);
    const Int hi = floor_div(r - e, piv[k]);
    Int l;
    for (Int t = lo; t <= hi && !stopped; ++t) {
      l = piv[k] * t + e;
      y[k] = t;
      run(k, remaining - weight[k] * l * l);
    }
    y[k] = 0;
  }
};

}  // namespace

std::size_t RootSlicer::for_each(const Int& level,
                                 const std::function<bool(const LatticeVector&)>& visit) const {
  Int quotient, rem;
  mpz_fdiv_qr(quotient.get_mpz_t(), rem.get_mpz_t(), level.get_mpz_t(), gcd_.get_mpz_t());
  if (sgn(rem) != 0)
    return 0;
  const std::size_t n = lattice_.rank();
  const std::size_t m = n - 1;
  const LatticeVector offset = scaled(unit_, quotient);

  // -(x0 + B y)^2 = y^T A y + 2 b^T y + c with A = -B^T G B; we need it = 2.
  const IntVec g_offset = lattice_.covector(offset);
  SliceSearch s;
  s.m = m;
  s.elim = IntMatrix(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      s.elim(i, j) = neg_form_(i, j);
    Int b = 0;
    for (std::size_t r = 0; r < n; ++r)
      b -= basis_(r, i) * g_offset[r];
    s.elim(i, m) = s.elim(m, i) = b;
  }
  s.elim(m, m) = -dot(offset, g_offset) - 2;

  // (y,1)^T M (y,1) = sum_k l_k^2 / (d_k d_{k+1}) + det(M) / d_m
  std::vector<Int> prev(m + 1, Int(1));
  s.piv.resize(m);
  Int p = 1;
  for (std::size_t k = 0; k < m; ++k) {
    prev[k] = p;
    for (std::size_t i = k + 1; i <= m; ++i)
      for (std::size_t j = k + 1; j <= m; ++j) {
        Int v = s.elim(k, k) * s.elim(i, j) - s.elim(i, k) * s.elim(k, j);
        mpz_divexact(s.elim(i, j).get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      }
    s.piv[k] = s.elim(k, k);
    p = s.piv[k];
  }
  const Int det_aug = s.elim(m, m);
  const Int d_m = p;

  Int delta = d_m;
  for (std::size_t k = 0; k < m; ++k) {
    Int den = prev[k] * s.piv[k];
    mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), den.get_mpz_t());
  }
  s.weight.resize(m);
  for (std::size_t k = 0; k < m; ++k)
    s.weight[k] = delta / (prev[k] * s.piv[k]);
  const Int target = -det_aug * (delta / d_m);
  if (sgn(target) < 0)
    return 0;

  s.y.assign(m, Int(0));
  s.basis = &basis_;
  s.offset = &offset;
  s.visit = &visit;
  s.run(m, target);
  return s.visited;
}

std::vector<Root> RootSlicer::roots(const Int& level) const {
  std::vector<LatticeVector> found;
  for_each(level, [&](const LatticeVector& x) {
    found.push_back(x);
    return true;
  });
  std::sort(found.begin(), found.end());
  std::vector<Root> out;
  out.reserve(found.size());
  for (LatticeVector& x : found)
    out.emplace_back(lattice_, std::move(x));
  return out;
}

std::vector<Root> enumerate_roots_at_level(const GramLattice& lattice, const LatticeVector& v0,
                                           const Int& level) {
  if (sgn(level) < 0)
    fail("level must be nonnegative");
  return RootSlicer(lattice, v0).roots(level);
}

}  // namespace k3cone
