#include "k3cone/lattice.hpp"

#include "k3cone/error.hpp"

#include <array>
#include <utility>

namespace k3cone {

GramLattice::GramLattice(IntMatrix gram, std::string label)
  : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() == 0 || !gram_.square())
    fail("Gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        fail("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  det_ = k3cone::determinant(gram_);
  if (sgn(det_) == 0)
    fail("Gram matrix is degenerate (determinant 0)");
}

Int GramLattice::inner(const LatticeVector& x, const LatticeVector& y) const {
  check_dims(x.size(), rank(), "inner product");
  check_dims(y.size(), rank(), "inner product");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (sgn(y[j]) != 0 && sgn(gram_(i, j)) != 0)
        s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

IntVec GramLattice::covector(const LatticeVector& x) const {
  check_dims(x.size(), rank(), "covector");
  return multiply(gram_, x);
}

namespace {

IntMatrix e8_minus() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
  constexpr std::array<std::pair<int, int>, 7> edges{{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    g(i, i) = -2;
  for (auto [a, b] : edges)
    g(a, b) = g(b, a) = 1;
  return g;
}

}  // namespace

GramLattice make_standard(std::string_view name, std::optional<Int> parameter) {
  if (name == "U") {
    IntMatrix g(2, 2);
    g(0, 1) = g(1, 0) = 1;
    return GramLattice(std::move(g), "U");
  }
  if (name == "E8MINUS")
    return GramLattice(e8_minus(), "E8MINUS");
  if (name == "DIAG") {
    if (!parameter)
      fail("DIAG needs an integer parameter");
    if (sgn(*parameter) == 0)
      fail("DIAG(0) is degenerate");
    IntMatrix g(1, 1);
    g(0, 0) = *parameter;
    return GramLattice(std::move(g), "DIAG(" + parameter->get_str() + ")");
  }
  fail("unknown lattice block '" + std::string(name) + "'");
}

GramLattice make_standard_token(std::string_view token) {
  if (token.starts_with("DIAG(") && token.ends_with(")")) {
    std::string arg(token.substr(5, token.size() - 6));
    Int n;
    if (arg.empty() || n.set_str(arg, 10) != 0)
      throw ParseError("bad DIAG parameter in '" + std::string(token) + "'");
    return make_standard("DIAG", n);
  }
  return make_standard(token);
}

GramLattice direct_sum(std::span<const GramLattice> parts) {
  if (parts.empty())
    fail("direct sum of an empty list");
  std::size_t n = 0;
  for (const GramLattice& p : parts)
    n += p.rank();
  IntMatrix g(n, n);
  std::string label;
  std::size_t off = 0;
  for (const GramLattice& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j)
        g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
    if (!label.empty())
      label += " + ";
    label += p.label();
  }
  return GramLattice(std::move(g), std::move(label));
}

GramLattice direct_sum_tokens(const std::vector<std::string>& tokens, std::string label) {
  std::vector<GramLattice> parts;
  for (const std::string& t : tokens)
    parts.push_back(make_standard_token(t));
  GramLattice sum = direct_sum(parts);
  if (label.empty())
    return sum;
  return GramLattice(sum.gram(), std::move(label));
}

Signature signature(const GramLattice& lattice) {
  // Congruence diagonalization over Q with symmetric pivoting.
  const std::size_t n = lattice.rank();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = lattice.gram()(i, j);

  auto swap_sym = [&](std::size_t p, std::size_t q) {
    for (std::size_t c = 0; c < n; ++c)
      std::swap(a(p, c), a(q, c));
    for (std::size_t r = 0; r < n; ++r)
      std::swap(a(r, p), a(r, q));
  };
  auto add_sym = [&](std::size_t dst, std::size_t src) {  // e_dst += e_src
    for (std::size_t c = 0; c < n; ++c)
      a(dst, c) += a(src, c);
    for (std::size_t r = 0; r < n; ++r)
      a(r, dst) += a(r, src);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, p)) == 0)
        ++p;
      if (p < n) {
        swap_sym(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && sgn(a(k, q)) == 0)
          ++q;
        if (q == n)
          fail("degenerate form in signature()");
        add_sym(k, q);  // a(k,k) becomes 2 a(k,q) != 0
      }
    }
    const Rational piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0)
        continue;
      Rational f = a(i, k) / piv;
      for (std::size_t j = k; j < n; ++j)
        a(i, j) -= f * a(k, j);
      for (std::size_t r = k; r < n; ++r)
        a(r, i) = (r == i) ? a(r, i) : a(i, r);
    }
    for (std::size_t i = k + 1; i < n; ++i)
      a(k, i) = a(i, k) = 0;
    (sgn(piv) > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

bool is_isometry(const GramLattice& lattice, const IntMatrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank())
    throw DimensionMismatch("is_isometry: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", lattice rank " + std::to_string(lattice.rank()));
  return multiply(transpose(m), multiply(lattice.gram(), m)) == lattice.gram();
}

Isometry::Isometry(const GramLattice& lattice, IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!is_isometry(lattice, matrix_))
    fail("matrix does not preserve the Gram form");
}

}  // namespace k3cone
