// Integral lattices given by a symmetric nondegenerate Gram matrix.

#ifndef K3CONE_LATTICE_HPP_
#define K3CONE_LATTICE_HPP_

#include "k3cone/integer.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace k3cone {

using LatticeVector = IntVec;

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::size_t rank() const { return positive + negative; }
  // Signature (1, n-1); rank-1 positive lattices count as hyperbolic.
  bool hyperbolic() const { return positive == 1; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend Signature operator+(Signature a, const Signature& b) {
    return {a.positive + b.positive, a.negative + b.negative};
  }
};

// Value object: a symmetric integer matrix with nonzero determinant.
// Equality compares Gram matrices only; the label is informational.
class GramLattice {
public:
  // Throws PreconditionError for non-square, asymmetric or degenerate input.
  explicit GramLattice(IntMatrix gram, std::string label = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  const Int& determinant() const { return det_; }

  Int inner(const LatticeVector& x, const LatticeVector& y) const;
  Int norm(const LatticeVector& x) const { return inner(x, x); }
  // gram * x, the covector pairing with y as inner(x, y).
  IntVec covector(const LatticeVector& x) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

private:
  IntMatrix gram_;
  std::string label_;
  Int det_;
};

// Standard blocks: "U", "E8MINUS", "DIAG(n)" with n != 0.
GramLattice make_standard(std::string_view name, std::optional<Int> parameter = std::nullopt);
// Parses a single block token such as "DIAG(-4)".
GramLattice make_standard_token(std::string_view token);

GramLattice direct_sum(std::span<const GramLattice> parts);
GramLattice direct_sum_tokens(const std::vector<std::string>& tokens, std::string label = {});

Signature signature(const GramLattice& lattice);
inline Int determinant(const GramLattice& lattice) { return lattice.determinant(); }

bool is_isometry(const GramLattice& lattice, const IntMatrix& m);

// A matrix M with M^T G M = G (checked on construction).
class Isometry {
public:
  Isometry(const GramLattice& lattice, IntMatrix matrix);
  const IntMatrix& matrix() const { return matrix_; }
  LatticeVector apply(const LatticeVector& x) const { return multiply(matrix_, x); }

private:
  IntMatrix matrix_;
};

}  // namespace k3cone

#endif
