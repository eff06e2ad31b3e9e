// Vinberg's algorithm for the (-2)-reflection group of a hyperbolic lattice:
// walls are accepted level by level with respect to a controlling vector v0
// and the chamber cut out so far is tested for finite volume after every
// acceptance.

#ifndef K3CONE_VINBERG_HPP_
#define K3CONE_VINBERG_HPP_

#include "k3cone/roots.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace k3cone {

struct VinbergBudget {
  std::size_t max_walls = 64;
  std::size_t max_level = 20;
  std::uint64_t max_candidates = 1'000'000;
};

enum class Verdict { TwoReflective, NotDetected };
std::string to_string(Verdict v);  // "TWO_REFLECTIVE" / "NOT_DETECTED"

struct LevelLog {
  std::size_t level = 0;
  std::uint64_t candidates = 0;  // roots enumerated on this level
  std::size_t accepted = 0;
  bool complete = true;          // false when the candidate budget cut the level short
};

struct BudgetSpent {
  std::size_t walls = 0;
  std::size_t last_level = 0;    // highest level entered
  std::uint64_t candidates = 0;
};

struct VinbergResult {
  Verdict verdict = Verdict::NotDetected;
  IntMatrix gram;
  LatticeVector v0;
  std::string v0_source;                 // "given" or a description of the default search
  std::vector<Root> walls;               // in acceptance order
  std::vector<IntVec> chamber_rays;      // canonical, filled when certified
  std::vector<LevelLog> transcript;
  BudgetSpent spent;
  std::string stop_reason;               // certified, max_walls, max_level, max_candidates
};

enum class CertificateStatus { Passed, NotPointed, NotFullDimensional, NegativeRay, IrrationalCusp };
std::string to_string(CertificateStatus s);

struct ChamberCertificate {
  CertificateStatus status = CertificateStatus::NotPointed;
  // Extreme rays of {x : x.v0 >= 0, x.a >= 0 for all walls a}; on rank 2
  // a negative ray is replaced by the isotropic endpoint when it is rational.
  std::vector<IntVec> rays;
  bool passed() const { return status == CertificateStatus::Passed; }
};

// Walls must be pairwise non-obtuse and v0 must have positive norm.
ChamberCertificate chamber_certificate(const GramLattice& lattice, const std::vector<Root>& walls,
                                       const LatticeVector& v0);
inline bool finite_volume_check(const GramLattice& lattice, const std::vector<Root>& walls,
                                const LatticeVector& v0) {
  return chamber_certificate(lattice, walls, v0).passed();
}

// Lexicographically first vector of the smallest norm in {2, 4, ..., 20}
// among vectors with entries in [-3, 3] and at most 4 nonzero entries.
LatticeVector default_controlling_vector(const GramLattice& lattice);
std::string default_controlling_vector_rule();

using VinbergProgress = std::function<void(const LevelLog&, std::size_t walls_so_far)>;

VinbergResult run_vinberg(const GramLattice& lattice, std::optional<LatticeVector> v0 = std::nullopt,
                          const VinbergBudget& budget = {}, const VinbergProgress& progress = {});

struct AutFinitenessReport {
  bool finite = false;
  std::string statement;
};

// Throws when `result` was not produced from `lattice`.
AutFinitenessReport aut_finiteness_report(const GramLattice& lattice, const VinbergResult& result);

}  // namespace k3cone

#endif
