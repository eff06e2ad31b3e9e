#include "k3cone/vinberg.hpp"

#include "k3cone/double_description.hpp"
#include "k3cone/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>

namespace k3cone {

std::string to_string(Verdict v) {
  return v == Verdict::TwoReflective ? "TWO_REFLECTIVE" : "NOT_DETECTED";
}

std::string to_string(CertificateStatus s) {
  switch (s) {
  case CertificateStatus::Passed: return "passed";
  case CertificateStatus::NotPointed: return "chamber contains a line";
  case CertificateStatus::NotFullDimensional: return "chamber is not full-dimensional";
  case CertificateStatus::NegativeRay: return "extreme ray of negative norm";
  case CertificateStatus::IrrationalCusp: return "chamber endpoint is not rational";
  }
  return "unknown";
}

namespace {

// Isotropic point on the segment from p (norm > 0) towards q (norm < 0), if rational.
std::optional<IntVec> rational_endpoint(const GramLattice& lattice, const IntVec& p, const IntVec& q) {
  const Int a = lattice.norm(p), b = lattice.inner(p, q), c = lattice.norm(q);
  if (sgn(a) <= 0 || sgn(c) >= 0)
    return std::nullopt;
  const Int disc = b * b - a * c;
  const Int s = isqrt(disc);
  if (s * s != disc)
    return std::nullopt;
  // Positive root t = (b + s) / (-c) of a + 2bt + ct^2 = 0.
  const Int num = b + s, den = -c;
  IntVec x(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    x[i] = den * p[i] + num * q[i];
  return primitive(std::move(x));
}

ChamberCertificate certify(const GramLattice& lattice, const DoubleDescription& dd) {
  ChamberCertificate cert;
  if (!dd.pointed()) {
    cert.status = CertificateStatus::NotPointed;
    return cert;
  }
  std::vector<IntVec> rays = dd.rays();
  if (rank(rays, lattice.rank()) < lattice.rank()) {
    cert.status = CertificateStatus::NotFullDimensional;
    cert.rays = std::move(rays);
    return cert;
  }
  cert.status = CertificateStatus::Passed;
  if (lattice.rank() == 2 && rays.size() == 2) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (sgn(lattice.norm(rays[i])) >= 0)
        continue;
      auto end = rational_endpoint(lattice, rays[1 - i], rays[i]);
      if (!end) {
        cert.status = sgn(lattice.norm(rays[1 - i])) > 0 ? CertificateStatus::IrrationalCusp
                                                          : CertificateStatus::NegativeRay;
        break;
      }
      rays[i] = std::move(*end);
    }
  } else {
    for (const IntVec& r : rays)
      if (sgn(lattice.norm(r)) < 0) {
        cert.status = CertificateStatus::NegativeRay;
        break;
      }
  }
  std::sort(rays.begin(), rays.end());
  cert.rays = std::move(rays);
  return cert;
}

// Sign of inner(x, wall) against every accepted wall, with a machine-word
// path for the common case of small coordinates.
class WallTable {
public:
  explicit WallTable(const GramLattice& lattice) : lattice_(lattice) {}

  void add(const Root& wall) {
    IntVec cov = lattice_.covector(wall.vec());
    std::vector<long> small(cov.size());
    for (std::size_t i = 0; i < cov.size(); ++i) {
      if (mpz_sizeinbase(cov[i].get_mpz_t(), 2) > 40)
        small_ok_ = false;
      else
        small[i] = cov[i].get_si();
    }
    covectors_.push_back(std::move(cov));
    small_.push_back(std::move(small));
  }

  std::size_t size() const { return covectors_.size(); }

  // True iff inner(x, w) >= 0 for walls [begin, end).
  bool non_obtuse(const LatticeVector& x, std::size_t begin, std::size_t end) const {
    if (small_ok_) {
      std::array<long, 64> buf;
      std::vector<long> heap;
      long* xs = buf.data();
      if (x.size() > buf.size()) {
        heap.resize(x.size());
        xs = heap.data();
      }
      bool fits = true;
      for (std::size_t i = 0; i < x.size() && fits; ++i) {
        if (mpz_sizeinbase(x[i].get_mpz_t(), 2) > 40)
          fits = false;
        else
          xs[i] = x[i].get_si();
      }
      if (fits) {
        for (std::size_t w = begin; w < end; ++w) {
          __int128 acc = 0;
          const std::vector<long>& c = small_[w];
          for (std::size_t i = 0; i < c.size(); ++i)
            acc += static_cast<__int128>(c[i]) * xs[i];
          if (acc < 0)
            return false;
        }
        return true;
      }
    }
    for (std::size_t w = begin; w < end; ++w)
      if (sgn(dot(covectors_[w], x)) < 0)
        return false;
    return true;
  }

  const IntVec& covector(std::size_t i) const { return covectors_[i]; }

private:
  const GramLattice& lattice_;
  std::vector<IntVec> covectors_;
  std::vector<std::vector<long>> small_;
  bool small_ok_ = true;
};

void check_v0(const GramLattice& lattice, const LatticeVector& v0) {
  check_dims(v0.size(), lattice.rank(), "controlling vector");
  if (sgn(lattice.norm(v0)) <= 0)
    throw PreconditionError("controlling vector " + to_string(v0) + " must have positive norm");
}

void check_hyperbolic(const GramLattice& lattice) {
  Signature s = signature(lattice);
  if (!s.hyperbolic())
    throw PreconditionError("lattice is not hyperbolic: signature (" + std::to_string(s.positive) + "," +
                            std::to_string(s.negative) + ")");
}

}  // namespace

ChamberCertificate chamber_certificate(const GramLattice& lattice, const std::vector<Root>& walls,
                                       const LatticeVector& v0) {
  check_v0(lattice, v0);
  for (const Root& w : walls)
    check_dims(w.vec().size(), lattice.rank(), "wall");
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t j = i + 1; j < walls.size(); ++j)
      if (sgn(lattice.inner(walls[i].vec(), walls[j].vec())) < 0)
        throw PreconditionError("walls " + to_string(walls[i].vec()) + " and " + to_string(walls[j].vec()) +
                                " are obtuse");
  DoubleDescription dd(lattice.rank());
  dd.add_inequality(lattice.covector(v0));
  for (const Root& w : walls)
    dd.add_inequality(lattice.covector(w.vec()));
  return certify(lattice, dd);
}

std::string default_controlling_vector_rule() {
  return "lexicographically first vector of least norm in {2,4,...,20}, entries in [-3,3], at most 4 nonzero";
}

LatticeVector default_controlling_vector(const GramLattice& lattice) {
  const std::size_t n = lattice.rank();
  const IntMatrix& g = lattice.gram();
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i)
    for (std::size_t j = 0; j < n && small; ++j)
      small = mpz_sizeinbase(g(i, j).get_mpz_t(), 2) <= 50;

  std::map<long, std::vector<long>> best;  // norm -> lex-first dense vector
  const std::size_t max_support = std::min<std::size_t>(n, 4);
  std::vector<std::size_t> pos;
  std::vector<long> val;
  std::vector<long> dense(n, 0);

  auto norm_of = [&]() -> std::optional<long> {
    if (small) {
      __int128 acc = 0;
      for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = 0; b < pos.size(); ++b)
          acc += static_cast<__int128>(g(pos[a], pos[b]).get_si()) * val[a] * val[b];
      if (acc < 2 || acc > 20)
        return std::nullopt;
      return static_cast<long>(acc);
    }
    Int acc = 0;
    for (std::size_t a = 0; a < pos.size(); ++a)
      for (std::size_t b = 0; b < pos.size(); ++b)
        acc += g(pos[a], pos[b]) * val[a] * val[b];
    if (acc < 2 || acc > 20)
      return std::nullopt;
    return acc.get_si();
  };

  auto visit = [&]() {
    auto nv = norm_of();
    if (!nv || *nv % 2 != 0)
      return;
    for (std::size_t a = 0; a < pos.size(); ++a)
      dense[pos[a]] = val[a];
    auto it = best.find(*nv);
    if (it == best.end())
      best.emplace(*nv, dense);
    else if (dense < it->second)
      it->second = dense;
    for (std::size_t a = 0; a < pos.size(); ++a)
      dense[pos[a]] = 0;
  };

  // Values run over [-3,3] \ {0} on each support set.
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == pos.size()) {
      visit();
      return;
    }
    for (long v = -3; v <= 3; ++v) {
      if (v == 0)
        continue;
      val[k] = v;
      assign(k + 1);
    }
  };
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      val.assign(pos.size(), 0);
      assign(0);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      pos.push_back(i);
      choose(i + 1, left - 1);
      pos.pop_back();
    }
  };
  for (std::size_t s = 1; s <= max_support; ++s)
    choose(0, s);

  if (best.empty())
    throw PreconditionError("no controlling vector found (" + default_controlling_vector_rule() +
                            "); pass one explicitly");
  const std::vector<long>& v = best.begin()->second;
  LatticeVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = v[i];
  return out;
}

VinbergResult run_vinberg(const GramLattice& lattice, std::optional<LatticeVector> v0_in, const VinbergBudget& budget,
                          const VinbergProgress& progress) {
  check_hyperbolic(lattice);
  if (budget.max_walls == 0 || budget.max_candidates == 0)
    throw PreconditionError("Vinberg budget limits must be positive");

  VinbergResult result;
  result.gram = lattice.gram();
  if (v0_in) {
    check_v0(lattice, *v0_in);
    result.v0 = *v0_in;
    result.v0_source = "given";
  } else {
    result.v0 = default_controlling_vector(lattice);
    result.v0_source = "default: " + default_controlling_vector_rule();
  }
  const LatticeVector& v0 = result.v0;

  DoubleDescription dd(lattice.rank());
  dd.add_inequality(lattice.covector(v0));

  auto finish = [&](const ChamberCertificate& cert) {
    result.verdict = Verdict::TwoReflective;
    result.chamber_rays = cert.rays;
    result.stop_reason = "certified";
    result.spent.walls = result.walls.size();
  };

  if (ChamberCertificate cert = certify(lattice, dd); cert.passed()) {
    finish(cert);
    return result;
  }

  const RootSlicer slicer(lattice, v0);
  WallTable table(lattice);

  // Accepts the sorted survivors of one level; true when the run is over.
  auto accept_level = [&](const std::vector<LatticeVector>& survivors, std::size_t level_start, LevelLog& log) {
    for (const LatticeVector& a : survivors) {
      if (!table.non_obtuse(a, level_start, table.size()))
        continue;
      Root root(lattice, a);
      table.add(root);
      result.walls.push_back(std::move(root));
      ++log.accepted;
      dd.add_inequality(table.covector(table.size() - 1));
      if (ChamberCertificate cert = certify(lattice, dd); cert.passed()) {
        finish(cert);
        return true;
      }
      if (result.walls.size() >= budget.max_walls) {
        result.stop_reason = "max_walls";
        return true;
      }
    }
    return false;
  };

  for (std::size_t level = 0; level <= budget.max_level; ++level) {
    LevelLog log;
    log.level = level;
    result.spent.last_level = level;
    const std::size_t level_start = table.size();
    std::vector<LatticeVector> survivors;
    bool over_budget = false;
    slicer.for_each(Int(static_cast<unsigned long>(level)), [&](const LatticeVector& a) {
      if (result.spent.candidates >= budget.max_candidates) {
        over_budget = true;
        return false;
      }
      ++result.spent.candidates;
      ++log.candidates;
      if (level == 0 ? lex_positive(a) : table.non_obtuse(a, 0, level_start))
        survivors.push_back(a);
      return true;
    });
    if (over_budget) {
      log.complete = false;
      result.transcript.push_back(log);
      if (progress)
        progress(log, result.walls.size());
      result.stop_reason = "max_candidates";
      result.spent.walls = result.walls.size();
      return result;
    }
    std::sort(survivors.begin(), survivors.end());
    const bool done = accept_level(survivors, level_start, log);
    result.transcript.push_back(log);
    if (progress)
      progress(log, result.walls.size());
    if (done) {
      result.spent.walls = result.walls.size();
      return result;
    }
  }
  result.stop_reason = "max_level";
  result.spent.walls = result.walls.size();
  return result;
}

AutFinitenessReport aut_finiteness_report(const GramLattice& lattice, const VinbergResult& result) {
  if (!(lattice.gram() == result.gram))
    throw PreconditionError("Vinberg result was computed for a different lattice");
  if (result.verdict == Verdict::TwoReflective)
    return {true, "Aut(S) finite for any K3 surface S with Pic(S) = L (trivial Galois action)"};
  return {false, "finiteness not certified at this budget"};
}

}  // namespace k3cone
