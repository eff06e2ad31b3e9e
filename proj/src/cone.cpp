#include "k3cone/cone.hpp"

#include "k3cone/double_description.hpp"
#include "k3cone/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace k3cone {

namespace {

std::vector<IntVec> sorted_unique(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<IntVec> canonical_modulo(const std::vector<IntVec>& vecs, const std::vector<IntVec>& rref) {
  std::vector<IntVec> out;
  out.reserve(vecs.size());
  for (const IntVec& v : vecs) {
    IntVec r = reduce_modulo(v, rref);
    if (!is_zero(r))
      out.push_back(std::move(r));
  }
  return sorted_unique(std::move(out));
}

struct Description {
  std::vector<IntVec> generators;  // extreme rays
  std::vector<IntVec> lines;       // lineality
};

Description run_dd(std::size_t dim, const std::vector<IntVec>& inequalities, const std::vector<IntVec>& equations) {
  DoubleDescription dd(dim);
  for (const IntVec& e : equations)
    dd.add_equation(e);
  for (const IntVec& h : inequalities)
    dd.add_inequality(h);
  return {dd.rays(), dd.lineality()};
}

void guard(std::size_t dim, std::optional<std::size_t> dim_guard) {
  const std::size_t limit = dim_guard.value_or(default_dim_guard());
  if (dim > limit)
    throw PreconditionError("ambient dimension " + std::to_string(dim) + " exceeds the guard " +
                            std::to_string(limit) + " (set K3CONE_DIM_GUARD to override)");
}

void check_all(const std::vector<IntVec>& vs, std::size_t dim, const char* what) {
  for (const IntVec& v : vs)
    check_dims(v.size(), dim, what);
}

}  // namespace

RationalCone RationalCone::from_rays(std::size_t ambient_dim, std::vector<IntVec> rays,
                                     std::vector<IntVec> lineality) {
  check_all(rays, ambient_dim, "cone ray");
  check_all(lineality, ambient_dim, "cone lineality vector");
  // Facets are the extreme rays of the dual; equations its lineality.
  Description dual = run_dd(ambient_dim, rays, lineality);
  Description primal = run_dd(ambient_dim, dual.generators, dual.lines);
  RationalCone c;
  c.ambient_dim_ = ambient_dim;
  c.lineality_ = rref_basis(primal.lines, ambient_dim);
  c.rays_ = canonical_modulo(primal.generators, c.lineality_);
  c.equations_ = rref_basis(dual.lines, ambient_dim);
  c.facets_ = canonical_modulo(dual.generators, c.equations_);
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t ambient_dim, std::vector<IntVec> facets,
                                             std::vector<IntVec> equations) {
  check_all(facets, ambient_dim, "cone facet");
  check_all(equations, ambient_dim, "cone equation");
  Description primal = run_dd(ambient_dim, facets, equations);
  Description dual = run_dd(ambient_dim, primal.generators, primal.lines);
  RationalCone c;
  c.ambient_dim_ = ambient_dim;
  c.lineality_ = rref_basis(primal.lines, ambient_dim);
  c.rays_ = canonical_modulo(primal.generators, c.lineality_);
  c.equations_ = rref_basis(dual.lines, ambient_dim);
  c.facets_ = canonical_modulo(dual.generators, c.equations_);
  return c;
}

bool RationalCone::contains(const IntVec& x) const {
  check_dims(x.size(), ambient_dim_, "cone membership");
  for (const IntVec& e : equations_)
    if (sgn(dot(e, x)) != 0)
      return false;
  for (const IntVec& f : facets_)
    if (sgn(dot(f, x)) < 0)
      return false;
  return true;
}

bool RationalCone::contains_in_relative_interior(const IntVec& x) const {
  check_dims(x.size(), ambient_dim_, "cone membership");
  for (const IntVec& e : equations_)
    if (sgn(dot(e, x)) != 0)
      return false;
  for (const IntVec& f : facets_)
    if (sgn(dot(f, x)) <= 0)
      return false;
  return true;
}

IntVec RationalCone::interior_point() const {
  IntVec p(ambient_dim_);
  for (const IntVec& r : rays_)
    p = add(p, r);
  return p;
}

RationalCone face_cone(const RationalCone& cone, const ConeFace& face) {
  std::vector<IntVec> rays;
  for (std::size_t i : face.rays)
    rays.push_back(cone.rays().at(i));
  return RationalCone::from_rays(cone.ambient_dim(), std::move(rays), cone.lineality());
}

std::size_t default_dim_guard() {
  if (const char* env = std::getenv("K3CONE_DIM_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return 12;
}

RationalCone dual_cone(std::size_t ambient_dim, const std::vector<IntVec>& rays,
                       std::optional<std::size_t> dim_guard) {
  guard(ambient_dim, dim_guard);
  for (const IntVec& r : rays) {
    check_dims(r.size(), ambient_dim, "dual_cone input");
    if (is_zero(r))
      throw PreconditionError("dual_cone: zero vector among the inputs");
  }
  return RationalCone::from_inequalities(ambient_dim, rays);
}

std::vector<ConeFace> faces(const RationalCone& cone, std::size_t codim, std::optional<std::size_t> dim_guard) {
  guard(cone.ambient_dim(), dim_guard);
  if (codim > cone.dim())
    throw PreconditionError("codimension " + std::to_string(codim) + " exceeds cone dimension " +
                            std::to_string(cone.dim()));
  const auto& rays = cone.rays();
  const auto& facets = cone.facets();
  std::vector<std::vector<bool>> tight(facets.size(), std::vector<bool>(rays.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t r = 0; r < rays.size(); ++r)
      tight[f][r] = sgn(dot(facets[f], rays[r])) == 0;

  auto face_dim = [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVec> gens = cone.lineality();
    for (std::size_t r : subset)
      gens.push_back(rays[r]);
    return rank(gens, cone.ambient_dim());
  };
  auto make_face = [&](std::vector<std::size_t> subset, std::size_t dim) {
    ConeFace face;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t r) { return tight[f][r]; }))
        face.active_facets.push_back(f);
    face.rays = std::move(subset);
    face.dim = dim;
    return face;
  };

  std::vector<std::size_t> all(rays.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<ConeFace> level{make_face(all, cone.dim())};
  for (std::size_t c = 1; c <= codim; ++c) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<ConeFace> next;
    const std::size_t target = cone.dim() - c;
    for (const ConeFace& parent : level) {
      for (std::size_t f = 0; f < facets.size(); ++f) {
        if (std::binary_search(parent.active_facets.begin(), parent.active_facets.end(), f))
          continue;
        std::vector<std::size_t> subset;
        for (std::size_t r : parent.rays)
          if (tight[f][r])
            subset.push_back(r);
        if (seen.contains(subset))
          continue;
        if (face_dim(subset) != target)
          continue;
        seen.insert(subset);
        next.push_back(make_face(std::move(subset), target));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const ConeFace& a, const ConeFace& b) { return a.active_facets < b.active_facets; });
    level = std::move(next);
  }
  return level;
}

std::vector<IntVec> fixed_subspace(std::span<const IntMatrix> generators) {
  if (generators.empty())
    throw PreconditionError("fixed_subspace needs at least one generator");
  const std::size_t n = generators.front().rows();
  std::vector<IntVec> rows;
  for (const IntMatrix& m : generators) {
    if (!m.square() || m.rows() != n)
      throw DimensionMismatch("fixed_subspace: generators must be square of equal size");
    for (std::size_t i = 0; i < n; ++i) {
      IntVec r = m.row(i);
      r[i] -= 1;
      rows.push_back(std::move(r));
    }
  }
  return integer_kernel(IntMatrix::from_rows(rows));
}

RationalCone intersect_with_subspace(const RationalCone& cone, const std::vector<IntVec>& basis,
                                     std::optional<std::size_t> dim_guard) {
  guard(cone.ambient_dim(), dim_guard);
  check_all(basis, cone.ambient_dim(), "subspace basis vector");
  if (basis.empty() || rank(basis, cone.ambient_dim()) != basis.size())
    throw PreconditionError("intersect_with_subspace: basis vectors are dependent or empty");
  const IntMatrix b = matrix_from_columns(basis, cone.ambient_dim());
  const IntMatrix bt = transpose(b);
  std::vector<IntVec> facets, equations;
  for (const IntVec& f : cone.facets())
    facets.push_back(multiply(bt, f));
  for (const IntVec& e : cone.equations())
    equations.push_back(multiply(bt, e));
  return RationalCone::from_inequalities(basis.size(), std::move(facets), std::move(equations));
}

RationalCone act(const IntMatrix& m, const RationalCone& cone, std::optional<std::size_t> dim_guard) {
  guard(cone.ambient_dim(), dim_guard);
  if (!m.square() || m.rows() != cone.ambient_dim())
    throw DimensionMismatch("act: matrix size does not match the cone");
  if (sgn(determinant(m)) == 0)
    throw PreconditionError("act: matrix is singular");
  std::vector<IntVec> rays, lines;
  for (const IntVec& r : cone.rays())
    rays.push_back(multiply(m, r));
  for (const IntVec& l : cone.lineality())
    lines.push_back(multiply(m, l));
  return RationalCone::from_rays(cone.ambient_dim(), std::move(rays), std::move(lines));
}

OrbitPartition orbit_faces(const std::vector<RationalCone>& faces, std::span<const IntMatrix> generators,
                           std::size_t word_budget, std::optional<std::size_t> dim_guard) {
  if (faces.empty())
    return {};
  const std::size_t dim = faces.front().ambient_dim();
  for (const RationalCone& f : faces)
    if (f.ambient_dim() != dim)
      throw DimensionMismatch("orbit_faces: faces live in different ambient dimensions");
  guard(dim, dim_guard);

  // Inverses up to a positive scalar: sign(det) * adj(M).
  std::vector<IntMatrix> moves;
  for (const IntMatrix& g : generators) {
    if (!g.square() || g.rows() != dim)
      throw DimensionMismatch("orbit_faces: generator size does not match the faces");
    Int d = determinant(g);
    if (sgn(d) == 0)
      throw PreconditionError("orbit_faces: generator is singular");
    IntMatrix inv = adjugate(g);
    if (sgn(d) < 0)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          inv(i, j) = -inv(i, j);
    moves.push_back(g);
    if (!(inv == g))
      moves.push_back(std::move(inv));
  }

  std::map<RationalCone, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < faces.size(); ++i)
    index[faces[i]].push_back(i);

  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> closed(faces.size(), false);

  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (closed[find(i)])
      continue;
    std::set<RationalCone> seen{faces[i]};
    std::vector<RationalCone> frontier{faces[i]};
    bool complete = false;
    for (std::size_t depth = 0; depth <= word_budget; ++depth) {
      if (frontier.empty()) {
        complete = true;
        break;
      }
      if (depth == word_budget)
        break;
      std::vector<RationalCone> next;
      for (const RationalCone& c : frontier)
        for (const IntMatrix& g : moves) {
          RationalCone image = act(g, c, dim_guard);
          if (seen.insert(image).second)
            next.push_back(std::move(image));
        }
      frontier = std::move(next);
    }
    for (const RationalCone& c : seen) {
      auto it = index.find(c);
      if (it == index.end())
        continue;
      for (std::size_t j : it->second) {
        std::size_t a = find(i), b = find(j);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          closed[std::min(a, b)] = closed[a] || closed[b];
        }
      }
    }
    if (complete)
      closed[find(i)] = true;
  }

  OrbitPartition out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::size_t root = find(i);
    auto [it, fresh] = slot.try_emplace(root, out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.complete.push_back(closed[root]);
      out.representatives.push_back(i);
    }
    out.classes[it->second].push_back(i);
  }
  return out;
}

bool ChamberComplexReport::adjacency_ok() const {
  return std::all_of(adjacencies.begin(), adjacencies.end(), [](const Adjacency& a) { return a.ok; });
}

ChamberComplexReport validate_chamber_complex(const ChamberComplex& complex, std::optional<std::size_t> dim_guard) {
  ChamberComplexReport report;
  const std::size_t dim = complex.shared_ray.size();
  for (const RationalCone& c : complex.chambers)
    if (c.ambient_dim() != dim)
      throw DimensionMismatch("chamber complex: chamber dimension differs from the shared ray");
  guard(dim, dim_guard);

  for (std::size_t i = 0; i < complex.chambers.size(); ++i)
    if (!complex.chambers[i].contains(complex.shared_ray))
      report.missing_shared_ray.push_back(i);

  auto meet = [&](std::size_t i, std::size_t j) {
    const RationalCone& a = complex.chambers[i];
    const RationalCone& b = complex.chambers[j];
    std::vector<IntVec> f = a.facets(), e = a.equations();
    f.insert(f.end(), b.facets().begin(), b.facets().end());
    e.insert(e.end(), b.equations().begin(), b.equations().end());
    return RationalCone::from_inequalities(dim, std::move(f), std::move(e));
  };

  for (std::size_t i = 0; i < complex.chambers.size(); ++i)
    for (std::size_t j = i + 1; j < complex.chambers.size(); ++j) {
      IntVec w = meet(i, j).interior_point();
      if (complex.chambers[i].contains_in_relative_interior(w) &&
          complex.chambers[j].contains_in_relative_interior(w))
        report.overlaps.push_back({i, j, std::move(w)});
    }

  auto is_facet_of = [&](const RationalCone& face, const RationalCone& chamber) {
    if (face.dim() + 1 != chamber.dim())
      return false;
    for (const ConeFace& f : faces(chamber, 1, dim_guard))
      if (face_cone(chamber, f) == face)
        return true;
    return false;
  };

  for (auto [i, j] : complex.adjacency) {
    ChamberComplexReport::Adjacency adj{i, j, false, std::nullopt, {}};
    if (i >= complex.chambers.size() || j >= complex.chambers.size() || i == j) {
      adj.detail = "invalid chamber index";
      report.adjacencies.push_back(std::move(adj));
      continue;
    }
    RationalCone common = meet(i, j);
    if (!is_facet_of(common, complex.chambers[i]) || !is_facet_of(common, complex.chambers[j])) {
      adj.detail = "intersection has dimension " + std::to_string(common.dim()) +
                   " and is not a common facet";
    } else {
      adj.ok = true;
    }
    adj.common_facet = std::move(common);
    report.adjacencies.push_back(std::move(adj));
  }
  return report;
}

}  // namespace k3cone
