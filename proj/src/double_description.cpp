#include "k3cone/double_description.hpp"

#include "k3cone/error.hpp"

#include <algorithm>
#include <utility>

namespace k3cone {

DoubleDescription::DoubleDescription(std::size_t dim) : dim_(dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    lineality_.push_back(std::move(e));
  }
}

std::vector<IntVec> DoubleDescription::rays() const {
  std::vector<IntVec> out;
  out.reserve(rays_.size());
  for (const Ray& r : rays_)
    out.push_back(r.v);
  return out;
}

void DoubleDescription::add_inequality(const IntVec& h) {
  check_dims(h.size(), dim_, "constraint");
  const std::size_t bit = constraints_++;
  for (Ray& r : rays_)
    r.tight.resize(constraints_);

  // Case 1: h is nonzero on the lineality space. Split off one line.
  std::size_t pick = lineality_.size();
  std::vector<Int> lin_val(lineality_.size());
  for (std::size_t i = 0; i < lineality_.size(); ++i) {
    lin_val[i] = dot(h, lineality_[i]);
    if (pick == lineality_.size() && sgn(lin_val[i]) != 0)
      pick = i;
  }
  if (pick < lineality_.size()) {
    IntVec l0 = lineality_[pick];
    Int s0 = lin_val[pick];
    if (sgn(s0) < 0) {
      l0 = negated(std::move(l0));
      s0 = -s0;
    }
    std::vector<IntVec> next;
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i == pick)
        continue;
      if (sgn(lin_val[i]) == 0) {
        next.push_back(lineality_[i]);
        continue;
      }
      IntVec v(dim_);
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] = s0 * lineality_[i][j] - lin_val[i] * l0[j];
      next.push_back(primitive(std::move(v)));
    }
    for (Ray& r : rays_) {
      Int s = dot(h, r.v);
      if (sgn(s) != 0) {
        for (std::size_t j = 0; j < dim_; ++j)
          r.v[j] = s0 * r.v[j] - s * l0[j];
        r.v = primitive(std::move(r.v));
      }
      r.tight.set(bit);
    }
    Ray fresh{std::move(l0), boost::dynamic_bitset<>(constraints_)};
    fresh.tight.set();
    fresh.tight.reset(bit);
    rays_.push_back(std::move(fresh));
    lineality_ = std::move(next);
    return;
  }

  // Case 2: h vanishes on the lineality space; classic Motzkin step.
  std::vector<Int> val(rays_.size());
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    val[i] = dot(h, rays_[i].v);
    if (sgn(val[i]) > 0)
      pos.push_back(i);
    else if (sgn(val[i]) < 0)
      neg.push_back(i);
    else
      rays_[i].tight.set(bit);
  }
  if (neg.empty())
    return;

  const std::size_t pointed_dim = dim_ - lineality_.size();
  const std::size_t min_common = pointed_dim >= 2 ? pointed_dim - 2 : 0;
  std::vector<Ray> created;
  for (std::size_t p : pos) {
    for (std::size_t q : neg) {
      boost::dynamic_bitset<> common = rays_[p].tight & rays_[q].tight;
      if (common.count() < min_common)
        continue;
      bool adjacent = true;
      for (std::size_t r = 0; r < rays_.size() && adjacent; ++r)
        if (r != p && r != q && common.is_subset_of(rays_[r].tight))
          adjacent = false;
      if (!adjacent)
        continue;
      IntVec v(dim_);
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] = val[p] * rays_[q].v[j] - val[q] * rays_[p].v[j];
      common.set(bit);
      created.push_back(Ray{primitive(std::move(v)), std::move(common)});
    }
  }
  std::vector<Ray> kept;
  kept.reserve(rays_.size() - neg.size() + created.size());
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (sgn(val[i]) >= 0)
      kept.push_back(std::move(rays_[i]));
  for (Ray& r : created)
    kept.push_back(std::move(r));
  rays_ = std::move(kept);
}

}  // namespace k3cone
