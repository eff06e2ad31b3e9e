// Incremental double description (Motzkin) over the integers.
//
// The cone starts as the whole space and is cut by one inequality h.x >= 0
// at a time. The state is a lineality basis plus the extreme rays of the
// pointed part, each ray tagged with the set of constraints it makes tight.
// New rays are formed only from adjacent pairs (combinatorial test), so the
// ray list stays irredundant. All vectors are kept primitive.

#ifndef K3CONE_DOUBLE_DESCRIPTION_HPP_
#define K3CONE_DOUBLE_DESCRIPTION_HPP_

#include "k3cone/integer.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace k3cone {

class DoubleDescription {
public:
  explicit DoubleDescription(std::size_t dim);

  std::size_t dim() const { return dim_; }
  void add_inequality(const IntVec& h);
  void add_equation(const IntVec& h) {
    add_inequality(h);
    add_inequality(negated(h));
  }

  const std::vector<IntVec>& lineality() const { return lineality_; }
  std::vector<IntVec> rays() const;
  std::size_t ray_count() const { return rays_.size(); }
  std::size_t constraint_count() const { return constraints_; }
  bool pointed() const { return lineality_.empty(); }

private:
  struct Ray {
    IntVec v;
    boost::dynamic_bitset<> tight;
  };

  std::size_t dim_;
  std::size_t constraints_ = 0;
  std::vector<IntVec> lineality_;
  std::vector<Ray> rays_;
};

}  // namespace k3cone

#endif
