#include "oracles.hpp"

#include "k3cone/error.hpp"
#include "k3cone/roots.hpp"

#include "doctest.h"

using namespace k3cone;

namespace {

// Norm -2 vectors of the form e_i or e_i +- e_j.
std::vector<IntVec> simple_seeds(const GramLattice& l) {
  const std::size_t n = l.rank();
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    if (l.norm(e) == -2)
      out.push_back(e);
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        IntVec f = e;
        f[j] = s;
        if (l.norm(f) == -2)
          out.push_back(f);
      }
  }
  return out;
}

IntVec unit(std::size_t n, std::initializer_list<std::size_t> ones) {
  IntVec v(n);
  for (std::size_t i : ones)
    v[i] = 1;
  return v;
}

std::vector<IntVec> vecs(const std::vector<Root>& roots) {
  std::vector<IntVec> out;
  for (const Root& r : roots)
    out.push_back(r.vec());
  return out;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("reflection laws on random roots") {
  oracle::Rng rng(31);
  for (const auto& tokens : std::vector<std::vector<std::string>>{{"U"}, {"U", "DIAG(-2)"}, {"U", "E8MINUS"}}) {
    const GramLattice l = direct_sum_tokens(tokens);
    const std::size_t n = l.rank();
    const IntMatrix identity = IntMatrix::identity(n);
    for (const IntVec& a : oracle::random_roots(rng, l.gram(), simple_seeds(l), 60, 6)) {
      REQUIRE(l.norm(a) == -2);
      const Root alpha(l, a);
      const IntVec x = oracle::random_vec(rng, n, 6);
      const IntVec y = oracle::random_vec(rng, n, 6);
      const IntVec sx = reflect(l, alpha, x);
      CHECK(l.inner(sx, reflect(l, alpha, y)) == l.inner(x, y));
      CHECK(reflect(l, alpha, sx) == x);
      CHECK(reflect(l, alpha, a) == scaled(a, Int(-1)));
      // A vector orthogonal to the root is fixed.
      IntVec w = add(scaled(x, Int(2)), scaled(a, l.inner(x, a)));
      REQUIRE(l.inner(w, a) == 0);
      CHECK(reflect(l, alpha, w) == w);
      const Isometry m = reflection_matrix(l, alpha);
      CHECK(is_isometry(l, m.matrix()));
      CHECK(oracle::mul(m.matrix(), m.matrix()) == identity);
      CHECK(m.apply(x) == sx);
    }
  }
}

TEST_CASE("reflection matrix of a rank one lattice") {
  const GramLattice l = make_standard_token("DIAG(-2)");
  CHECK(reflection_matrix(l, Root(l, {1})).matrix() == IntMatrix::from_rows({{-1}}));
}

TEST_CASE("root construction requires norm -2") {
  const GramLattice u = make_standard("U");
  CHECK_THROWS_AS(Root(u, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(Root(u, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(Root(u, {1, -1, 0}), DimensionMismatch);
}

TEST_CASE("level enumeration agrees with a box search") {
  const std::vector<IntMatrix> family{
      IntMatrix::from_rows({{0, 1}, {1, 0}}),
      IntMatrix::from_rows({{2, 0}, {0, -2}}),
      IntMatrix::from_rows({{2, 1}, {1, -2}}),
      IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}),
      IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -4}}),
      IntMatrix::from_rows({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}}),
      IntMatrix::from_rows({{4, 0, 0}, {0, -2, -1}, {0, -1, -2}}),
      IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -2}}),
      IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -6}}),
      IntMatrix::from_rows({{6, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}),
  };
  oracle::Rng rng(37);
  std::size_t compared = 0, inside = 0;
  for (const IntMatrix& g : family) {
    const GramLattice l(g);
    const std::size_t n = l.rank();
    // Controlling vectors of positive norm with small entries.
    std::vector<IntVec> controls;
    while (controls.size() < 2) {
      IntVec v = oracle::random_vec(rng, n, 2);
      if (l.norm(v) > 0 && std::find(controls.begin(), controls.end(), v) == controls.end())
        controls.push_back(v);
    }
    for (const IntVec& v0 : controls)
      for (long level = 0; level <= 3; ++level) {
        const std::vector<IntVec> got = vecs(enumerate_roots_at_level(l, v0, Int(level)));
        for (const IntVec& r : got) {
          CHECK(l.norm(r) == -2);
          CHECK(l.inner(r, v0) == level);
        }
        std::vector<IntVec> boxed;
        for (const IntVec& r : got)
          if (std::all_of(r.begin(), r.end(), [](const Int& c) { return abs(c) <= 5; }))
            boxed.push_back(r);
        inside += boxed.size() == got.size();
        CHECK(boxed == oracle::box_roots(g, v0, Int(level), 5));
        ++compared;
      }
  }
  CHECK(compared == 80);
  // Most levels are small enough to lie wholly in the box.
  CHECK(inside * 2 > compared);
}

TEST_CASE("small examples") {
  const GramLattice u = make_standard("U");
  CHECK(vecs(enumerate_roots_at_level(u, {1, 1}, Int(0))) == std::vector<IntVec>{{-1, 1}, {1, -1}});
  CHECK(enumerate_roots_at_level(u, {1, 1}, Int(1)).empty());
  const GramLattice h = direct_sum_tokens({"DIAG(2)", "DIAG(-2)"});
  CHECK(vecs(enumerate_roots_at_level(h, {1, 0}, Int(0))) == std::vector<IntVec>{{0, -1}, {0, 1}});
  // Level 2 forces a = 1 and then b^2 = 2.
  CHECK(enumerate_roots_at_level(h, {1, 0}, Int(2)).empty());
  CHECK_THROWS_AS(enumerate_roots_at_level(h, {1, 0}, Int(-1)), PreconditionError);
}

TEST_CASE("slicer preconditions") {
  const GramLattice u = make_standard("U");
  CHECK_THROWS_AS(RootSlicer(u, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(RootSlicer(u, {1, -1}), PreconditionError);
  CHECK_THROWS_AS(RootSlicer(u, {1, 1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(RootSlicer(make_standard("E8MINUS"), IntVec(8, Int(1))), PreconditionError);
  CHECK_THROWS_AS(RootSlicer(direct_sum_tokens({"DIAG(2)", "DIAG(2)"}), {1, 0}), PreconditionError);
}

TEST_CASE("early stop in the visitor") {
  const GramLattice k = direct_sum_tokens({"U", "E8MINUS"});
  const RootSlicer s(k, unit(10, {0, 1}));
  std::size_t seen = 0;
  s.for_each(Int(0), [&](const LatticeVector&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("root counts on the quartic mirror lattice") {
  const GramLattice q = direct_sum_tokens({"DIAG(-4)", "U", "E8MINUS", "E8MINUS"});
  const RootSlicer s(q, unit(19, {1, 2}));
  const std::vector<std::size_t> expect{482, 960, 62882};
  for (std::size_t level = 0; level < expect.size(); ++level)
    CHECK(s.for_each(Int(level), [](const LatticeVector&) { return true; }) == expect[level]);
  // Level 0 is the root system of A1 + E8 + E8 in the orthogonal complement:
  // 2 + 240 + 240.
  const RootSlicer e(direct_sum_tokens({"U", "E8MINUS"}), unit(10, {0, 1}));
  CHECK(e.roots(Int(0)).size() == 2 + 240);
}

}  // TEST_SUITE
