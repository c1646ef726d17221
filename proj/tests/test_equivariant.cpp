#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bredon/equivariant.hpp"
#include "bredon/tensor.hpp"

using namespace bredon;

namespace {

GroupPtr c2() { return FiniteGroup::validate({{0, 1}, {1, 0}}); }

GroupPtr s3() {
  return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
}

int elem(const GroupPtr& g, const std::string& label) {
  for (int i = 0; i < g->order(); ++i)
    if (g->labels()[i] == label) return i;
  throw std::runtime_error("no element " + label);
}

CategoryPtr c2_full() {
  auto g = c2();
  return OrbitCategory::build(
      g, make_family(g, {trivial_subgroup(g), full_subgroup(g)}, false));
}

CategoryPtr s3_refl() {
  auto g = s3();
  return OrbitCategory::build(
      g, close_family(g, {trivial_subgroup(g),
                          subgroup_generated(g, {elem(g, "(0 1)")})}));
}

GammaSet square_vertices() {
  GammaSet v;
  v.group = c2();
  v.size = 4;
  v.action = {{0, 1, 2, 3}, {0, 1, 3, 2}};
  return v;
}

std::vector<std::vector<int>> square_simplices() {
  return {{0}, {1}, {2}, {3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
}

GammaSet cone_vertices() {
  GammaSet v;
  v.group = c2();
  v.size = 5;
  v.action = {{0, 1, 2, 3, 4}, {0, 1, 3, 2, 4}};
  return v;
}

std::vector<std::vector<int>> cone_simplices() {
  std::vector<std::vector<int>> s = square_simplices();
  s.push_back({4});
  for (int v = 0; v < 4; ++v) s.push_back({v, 4});
  s.push_back({0, 2, 4});
  s.push_back({0, 3, 4});
  s.push_back({1, 2, 4});
  s.push_back({1, 3, 4});
  return s;
}

GammaComplex square() {
  return validate_complex(square_vertices(), square_simplices());
}
GammaComplex cone() {
  return validate_complex(cone_vertices(), cone_simplices());
}

GammaComplex point_complex(const GroupPtr& g) {
  return validate_complex(GammaSet::one_point(g), {{0}});
}

ModulePtr share(BredonModule m) {
  return std::make_shared<const BredonModule>(std::move(m));
}

}  // namespace

TEST_CASE("point recovers the homology of the category") {
  auto cat = c2_full();
  GammaComplex pt = point_complex(cat->group());
  std::vector<ModulePtr> coeffs = {
      share(trivial_module(cat, Variance::Left)),
      share(represented_left(cat, 0)), share(represented_left(cat, 1))};
  for (const auto& m : coeffs) {
    TorTable t = bredon_homology_of_group(cat, *m, 2);
    for (int k = 0; k <= 2; ++k)
      CHECK(equivariant_homology(cat, pt, m, k) == t.degrees[k]);
  }

  auto s3c = s3_refl();
  GammaComplex s3pt = point_complex(s3c->group());
  auto m = share(trivial_module(s3c, Variance::Left));
  TorTable t = bredon_homology_of_group(s3c, *m, 1);
  for (int k = 0; k <= 1; ++k)
    CHECK(equivariant_homology(s3c, s3pt, m, k) == t.degrees[k]);
}

TEST_CASE("projection comparison on the cone") {
  auto cat = c2_full();
  GammaComplex cn = cone();
  std::vector<ModulePtr> coeffs = {
      share(trivial_module(cat, Variance::Left)),
      share(represented_left(cat, 0)), share(represented_left(cat, 1))};
  for (const auto& m : coeffs) {
    ProjectionReport r = verify_projection_comparison(cat, cn, m, 2);
    CHECK(r.applicable);
    REQUIRE(r.iso.size() == 2);
    for (bool b : r.iso) CHECK(b);
    for (bool b : r.invariants_match) CHECK(b);
  }
}

TEST_CASE("projection comparison refuses a non-acyclic complex") {
  auto cat = c2_full();
  auto m = share(trivial_module(cat, Variance::Left));
  ProjectionReport r = verify_projection_comparison(cat, square(), m, 1);
  CHECK_FALSE(r.applicable);
  CHECK(r.iso.empty());
}

TEST_CASE("filtration colimit identity") {
  auto cat = c2_full();
  auto m = share(trivial_module(cat, Variance::Left));
  GammaComplex cn = cone();
  std::vector<std::vector<int>> verts = {{0}, {1}, {2}, {3}, {4}};
  std::vector<std::vector<int>> skel1 = cone_simplices();
  skel1.resize(skel1.size() - 4);  // drop the triangles

  Filtration skeleta = make_filtration(cn, {verts, skel1, cone_simplices()});
  Filtration konst = make_filtration(cn, {cone_simplices(), cone_simplices()});
  GammaComplex sq = square();
  Filtration half = make_filtration(sq, {{{0}, {1}}, square_simplices()});

  for (int k = 0; k <= 1; ++k) {
    for (const Filtration* f : {&skeleta, &konst, &half}) {
      ColimitReport r = verify_colimit_identity(cat, *f, m, k);
      CHECK(r.last_iso);
      CHECK(r.coherent);
    }
  }
}

TEST_CASE("finite multiplicity comparison") {
  auto cat = c2_full();
  for (const GammaComplex& x : {square(), cone()}) {
    MultiplicityReport r = verify_finite_multiplicity(cat, x, {2, 1}, 1);
    REQUIRE(r.match.size() == 2);
    for (bool b : r.match) CHECK(b);
  }
}

TEST_CASE("finiteness consistency harness") {
  auto cat = c2_full();
  GammaComplex cn = cone();
  std::vector<std::vector<int>> verts = {{0}, {1}, {2}, {3}, {4}};
  std::vector<std::vector<int>> skel1 = cone_simplices();
  skel1.resize(skel1.size() - 4);

  // contractible fixed sets: applicable and consistent at n = 2
  BrownReport r =
      brown_check(cat, make_filtration(cn, {verts, skel1, cone_simplices()}), 2);
  CHECK(r.goodness.good);
  CHECK(r.fp.holds);
  CHECK(r.verdict == BrownVerdict::Consistent);

  // the square is 0-good (fixed sets non-empty) and consistent at n = 0
  GammaComplex sq = square();
  Filtration sqf = make_filtration(
      sq, {{{0}, {1}, {2}, {3}}, square_simplices()});
  BrownReport r0 = brown_check(cat, sqf, 0);
  CHECK(r0.goodness.good);
  CHECK(r0.verdict == BrownVerdict::Consistent);

  // at n = 1 the disconnected fixed set makes the square inapplicable
  BrownReport r1 = brown_check(cat, sqf, 1);
  CHECK_FALSE(r1.goodness.good);
  CHECK(r1.verdict == BrownVerdict::Inapplicable);

  // classical case: trivial group, point
  auto t = FiniteGroup::validate({{0}});
  auto tcat = OrbitCategory::build(
      t, make_family(t, {trivial_subgroup(t)}, false));
  Filtration tf = make_filtration(point_complex(t), {{{0}}});
  CHECK(brown_check(tcat, tf, 1).verdict == BrownVerdict::Consistent);
}

TEST_CASE("constructive witness family") {
  auto cat = s3_refl();
  auto g = cat->group();

  // witness on the plain family: one reflection covers all of them
  CHECK(fp0_witness(cat->family()).size() == 1);

  // tripod: three permuted legs from a fixed apex, vertex stabilizers are
  // the point stabilizers (reflections) and the full group at the apex
  GammaSet v;
  v.group = g;
  v.size = 4;
  v.action.resize(g->order());
  // recover each element's action on {0,1,2} by generator-word BFS
  {
    std::vector<std::vector<int>> pts(g->order());
    std::vector<std::pair<int, std::vector<int>>> gp = {
        {elem(g, "(0 1)"), {1, 0, 2}}, {elem(g, "(0 1 2)"), {1, 2, 0}}};
    pts[g->identity()] = {0, 1, 2};
    std::vector<int> queue = {g->identity()};
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      for (auto& [ge, pe] : gp) {
        int b = g->mul(ge, a);
        if (!pts[b].empty()) continue;
        pts[b] = {pe[pts[a][0]], pe[pts[a][1]], pe[pts[a][2]]};
        queue.push_back(b);
      }
    }
    for (int a = 0; a < g->order(); ++a)
      v.action[a] = {pts[a][0], pts[a][1], pts[a][2], 3};
  }
  GammaComplex tripod = validate_complex(
      v, {{0}, {1}, {2}, {3}, {0, 3}, {1, 3}, {2, 3}});

  CHECK(is_F_n_good(cat, tripod, 0).good);
  FP0Witness w = fp0_constructive_witness(cat, tripod);
  CHECK(w.verified);
  for (const auto& s : w.family0) CHECK(s.order() == 2);

  // a free orbit has no fixed points at the non-trivial objects
  auto c2cat = c2_full();
  GammaSet free2{c2(), 2, {{0, 1}, {1, 0}}};
  GammaComplex freex = validate_complex(free2, {{0}, {1}});
  CHECK_THROWS_WITH_AS(fp0_constructive_witness(c2cat, freex),
                       doctest::Contains("NoFixedPoint"), Error);
}
