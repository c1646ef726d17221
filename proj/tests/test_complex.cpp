#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bredon/complex.hpp"

using namespace bredon;

namespace {

GroupPtr c2() { return FiniteGroup::validate({{0, 1}, {1, 0}}); }

CategoryPtr c2_full() {
  auto g = c2();
  return OrbitCategory::build(
      g, make_family(g, {trivial_subgroup(g), full_subgroup(g)}, false));
}

/// vertices n=0, s=1, e=2, w=3; the flip swaps e and w
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

/// square boundary coned off by a fixed apex 4
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
GammaComplex cone() { return validate_complex(cone_vertices(), cone_simplices()); }

GammaComplex point_complex(const GroupPtr& g) {
  return validate_complex(GammaSet::one_point(g), {{0}});
}

AbelianGroupInvariants value_inv(const BredonModule& m, std::size_t o) {
  return invariants(m.value(o));
}

}  // namespace

TEST_CASE("complex validation") {
  GammaComplex x = square();
  CHECK(x.cells.dim() == 1);
  CHECK(x.cells.count(0) == 4);
  CHECK(x.cells.count(1) == 4);

  // trivial action is always admissible
  auto t = FiniteGroup::validate({{0}});
  validate_complex(GammaSet{t, 3, {{0, 1, 2}}}, {{0}, {1}, {2}, {0, 1}, {1, 2}});

  // an edge flipped setwise is not admissible
  GammaSet seg{c2(), 2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_WITH_AS(validate_complex(seg, {{0}, {1}, {0, 1}}),
                       doctest::Contains("NotAdmissible"), Error);

  CHECK_THROWS_WITH_AS(validate_complex(square_vertices(),
                                        {{0}, {2}, {3}, {0, 2}, {0, 3}, {2, 3}}),
                       doctest::Contains("NotAdmissible"), Error);

  // missing face
  CHECK_THROWS_WITH_AS(validate_complex(square_vertices(), {{0}, {0, 2}}),
                       doctest::Contains("NotClosedUnderFaces"), Error);

  // orbit of an edge leaving the simplex list
  CHECK_THROWS_WITH_AS(
      validate_complex(square_vertices(), {{0}, {1}, {2}, {3}, {0, 2}}),
      doctest::Contains("NotEquivariant"), Error);
}

TEST_CASE("barycentric subdivision") {
  // flipped edge becomes an admissible path with a fixed midpoint
  GammaSet seg{c2(), 2, {{0, 1}, {1, 0}}};
  GammaComplex sub = barycentric_subdivision(seg, {{0}, {1}, {0, 1}});
  CHECK(sub.vertices.size == 3);
  CHECK(sub.cells.count(1) == 2);
  CHECK(sub.vertices.action[1][2] == 2);  // the midpoint is fixed

  auto t = FiniteGroup::validate({{0}});
  GammaComplex pt = barycentric_subdivision(GammaSet::one_point(t), {{0}});
  CHECK(pt.vertices.size == 1);
  CHECK(pt.cells.dim() == 0);

  // full triangle: 3! top cells
  GammaComplex tri = barycentric_subdivision(
      GammaSet{t, 3, {{0, 1, 2}}},
      {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(tri.vertices.size == 7);
  CHECK(tri.cells.count(2) == 6);

  // subdivision preserves Bredon homology
  auto cat = c2_full();
  GammaComplex sq = square();
  GammaComplex sq2 = barycentric_subdivision(square_vertices(), square_simplices());
  for (int k = 0; k <= 2; ++k) {
    BredonModule a = bredon_homology(cat, sq, k);
    BredonModule b = bredon_homology(cat, sq2, k);
    for (std::size_t o = 0; o < cat->object_count(); ++o)
      CHECK(value_inv(a, o) == value_inv(b, o));
  }
}

TEST_CASE("fixed subcomplexes") {
  GammaComplex sq = square();
  auto g = sq.vertices.group;
  SimplicialComplex f = fixed_subcomplex(sq, full_subgroup(g));
  CHECK(f.count(0) == 2);
  CHECK(f.count(1) == 0);
  CHECK(fixed_subcomplex(sq, trivial_subgroup(g)).bydim == sq.cells.bydim);

  SimplicialComplex cf = fixed_subcomplex(cone(), full_subgroup(g));
  CHECK(cf.count(0) == 3);
  CHECK(cf.count(1) == 2);
  CHECK(cf.index_of(1, {0, 4}).has_value());
  CHECK(cf.index_of(1, {1, 4}).has_value());
}

TEST_CASE("Bredon chain complex") {
  auto cat = c2_full();
  GammaComplex sq = square();
  BredonChainComplex c = bredon_chain_complex(cat, sq);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0]->value(0).generators == 4);
  CHECK(c.terms[0]->value(1).generators == 2);
  CHECK(c.terms[1]->value(0).generators == 4);
  CHECK(c.terms[1]->value(1).generators == 0);
  for (const auto& t : c.terms) CHECK(validate_module(*t).ok);
  for (const auto& d : c.boundaries) CHECK(validate_morphism(d).ok);

  // point: C_0 is the constant module
  auto pt = point_complex(cat->group());
  BredonChainComplex pc = bredon_chain_complex(cat, pt);
  REQUIRE(pc.terms.size() == 1);
  for (std::size_t o = 0; o < 2; ++o)
    CHECK(pc.terms[0]->value(o).generators == 1);
  for (std::size_t m = 0; m < cat->morphism_count(); ++m)
    CHECK(pc.terms[0]->act(m) == IntMatrix::identity(1));

  // dd = 0 and agreement with the hom module of the cell Gamma-set
  GammaComplex cn = cone();
  BredonChainComplex cc = bredon_chain_complex(cat, cn);
  for (std::size_t p = 1; p < cc.boundaries.size(); ++p)
    CHECK(morphism_is_zero(compose(cc.boundaries[p], cc.boundaries[p - 1])));
  for (std::size_t p = 0; p < cc.terms.size(); ++p) {
    BredonModule hm = hom_module(cat, cells_gamma_set(cn, p));
    for (std::size_t o = 0; o < cat->object_count(); ++o)
      CHECK(cc.terms[p]->value(o).generators == hm.value(o).generators);
    for (std::size_t m = 0; m < cat->morphism_count(); ++m)
      CHECK(cc.terms[p]->act(m) == hm.act(m));
  }
}

TEST_CASE("Bredon homology") {
  auto cat = c2_full();
  GammaComplex sq = square();
  BredonModule h0 = bredon_homology(cat, sq, 0);
  CHECK(validate_module(h0).ok);
  CHECK(value_inv(h0, 0).free_rank == 1);
  CHECK(value_inv(h0, 1).free_rank == 2);
  BredonModule h1 = bredon_homology(cat, sq, 1);
  CHECK(value_inv(h1, 0).free_rank == 1);
  CHECK(value_inv(h1, 1).is_trivial());

  auto pt = point_complex(cat->group());
  BredonModule ph = bredon_homology(cat, pt, 0);
  for (std::size_t o = 0; o < 2; ++o) CHECK(value_inv(ph, o).free_rank == 1);
  CHECK(bredon_homology(cat, pt, 1).is_zero());

  GammaComplex cn = cone();
  BredonModule ch = bredon_homology(cat, cn, 0);
  for (std::size_t o = 0; o < 2; ++o) CHECK(value_inv(ch, o).free_rank == 1);
  for (std::size_t m = 0; m < cat->morphism_count(); ++m)
    CHECK(fp_is_iso(ch.act(m), ch.value(ch.action_source(m)),
                    ch.value(ch.action_target(m))));
  CHECK(bredon_homology(cat, cn, 1).is_zero());

  // two-path evaluation identity against independently built fixed chains
  for (const GammaComplex& x : {sq, cn})
    for (int k = 0; k <= 2; ++k) {
      BredonModule h = bredon_homology(cat, x, k);
      for (std::size_t o = 0; o < cat->object_count(); ++o) {
        FreeChainComplex c =
            fixed_subcomplex(x, cat->subgroup(o)).chains(std::max(x.cells.dim(), k), false);
        CHECK(value_inv(h, o) == chain_homology(c, k));
      }
    }
}

TEST_CASE("reduced Bredon homology") {
  auto cat = c2_full();
  GammaComplex sq = square();
  BredonModule r0 = reduced_bredon_homology(cat, sq, 0);
  CHECK(value_inv(r0, 0).is_trivial());
  CHECK(value_inv(r0, 1).free_rank == 1);
  CHECK(reduced_bredon_homology(cat, sq, -1).is_zero());

  GammaComplex cn = cone();
  for (int k = -1; k <= 2; ++k)
    CHECK(reduced_bredon_homology(cat, cn, k).is_zero());

  // free orbit of two points: empty C2-fixed set shows up in degree -1
  GammaComplex two =
      validate_complex(GammaSet::cosets(cat->group(),
                                        trivial_subgroup(cat->group())),
                       {{0}, {1}});
  BredonModule rm1 = reduced_bredon_homology(cat, two, -1);
  CHECK(value_inv(rm1, 0).is_trivial());
  CHECK(value_inv(rm1, 1).free_rank == 1);

  // reduced and unreduced agree in degrees >= 1
  for (int k = 1; k <= 2; ++k)
    for (std::size_t o = 0; o < 2; ++o)
      CHECK(value_inv(reduced_bredon_homology(cat, sq, k), o) ==
            value_inv(bredon_homology(cat, sq, k), o));
}

TEST_CASE("acyclicity and goodness") {
  auto cat = c2_full();
  GammaComplex sq = square();
  GammaComplex cn = cone();

  CHECK(is_F_acyclic(cat, cn, 2).acyclic);
  AcyclicityReport bad = is_F_acyclic(cat, sq, 0);
  CHECK(!bad.acyclic);
  CHECK(bad.failed_degree == 0);
  CHECK(bad.failed_object == 1);
  CHECK(is_F_acyclic(cat, sq, -1).acyclic);

  GoodnessReport good = is_F_n_good(cat, cn, 2);
  CHECK(good.good);
  for (const auto& s : good.stabilizers) {
    CHECK(s.family_contained);
    CHECK(s.fp_holds);
  }
  CHECK(!is_F_n_good(cat, sq, 1).good);

  // classical case: trivial group, contractible complex
  auto t = FiniteGroup::validate({{0}});
  auto tcat =
      OrbitCategory::build(t, make_family(t, {trivial_subgroup(t)}, false));
  CHECK(is_F_n_good(tcat, point_complex(t), 1).good);
}

TEST_CASE("filtrations and essential triviality") {
  auto cat = c2_full();
  GammaComplex cn = cone();

  std::vector<std::vector<int>> verts = {{0}, {1}, {2}, {3}, {4}};
  std::vector<std::vector<int>> skel1 = cone_simplices();
  skel1.erase(std::remove_if(skel1.begin(), skel1.end(),
                             [](const std::vector<int>& s) {
                               return s.size() > 2;
                             }),
              skel1.end());
  Filtration skel = make_filtration(cn, {verts, skel1, cone_simplices()});

  HomologySystem sys = homology_system(cat, skel, 0);
  // 3 fixed vertices at Gamma/C2, connected from the 1-skeleton on
  CHECK(value_inv(*sys.stages[0], 1).free_rank == 2);
  CHECK(value_inv(*sys.stages[1], 1).is_trivial());
  CHECK(morphism_is_zero(sys.steps[0]));
  EssentialTrivialityReport rep = essentially_trivial(sys);
  CHECK(rep.trivial);
  CHECK(rep.beta[0] == 1);

  // functoriality: composite of steps equals the two-step map
  for (const auto& s : sys.steps) CHECK(validate_morphism(s).ok);

  // constant filtration gives identity maps
  Filtration konst = make_filtration(cn, {cone_simplices(), cone_simplices()});
  HomologySystem csys = homology_system(cat, konst, 0);
  CHECK(morphism_is_iso(csys.steps[0]));
  CHECK(essentially_trivial(csys).trivial);

  // square boundary with the {n,s} stage: the degree-0 system never dies
  GammaComplex sq = square();
  Filtration half = make_filtration(sq, {{{0}, {1}}, square_simplices()});
  HomologySystem hsys = homology_system(cat, half, 0);
  EssentialTrivialityReport hrep = essentially_trivial(hsys);
  CHECK(!hrep.trivial);
  CHECK(hrep.violating_stage == 0);
  CHECK(!morphism_is_zero(hsys.map(0, 1)));

  // inserting a stage never flips an essentially trivial system to false
  Filtration refined = make_filtration(cn, {verts, verts, skel1,
                                            cone_simplices()});
  CHECK(essentially_trivial(homology_system(cat, refined, 0)).trivial);

  CHECK_THROWS_WITH_AS(make_filtration(sq, {square_simplices(), {{0}, {1}}}),
                       doctest::Contains("BadShape"), Error);
}
