#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bredon/abelian.hpp"
#include "bredon/exact.hpp"

using namespace bredon;

namespace {

// Brute-force invariant factors of the quotient Z^rows / col-span(a) for tiny
// finite quotients: enumerate the quotient group directly.
// Used only to pin expected values for small hand examples.
Int det2(const IntMatrix& a) {
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

Int matrix_gcd(const IntMatrix& a) {
  Int g = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g = gcd(g, a(i, j));
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<long long> d(-3, 3);
  std::uniform_int_distribution<std::size_t> idx(0, n ? n - 1 : 0);
  for (int step = 0; step < 20 && n > 1; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int q = d(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += q * u(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("hermite normal form") {
  IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto [h, u] = hermite_normal_form(a);
  CHECK(u * a == h);
  CHECK(is_unimodular(u));
  // pivots 2 and 4; entry above the second pivot reduced into [0, 4)
  CHECK(h == IntMatrix::from_rows({{2, 0}, {0, 4}}));

  IntMatrix id3 = IntMatrix::identity(3);
  auto hr = hermite_normal_form(id3);
  CHECK(hr.h == id3);
  CHECK(hr.u == id3);

  IntMatrix z(2, 3);
  auto zr = hermite_normal_form(z);
  CHECK(zr.h == z);
  CHECK(zr.u == IntMatrix::identity(2));
}

TEST_CASE("smith normal form hand cases") {
  {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto [d, u, v] = smith_normal_form(a);
    CHECK(u * a * v == d);
    CHECK(is_unimodular(u));
    CHECK(is_unimodular(v));
    // d1 = gcd of entries, d1*d2 = |det|
    CHECK(d(0, 0) == matrix_gcd(a));
    CHECK(d(0, 0) * d(1, 1) == abs(det2(a)));
    CHECK(d(0, 0) == 2);
    CHECK(d(1, 1) == 4);
  }
  {
    // Z/2 + Z/3 = Z/6 by enumeration of element orders
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto [d, u, v] = smith_normal_form(a);
    CHECK(d(0, 0) == 1);
    CHECK(d(1, 1) == 6);
  }
  {
    IntMatrix z(3, 2);
    auto s = smith_normal_form(z);
    CHECK(s.d == z);
  }
}

TEST_CASE("smith normal form randomized") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, r, c, 30);
    auto [d, u, v] = smith_normal_form(a);
    CHECK(u * a * v == d);
    CHECK(is_unimodular(u));
    CHECK(is_unimodular(v));
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      CHECK(d(i, i) >= 0);
      if (d(i, i) != 0) CHECK(d(i + 1, i + 1) % d(i, i) == 0);
      if (d(i, i) == 0) CHECK(d(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("kernel basis") {
  {
    IntMatrix a = IntMatrix::from_rows({{1, 1}});
    IntMatrix k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == -1);
  }
  CHECK(kernel_basis(IntMatrix::identity(4)).cols() == 0);
  CHECK(kernel_basis(IntMatrix(1, 2)).cols() == 2);

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 10);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == a.cols() - matrix_rank(a));
    // saturated: a has no kernel vector outside the span of k
    if (k.cols() > 0) CHECK(matrix_rank(k) == k.cols());
  }
}

TEST_CASE("cokernel invariants") {
  {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 0}});
    auto inv = cokernel_invariants(a);
    CHECK(inv.free_rank == 1);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 2);
  }
  {
    auto inv = cokernel_invariants(IntMatrix(2, 0));
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
  }
  CHECK(cokernel_invariants(IntMatrix::identity(2)).is_trivial());
}

TEST_CASE("cokernel invariants stable under unimodular presentation changes") {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, 12);
    auto base = cokernel_invariants(a);
    IntMatrix p = random_unimodular(rng, r);
    IntMatrix q = random_unimodular(rng, c);
    CHECK(cokernel_invariants(p * a * q) == base);
  }
}

TEST_CASE("integer solve") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 8);
    IntMatrix x = random_matrix(rng, a.cols(), 2, 5);
    IntMatrix b = a * x;
    auto s = solve(a, b);
    REQUIRE(s.has_value());
    CHECK(a * *s == b);
  }
  // no integer solution: 2x = 1
  IntMatrix two = IntMatrix::from_rows({{2}});
  CHECK(!solve(two, IntMatrix::from_rows({{1}})).has_value());
}

TEST_CASE("chain homology of the triangle boundary") {
  // 3 vertices, 3 edges 01, 02, 12; connected 1-cycle, Euler characteristic 0
  FreeChainComplex c;
  c.dims = {3, 3};
  c.boundaries = {IntMatrix::from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}})};
  auto h0 = chain_homology(c, 0);
  CHECK(h0.free_rank == 1);
  CHECK(h0.torsion.empty());
  auto h1 = chain_homology(c, 1);
  CHECK(h1.free_rank == 1);
  CHECK(h1.torsion.empty());
}

TEST_CASE("chain homology degenerate complexes") {
  FreeChainComplex point;
  point.dims = {1};
  CHECK(chain_homology(point, 0) == AbelianGroupInvariants{1, {}});
  CHECK(chain_homology(point, 1).is_trivial());

  FreeChainComplex two_points;
  two_points.dims = {2};
  CHECK(chain_homology(two_points, 0) == AbelianGroupInvariants{2, {}});

  FreeChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.boundaries = {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})};
  CHECK_THROWS_WITH_AS(chain_homology(bad, 0), doctest::Contains("CompositionNonzero"),
                       Error);
}

TEST_CASE("homology induced maps") {
  FreeChainComplex tri;
  tri.dims = {3, 3};
  tri.boundaries = {IntMatrix::from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}})};

  SUBCASE("identity chain map induces identity") {
    std::vector<IntMatrix> f = {IntMatrix::identity(3), IntMatrix::identity(3)};
    IntMatrix h1 = homology_induced_map(tri, tri, f, 1);
    CHECK(h1 == IntMatrix::identity(1));
  }
  SUBCASE("zero chain map induces zero") {
    std::vector<IntMatrix> f = {IntMatrix(3, 3), IntMatrix(3, 3)};
    CHECK(homology_induced_map(tri, tri, f, 1).is_zero());
  }
  SUBCASE("non chain map rejected") {
    std::vector<IntMatrix> f = {IntMatrix(3, 3), IntMatrix::identity(3)};
    CHECK_THROWS_WITH_AS(homology_induced_map(tri, tri, f, 1),
                         doctest::Contains("NotChainMap"), Error);
  }
}

TEST_CASE("functoriality of induced maps on sampled chain maps") {
  // two-point complex mapping into a path joining the points
  FreeChainComplex pts;
  pts.dims = {2};
  FreeChainComplex path;
  path.dims = {2, 1};
  path.boundaries = {IntMatrix::from_rows({{-1}, {1}})};

  // augmented versions to test the reduced-degree-0 statement
  FreeChainComplex apts;
  apts.dims = {1, 2};
  apts.boundaries = {IntMatrix::from_rows({{1, 1}})};
  FreeChainComplex apath;
  apath.dims = {1, 2, 1};
  apath.boundaries = {IntMatrix::from_rows({{1, 1}}),
                      IntMatrix::from_rows({{-1}, {1}})};
  std::vector<IntMatrix> incl = {IntMatrix::identity(1), IntMatrix::identity(2)};
  // reduced H0 of two points is Z, of the path is 0
  CHECK(fp_homology_invariants(apts.as_fp(), 1) == AbelianGroupInvariants{1, {}});
  CHECK(fp_homology_invariants(apath.as_fp(), 1).is_trivial());
  IntMatrix induced = fp_homology_induced(apts.as_fp(), apath.as_fp(), incl, 1);
  CHECK(is_zero_map(induced, fp_homology_at(apath.as_fp(), 1).group));
}

TEST_CASE("fp group machinery") {
  // Z --2--> Z: kernel 0, cokernel Z/2
  FPAbelianGroup z = FPAbelianGroup::free(1);
  IntMatrix two = IntMatrix::from_rows({{2}});
  CHECK(invariants(fp_kernel(two, z, z).group).is_trivial());
  auto cok = invariants(fp_cokernel(two, z));
  CHECK(cok.free_rank == 0);
  REQUIRE(cok.torsion.size() == 1);
  CHECK(cok.torsion[0] == 2);

  // Z --1--> Z/4: kernel 4Z = Z, iso onto? epi yes, iso no
  FPAbelianGroup z4{1, IntMatrix::from_rows({{4}})};
  IntMatrix one = IntMatrix::identity(1);
  CHECK(fp_is_epi(one, z, z4));
  CHECK(!fp_is_iso(one, z, z4));
  auto ker = fp_kernel(one, z, z4);
  CHECK(invariants(ker.group) == AbelianGroupInvariants{1, {}});
  CHECK(ker.inclusion(0, 0) == 4);

  // Z/4 -> Z/2 quotient is epi with kernel Z/2
  FPAbelianGroup z2{1, IntMatrix::from_rows({{2}})};
  CHECK(fp_is_epi(one, z4, z2));
  auto k2 = invariants(fp_kernel(one, z4, z2).group);
  CHECK(k2.free_rank == 0);
  REQUIRE(k2.torsion.size() == 1);
  CHECK(k2.torsion[0] == 2);
}
