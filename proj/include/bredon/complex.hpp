#pragma once

#include "bredon/indres.hpp"

namespace bredon {

/// Finite simplicial complex on global vertex ids, simplices grouped by
/// dimension as sorted vertex tuples (lists lexicographically ordered).
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> bydim;

  int dim() const { return static_cast<int>(bydim.size()) - 1; }
  bool empty() const { return bydim.empty(); }
  std::size_t count(std::size_t p) const {
    return p < bydim.size() ? bydim[p].size() : 0;
  }
  std::optional<std::size_t> index_of(std::size_t p,
                                      const std::vector<int>& s) const;

  /// Simplicial chain complex, padded with zero terms up to dimension
  /// `top_dim`; augmented complexes carry Z in an extra bottom slot, so the
  /// degree-p chains sit at index p+1.
  FreeChainComplex chains(int top_dim, bool augmented) const;
};

/// Image of a sorted simplex under a vertex map, with the orientation sign of
/// the sorting permutation.
std::pair<std::vector<int>, int> map_simplex(const std::vector<int>& s,
                                             const std::vector<int>& vmap);

/// Admissible Gamma-simplicial complex: the action permutes simplices and any
/// element fixing a simplex setwise fixes it pointwise.
struct GammaComplex {
  GammaSet vertices;
  SimplicialComplex cells;
  // cell_action[p][g][i] = index of g . (i-th p-cell)
  std::vector<std::vector<std::vector<int>>> cell_action;
};

/// Throws NotClosedUnderFaces / NotEquivariant / NotAdmissible.
GammaComplex validate_complex(const GammaSet& vertices,
                              const std::vector<std::vector<int>>& simplices);

/// Barycentric subdivision with the induced action; accepts equivariant
/// non-admissible input and always produces an admissible complex.
GammaComplex barycentric_subdivision(
    const GammaSet& vertices, const std::vector<std::vector<int>>& simplices);

/// Subcomplex of simplices all of whose vertices are Lambda-fixed, on the
/// same global vertex ids.
SimplicialComplex fixed_subcomplex(const GammaComplex& x,
                                   const Subgroup& lambda);

/// The Gamma-set of p-cells.
GammaSet cells_gamma_set(const GammaComplex& x, std::size_t p);

/// Bredon cellular chain complex: C_p(Gamma/Lambda) = p-chains of the fixed
/// complex, boundaries with global-vertex-order signs.
struct BredonChainComplex {
  CategoryPtr cat;
  std::vector<ModulePtr> terms;            // C_0 .. C_dim
  std::vector<BredonMorphism> boundaries;  // boundaries[p-1] = d_p
};

BredonChainComplex bredon_chain_complex(const CategoryPtr& cat,
                                        const GammaComplex& x);

/// Objectwise H_k of the fixed complexes, with the induced action.
BredonModule bredon_homology(const CategoryPtr& cat, const GammaComplex& x,
                             int k);
/// Reduced variant via augmented complexes; degree -1 value is Z exactly at
/// objects with empty fixed set.
BredonModule reduced_bredon_homology(const CategoryPtr& cat,
                                     const GammaComplex& x, int k);

struct AcyclicityReport {
  bool acyclic = true;
  int failed_degree = 0;
  std::size_t failed_object = 0;
};

/// F-acyclic up to dimension n: reduced homology vanishes in degrees -1..n.
AcyclicityReport is_F_acyclic(const CategoryPtr& cat, const GammaComplex& x,
                              int n);

struct StabilizerCheck {
  std::size_t dim = 0;
  std::size_t cell = 0;  // orbit representative, index in the p-cell list
  bool family_contained = false;
  bool fp_holds = false;
};

struct GoodnessReport {
  bool good = false;
  AcyclicityReport acyclicity;
  std::vector<StabilizerCheck> stabilizers;
};

/// F-n-good: F-acyclic up to n-1, and every p-cell stabilizer (p <= n) has
/// contained intersected family and constant module of type FP_{n-p} over it.
GoodnessReport is_F_n_good(const CategoryPtr& cat, const GammaComplex& x,
                           int n, std::size_t budget = 0);

/// Finite ascending chain of invariant subcomplexes, last stage = the whole
/// complex.
struct Filtration {
  GammaComplex total;
  std::vector<GammaComplex> stages;
};

Filtration make_filtration(const GammaComplex& total,
                           const std::vector<std::vector<std::vector<int>>>&
                               stage_simplices);

struct HomologySystem {
  std::vector<ModulePtr> stages;        // reduced H_k per stage
  std::vector<BredonMorphism> steps;    // inclusion-induced, consecutive

  /// composite connecting morphism stage a -> stage b (a <= b)
  BredonMorphism map(std::size_t a, std::size_t b) const;
};

HomologySystem homology_system(const CategoryPtr& cat, const Filtration& f,
                               int k);

struct EssentialTrivialityReport {
  bool trivial = false;
  std::vector<std::size_t> beta;  // per stage: least b with zero map
  std::size_t violating_stage = 0;
};

EssentialTrivialityReport essentially_trivial(const HomologySystem& sys);

}  // namespace bredon
