#pragma once

#include "bredon/complex.hpp"

namespace bredon {

/// Total complex of the bicomplex (C_*(X) (x)_Z Q_*) (x)_F M, where Q_* is a
/// free resolution of the constant right module and M a left module.  The
/// vertical differential of column p carries the sign (-1)^p.
struct EquivariantComplex {
  CategoryPtr cat;
  BredonChainComplex chains;
  ModulePtr coeff;
  Resolution res;
  FPComplex total;  // degrees 0..top
  int top = 0;
  // (p, q) |-> C_p (x)_Z Q_q, for p + q within range
  std::vector<std::vector<ModulePtr>> blocks;
  // per degree m: participating column indices p (with q = m - p), and the
  // generator offset of each (p, q) block inside the degree-m term
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::vector<std::size_t>> offsets;
};

EquivariantComplex equivariant_complex(const CategoryPtr& cat,
                                       const GammaComplex& x,
                                       const ModulePtr& m,
                                       const Resolution& q, int top_degree);

/// H_k^F(X, M).  resolution_length 0 selects the default k+2, with a
/// stability re-check against length k+3.
AbelianGroupInvariants equivariant_homology(const CategoryPtr& cat,
                                            const GammaComplex& x,
                                            const ModulePtr& m, int k,
                                            std::size_t resolution_length = 0,
                                            std::size_t budget = 0);

/// Chain map of total complexes induced by per-column morphisms
/// phi[p] : C_p(src) -> C_p(tgt); absent columns act as zero.
std::vector<IntMatrix> equivariant_chain_map(
    const EquivariantComplex& src, const EquivariantComplex& tgt,
    const std::vector<BredonMorphism>& phi);

/// Inclusion-induced morphisms C_p(a) -> C_p(b) for a subcomplex a of b.
std::vector<BredonMorphism> inclusion_chain_morphisms(
    const CategoryPtr& cat, const GammaComplex& a, const GammaComplex& b,
    const BredonChainComplex& ca, const BredonChainComplex& cb);

struct ProjectionReport {
  bool applicable = false;             // X is F-acyclic up to n-1
  std::vector<bool> iso;               // degrees 0..n-1, projection-induced
  std::vector<bool> invariants_match;  // against the Tor-side group homology
};

/// Projection-to-a-point comparison H_k^F(X, M) ~ H_k^F(Gamma, M) for k < n.
ProjectionReport verify_projection_comparison(const CategoryPtr& cat, const GammaComplex& x,
                       const ModulePtr& m, int n, std::size_t budget = 0);

struct ColimitReport {
  bool last_iso = false;  // last stage -> whole complex
  bool coherent = false;  // stepwise composites match the direct maps
};

/// Finite-chain colimit identity for a filtration.
ColimitReport verify_colimit_identity(const CategoryPtr& cat, const Filtration& f,
                       const ModulePtr& m, int k, std::size_t budget = 0);

/// Finite-multiplicity comparison of H_k^F(X, +_L (Z[G/L,-])^{j_L}) with
/// +_L H_k(X^L)^{j_L}, degree by degree.
struct MultiplicityReport {
  std::vector<bool> match;  // degrees 0..n
};

MultiplicityReport verify_finite_multiplicity(const CategoryPtr& cat, const GammaComplex& x,
                       const std::vector<std::size_t>& multiplicities, int n,
                       std::size_t budget = 0);

enum class BrownVerdict { Consistent, Inapplicable, Violation };

struct BrownReport {
  GoodnessReport goodness;
  FPNReport fp;
  // essential triviality of the reduced degree-k systems, k = -1 .. n-1
  std::vector<EssentialTrivialityReport> systems;
  BrownVerdict verdict = BrownVerdict::Inapplicable;
};

/// One-directional consistency harness for the finiteness criterion: when the
/// complex is F-n-good, the constant module is FP_n (always, over a finite
/// category), so every degree-k system below n must die out; a surviving
/// system is a Violation (an implementation bug), everything else is
/// Consistent or Inapplicable.
BrownReport brown_check(const CategoryPtr& cat, const Filtration& f, int n,
                        std::size_t budget = 0);

struct FP0Witness {
  std::vector<Subgroup> family0;  // ambient subgroups, canonical order
  bool verified = false;          // every family member is subconjugate
};

/// Constructive F_0 from vertex-stabilizer witnesses; requires every fixed
/// set non-empty (throws NoFixedPoint naming the subgroup otherwise).
FP0Witness fp0_constructive_witness(const CategoryPtr& cat,
                                    const GammaComplex& x);

}  // namespace bredon
