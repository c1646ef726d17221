#pragma once

#include "bredon/tensor.hpp"

namespace bredon {

/// Inclusion functor I of the orbit category of a subgroup Lambda (over the
/// intersected family) into the ambient orbit category, with object and
/// morphism translation tables.  `contained` records whether every
/// intersection lands back in the ambient family; induction and restriction
/// require it.
struct SubgroupContext {
  CategoryPtr ambient;
  Subgroup lambda;
  SubgroupGroup sub;
  CategoryPtr subcat;
  bool contained = false;
  std::vector<std::size_t> object_map;    // subcat object -> ambient object
  std::vector<std::size_t> morphism_map;  // subcat morphism -> ambient morphism
};

SubgroupContext make_subgroup_context(const CategoryPtr& ambient,
                                      const Subgroup& lambda);

/// Precomposition with I: value at Lambda/Xi is M(Gamma/Xi).
/// Throws FamilyNotContained when the context lacks the containment flag.
BredonModule restrict_module(const SubgroupContext& ctx, const BredonModule& m);

/// Left Kan extension along I of a right module, computed objectwise as the
/// coend N (x)_{F cap Lambda} Z[Gamma/Theta, I(-)].
BredonModule induce_module(const SubgroupContext& ctx, const BredonModule& n);

/// Induced morphism between freshly induced source and target.
BredonMorphism induce_morphism(const SubgroupContext& ctx,
                               const BredonMorphism& phi);

/// Induction of the constant module, together with the comparison morphism to
/// Z[-, Gamma/Lambda] (the hom module of the coset Gamma-set), which the
/// preservation lemma predicts to be an isomorphism.
struct InducedTrivial {
  ModulePtr module;
  ModulePtr target;
  BredonMorphism comparison;
};

InducedTrivial induce_trivial_with_comparison(const SubgroupContext& ctx);

/// Search for a natural section of the canonical free cover of the restricted
/// free module, by exact integer linear solving.  found == false is a report,
/// not a verdict.
struct SplittingReport {
  bool found = false;
  BredonMorphism section;  // R -> cover, with epi o section = id when found
  BredonMorphism epi;
};

SplittingReport restricted_free_splitting(const SubgroupContext& ctx,
                                          const FreeModule& f);

}  // namespace bredon
