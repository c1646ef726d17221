#pragma once

#include "bredon/abelian.hpp"
#include "bredon/orbit.hpp"

namespace bredon {

enum class Variance { Right, Left };

/// Functor from the orbit category to finitely presented abelian groups.
/// Right modules are contravariant: action[f: a->b] maps value(b) -> value(a).
/// Left modules are covariant: action[f: a->b] maps value(a) -> value(b).
struct BredonModule {
  CategoryPtr cat;
  Variance variance = Variance::Right;
  std::vector<FPAbelianGroup> values;  // per object
  std::vector<IntMatrix> action;       // per morphism id, on generators

  const FPAbelianGroup& value(std::size_t o) const { return values[o]; }
  const IntMatrix& act(std::size_t m) const { return action[m]; }
  std::size_t action_source(std::size_t m) const;
  std::size_t action_target(std::size_t m) const;
  std::size_t total_generators() const;
  bool is_zero() const;
};

using ModulePtr = std::shared_ptr<const BredonModule>;

struct ValidationReport {
  bool ok = true;
  std::string detail;
};

/// Functoriality: identity actions are identities, composites match, and every
/// action matrix maps relations into the relation span.
ValidationReport validate_module(const BredonModule& m);

BredonModule trivial_module(const CategoryPtr& cat, Variance v);
BredonModule zero_module(const CategoryPtr& cat, Variance v);

/// Z[-, Delta]: right module sending Gamma/Lambda to the free abelian group
/// on the Lambda-fixed points of Delta.
BredonModule hom_module(const CategoryPtr& cat, const GammaSet& delta);

/// Z[-, Gamma/Lambda]: right represented module (basis = hom sets).
BredonModule represented_right(const CategoryPtr& cat, std::size_t object);
/// Z[Gamma/Lambda, -]: left represented module.
BredonModule represented_left(const CategoryPtr& cat, std::size_t object);

struct DirectSum {
  BredonModule module;
  // per summand, per object: generator offset of the summand's block
  std::vector<std::vector<std::size_t>> offsets;
};

DirectSum direct_sum(const std::vector<const BredonModule*>& parts);

/// Natural transformation: one matrix per object, source value -> target value.
struct BredonMorphism {
  ModulePtr source;
  ModulePtr target;
  std::vector<IntMatrix> component;
};

ValidationReport validate_morphism(const BredonMorphism& phi);
bool morphism_is_zero(const BredonMorphism& phi);
/// Objectwise isomorphism of presented groups.
bool morphism_is_iso(const BredonMorphism& phi);
BredonMorphism compose(const BredonMorphism& first, const BredonMorphism& then);
BredonMorphism identity_morphism(const ModulePtr& m);
BredonMorphism zero_morphism(const ModulePtr& source, const ModulePtr& target);

struct SubModule {
  ModulePtr module;
  BredonMorphism inclusion;
};
struct QuotientModule {
  ModulePtr module;
  BredonMorphism projection;
};

/// Componentwise kernel with the induced action, plus the inclusion.
SubModule kernel(const BredonMorphism& phi);
/// Componentwise cokernel, presented on the target generators.
QuotientModule cokernel(const BredonMorphism& phi);

/// Yoneda correspondence mor(Z[-,Gamma/Lambda], M) <-> M(Gamma/Lambda):
/// the morphism sending the identity coset to x (x in generator coordinates).
BredonMorphism yoneda(const CategoryPtr& cat, std::size_t object,
                      const ModulePtr& m, const IntMatrix& x);
/// Inverse direction: evaluate a morphism out of Z[-,Gamma/Lambda] at the
/// identity coset.
IntMatrix yoneda_evaluate(const BredonMorphism& phi, std::size_t object);

/// Finitely generated free module: direct sum of represented modules, one
/// summand ("slot") per basis element.
struct FreeModule {
  std::vector<std::size_t> slots;  // object index per slot
  ModulePtr module;
  // generator offset of (slot) block at each object: offsets[slot][object]
  std::vector<std::vector<std::size_t>> offsets;

  std::size_t rank() const { return slots.size(); }
};

FreeModule free_module(const CategoryPtr& cat, Variance v,
                       const std::vector<std::size_t>& slot_objects);

struct FreeCover {
  FreeModule cover;
  BredonMorphism epi;
};

/// Canonical epi from the free module on all presentation generators of m.
FreeCover free_cover(const ModulePtr& m);

/// ... -> P_n -> ... -> P_1 -> P_0 -> M -> 0, free terms, exact.
/// maps[0] is the augmentation P_0 -> M; maps[k] is d_k : P_k -> P_{k-1}.
struct Resolution {
  ModulePtr target;
  std::vector<FreeModule> terms;
  std::vector<BredonMorphism> maps;
};

/// Degree-n free resolution by iterated free_cover o kernel; exactness is
/// verified at every stage and object.  Throws BudgetExceeded when an
/// intermediate presentation grows past `budget` total generators.
Resolution resolve(const ModulePtr& m, std::size_t n, std::size_t budget = 0);

std::size_t default_budget();

struct FPNReport {
  bool holds = true;
  Resolution resolution;
  std::vector<std::size_t> ranks;  // free rank of each P_k
};

FPNReport fp_n_report(const ModulePtr& m, std::size_t n,
                      std::size_t budget = 0);

}  // namespace bredon
