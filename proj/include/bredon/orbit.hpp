#pragma once

#include "bredon/group.hpp"

namespace bredon {

/// Finite Gamma-set: elements 0..size-1, one permutation per group element,
/// forming a left action.
struct GammaSet {
  GroupPtr group;
  std::size_t size = 0;
  std::vector<std::vector<int>> action;  // action[g][x] = g.x

  void validate() const;  // throws NotAnAction

  int apply(int g, int x) const { return action[g][x]; }

  static GammaSet cosets(const GroupPtr& g, const Subgroup& lambda);
  static GammaSet one_point(const GroupPtr& g);
  static GammaSet disjoint_union(const GammaSet& a, const GammaSet& b);

  Subgroup stabilizer(int x) const;
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_representatives() const;
};

std::vector<int> fixed_points(const GammaSet& d, const Subgroup& lambda);

/// A Gamma-map Gamma/Xi -> Gamma/Lambda, stored as its canonical coset
/// representative: the least g with g^-1 Xi g <= Lambda in the coset g*Lambda.
struct OrbitMorphism {
  int source = 0;  // object index
  int target = 0;
  int rep = 0;
};

/// Orbit category of a finite group and family: one object per family member,
/// morphism sets enumerated as cosets, composition fully tabulated.
class OrbitCategory {
 public:
  static std::shared_ptr<const OrbitCategory> build(const GroupPtr& g,
                                                    Family f);

  const GroupPtr& group() const { return group_; }
  const Family& family() const { return family_; }
  std::size_t object_count() const { return family_.members.size(); }
  const Subgroup& subgroup(std::size_t o) const { return family_.members[o]; }

  std::size_t morphism_count() const { return morphisms_.size(); }
  const OrbitMorphism& morphism(std::size_t m) const { return morphisms_[m]; }
  const std::vector<std::size_t>& hom(std::size_t src, std::size_t tgt) const {
    return hom_[src][tgt];
  }
  std::size_t identity(std::size_t o) const { return identities_[o]; }
  /// composite of f: a->b followed by g: b->c, as a morphism a->c
  std::size_t compose(std::size_t f, std::size_t g) const;

  /// id of the morphism src->tgt whose coset contains rep (must exist)
  std::size_t morphism_id(std::size_t src, std::size_t tgt, int rep) const;

  /// exhaustive identity/associativity check
  void validate() const;

 private:
  OrbitCategory() = default;
  GroupPtr group_;
  Family family_;
  std::vector<OrbitMorphism> morphisms_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;
  std::vector<std::size_t> identities_;
};

using CategoryPtr = std::shared_ptr<const OrbitCategory>;

}  // namespace bredon
