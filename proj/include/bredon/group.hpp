#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bredon/exact.hpp"

namespace bredon {

/// Finite group given by a Cayley table of element indices.
/// table[a][b] is the product a*b; associativity, identity and inverses are
/// verified at construction by full enumeration.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> validate(
      std::vector<std::vector<int>> table,
      std::vector<std::string> labels = {});

  /// Build the permutation group generated by `generators` acting on
  /// {0,..,degree-1} and return it as a Cayley table group; element labels
  /// are cycle notations.
  static std::shared_ptr<const FiniteGroup> from_permutations(
      int degree, const std::vector<std::vector<int>>& generators);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverses_[a]; }
  int identity() const { return identity_; }
  /// g h g^-1
  int conj(int h, int g) const { return mul(mul(g, h), inv(g)); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  int identity_ = 0;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Subgroup as a canonical sorted element list.
struct Subgroup {
  GroupPtr group;
  std::vector<int> elements;  // sorted, contains identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const;
  std::string to_string() const;
};

Subgroup subgroup_generated(const GroupPtr& g, std::vector<int> elements);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup conjugate(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Subgroup& h, const Subgroup& k);
bool is_valid_subgroup(const Subgroup& h);

/// Conjugation-closed, duplicate-free, sorted family of subgroups.
struct Family {
  GroupPtr group;
  std::vector<Subgroup> members;

  std::optional<std::size_t> index_of(const Subgroup& s) const;
  bool is_conjugation_closed() const;
};

Family make_family(const GroupPtr& g, std::vector<Subgroup> members,
                   bool close_under_conjugation);
Family close_family(const GroupPtr& g, const std::vector<Subgroup>& seeds);

/// First g in element order with g h g^-1 <= k, if any.
std::optional<int> is_subconjugate(const Subgroup& h, const Subgroup& k);

/// Smallest subset F0 of F such that every member of F is subconjugate to a
/// member of F0 (exhaustive search; ties broken by canonical subgroup order).
/// Returns indices into F.members.
std::vector<std::size_t> fp0_witness(const Family& f);

/// Re-index a subgroup as a finite group in its own right.
struct SubgroupGroup {
  GroupPtr group;               // the subgroup as a group
  std::vector<int> to_ambient;  // element index in subgroup -> ambient index
  std::vector<int> from_ambient;  // ambient -> subgroup index or -1
};

SubgroupGroup as_group(const Subgroup& h);

/// The family {Xi cap Lambda | Xi in F} of subgroups of Lambda, together with
/// the flag F cap Lambda <= F (each intersection, viewed back in the ambient
/// group, is a member of F).
struct IntersectedFamily {
  std::vector<Subgroup> members_ambient;  // as subgroups of the ambient group
  bool contained;
};

IntersectedFamily intersect_family(const Family& f, const Subgroup& lambda);

}  // namespace bredon
