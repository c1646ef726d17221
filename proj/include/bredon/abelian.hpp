#pragma once

#include "bredon/exact.hpp"

namespace bredon {

/// Finitely presented abelian group: Z^generators modulo the column span
/// of `relations` (relations has `generators` rows, one column per relation).
struct FPAbelianGroup {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x nrels

  static FPAbelianGroup free(std::size_t rank) {
    return {rank, IntMatrix(rank, 0)};
  }
  bool operator==(const FPAbelianGroup& o) const = default;
};

AbelianGroupInvariants invariants(const FPAbelianGroup& g);

/// A map of presented groups is a matrix with target.generators rows and
/// source.generators columns, acting on generator coordinates.

/// True when f sends every relation of source into the relation span of
/// target, i.e. f descends to a homomorphism of the presented groups.
bool respects_relations(const IntMatrix& f, const FPAbelianGroup& source,
                        const FPAbelianGroup& target);

/// True when f is zero modulo the relations of target.
bool is_zero_map(const IntMatrix& f, const FPAbelianGroup& target);

/// Equality of two maps modulo the relations of target.
bool maps_equal(const IntMatrix& f, const IntMatrix& g,
                const FPAbelianGroup& target);

struct FPSubgroup {
  FPAbelianGroup group;   // presentation of the subgroup
  IntMatrix inclusion;    // ambient.generators x group.generators
};

/// Kernel of the homomorphism induced by f : source -> target.  The inclusion
/// columns form a Z-basis of the preimage lattice of the target relations.
FPSubgroup fp_kernel(const IntMatrix& f, const FPAbelianGroup& source,
                     const FPAbelianGroup& target);

/// Cokernel of f : source -> target, presented on the target generators.
FPAbelianGroup fp_cokernel(const IntMatrix& f, const FPAbelianGroup& target);

bool fp_is_epi(const IntMatrix& f, const FPAbelianGroup& source,
               const FPAbelianGroup& target);
bool fp_is_iso(const IntMatrix& f, const FPAbelianGroup& source,
               const FPAbelianGroup& target);

/// Chain complex of finitely presented abelian groups:
/// terms C_0 .. C_T with maps d_k : C_k -> C_{k-1} stored at maps[k-1].
struct FPComplex {
  std::vector<FPAbelianGroup> terms;
  std::vector<IntMatrix> maps;

  void check_composes_to_zero() const;  // throws CompositionNonzero
};

struct HomologyPresentation {
  FPAbelianGroup group;  // generators are the canonical cycle generators
  IntMatrix cycles;      // C_k.generators x group.generators
};

HomologyPresentation fp_homology_at(const FPComplex& c, std::size_t k);
AbelianGroupInvariants fp_homology_invariants(const FPComplex& c, std::size_t k);

/// Induced map on homology of a chain map f (one matrix per term).
/// Throws NotChainMap when the squares fail to commute modulo relations.
IntMatrix fp_homology_induced(const FPComplex& source, const FPComplex& target,
                              const std::vector<IntMatrix>& chain_map,
                              std::size_t k);

/// Free chain complex with explicit term ranks; boundaries[k] is
/// d_{k+1} : C_{k+1} -> C_k.
struct FreeChainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;

  FPComplex as_fp() const;
};

/// H_k = ker d_k / im d_{k+1}; throws CompositionNonzero when consecutive
/// boundaries do not compose to zero.
AbelianGroupInvariants chain_homology(const FreeChainComplex& c, std::size_t k);

HomologyPresentation chain_homology_presentation(const FreeChainComplex& c,
                                                 std::size_t k);

/// Matrix of H_k(f) on the canonical homology generators of source/target.
IntMatrix homology_induced_map(const FreeChainComplex& source,
                               const FreeChainComplex& target,
                               const std::vector<IntMatrix>& chain_map,
                               std::size_t k);

}  // namespace bredon
