#pragma once

#include "bredon/module.hpp"

namespace bredon {

/// Kronecker product (acting on column-major tensor coordinates e_i (x) e_j).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// N (x)_F M for a right module N and left module M over the same category:
/// the direct sum of the objectwise tensors N(o) (x) M(o) modulo the balancing
/// relations N(f)(n) (x) m - n (x) M(f)(m) over all morphisms f.
struct TensorResult {
  FPAbelianGroup presentation;  // on the block generators (o, i, j)
  AbelianGroupInvariants group;
  // generator offset of object o's block; (o,i,j) sits at
  // offsets[o] + i * M(o).generators + j
  std::vector<std::size_t> offsets;
};

TensorResult tensor_over_F(const BredonModule& n, const BredonModule& m);

/// Map (N (x)_F M) -> (N' (x)_F M) induced by phi: N -> N', on block
/// generator coordinates (blockwise phi_o (x) id).
IntMatrix tensor_induced_right(const BredonMorphism& phi,
                               const BredonModule& m);
/// Map (N (x)_F M) -> (N (x)_F M') induced by psi: M -> M'.
IntMatrix tensor_induced_left(const BredonModule& n, const BredonMorphism& psi);

/// Objectwise tensor over Z of two modules of the same variance, with the
/// diagonal action.
BredonModule tensor_over_Z(const BredonModule& m, const BredonModule& n);

struct TorTable {
  // degree k |-> invariants of Tor_k
  std::vector<AbelianGroupInvariants> degrees;
  Resolution resolution;  // of the right-hand (first) argument
};

/// Tor_*^F(N, M) for a right module N and left module M: resolve N to degree
/// max_degree+1, tensor with M, take homology.  Degree 0 is cross-checked
/// against tensor_over_F.
TorTable tor(const ModulePtr& n, const BredonModule& m, std::size_t max_degree,
             std::size_t budget = 0);

/// Bredon homology of the group: Tor_*^F(Z-underline, M).
TorTable bredon_homology_of_group(const CategoryPtr& cat,
                                  const BredonModule& m,
                                  std::size_t max_degree,
                                  std::size_t budget = 0);

/// Finite-multiplicity comparison of Tor_k(N, +_L (Z[G/L,-])^{j_L}) with the
/// direct sum of the Tor_k(N, Z[G/L,-]), via the projection-induced maps.
struct FiniteMultiplicityReport {
  std::vector<bool> iso;  // per degree 0..n
  std::vector<bool> epi;
};

FiniteMultiplicityReport bieri_eckmann_finite_check(
    const ModulePtr& n, std::size_t max_degree,
    const std::vector<std::size_t>& multiplicities, std::size_t budget = 0);

}  // namespace bredon
