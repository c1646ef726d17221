#include "bredon/abelian.hpp"

namespace bredon {

namespace {

// Canonical Z-basis of the lattice spanned by the columns of m, as columns.
IntMatrix column_lattice_basis(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m.transpose()).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        ++rank;
        break;
      }
  IntMatrix out(m.rows(), rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out(j, i) = h(i, j);
  return out;
}

IntMatrix top_block(const IntMatrix& m, std::size_t nrows) {
  IntMatrix out(nrows, m.cols());
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

AbelianGroupInvariants invariants(const FPAbelianGroup& g) {
  if (g.relations.rows() != g.generators)
    throw Error("BadShape", "relation matrix row count != generator count");
  return cokernel_invariants(g.relations);
}

bool respects_relations(const IntMatrix& f, const FPAbelianGroup& source,
                        const FPAbelianGroup& target) {
  return in_span(target.relations, f * source.relations);
}

bool is_zero_map(const IntMatrix& f, const FPAbelianGroup& target) {
  return in_span(target.relations, f);
}

bool maps_equal(const IntMatrix& f, const IntMatrix& g,
                const FPAbelianGroup& target) {
  return is_zero_map(f - g, target);
}

FPSubgroup fp_kernel(const IntMatrix& f, const FPAbelianGroup& source,
                     const FPAbelianGroup& target) {
  const std::size_t m = source.generators;
  // preimage lattice of im(target.relations): project ker[f | -R_target]
  IntMatrix ker = kernel_basis(hstack(f, -target.relations));
  IntMatrix incl = column_lattice_basis(top_block(ker, m));
  // relations among the kernel generators: { c : incl*c in im(R_source) }
  IntMatrix rels;
  if (source.relations.cols() == 0) {
    rels = IntMatrix(incl.cols(), 0);
  } else {
    IntMatrix rk = kernel_basis(hstack(incl, -source.relations));
    rels = column_lattice_basis(top_block(rk, incl.cols()));
  }
  return {FPAbelianGroup{incl.cols(), std::move(rels)}, std::move(incl)};
}

FPAbelianGroup fp_cokernel(const IntMatrix& f, const FPAbelianGroup& target) {
  return {target.generators, hstack(target.relations, f)};
}

bool fp_is_epi(const IntMatrix& f, const FPAbelianGroup& /*source*/,
               const FPAbelianGroup& target) {
  return invariants(fp_cokernel(f, target)).is_trivial();
}

bool fp_is_iso(const IntMatrix& f, const FPAbelianGroup& source,
               const FPAbelianGroup& target) {
  return fp_is_epi(f, source, target) &&
         invariants(fp_kernel(f, source, target).group).is_trivial();
}

void FPComplex::check_composes_to_zero() const {
  for (std::size_t k = 1; k < maps.size(); ++k)
    if (!is_zero_map(maps[k - 1] * maps[k], terms[k - 1]))
      throw Error("CompositionNonzero",
                  "boundary composite nonzero at degree " + std::to_string(k + 1));
}

HomologyPresentation fp_homology_at(const FPComplex& c, std::size_t k) {
  if (k >= c.terms.size())
    return {FPAbelianGroup{0, IntMatrix(0, 0)}, IntMatrix(0, 0)};
  FPSubgroup cycles;
  if (k == 0) {
    cycles = {c.terms[0], IntMatrix::identity(c.terms[0].generators)};
  } else {
    cycles = fp_kernel(c.maps[k - 1], c.terms[k], c.terms[k - 1]);
  }
  FPAbelianGroup h = cycles.group;
  if (k < c.maps.size()) {
    auto beta = solve_mod(cycles.inclusion, c.terms[k].relations, c.maps[k]);
    if (!beta)
      throw Error("CompositionNonzero",
                  "incoming boundary does not land in the cycle subgroup");
    h.relations = hstack(h.relations, *beta);
  }
  return {std::move(h), std::move(cycles.inclusion)};
}

AbelianGroupInvariants fp_homology_invariants(const FPComplex& c,
                                              std::size_t k) {
  return invariants(fp_homology_at(c, k).group);
}

IntMatrix fp_homology_induced(const FPComplex& source, const FPComplex& target,
                              const std::vector<IntMatrix>& chain_map,
                              std::size_t k) {
  if (chain_map.size() != source.terms.size())
    throw Error("BadShape", "chain map must have one matrix per term");
  for (std::size_t d = 1; d < source.terms.size() && d < target.terms.size();
       ++d) {
    IntMatrix lhs = chain_map[d - 1] * source.maps[d - 1];
    IntMatrix rhs = target.maps[d - 1] * chain_map[d];
    if (!maps_equal(lhs, rhs, target.terms[d - 1]))
      throw Error("NotChainMap",
                  "square at degree " + std::to_string(d) + " does not commute");
  }
  HomologyPresentation hs = fp_homology_at(source, k);
  HomologyPresentation ht = fp_homology_at(target, k);
  if (k >= target.terms.size()) return IntMatrix(0, hs.group.generators);
  auto alpha = solve_mod(ht.cycles, target.terms[k].relations,
                         chain_map[k] * hs.cycles);
  if (!alpha)
    throw Error("NotChainMap", "image of a cycle is not a cycle");
  return *alpha;
}

FPComplex FreeChainComplex::as_fp() const {
  FPComplex c;
  for (std::size_t d : dims) c.terms.push_back(FPAbelianGroup::free(d));
  c.maps = boundaries;
  return c;
}

AbelianGroupInvariants chain_homology(const FreeChainComplex& c,
                                      std::size_t k) {
  for (std::size_t i = 1; i < c.boundaries.size(); ++i)
    if (!(c.boundaries[i - 1] * c.boundaries[i]).is_zero())
      throw Error("CompositionNonzero",
                  "boundary composite nonzero at degree " + std::to_string(i + 1));
  return fp_homology_invariants(c.as_fp(), k);
}

HomologyPresentation chain_homology_presentation(const FreeChainComplex& c,
                                                 std::size_t k) {
  return fp_homology_at(c.as_fp(), k);
}

IntMatrix homology_induced_map(const FreeChainComplex& source,
                               const FreeChainComplex& target,
                               const std::vector<IntMatrix>& chain_map,
                               std::size_t k) {
  return fp_homology_induced(source.as_fp(), target.as_fp(), chain_map, k);
}

}  // namespace bredon
