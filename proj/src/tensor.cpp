#include "bredon/tensor.hpp"

namespace bredon {

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

void require_pair(const BredonModule& n, const BredonModule& m) {
  if (n.cat != m.cat)
    throw Error("VarianceMismatch", "modules live over different categories");
  if (n.variance != Variance::Right || m.variance != Variance::Left)
    throw Error("VarianceMismatch",
                "tensor over the family needs a right and a left module");
}

std::vector<std::size_t> block_offsets(const BredonModule& n,
                                       const BredonModule& m,
                                       std::size_t* total) {
  std::vector<std::size_t> off;
  std::size_t t = 0;
  for (std::size_t o = 0; o < n.cat->object_count(); ++o) {
    off.push_back(t);
    t += n.value(o).generators * m.value(o).generators;
  }
  *total = t;
  return off;
}

}  // namespace

TensorResult tensor_over_F(const BredonModule& n, const BredonModule& m) {
  require_pair(n, m);
  const auto& cat = *n.cat;
  TensorResult out;
  std::size_t gens = 0;
  out.offsets = block_offsets(n, m, &gens);

  std::vector<IntMatrix> cols;  // relation columns, assembled then hstacked
  std::size_t ncols = 0;
  for (std::size_t o = 0; o < cat.object_count(); ++o)
    ncols += n.value(o).relations.cols() * m.value(o).generators +
             n.value(o).generators * m.value(o).relations.cols();
  for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
    const OrbitMorphism& mor = cat.morphism(f);
    ncols += n.value(mor.target).generators * m.value(mor.source).generators;
  }

  IntMatrix rels(gens, ncols);
  std::size_t c = 0;
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    std::size_t gm = m.value(o).generators;
    const IntMatrix& rn = n.value(o).relations;
    for (std::size_t r = 0; r < rn.cols(); ++r)
      for (std::size_t j = 0; j < gm; ++j) {
        for (std::size_t i = 0; i < rn.rows(); ++i)
          rels(out.offsets[o] + i * gm + j, c) = rn(i, r);
        ++c;
      }
    const IntMatrix& rm = m.value(o).relations;
    for (std::size_t i = 0; i < n.value(o).generators; ++i)
      for (std::size_t r = 0; r < rm.cols(); ++r) {
        for (std::size_t j = 0; j < rm.rows(); ++j)
          rels(out.offsets[o] + i * gm + j, c) = rm(j, r);
        ++c;
      }
  }
  // balancing: N(f)(e_i) (x) e_j at the source object minus
  // e_i (x) M(f)(e_j) at the target object, f : a -> b
  for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
    const OrbitMorphism& mor = cat.morphism(f);
    std::size_t a = mor.source, b = mor.target;
    const IntMatrix& an = n.act(f);  // N(b) -> N(a)
    const IntMatrix& am = m.act(f);  // M(a) -> M(b)
    std::size_t gma = m.value(a).generators, gmb = m.value(b).generators;
    for (std::size_t i = 0; i < n.value(b).generators; ++i)
      for (std::size_t j = 0; j < gma; ++j) {
        for (std::size_t k = 0; k < an.rows(); ++k)
          rels(out.offsets[a] + k * gma + j, c) += an(k, i);
        for (std::size_t l = 0; l < am.rows(); ++l)
          rels(out.offsets[b] + i * gmb + l, c) -= am(l, j);
        ++c;
      }
  }
  out.presentation = {gens, std::move(rels)};
  out.group = invariants(out.presentation);
  return out;
}

IntMatrix tensor_induced_right(const BredonMorphism& phi,
                               const BredonModule& m) {
  std::size_t src_total = 0, tgt_total = 0;
  auto soff = block_offsets(*phi.source, m, &src_total);
  auto toff = block_offsets(*phi.target, m, &tgt_total);
  IntMatrix out(tgt_total, src_total);
  for (std::size_t o = 0; o < m.cat->object_count(); ++o) {
    IntMatrix blk = kronecker(phi.component[o],
                              IntMatrix::identity(m.value(o).generators));
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j)
        out(toff[o] + i, soff[o] + j) = blk(i, j);
  }
  return out;
}

IntMatrix tensor_induced_left(const BredonModule& n,
                              const BredonMorphism& psi) {
  std::size_t src_total = 0, tgt_total = 0;
  auto soff = block_offsets(n, *psi.source, &src_total);
  auto toff = block_offsets(n, *psi.target, &tgt_total);
  IntMatrix out(tgt_total, src_total);
  for (std::size_t o = 0; o < n.cat->object_count(); ++o) {
    IntMatrix blk = kronecker(IntMatrix::identity(n.value(o).generators),
                              psi.component[o]);
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j)
        out(toff[o] + i, soff[o] + j) = blk(i, j);
  }
  return out;
}

BredonModule tensor_over_Z(const BredonModule& m, const BredonModule& n) {
  if (m.cat != n.cat || m.variance != n.variance)
    throw Error("VarianceMismatch",
                "tensor over Z needs one category and one variance");
  BredonModule out;
  out.cat = m.cat;
  out.variance = m.variance;
  for (std::size_t o = 0; o < m.cat->object_count(); ++o) {
    std::size_t gm = m.value(o).generators, gn = n.value(o).generators;
    IntMatrix rels = hstack(kronecker(m.value(o).relations,
                                      IntMatrix::identity(gn)),
                            kronecker(IntMatrix::identity(gm),
                                      n.value(o).relations));
    out.values.push_back({gm * gn, std::move(rels)});
  }
  for (std::size_t f = 0; f < m.cat->morphism_count(); ++f)
    out.action.push_back(kronecker(m.act(f), n.act(f)));
  return out;
}

namespace {

/// P_* (x)_F M for a free resolution: FPComplex whose k-th term carries the
/// full coend presentation.
FPComplex tensored_complex(const Resolution& res, const BredonModule& m) {
  FPComplex c;
  for (const auto& t : res.terms)
    c.terms.push_back(tensor_over_F(*t.module, m).presentation);
  for (std::size_t k = 1; k < res.maps.size(); ++k)
    c.maps.push_back(tensor_induced_right(res.maps[k], m));
  return c;
}

bool same_invariants(const AbelianGroupInvariants& a,
                     const AbelianGroupInvariants& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

}  // namespace

TorTable tor(const ModulePtr& n, const BredonModule& m, std::size_t max_degree,
             std::size_t budget) {
  if (n->variance != Variance::Right || m.variance != Variance::Left)
    throw Error("VarianceMismatch", "tor needs a right and a left module");
  TorTable out;
  out.resolution = resolve(n, max_degree + 1, budget);
  FPComplex c = tensored_complex(out.resolution, m);
  for (std::size_t k = 0; k <= max_degree; ++k)
    out.degrees.push_back(fp_homology_invariants(c, k));
  if (!same_invariants(out.degrees[0], tensor_over_F(*n, m).group))
    throw Error("Internal", "degree-0 Tor disagrees with the tensor product");
  return out;
}

TorTable bredon_homology_of_group(const CategoryPtr& cat,
                                  const BredonModule& m,
                                  std::size_t max_degree, std::size_t budget) {
  auto z = std::make_shared<BredonModule>(trivial_module(cat, Variance::Right));
  return tor(z, m, max_degree, budget);
}

FiniteMultiplicityReport bieri_eckmann_finite_check(
    const ModulePtr& n, std::size_t max_degree,
    const std::vector<std::size_t>& multiplicities, std::size_t budget) {
  const CategoryPtr& cat = n->cat;
  if (multiplicities.size() != cat->object_count())
    throw Error("BadShape", "one multiplicity per object required");

  std::vector<BredonModule> factors;
  std::vector<std::size_t> factor_object;
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    for (std::size_t c = 0; c < multiplicities[o]; ++c) {
      factors.push_back(represented_left(cat, o));
      factor_object.push_back(o);
    }

  Resolution res = resolve(n, max_degree + 1, budget);
  FiniteMultiplicityReport rep;

  if (factors.empty()) {
    // both sides are zero in every degree
    rep.iso.assign(max_degree + 1, true);
    rep.epi.assign(max_degree + 1, true);
    return rep;
  }

  std::vector<const BredonModule*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  DirectSum sum = direct_sum(ptrs);
  auto big = std::make_shared<BredonModule>(sum.module);

  FPComplex total = tensored_complex(res, *big);
  std::vector<FPComplex> parts;
  std::vector<std::vector<IntMatrix>> chain_maps;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    auto factor = std::make_shared<BredonModule>(factors[p]);
    BredonMorphism proj;
    proj.source = big;
    proj.target = factor;
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      IntMatrix c(factor->value(o).generators, big->value(o).generators);
      for (std::size_t i = 0; i < c.rows(); ++i)
        c(i, sum.offsets[p][o] + i) = 1;
      proj.component.push_back(std::move(c));
    }
    parts.push_back(tensored_complex(res, *factor));
    std::vector<IntMatrix> cm;
    for (const auto& t : res.terms)
      cm.push_back(tensor_induced_left(*t.module, proj));
    chain_maps.push_back(std::move(cm));
  }

  for (std::size_t k = 0; k <= max_degree; ++k) {
    HomologyPresentation hs = fp_homology_at(total, k);
    std::vector<FPAbelianGroup> tgroups;
    std::vector<IntMatrix> maps;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      tgroups.push_back(fp_homology_at(parts[p], k).group);
      maps.push_back(fp_homology_induced(total, parts[p], chain_maps[p], k));
    }
    std::size_t tg = 0, tr = 0;
    for (const auto& g : tgroups) {
      tg += g.generators;
      tr += g.relations.cols();
    }
    IntMatrix rels(tg, tr);
    IntMatrix stacked(tg, hs.group.generators);
    std::size_t goff = 0, roff = 0;
    for (std::size_t p = 0; p < tgroups.size(); ++p) {
      const IntMatrix& r = tgroups[p].relations;
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
          rels(goff + i, roff + j) = r(i, j);
      for (std::size_t i = 0; i < maps[p].rows(); ++i)
        for (std::size_t j = 0; j < maps[p].cols(); ++j)
          stacked(goff + i, j) = maps[p](i, j);
      goff += tgroups[p].generators;
      roff += r.cols();
    }
    FPAbelianGroup target{tg, std::move(rels)};
    rep.iso.push_back(fp_is_iso(stacked, hs.group, target));
    rep.epi.push_back(fp_is_epi(stacked, hs.group, target));
  }
  return rep;
}

}  // namespace bredon
