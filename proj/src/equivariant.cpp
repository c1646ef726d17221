#include "bredon/equivariant.hpp"

#include <algorithm>
#include <map>

#include "bredon/tensor.hpp"

namespace bredon {
namespace {

void insert_block(IntMatrix& big, const IntMatrix& block, std::size_t r0,
                  std::size_t c0) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      big(r0 + i, c0 + j) = block(i, j);
}

std::optional<std::size_t> column_offset(const EquivariantComplex& e, int m,
                                         std::size_t p) {
  for (std::size_t i = 0; i < e.cols[m].size(); ++i)
    if (e.cols[m][i] == p) return e.offsets[m][i];
  return std::nullopt;
}

ModulePtr constant_right(const CategoryPtr& cat) {
  return std::make_shared<const BredonModule>(
      trivial_module(cat, Variance::Right));
}

}  // namespace

EquivariantComplex equivariant_complex(const CategoryPtr& cat,
                                       const GammaComplex& x,
                                       const ModulePtr& m,
                                       const Resolution& q, int top_degree) {
  EquivariantComplex e;
  e.cat = cat;
  e.chains = bredon_chain_complex(cat, x);
  e.coeff = m;
  e.res = q;
  const int d = static_cast<int>(e.chains.terms.size()) - 1;
  const int l = static_cast<int>(q.terms.size()) - 1;
  e.top = std::min(top_degree, d + l);
  if (e.top < 0) throw Error("BadShape", "negative total degree");

  e.blocks.assign(d + 1, std::vector<ModulePtr>(l + 1));
  std::vector<std::vector<FPAbelianGroup>> pres(
      d + 1, std::vector<FPAbelianGroup>(l + 1));
  for (int p = 0; p <= d; ++p)
    for (int qd = 0; qd <= l && p + qd <= e.top; ++qd) {
      e.blocks[p][qd] = std::make_shared<const BredonModule>(
          tensor_over_Z(*e.chains.terms[p], *q.terms[qd].module));
      pres[p][qd] = tensor_over_F(*e.blocks[p][qd], *m).presentation;
    }

  e.cols.resize(e.top + 1);
  e.offsets.resize(e.top + 1);
  std::vector<FPAbelianGroup> terms;
  for (int md = 0; md <= e.top; ++md) {
    std::size_t gens = 0;
    for (int p = std::max(0, md - l); p <= std::min(d, md); ++p) {
      e.cols[md].push_back(p);
      e.offsets[md].push_back(gens);
      gens += pres[p][md - p].generators;
    }
    std::size_t total_rels = 0;
    for (std::size_t i = 0; i < e.cols[md].size(); ++i)
      total_rels += pres[e.cols[md][i]][md - e.cols[md][i]].relations.cols();
    IntMatrix r(gens, total_rels);
    std::size_t c0 = 0;
    for (std::size_t i = 0; i < e.cols[md].size(); ++i) {
      const auto& b = pres[e.cols[md][i]][md - e.cols[md][i]];
      insert_block(r, b.relations, e.offsets[md][i], c0);
      c0 += b.relations.cols();
    }
    terms.push_back({gens, r});
  }

  std::vector<IntMatrix> maps;
  const std::size_t nobj = cat->object_count();
  for (int md = 1; md <= e.top; ++md) {
    IntMatrix dmat(terms[md - 1].generators, terms[md].generators);
    for (std::size_t i = 0; i < e.cols[md].size(); ++i) {
      const int p = static_cast<int>(e.cols[md][i]);
      const int qd = md - p;
      const std::size_t c0 = e.offsets[md][i];
      if (p >= 1) {
        const auto& dc = e.chains.boundaries[p - 1];
        BredonMorphism hz{e.blocks[p][qd], e.blocks[p - 1][qd], {}};
        hz.component.resize(nobj);
        for (std::size_t o = 0; o < nobj; ++o)
          hz.component[o] = kronecker(
              dc.component[o],
              IntMatrix::identity(q.terms[qd].module->value(o).generators));
        insert_block(dmat, tensor_induced_right(hz, *m),
                     *column_offset(e, md - 1, p - 1), c0);
      }
      if (qd >= 1) {
        const auto& dq = q.maps[qd];
        BredonMorphism vz{e.blocks[p][qd], e.blocks[p][qd - 1], {}};
        vz.component.resize(nobj);
        for (std::size_t o = 0; o < nobj; ++o) {
          IntMatrix c = kronecker(
              IntMatrix::identity(e.chains.terms[p]->value(o).generators),
              dq.component[o]);
          vz.component[o] = (p % 2 == 0) ? c : -c;
        }
        insert_block(dmat, tensor_induced_right(vz, *m),
                     *column_offset(e, md - 1, p), c0);
      }
    }
    maps.push_back(dmat);
  }

  e.total = FPComplex{std::move(terms), std::move(maps)};
  e.total.check_composes_to_zero();
  return e;
}

AbelianGroupInvariants equivariant_homology(const CategoryPtr& cat,
                                            const GammaComplex& x,
                                            const ModulePtr& m, int k,
                                            std::size_t resolution_length,
                                            std::size_t budget) {
  if (k < 0) throw Error("BadShape", "negative degree");
  const ModulePtr zbar = constant_right(cat);
  auto compute = [&](std::size_t len) {
    Resolution q = resolve(zbar, len, budget);
    EquivariantComplex e = equivariant_complex(cat, x, m, q, k + 1);
    return fp_homology_invariants(e.total, static_cast<std::size_t>(k));
  };
  if (resolution_length) return compute(resolution_length);
  AbelianGroupInvariants a = compute(static_cast<std::size_t>(k) + 2);
  AbelianGroupInvariants b = compute(static_cast<std::size_t>(k) + 3);
  if (!(a == b)) throw Error("Internal", "homology unstable in resolution length");
  return a;
}

std::vector<IntMatrix> equivariant_chain_map(
    const EquivariantComplex& src, const EquivariantComplex& tgt,
    const std::vector<BredonMorphism>& phi) {
  if (src.top != tgt.top)
    throw Error("BadShape", "total complexes of different height");
  const std::size_t nobj = src.cat->object_count();
  std::vector<IntMatrix> maps;
  for (int md = 0; md <= src.top; ++md) {
    IntMatrix f(tgt.total.terms[md].generators, src.total.terms[md].generators);
    for (std::size_t i = 0; i < src.cols[md].size(); ++i) {
      const std::size_t p = src.cols[md][i];
      const int qd = md - static_cast<int>(p);
      if (p >= phi.size()) continue;
      auto r0 = column_offset(tgt, md, p);
      if (!r0) continue;
      BredonMorphism pz{src.blocks[p][qd], tgt.blocks[p][qd], {}};
      pz.component.resize(nobj);
      for (std::size_t o = 0; o < nobj; ++o)
        pz.component[o] = kronecker(
            phi[p].component[o],
            IntMatrix::identity(src.res.terms[qd].module->value(o).generators));
      insert_block(f, tensor_induced_right(pz, *src.coeff), *r0,
                   src.offsets[md][i]);
    }
    maps.push_back(f);
  }
  return maps;
}

std::vector<BredonMorphism> inclusion_chain_morphisms(
    const CategoryPtr& cat, const GammaComplex& a, const GammaComplex& b,
    const BredonChainComplex& ca, const BredonChainComplex& cb) {
  const std::size_t nobj = cat->object_count();
  std::vector<BredonMorphism> phi;
  for (std::size_t p = 0; p < ca.terms.size(); ++p) {
    BredonMorphism inc{ca.terms[p],
                       p < cb.terms.size() ? cb.terms[p] : nullptr, {}};
    if (!inc.target)
      throw Error("BadShape", "subcomplex exceeds ambient dimension");
    inc.component.resize(nobj);
    for (std::size_t o = 0; o < nobj; ++o) {
      SimplicialComplex fa = fixed_subcomplex(a, cat->subgroup(o));
      SimplicialComplex fb = fixed_subcomplex(b, cat->subgroup(o));
      IntMatrix c(cb.terms[p]->value(o).generators,
                  ca.terms[p]->value(o).generators);
      for (std::size_t i = 0; i < fa.count(p); ++i) {
        auto j = fb.index_of(p, fa.bydim[p][i]);
        if (!j) throw Error("BadShape", "cell missing from ambient complex");
        c(*j, i) = 1;
      }
      inc.component[o] = std::move(c);
    }
    phi.push_back(std::move(inc));
  }
  return phi;
}

ProjectionReport verify_projection_comparison(const CategoryPtr& cat, const GammaComplex& x,
                       const ModulePtr& m, int n, std::size_t budget) {
  ProjectionReport rep;
  rep.applicable = is_F_acyclic(cat, x, n - 1).acyclic;
  if (!rep.applicable || n == 0) return rep;

  const ModulePtr zbar = constant_right(cat);
  Resolution q = resolve(zbar, static_cast<std::size_t>(n) + 2, budget);
  GammaComplex pt =
      validate_complex(GammaSet::one_point(cat->subgroup(0).group), {{0}});
  EquivariantComplex ex = equivariant_complex(cat, x, m, q, n);
  EquivariantComplex ep = equivariant_complex(cat, pt, m, q, n);

  std::vector<BredonMorphism> phi(1);
  phi[0] = {ex.chains.terms[0], ep.chains.terms[0], {}};
  phi[0].component.resize(cat->object_count());
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    IntMatrix ones(1, ex.chains.terms[0]->value(o).generators);
    for (std::size_t j = 0; j < ones.cols(); ++j) ones(0, j) = 1;
    phi[0].component[o] = std::move(ones);
  }
  auto maps = equivariant_chain_map(ex, ep, phi);

  TorTable gh = bredon_homology_of_group(cat, *m, n - 1, budget);
  for (int k = 0; k < n; ++k) {
    auto hs = fp_homology_at(ex.total, k);
    auto ht = fp_homology_at(ep.total, k);
    IntMatrix ind = fp_homology_induced(ex.total, ep.total, maps, k);
    rep.iso.push_back(fp_is_iso(ind, hs.group, ht.group));
    rep.invariants_match.push_back(invariants(hs.group) == gh.degrees[k] &&
                                   invariants(ht.group) == gh.degrees[k]);
  }
  return rep;
}

ColimitReport verify_colimit_identity(const CategoryPtr& cat, const Filtration& f,
                       const ModulePtr& m, int k, std::size_t budget) {
  ColimitReport rep;
  const ModulePtr zbar = constant_right(cat);
  Resolution q = resolve(zbar, static_cast<std::size_t>(k) + 2, budget);
  EquivariantComplex ex = equivariant_complex(cat, f.total, m, q, k + 1);
  std::vector<EquivariantComplex> es;
  for (const auto& s : f.stages)
    es.push_back(equivariant_complex(cat, s, m, q, k + 1));

  auto induced = [&](const EquivariantComplex& a, const GammaComplex& ga,
                     const EquivariantComplex& b, const GammaComplex& gb) {
    auto phi = inclusion_chain_morphisms(cat, ga, gb, a.chains, b.chains);
    return fp_homology_induced(a.total, b.total,
                               equivariant_chain_map(a, b, phi), k);
  };

  const std::size_t last = es.size() - 1;
  IntMatrix to_total = induced(es[last], f.stages[last], ex, f.total);
  rep.last_iso = fp_is_iso(to_total, fp_homology_at(es[last].total, k).group,
                           fp_homology_at(ex.total, k).group);

  std::vector<IntMatrix> steps;
  for (std::size_t i = 0; i + 1 < es.size(); ++i)
    steps.push_back(induced(es[i], f.stages[i], es[i + 1], f.stages[i + 1]));

  rep.coherent = true;
  const auto& target = fp_homology_at(ex.total, k).group;
  for (std::size_t a = 0; a < es.size(); ++a) {
    IntMatrix comp = to_total;
    for (std::size_t i = last; i > a; --i) comp = comp * steps[i - 1];
    IntMatrix direct = induced(es[a], f.stages[a], ex, f.total);
    if (!maps_equal(comp, direct, target)) rep.coherent = false;
  }
  return rep;
}

MultiplicityReport verify_finite_multiplicity(const CategoryPtr& cat, const GammaComplex& x,
                       const std::vector<std::size_t>& multiplicities, int n,
                       std::size_t budget) {
  if (multiplicities.size() != cat->object_count())
    throw Error("BadShape", "one multiplicity per object expected");
  MultiplicityReport rep;
  std::vector<BredonModule> reps;
  std::vector<const BredonModule*> parts;
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    reps.push_back(represented_left(cat, o));
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    for (std::size_t j = 0; j < multiplicities[o]; ++j)
      parts.push_back(&reps[o]);
  ModulePtr m = std::make_shared<const BredonModule>(
      parts.empty() ? zero_module(cat, Variance::Left)
                    : direct_sum(parts).module);

  const int top = std::max(x.cells.dim(), n);
  for (int k = 0; k <= n; ++k) {
    AbelianGroupInvariants lhs = equivariant_homology(
        cat, x, m, k, static_cast<std::size_t>(n) + 2, budget);
    std::size_t gens = 0;
    std::vector<IntMatrix> blocks;
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      if (!multiplicities[o]) continue;
      SimplicialComplex fx = fixed_subcomplex(x, cat->subgroup(o));
      auto h = chain_homology_presentation(fx.chains(top, false), k);
      for (std::size_t j = 0; j < multiplicities[o]; ++j) {
        gens += h.group.generators;
        blocks.push_back(h.group.relations);
      }
    }
    std::size_t rcols = 0;
    for (const auto& b : blocks) rcols += b.cols();
    IntMatrix rels(gens, rcols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
      insert_block(rels, b, r0, c0);
      r0 += b.rows();
      c0 += b.cols();
    }
    rep.match.push_back(lhs == invariants(FPAbelianGroup{gens, rels}));
  }
  return rep;
}

BrownReport brown_check(const CategoryPtr& cat, const Filtration& f, int n,
                        std::size_t budget) {
  BrownReport rep;
  rep.goodness = is_F_n_good(cat, f.total, n, budget);
  rep.fp = fp_n_report(constant_right(cat), n, budget);
  bool all_trivial = true;
  for (int k = -1; k < n; ++k) {
    rep.systems.push_back(essentially_trivial(homology_system(cat, f, k)));
    all_trivial = all_trivial && rep.systems.back().trivial;
  }
  if (!rep.goodness.good)
    rep.verdict = BrownVerdict::Inapplicable;
  else
    rep.verdict = (rep.fp.holds == all_trivial) ? BrownVerdict::Consistent
                                                : BrownVerdict::Violation;
  return rep;
}

FP0Witness fp0_constructive_witness(const CategoryPtr& cat,
                                    const GammaComplex& x) {
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    if (fixed_subcomplex(x, cat->subgroup(o)).count(0) == 0)
      throw Error("NoFixedPoint",
                  "empty fixed set at object " + std::to_string(o));

  FP0Witness w;
  const GroupPtr ambient = cat->subgroup(0).group;
  std::vector<std::vector<int>> seen;
  for (int v : x.vertices.orbit_representatives()) {
    SubgroupContext ctx = make_subgroup_context(cat, x.vertices.stabilizer(v));
    const Family& sf = ctx.subcat->family();
    for (std::size_t idx : fp0_witness(sf)) {
      std::vector<int> elems;
      for (int e : sf.members[idx].elements)
        elems.push_back(ctx.sub.to_ambient[e]);
      std::sort(elems.begin(), elems.end());
      if (std::find(seen.begin(), seen.end(), elems) != seen.end()) continue;
      seen.push_back(elems);
      w.family0.push_back(Subgroup{ambient, elems});
    }
  }
  std::sort(w.family0.begin(), w.family0.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return a.elements.size() != b.elements.size()
                         ? a.elements.size() < b.elements.size()
                         : a.elements < b.elements;
            });

  w.verified = true;
  for (const auto& lambda : cat->family().members) {
    bool hit = false;
    for (const auto& g : w.family0)
      if (is_subconjugate(lambda, g)) hit = true;
    if (!hit) w.verified = false;
  }
  return w;
}

}  // namespace bredon
