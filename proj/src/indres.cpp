#include "bredon/indres.hpp"

#include <algorithm>

namespace bredon {

namespace {

Subgroup to_ambient_subgroup(const SubgroupContext& ctx, const Subgroup& s) {
  std::vector<int> elems;
  for (int e : s.elements) elems.push_back(ctx.sub.to_ambient[e]);
  std::sort(elems.begin(), elems.end());
  return {ctx.ambient->group(), std::move(elems)};
}

void require_contained(const SubgroupContext& ctx) {
  if (!ctx.contained)
    throw Error("FamilyNotContained",
                "intersected family does not land in the ambient family");
}

}  // namespace

SubgroupContext make_subgroup_context(const CategoryPtr& ambient,
                                      const Subgroup& lambda) {
  SubgroupContext ctx;
  ctx.ambient = ambient;
  ctx.lambda = lambda;
  ctx.sub = as_group(lambda);

  IntersectedFamily inter = intersect_family(ambient->family(), lambda);
  ctx.contained = inter.contained;
  std::vector<Subgroup> members;
  for (const auto& s : inter.members_ambient) {
    std::vector<int> elems;
    for (int e : s.elements) elems.push_back(ctx.sub.from_ambient[e]);
    std::sort(elems.begin(), elems.end());
    members.push_back({ctx.sub.group, std::move(elems)});
  }
  ctx.subcat =
      OrbitCategory::build(ctx.sub.group, make_family(ctx.sub.group,
                                                      std::move(members),
                                                      false));
  if (!ctx.contained) return ctx;

  for (std::size_t o = 0; o < ctx.subcat->object_count(); ++o) {
    Subgroup amb = to_ambient_subgroup(ctx, ctx.subcat->subgroup(o));
    auto idx = ambient->family().index_of(amb);
    if (!idx) throw Error("Internal", "intersection missing from family");
    ctx.object_map.push_back(*idx);
  }
  for (std::size_t m = 0; m < ctx.subcat->morphism_count(); ++m) {
    const OrbitMorphism& f = ctx.subcat->morphism(m);
    ctx.morphism_map.push_back(
        ambient->morphism_id(ctx.object_map[f.source],
                             ctx.object_map[f.target],
                             ctx.sub.to_ambient[f.rep]));
  }
  return ctx;
}

BredonModule restrict_module(const SubgroupContext& ctx,
                             const BredonModule& m) {
  require_contained(ctx);
  if (m.cat != ctx.ambient)
    throw Error("BadShape", "module not over the ambient category");
  BredonModule out;
  out.cat = ctx.subcat;
  out.variance = m.variance;
  for (std::size_t o = 0; o < ctx.subcat->object_count(); ++o)
    out.values.push_back(m.value(ctx.object_map[o]));
  for (std::size_t f = 0; f < ctx.subcat->morphism_count(); ++f)
    out.action.push_back(m.act(ctx.morphism_map[f]));
  return out;
}

namespace {

/// The left module Z[Gamma/Theta, I(-)] over the subgroup's category:
/// free at Lambda/Xi on the ambient hom set [Gamma/Theta, Gamma/Xi].
BredonModule hom_from_object(const SubgroupContext& ctx, std::size_t theta) {
  const auto& amb = *ctx.ambient;
  BredonModule r;
  r.cat = ctx.subcat;
  r.variance = Variance::Left;
  for (std::size_t o = 0; o < ctx.subcat->object_count(); ++o)
    r.values.push_back(
        FPAbelianGroup::free(amb.hom(theta, ctx.object_map[o]).size()));
  for (std::size_t f = 0; f < ctx.subcat->morphism_count(); ++f) {
    const OrbitMorphism& mor = ctx.subcat->morphism(f);
    const auto& src = amb.hom(theta, ctx.object_map[mor.source]);
    const auto& tgt = amb.hom(theta, ctx.object_map[mor.target]);
    IntMatrix a(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::size_t comp = amb.compose(src[j], ctx.morphism_map[f]);
      for (std::size_t i = 0; i < tgt.size(); ++i)
        if (tgt[i] == comp) a(i, j) = 1;
    }
    r.action.push_back(std::move(a));
  }
  return r;
}

/// Precomposition morphism hom_from_object(t2) -> hom_from_object(t1) induced
/// by the ambient morphism g : t1 -> t2.
BredonMorphism precompose(const SubgroupContext& ctx, std::size_t g,
                          const ModulePtr& r2, const ModulePtr& r1) {
  const auto& amb = *ctx.ambient;
  const OrbitMorphism& gm = amb.morphism(g);
  BredonMorphism psi;
  psi.source = r2;
  psi.target = r1;
  for (std::size_t o = 0; o < ctx.subcat->object_count(); ++o) {
    const auto& src = amb.hom(gm.target, ctx.object_map[o]);
    const auto& tgt = amb.hom(gm.source, ctx.object_map[o]);
    IntMatrix c(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::size_t comp = amb.compose(g, src[j]);
      for (std::size_t i = 0; i < tgt.size(); ++i)
        if (tgt[i] == comp) c(i, j) = 1;
    }
    psi.component.push_back(std::move(c));
  }
  return psi;
}

std::vector<ModulePtr> hom_family(const SubgroupContext& ctx) {
  std::vector<ModulePtr> r;
  for (std::size_t t = 0; t < ctx.ambient->object_count(); ++t)
    r.push_back(std::make_shared<BredonModule>(hom_from_object(ctx, t)));
  return r;
}

}  // namespace

BredonModule induce_module(const SubgroupContext& ctx, const BredonModule& n) {
  require_contained(ctx);
  if (n.cat != ctx.subcat || n.variance != Variance::Right)
    throw Error("BadShape", "induction expects a right module over the subgroup");
  auto homs = hom_family(ctx);
  BredonModule out;
  out.cat = ctx.ambient;
  out.variance = Variance::Right;
  for (std::size_t t = 0; t < ctx.ambient->object_count(); ++t)
    out.values.push_back(tensor_over_F(n, *homs[t]).presentation);
  for (std::size_t g = 0; g < ctx.ambient->morphism_count(); ++g) {
    const OrbitMorphism& gm = ctx.ambient->morphism(g);
    out.action.push_back(tensor_induced_left(
        n, precompose(ctx, g, homs[gm.target], homs[gm.source])));
  }
  return out;
}

BredonMorphism induce_morphism(const SubgroupContext& ctx,
                               const BredonMorphism& phi) {
  require_contained(ctx);
  auto homs = hom_family(ctx);
  BredonMorphism out;
  out.source = std::make_shared<BredonModule>(induce_module(ctx, *phi.source));
  out.target = std::make_shared<BredonModule>(induce_module(ctx, *phi.target));
  for (std::size_t t = 0; t < ctx.ambient->object_count(); ++t)
    out.component.push_back(tensor_induced_right(phi, *homs[t]));
  return out;
}

namespace {

/// element -> coset index, with the same first-appearance numbering that
/// GammaSet::cosets uses.
std::vector<int> coset_index_of(const GroupPtr& g, const Subgroup& lambda) {
  std::vector<int> idx(g->order(), -1);
  int next = 0;
  for (int x = 0; x < g->order(); ++x) {
    if (idx[x] >= 0) continue;
    for (int l : lambda.elements) idx[g->mul(x, l)] = next;
    ++next;
  }
  return idx;
}

}  // namespace

InducedTrivial induce_trivial_with_comparison(const SubgroupContext& ctx) {
  require_contained(ctx);
  const auto& amb = *ctx.ambient;
  auto g = amb.group();

  InducedTrivial out;
  out.module = std::make_shared<BredonModule>(
      induce_module(ctx, trivial_module(ctx.subcat, Variance::Right)));
  GammaSet cosets = GammaSet::cosets(g, ctx.lambda);
  out.target = std::make_shared<BredonModule>(hom_module(ctx.ambient, cosets));
  std::vector<int> coset = coset_index_of(g, ctx.lambda);

  out.comparison.source = out.module;
  out.comparison.target = out.target;
  for (std::size_t t = 0; t < amb.object_count(); ++t) {
    std::vector<int> fixed = fixed_points(cosets, amb.subgroup(t));
    std::vector<int> pos(cosets.size, -1);
    for (std::size_t i = 0; i < fixed.size(); ++i) pos[fixed[i]] = i;
    IntMatrix c(fixed.size(), out.module->value(t).generators);
    // generator blocks: one slot per subcat object, then per ambient
    // morphism u : Gamma/Theta -> Gamma/Xi; u maps to the coset rep_u*Lambda
    std::size_t col = 0;
    for (std::size_t o = 0; o < ctx.subcat->object_count(); ++o)
      for (std::size_t u : amb.hom(t, ctx.object_map[o])) {
        int cidx = coset[amb.morphism(u).rep];
        if (pos[cidx] < 0)
          throw Error("Internal", "comparison target misses a coset");
        c(pos[cidx], col) = 1;
        ++col;
      }
    if (col != out.module->value(t).generators)
      throw Error("Internal", "comparison generator count mismatch");
    out.comparison.component.push_back(std::move(c));
  }
  return out;
}

SplittingReport restricted_free_splitting(const SubgroupContext& ctx,
                                          const FreeModule& f) {
  require_contained(ctx);
  auto res = std::make_shared<BredonModule>(restrict_module(ctx, *f.module));
  FreeCover cover = free_cover(res);
  const auto& cat = *ctx.subcat;

  // unknowns: entries of sigma_o (cover(o).gens x res(o).gens), all objects
  std::vector<std::size_t> base(cat.object_count() + 1, 0);
  for (std::size_t o = 0; o < cat.object_count(); ++o)
    base[o + 1] = base[o] + cover.cover.module->value(o).generators *
                                res->value(o).generators;
  std::size_t nvars = base.back();

  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  auto var = [&](std::size_t o, std::size_t i, std::size_t j) {
    return base[o] + i * res->value(o).generators + j;
  };

  // epi o sigma = identity
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    const IntMatrix& pi = cover.epi.component[o];
    std::size_t gr = res->value(o).generators;
    for (std::size_t r = 0; r < gr; ++r)
      for (std::size_t j = 0; j < gr; ++j) {
        std::vector<Int> row(nvars, 0);
        for (std::size_t i = 0; i < pi.cols(); ++i) row[var(o, i, j)] = pi(r, i);
        rows.push_back(std::move(row));
        rhs.push_back(r == j ? 1 : 0);
      }
  }
  // naturality: sigma_a R(f) = F(f) sigma_b for f : a -> b (right modules)
  for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
    const OrbitMorphism& mor = cat.morphism(m);
    std::size_t a = mor.source, b = mor.target;
    const IntMatrix& rf = res->act(m);                  // R(b) -> R(a)
    const IntMatrix& ff = cover.cover.module->act(m);   // F(b) -> F(a)
    std::size_t rows_a = cover.cover.module->value(a).generators;
    for (std::size_t r = 0; r < rows_a; ++r)
      for (std::size_t j = 0; j < res->value(b).generators; ++j) {
        std::vector<Int> row(nvars, 0);
        for (std::size_t i = 0; i < rf.rows(); ++i)
          row[var(a, r, i)] += rf(i, j);
        for (std::size_t i = 0; i < ff.cols(); ++i)
          row[var(b, i, j)] -= ff(r, i);
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
  }

  IntMatrix a(rows.size(), nvars), b(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < nvars; ++c) a(r, c) = rows[r][c];
    b(r, 0) = rhs[r];
  }
  SplittingReport rep;
  rep.epi = cover.epi;
  auto x = solve(a, b);
  if (!x) return rep;
  rep.found = true;
  rep.section.source = res;
  rep.section.target = cover.cover.module;
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    IntMatrix s(cover.cover.module->value(o).generators,
                res->value(o).generators);
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j)
        s(i, j) = (*x)(var(o, i, j), 0);
    rep.section.component.push_back(std::move(s));
  }
  return rep;
}

}  // namespace bredon
