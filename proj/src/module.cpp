#include "bredon/module.hpp"

#include <cstdlib>
#include <sstream>

namespace bredon {

std::size_t BredonModule::action_source(std::size_t m) const {
  const OrbitMorphism& f = cat->morphism(m);
  return variance == Variance::Right ? f.target : f.source;
}

std::size_t BredonModule::action_target(std::size_t m) const {
  const OrbitMorphism& f = cat->morphism(m);
  return variance == Variance::Right ? f.source : f.target;
}

std::size_t BredonModule::total_generators() const {
  std::size_t t = 0;
  for (const auto& v : values) t += v.generators;
  return t;
}

bool BredonModule::is_zero() const {
  for (const auto& v : values)
    if (!invariants(v).is_trivial()) return false;
  return true;
}

ValidationReport validate_module(const BredonModule& m) {
  const auto& cat = *m.cat;
  if (m.values.size() != cat.object_count() ||
      m.action.size() != cat.morphism_count())
    return {false, "value/action count mismatch"};
  for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
    const IntMatrix& a = m.act(f);
    const FPAbelianGroup& src = m.value(m.action_source(f));
    const FPAbelianGroup& tgt = m.value(m.action_target(f));
    if (a.rows() != tgt.generators || a.cols() != src.generators)
      return {false, "action matrix shape mismatch at morphism " +
                         std::to_string(f)};
    if (!respects_relations(a, src, tgt))
      return {false, "action at morphism " + std::to_string(f) +
                         " does not respect relations"};
  }
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    std::size_t id = cat.identity(o);
    if (!maps_equal(m.act(id), IntMatrix::identity(m.value(o).generators),
                    m.value(o)))
      return {false, "identity morphism of object " + std::to_string(o) +
                         " does not act as identity"};
  }
  for (std::size_t f = 0; f < cat.morphism_count(); ++f)
    for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
      if (cat.morphism(f).target != cat.morphism(g).source) continue;
      std::size_t fg = cat.compose(f, g);
      IntMatrix lhs = m.variance == Variance::Right ? m.act(f) * m.act(g)
                                                    : m.act(g) * m.act(f);
      if (!maps_equal(m.act(fg), lhs, m.value(m.action_target(fg))))
        return {false, "composite of morphisms " + std::to_string(f) + " and " +
                           std::to_string(g) + " violates functoriality"};
    }
  return {};
}

BredonModule trivial_module(const CategoryPtr& cat, Variance v) {
  BredonModule m;
  m.cat = cat;
  m.variance = v;
  m.values.assign(cat->object_count(), FPAbelianGroup::free(1));
  m.action.assign(cat->morphism_count(), IntMatrix::identity(1));
  return m;
}

BredonModule zero_module(const CategoryPtr& cat, Variance v) {
  BredonModule m;
  m.cat = cat;
  m.variance = v;
  m.values.assign(cat->object_count(), FPAbelianGroup::free(0));
  m.action.assign(cat->morphism_count(), IntMatrix(0, 0));
  return m;
}

BredonModule hom_module(const CategoryPtr& cat, const GammaSet& delta) {
  BredonModule m;
  m.cat = cat;
  m.variance = Variance::Right;
  std::vector<std::vector<int>> fixed(cat->object_count());
  std::vector<std::vector<int>> pos(cat->object_count(),
                                    std::vector<int>(delta.size, -1));
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    fixed[o] = fixed_points(delta, cat->subgroup(o));
    for (std::size_t i = 0; i < fixed[o].size(); ++i) pos[o][fixed[o][i]] = i;
    m.values.push_back(FPAbelianGroup::free(fixed[o].size()));
  }
  for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
    const OrbitMorphism& mor = cat->morphism(f);
    int g = mor.rep;
    IntMatrix a(fixed[mor.source].size(), fixed[mor.target].size());
    for (std::size_t j = 0; j < fixed[mor.target].size(); ++j) {
      int image = delta.apply(g, fixed[mor.target][j]);
      a(pos[mor.source][image], j) = 1;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

BredonModule represented_right(const CategoryPtr& cat, std::size_t object) {
  BredonModule m;
  m.cat = cat;
  m.variance = Variance::Right;
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    m.values.push_back(FPAbelianGroup::free(cat->hom(o, object).size()));
  for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
    const OrbitMorphism& mor = cat->morphism(f);
    const auto& src_basis = cat->hom(mor.target, object);
    const auto& tgt_basis = cat->hom(mor.source, object);
    IntMatrix a(tgt_basis.size(), src_basis.size());
    for (std::size_t j = 0; j < src_basis.size(); ++j) {
      std::size_t comp = cat->compose(f, src_basis[j]);  // u o f
      for (std::size_t i = 0; i < tgt_basis.size(); ++i)
        if (tgt_basis[i] == comp) a(i, j) = 1;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

BredonModule represented_left(const CategoryPtr& cat, std::size_t object) {
  BredonModule m;
  m.cat = cat;
  m.variance = Variance::Left;
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    m.values.push_back(FPAbelianGroup::free(cat->hom(object, o).size()));
  for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
    const OrbitMorphism& mor = cat->morphism(f);
    const auto& src_basis = cat->hom(object, mor.source);
    const auto& tgt_basis = cat->hom(object, mor.target);
    IntMatrix a(tgt_basis.size(), src_basis.size());
    for (std::size_t j = 0; j < src_basis.size(); ++j) {
      std::size_t comp = cat->compose(src_basis[j], f);  // f o u
      for (std::size_t i = 0; i < tgt_basis.size(); ++i)
        if (tgt_basis[i] == comp) a(i, j) = 1;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

DirectSum direct_sum(const std::vector<const BredonModule*>& parts) {
  if (parts.empty()) throw Error("BadShape", "empty direct sum");
  DirectSum out;
  const CategoryPtr& cat = parts[0]->cat;
  out.module.cat = cat;
  out.module.variance = parts[0]->variance;
  out.offsets.assign(parts.size(),
                     std::vector<std::size_t>(cat->object_count(), 0));
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    std::size_t gens = 0, nrels = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      out.offsets[p][o] = gens;
      gens += parts[p]->value(o).generators;
      nrels += parts[p]->value(o).relations.cols();
    }
    IntMatrix rels(gens, nrels);
    std::size_t roff = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const IntMatrix& r = parts[p]->value(o).relations;
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
          rels(out.offsets[p][o] + i, roff + j) = r(i, j);
      roff += r.cols();
    }
    out.module.values.push_back({gens, std::move(rels)});
  }
  for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
    std::size_t so = parts[0]->variance == Variance::Right
                         ? cat->morphism(f).target
                         : cat->morphism(f).source;
    std::size_t to = parts[0]->variance == Variance::Right
                         ? cat->morphism(f).source
                         : cat->morphism(f).target;
    IntMatrix a(out.module.value(to).generators,
                out.module.value(so).generators);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const IntMatrix& b = parts[p]->act(f);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          a(out.offsets[p][to] + i, out.offsets[p][so] + j) = b(i, j);
    }
    out.module.action.push_back(std::move(a));
  }
  return out;
}

ValidationReport validate_morphism(const BredonMorphism& phi) {
  const BredonModule& m = *phi.source;
  const BredonModule& n = *phi.target;
  if (m.cat != n.cat || m.variance != n.variance)
    return {false, "source and target live over different categories"};
  const auto& cat = *m.cat;
  if (phi.component.size() != cat.object_count())
    return {false, "component count mismatch"};
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    const IntMatrix& c = phi.component[o];
    if (c.rows() != n.value(o).generators || c.cols() != m.value(o).generators)
      return {false, "component shape mismatch at object " + std::to_string(o)};
    if (!respects_relations(c, m.value(o), n.value(o)))
      return {false, "component at object " + std::to_string(o) +
                         " does not respect relations"};
  }
  for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
    std::size_t so = m.action_source(f), to = m.action_target(f);
    IntMatrix lhs = phi.component[to] * m.act(f);
    IntMatrix rhs = n.act(f) * phi.component[so];
    if (!maps_equal(lhs, rhs, n.value(to)))
      return {false, "naturality square fails at morphism " + std::to_string(f)};
  }
  return {};
}

bool morphism_is_zero(const BredonMorphism& phi) {
  for (std::size_t o = 0; o < phi.source->cat->object_count(); ++o)
    if (!is_zero_map(phi.component[o], phi.target->value(o))) return false;
  return true;
}

bool morphism_is_iso(const BredonMorphism& phi) {
  for (std::size_t o = 0; o < phi.source->cat->object_count(); ++o)
    if (!fp_is_iso(phi.component[o], phi.source->value(o),
                   phi.target->value(o)))
      return false;
  return true;
}

BredonMorphism compose(const BredonMorphism& first, const BredonMorphism& then) {
  BredonMorphism out;
  out.source = first.source;
  out.target = then.target;
  for (std::size_t o = 0; o < first.source->cat->object_count(); ++o)
    out.component.push_back(then.component[o] * first.component[o]);
  return out;
}

BredonMorphism identity_morphism(const ModulePtr& m) {
  BredonMorphism out;
  out.source = m;
  out.target = m;
  for (const auto& v : m->values)
    out.component.push_back(IntMatrix::identity(v.generators));
  return out;
}

BredonMorphism zero_morphism(const ModulePtr& source, const ModulePtr& target) {
  BredonMorphism out;
  out.source = source;
  out.target = target;
  for (std::size_t o = 0; o < source->cat->object_count(); ++o)
    out.component.push_back(IntMatrix(target->value(o).generators,
                                      source->value(o).generators));
  return out;
}

SubModule kernel(const BredonMorphism& phi) {
  const BredonModule& m = *phi.source;
  auto k = std::make_shared<BredonModule>();
  k->cat = m.cat;
  k->variance = m.variance;
  std::vector<IntMatrix> inclusions;
  for (std::size_t o = 0; o < m.cat->object_count(); ++o) {
    FPSubgroup sub = fp_kernel(phi.component[o], m.value(o),
                               phi.target->value(o));
    k->values.push_back(std::move(sub.group));
    inclusions.push_back(std::move(sub.inclusion));
  }
  for (std::size_t f = 0; f < m.cat->morphism_count(); ++f) {
    std::size_t so = m.action_source(f), to = m.action_target(f);
    auto a = solve(inclusions[to], m.act(f) * inclusions[so]);
    if (!a)
      throw Error("Internal", "kernel action failed to restrict");
    k->action.push_back(std::move(*a));
  }
  BredonMorphism incl;
  incl.source = k;
  incl.target = phi.source;
  incl.component = std::move(inclusions);
  return {std::move(k), std::move(incl)};
}

QuotientModule cokernel(const BredonMorphism& phi) {
  const BredonModule& n = *phi.target;
  auto q = std::make_shared<BredonModule>();
  q->cat = n.cat;
  q->variance = n.variance;
  for (std::size_t o = 0; o < n.cat->object_count(); ++o)
    q->values.push_back(fp_cokernel(phi.component[o], n.value(o)));
  q->action = n.action;
  BredonMorphism proj;
  proj.source = phi.target;
  proj.target = q;
  for (const auto& v : n.values)
    proj.component.push_back(IntMatrix::identity(v.generators));
  return {std::move(q), std::move(proj)};
}

BredonMorphism yoneda(const CategoryPtr& cat, std::size_t object,
                      const ModulePtr& m, const IntMatrix& x) {
  if (x.rows() != m->value(object).generators || x.cols() != 1)
    throw Error("BadShape", "element must be a generator-coordinate column");
  auto rep = std::make_shared<BredonModule>(
      m->variance == Variance::Right ? represented_right(cat, object)
                                     : represented_left(cat, object));
  BredonMorphism phi;
  phi.source = rep;
  phi.target = m;
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    const auto& basis = m->variance == Variance::Right ? cat->hom(o, object)
                                                       : cat->hom(object, o);
    IntMatrix c(m->value(o).generators, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      IntMatrix col = m->act(basis[j]) * x;
      for (std::size_t i = 0; i < c.rows(); ++i) c(i, j) = col(i, 0);
    }
    phi.component.push_back(std::move(c));
  }
  return phi;
}

IntMatrix yoneda_evaluate(const BredonMorphism& phi, std::size_t object) {
  const auto& cat = *phi.source->cat;
  const auto& basis = phi.source->variance == Variance::Right
                          ? cat.hom(object, object)
                          : cat.hom(object, object);
  std::size_t id = cat.identity(object);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (basis[j] == id) return phi.component[object].column(j);
  throw Error("BadShape", "identity coset not in basis");
}

FreeModule free_module(const CategoryPtr& cat, Variance v,
                       const std::vector<std::size_t>& slot_objects) {
  FreeModule out;
  out.slots = slot_objects;
  std::vector<BredonModule> parts;
  parts.reserve(slot_objects.size());
  for (std::size_t o : slot_objects)
    parts.push_back(v == Variance::Right ? represented_right(cat, o)
                                         : represented_left(cat, o));
  if (parts.empty()) {
    out.module = std::make_shared<BredonModule>(zero_module(cat, v));
    return out;
  }
  std::vector<const BredonModule*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  DirectSum ds = direct_sum(ptrs);
  out.module = std::make_shared<BredonModule>(std::move(ds.module));
  out.offsets = std::move(ds.offsets);
  return out;
}

FreeCover free_cover(const ModulePtr& m) {
  const auto& cat = m->cat;
  const std::size_t nobj = cat->object_count();
  std::vector<std::size_t> slot_objects;
  std::vector<std::pair<std::size_t, std::size_t>> slot_gen;  // (object, gen)
  // greedy selection: skip generators already covered by earlier slots,
  // whose represented summands hit whole action orbits at once
  std::vector<IntMatrix> img(nobj);
  for (std::size_t a = 0; a < nobj; ++a) img[a] = m->value(a).relations;
  for (std::size_t o = 0; o < nobj; ++o)
    for (std::size_t i = 0; i < m->value(o).generators; ++i) {
      IntMatrix e(m->value(o).generators, 1);
      e(i, 0) = 1;
      if (in_span(img[o], e)) continue;
      slot_objects.push_back(o);
      slot_gen.emplace_back(o, i);
      for (std::size_t a = 0; a < nobj; ++a) {
        const auto& basis = m->variance == Variance::Right ? cat->hom(a, o)
                                                           : cat->hom(o, a);
        for (std::size_t f : basis) {
          const IntMatrix& act = m->act(f);
          IntMatrix col(act.rows(), 1);
          for (std::size_t r = 0; r < act.rows(); ++r) col(r, 0) = act(r, i);
          img[a] = hstack(img[a], col);
        }
      }
    }
  FreeCover out;
  out.cover = free_module(cat, m->variance, slot_objects);
  out.epi.source = out.cover.module;
  out.epi.target = m;
  for (std::size_t a = 0; a < cat->object_count(); ++a) {
    IntMatrix c(m->value(a).generators, out.cover.module->value(a).generators);
    for (std::size_t s = 0; s < slot_objects.size(); ++s) {
      auto [o, gen] = slot_gen[s];
      const auto& basis = m->variance == Variance::Right ? cat->hom(a, o)
                                                         : cat->hom(o, a);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const IntMatrix& act = m->act(basis[j]);
        for (std::size_t i = 0; i < c.rows(); ++i)
          c(i, out.cover.offsets[s][a] + j) = act(i, gen);
      }
    }
    out.epi.component.push_back(std::move(c));
  }
  return out;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("BREDON_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

Resolution resolve(const ModulePtr& m, std::size_t n, std::size_t budget) {
  if (budget == 0) budget = default_budget();
  Resolution res;
  res.target = m;
  FreeCover c0 = free_cover(m);
  if (c0.cover.module->total_generators() > budget)
    throw Error("BudgetExceeded",
                "free term exceeds " + std::to_string(budget) +
                    " generators at stage 0");
  res.terms.push_back(std::move(c0.cover));
  res.maps.push_back(std::move(c0.epi));
  for (std::size_t k = 1; k <= n; ++k) {
    SubModule ker = kernel(res.maps.back());
    if (ker.module->total_generators() > budget)
      throw Error("BudgetExceeded",
                  "kernel presentation exceeds " + std::to_string(budget) +
                      " generators at stage " + std::to_string(k));
    FreeCover ck = free_cover(ker.module);
    if (ck.cover.module->total_generators() > budget)
      throw Error("BudgetExceeded",
                  "free term exceeds " + std::to_string(budget) +
                      " generators at stage " + std::to_string(k));
    res.maps.push_back(compose(ck.epi, ker.inclusion));
    res.terms.push_back(std::move(ck.cover));
  }
  // componentwise exactness audit below the last stage
  for (std::size_t o = 0; o < m->cat->object_count(); ++o) {
    FPComplex c;
    c.terms.push_back(m->value(o));
    for (const auto& t : res.terms) c.terms.push_back(t.module->value(o));
    for (const auto& d : res.maps) c.maps.push_back(d.component[o]);
    for (std::size_t k = 0; k + 1 < c.terms.size(); ++k)
      if (!fp_homology_invariants(c, k).is_trivial())
        throw Error("Internal", "resolution not exact at stage " +
                                    std::to_string(k) + ", object " +
                                    std::to_string(o));
  }
  return res;
}

FPNReport fp_n_report(const ModulePtr& m, std::size_t n, std::size_t budget) {
  FPNReport rep;
  try {
    rep.resolution = resolve(m, n, budget);
  } catch (const Error& e) {
    if (std::string(e.kind) == "BudgetExceeded") {
      rep.holds = false;
      return rep;
    }
    throw;
  }
  for (const auto& t : rep.resolution.terms) rep.ranks.push_back(t.rank());
  rep.holds = true;
  return rep;
}

}  // namespace bredon
