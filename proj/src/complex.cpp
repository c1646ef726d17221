#include "bredon/complex.hpp"

#include <algorithm>

namespace bredon {

std::optional<std::size_t> SimplicialComplex::index_of(
    std::size_t p, const std::vector<int>& s) const {
  if (p >= bydim.size()) return std::nullopt;
  auto it = std::lower_bound(bydim[p].begin(), bydim[p].end(), s);
  if (it == bydim[p].end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - bydim[p].begin());
}

FreeChainComplex SimplicialComplex::chains(int top_dim, bool augmented) const {
  FreeChainComplex c;
  if (augmented) c.dims.push_back(1);
  for (int p = 0; p <= top_dim; ++p) c.dims.push_back(count(p));
  if (augmented) c.boundaries.push_back(IntMatrix(1, count(0)) );
  if (augmented)
    for (std::size_t j = 0; j < count(0); ++j) c.boundaries.back()(0, j) = 1;
  for (int p = 1; p <= top_dim; ++p) {
    IntMatrix d(count(p - 1), count(p));
    for (std::size_t j = 0; j < count(p); ++j) {
      const auto& s = bydim[p][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face;
        for (std::size_t v = 0; v < s.size(); ++v)
          if (v != i) face.push_back(s[v]);
        auto idx = index_of(p - 1, face);
        if (!idx) throw Error("Internal", "missing face in chain complex");
        d(*idx, j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

std::pair<std::vector<int>, int> map_simplex(const std::vector<int>& s,
                                             const std::vector<int>& vmap) {
  std::vector<int> w;
  for (int v : s) w.push_back(vmap[v]);
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inversions;
  std::sort(w.begin(), w.end());
  return {std::move(w), inversions % 2 == 0 ? 1 : -1};
}

namespace {

std::string tuple_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? " " : "") + std::to_string(s[i]);
  return out + "}";
}

GammaComplex build_complex(const GammaSet& vertices,
                           const std::vector<std::vector<int>>& simplices,
                           bool check_admissible) {
  vertices.validate();
  GammaComplex x;
  x.vertices = vertices;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::unique(s.begin(), s.end()) != s.end())
      throw Error("BadShape", "simplex with repeated or no vertices");
    for (int v : s)
      if (v < 0 || v >= static_cast<int>(vertices.size))
        throw Error("BadShape", "vertex id out of range");
    std::size_t p = s.size() - 1;
    if (x.cells.bydim.size() <= p) x.cells.bydim.resize(p + 1);
    x.cells.bydim[p].push_back(std::move(s));
  }
  for (auto& list : x.cells.bydim) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (std::size_t p = 0; p < x.cells.bydim.size(); ++p)
    if (x.cells.bydim[p].empty())
      throw Error("NotClosedUnderFaces",
                  "no simplices of dimension " + std::to_string(p));
  // face closure
  for (std::size_t p = 1; p < x.cells.bydim.size(); ++p)
    for (const auto& s : x.cells.bydim[p])
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face;
        for (std::size_t v = 0; v < s.size(); ++v)
          if (v != i) face.push_back(s[v]);
        if (!x.cells.index_of(p - 1, face))
          throw Error("NotClosedUnderFaces",
                      "face " + tuple_str(face) + " of " + tuple_str(s) +
                          " is missing");
      }
  // equivariance, admissibility, induced cell action
  const int n = vertices.group->order();
  x.cell_action.resize(x.cells.bydim.size());
  for (std::size_t p = 0; p < x.cells.bydim.size(); ++p) {
    x.cell_action[p].assign(n, std::vector<int>(x.cells.count(p)));
    for (int g = 0; g < n; ++g)
      for (std::size_t i = 0; i < x.cells.count(p); ++i) {
        const auto& s = x.cells.bydim[p][i];
        auto [img, sign] = map_simplex(s, vertices.action[g]);
        (void)sign;
        auto idx = x.cells.index_of(p, img);
        if (!idx)
          throw Error("NotEquivariant",
                      "element " + std::to_string(g) + " maps " +
                          tuple_str(s) + " outside the complex");
        x.cell_action[p][g][i] = static_cast<int>(*idx);
        if (check_admissible && *idx == i && img == s) {
          for (int v : s)
            if (vertices.action[g][v] != v)
              throw Error("NotAdmissible",
                          "element " + std::to_string(g) + " stabilizes " +
                              tuple_str(s) + " without fixing it pointwise");
        }
      }
  }
  return x;
}

}  // namespace

GammaComplex validate_complex(const GammaSet& vertices,
                              const std::vector<std::vector<int>>& simplices) {
  return build_complex(vertices, simplices, true);
}

GammaComplex barycentric_subdivision(
    const GammaSet& vertices, const std::vector<std::vector<int>>& simplices) {
  GammaComplex x = build_complex(vertices, simplices, false);
  // new vertex = cell of x, numbered dimension-major
  std::vector<std::size_t> offset(x.cells.bydim.size() + 1, 0);
  for (std::size_t p = 0; p < x.cells.bydim.size(); ++p)
    offset[p + 1] = offset[p] + x.cells.count(p);
  GammaSet verts;
  verts.group = vertices.group;
  verts.size = offset.back();
  verts.action.assign(vertices.group->order(),
                      std::vector<int>(verts.size));
  for (int g = 0; g < vertices.group->order(); ++g)
    for (std::size_t p = 0; p < x.cells.bydim.size(); ++p)
      for (std::size_t i = 0; i < x.cells.count(p); ++i)
        verts.action[g][offset[p] + i] =
            static_cast<int>(offset[p]) + x.cell_action[p][g][i];

  // flags of strict face inclusions, built by extending chains upward
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (p, i)
  for (std::size_t p = 0; p < x.cells.bydim.size(); ++p)
    for (std::size_t i = 0; i < x.cells.count(p); ++i) cells.emplace_back(p, i);
  auto is_face = [&](std::size_t pa, std::size_t ia, std::size_t pb,
                     std::size_t ib) {
    const auto& a = x.cells.bydim[pa][ia];
    const auto& b = x.cells.bydim[pb][ib];
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::vector<int>> flags;
  std::vector<int> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t at) {
    chain.push_back(static_cast<int>(offset[cells[at].first] +
                                     cells[at].second));
    flags.push_back(chain);
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (cells[b].first > cells[at].first &&
          is_face(cells[at].first, cells[at].second, cells[b].first,
                  cells[b].second))
        extend(b);
    chain.pop_back();
  };
  for (std::size_t a = 0; a < cells.size(); ++a) extend(a);
  return validate_complex(verts, flags);
}

SimplicialComplex fixed_subcomplex(const GammaComplex& x,
                                   const Subgroup& lambda) {
  std::vector<int> fixedv(x.vertices.size, 1);
  for (int l : lambda.elements)
    for (std::size_t v = 0; v < x.vertices.size; ++v)
      if (x.vertices.action[l][v] != static_cast<int>(v)) fixedv[v] = 0;
  SimplicialComplex out;
  for (const auto& list : x.cells.bydim) {
    std::vector<std::vector<int>> keep;
    for (const auto& s : list) {
      bool ok = true;
      for (int v : s) ok = ok && fixedv[v];
      if (ok) keep.push_back(s);
    }
    out.bydim.push_back(std::move(keep));
  }
  while (!out.bydim.empty() && out.bydim.back().empty()) out.bydim.pop_back();
  return out;
}

GammaSet cells_gamma_set(const GammaComplex& x, std::size_t p) {
  GammaSet d;
  d.group = x.vertices.group;
  d.size = x.cells.count(p);
  if (p < x.cell_action.size())
    d.action = x.cell_action[p];
  else
    d.action.assign(x.vertices.group->order(), {});
  return d;
}

namespace {

/// chain map between two fixed subcomplexes induced by a vertex map, with
/// orientation signs; one matrix per degree 0..top_dim (or per augmented slot)
std::vector<IntMatrix> induced_chain_map(const SimplicialComplex& src,
                                         const SimplicialComplex& tgt,
                                         const std::vector<int>& vmap,
                                         int top_dim, bool augmented) {
  std::vector<IntMatrix> out;
  if (augmented) out.push_back(IntMatrix::identity(1));
  for (int p = 0; p <= top_dim; ++p) {
    IntMatrix m(tgt.count(p), src.count(p));
    for (std::size_t j = 0; j < src.count(p); ++j) {
      auto [img, sign] = map_simplex(src.bydim[p][j], vmap);
      auto idx = tgt.index_of(p, img);
      if (!idx) throw Error("Internal", "induced map leaves the complex");
      m(*idx, j) = sign;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> identity_vmap(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

BredonModule homology_module(const CategoryPtr& cat, const GammaComplex& x,
                             int k, bool reduced) {
  int top = std::max(x.cells.dim(), reduced ? k + 1 : k);
  int slot = reduced ? k + 1 : k;
  std::vector<SimplicialComplex> fixed;
  std::vector<FreeChainComplex> cc;
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    fixed.push_back(fixed_subcomplex(x, cat->subgroup(o)));
    cc.push_back(fixed.back().chains(top, reduced));
  }
  BredonModule out;
  out.cat = cat;
  out.variance = Variance::Right;
  std::vector<HomologyPresentation> pres;
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    pres.push_back(chain_homology_presentation(cc[o], slot));
    out.values.push_back(pres.back().group);
  }
  for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
    const OrbitMorphism& mor = cat->morphism(f);
    std::size_t a = mor.source, b = mor.target;
    auto cm = induced_chain_map(fixed[b], fixed[a],
                                x.vertices.action[mor.rep], top, reduced);
    out.action.push_back(homology_induced_map(cc[b], cc[a], cm, slot));
  }
  return out;
}

}  // namespace

BredonChainComplex bredon_chain_complex(const CategoryPtr& cat,
                                        const GammaComplex& x) {
  BredonChainComplex out;
  out.cat = cat;
  int top = x.cells.dim();
  std::vector<SimplicialComplex> fixed;
  for (std::size_t o = 0; o < cat->object_count(); ++o)
    fixed.push_back(fixed_subcomplex(x, cat->subgroup(o)));
  for (int p = 0; p <= top; ++p) {
    auto m = std::make_shared<BredonModule>();
    m->cat = cat;
    m->variance = Variance::Right;
    for (std::size_t o = 0; o < cat->object_count(); ++o)
      m->values.push_back(FPAbelianGroup::free(fixed[o].count(p)));
    for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
      const OrbitMorphism& mor = cat->morphism(f);
      m->action.push_back(
          induced_chain_map(fixed[mor.target], fixed[mor.source],
                            x.vertices.action[mor.rep], p, false)[p]);
    }
    out.terms.push_back(std::move(m));
  }
  for (int p = 1; p <= top; ++p) {
    BredonMorphism d;
    d.source = out.terms[p];
    d.target = out.terms[p - 1];
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      FreeChainComplex c = fixed[o].chains(top, false);
      d.component.push_back(c.boundaries[p - 1]);
    }
    out.boundaries.push_back(std::move(d));
  }
  return out;
}

BredonModule bredon_homology(const CategoryPtr& cat, const GammaComplex& x,
                             int k) {
  if (k < 0) throw Error("BadShape", "negative degree");
  return homology_module(cat, x, k, false);
}

BredonModule reduced_bredon_homology(const CategoryPtr& cat,
                                     const GammaComplex& x, int k) {
  if (k < -1) throw Error("BadShape", "degree below -1");
  return homology_module(cat, x, k, true);
}

AcyclicityReport is_F_acyclic(const CategoryPtr& cat, const GammaComplex& x,
                              int n) {
  AcyclicityReport rep;
  for (int k = -1; k <= n; ++k) {
    BredonModule h = reduced_bredon_homology(cat, x, k);
    for (std::size_t o = 0; o < cat->object_count(); ++o)
      if (!invariants(h.value(o)).is_trivial()) {
        rep.acyclic = false;
        rep.failed_degree = k;
        rep.failed_object = o;
        return rep;
      }
  }
  return rep;
}

GoodnessReport is_F_n_good(const CategoryPtr& cat, const GammaComplex& x,
                           int n, std::size_t budget) {
  GoodnessReport rep;
  rep.acyclicity = is_F_acyclic(cat, x, n - 1);
  rep.good = rep.acyclicity.acyclic;
  for (int p = 0; p <= std::min(n, x.cells.dim()); ++p) {
    GammaSet cells = cells_gamma_set(x, p);
    for (int r : cells.orbit_representatives()) {
      StabilizerCheck chk;
      chk.dim = p;
      chk.cell = r;
      SubgroupContext ctx = make_subgroup_context(cat, cells.stabilizer(r));
      chk.family_contained = ctx.contained;
      if (ctx.contained) {
        auto z = std::make_shared<BredonModule>(
            trivial_module(ctx.subcat, Variance::Right));
        chk.fp_holds = fp_n_report(z, n - p, budget).holds;
      }
      rep.good = rep.good && chk.family_contained && chk.fp_holds;
      rep.stabilizers.push_back(chk);
    }
  }
  return rep;
}

Filtration make_filtration(const GammaComplex& total,
                           const std::vector<std::vector<std::vector<int>>>&
                               stage_simplices) {
  if (stage_simplices.empty())
    throw Error("BadShape", "a filtration needs at least one stage");
  Filtration f;
  f.total = total;
  for (const auto& stage : stage_simplices) {
    std::vector<std::vector<int>> flat(stage.begin(), stage.end());
    f.stages.push_back(validate_complex(total.vertices, flat));
    // every simplex must belong to the total complex
    const auto& cells = f.stages.back().cells;
    for (std::size_t p = 0; p < cells.bydim.size(); ++p)
      for (const auto& s : cells.bydim[p])
        if (!total.cells.index_of(p, s))
          throw Error("BadShape", "stage simplex " + tuple_str(s) +
                                      " is not in the complex");
  }
  for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
    const auto& a = f.stages[i].cells;
    const auto& b = f.stages[i + 1].cells;
    for (std::size_t p = 0; p < a.bydim.size(); ++p)
      for (const auto& s : a.bydim[p])
        if (!b.index_of(p, s))
          throw Error("BadShape", "filtration is not ascending at stage " +
                                      std::to_string(i));
  }
  if (f.stages.back().cells.bydim != total.cells.bydim)
    throw Error("BadShape", "last stage must be the whole complex");
  return f;
}

HomologySystem homology_system(const CategoryPtr& cat, const Filtration& f,
                               int k) {
  HomologySystem sys;
  int top = std::max(f.total.cells.dim(), k + 1);
  std::vector<std::vector<SimplicialComplex>> fixed;   // stage -> object
  std::vector<std::vector<FreeChainComplex>> cc;
  for (const auto& stage : f.stages) {
    sys.stages.push_back(std::make_shared<BredonModule>(
        reduced_bredon_homology(cat, stage, k)));
    std::vector<SimplicialComplex> fo;
    std::vector<FreeChainComplex> co;
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      fo.push_back(fixed_subcomplex(stage, cat->subgroup(o)));
      co.push_back(fo.back().chains(top, true));
    }
    fixed.push_back(std::move(fo));
    cc.push_back(std::move(co));
  }
  std::vector<int> idmap = identity_vmap(f.total.vertices.size);
  for (std::size_t s = 0; s + 1 < f.stages.size(); ++s) {
    BredonMorphism step;
    step.source = sys.stages[s];
    step.target = sys.stages[s + 1];
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      auto cm = induced_chain_map(fixed[s][o], fixed[s + 1][o], idmap, top,
                                  true);
      step.component.push_back(
          homology_induced_map(cc[s][o], cc[s + 1][o], cm, k + 1));
    }
    sys.steps.push_back(std::move(step));
  }
  return sys;
}

BredonMorphism HomologySystem::map(std::size_t a, std::size_t b) const {
  BredonMorphism out = identity_morphism(stages[a]);
  for (std::size_t s = a; s < b; ++s) out = compose(out, steps[s]);
  return out;
}

EssentialTrivialityReport essentially_trivial(const HomologySystem& sys) {
  EssentialTrivialityReport rep;
  rep.trivial = true;
  for (std::size_t a = 0; a < sys.stages.size(); ++a) {
    bool found = false;
    for (std::size_t b = a; b < sys.stages.size(); ++b)
      if (morphism_is_zero(sys.map(a, b))) {
        rep.beta.push_back(b);
        found = true;
        break;
      }
    if (!found) {
      rep.trivial = false;
      rep.violating_stage = a;
      return rep;
    }
  }
  return rep;
}

}  // namespace bredon
