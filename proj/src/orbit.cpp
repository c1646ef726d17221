#include "bredon/orbit.hpp"

#include <algorithm>
#include <map>

namespace bredon {

void GammaSet::validate() const {
  const int n = group->order();
  if (static_cast<int>(action.size()) != n)
    throw Error("NotAnAction", "one permutation per group element required");
  for (const auto& p : action) {
    if (p.size() != size) throw Error("NotAnAction", "permutation size mismatch");
    std::vector<bool> hit(size, false);
    for (int x : p) {
      if (x < 0 || x >= static_cast<int>(size) || hit[x])
        throw Error("NotAnAction", "not a permutation");
      hit[x] = true;
    }
  }
  for (std::size_t x = 0; x < size; ++x)
    if (action[group->identity()][x] != static_cast<int>(x))
      throw Error("NotAnAction", "identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (std::size_t x = 0; x < size; ++x)
        if (action[group->mul(g, h)][x] != action[g][action[h][x]])
          throw Error("NotAnAction", "action is not a homomorphism");
}

GammaSet GammaSet::cosets(const GroupPtr& g, const Subgroup& lambda) {
  const int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> c;
    for (int l : lambda.elements) c.push_back(g->mul(x, l));
    std::sort(c.begin(), c.end());
    int id = static_cast<int>(cosets.size());
    for (int y : c) coset_of[y] = id;
    cosets.push_back(std::move(c));
  }
  GammaSet d;
  d.group = g;
  d.size = cosets.size();
  d.action.assign(n, std::vector<int>(d.size));
  for (int h = 0; h < n; ++h)
    for (std::size_t c = 0; c < cosets.size(); ++c)
      d.action[h][c] = coset_of[g->mul(h, cosets[c][0])];
  return d;
}

GammaSet GammaSet::one_point(const GroupPtr& g) {
  GammaSet d;
  d.group = g;
  d.size = 1;
  d.action.assign(g->order(), {0});
  return d;
}

GammaSet GammaSet::disjoint_union(const GammaSet& a, const GammaSet& b) {
  if (a.group != b.group) throw Error("BadShape", "actions of different groups");
  GammaSet d;
  d.group = a.group;
  d.size = a.size + b.size;
  d.action.assign(a.group->order(), std::vector<int>(d.size));
  for (int g = 0; g < a.group->order(); ++g) {
    for (std::size_t x = 0; x < a.size; ++x) d.action[g][x] = a.action[g][x];
    for (std::size_t x = 0; x < b.size; ++x)
      d.action[g][a.size + x] = static_cast<int>(a.size) + b.action[g][x];
  }
  return d;
}

Subgroup GammaSet::stabilizer(int x) const {
  std::vector<int> elems;
  for (int g = 0; g < group->order(); ++g)
    if (action[g][x] == x) elems.push_back(g);
  return {group, std::move(elems)};
}

std::vector<std::vector<int>> GammaSet::orbits() const {
  std::vector<bool> seen(size, false);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (int g = 0; g < group->order(); ++g) {
      int y = action[g][x];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> GammaSet::orbit_representatives() const {
  std::vector<int> reps;
  for (const auto& orb : orbits()) reps.push_back(orb.front());
  return reps;
}

std::vector<int> fixed_points(const GammaSet& d, const Subgroup& lambda) {
  std::vector<int> out;
  for (std::size_t x = 0; x < d.size; ++x) {
    bool fixed = true;
    for (int l : lambda.elements)
      if (d.action[l][x] != static_cast<int>(x)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(static_cast<int>(x));
  }
  return out;
}

std::shared_ptr<const OrbitCategory> OrbitCategory::build(const GroupPtr& g,
                                                          Family f) {
  auto cat = std::shared_ptr<OrbitCategory>(new OrbitCategory());
  cat->group_ = g;
  cat->family_ = std::move(f);
  const std::size_t nobj = cat->family_.members.size();
  cat->hom_.assign(nobj, std::vector<std::vector<std::size_t>>(nobj));
  for (std::size_t a = 0; a < nobj; ++a) {
    const Subgroup& xi = cat->family_.members[a];
    for (std::size_t b = 0; b < nobj; ++b) {
      const Subgroup& lambda = cat->family_.members[b];
      std::vector<int> reps;
      std::vector<bool> used(g->order(), false);
      for (int x = 0; x < g->order(); ++x) {
        if (used[x]) continue;
        // mark the whole coset x*Lambda, remember its least element
        int least = x;
        bool ok = true;
        for (int l : lambda.elements) {
          int y = g->mul(x, l);
          used[y] = true;
          least = std::min(least, y);
        }
        for (int e : xi.elements)
          if (!lambda.contains(g->conj(e, g->inv(x)))) {
            ok = false;
            break;
          }
        if (ok) reps.push_back(least);
      }
      std::sort(reps.begin(), reps.end());
      for (int r : reps) {
        cat->hom_[a][b].push_back(cat->morphisms_.size());
        cat->morphisms_.push_back(
            {static_cast<int>(a), static_cast<int>(b), r});
      }
    }
  }
  cat->identities_.resize(nobj);
  for (std::size_t o = 0; o < nobj; ++o)
    cat->identities_[o] = cat->morphism_id(o, o, g->identity());
  return cat;
}

std::size_t OrbitCategory::morphism_id(std::size_t src, std::size_t tgt,
                                       int rep) const {
  const Subgroup& lambda = family_.members[tgt];
  int least = rep;
  for (int l : lambda.elements) least = std::min(least, group_->mul(rep, l));
  for (std::size_t m : hom_[src][tgt])
    if (morphisms_[m].rep == least) return m;
  throw Error("BadShape", "no such morphism");
}

std::size_t OrbitCategory::compose(std::size_t f, std::size_t g) const {
  const OrbitMorphism& mf = morphisms_[f];
  const OrbitMorphism& mg = morphisms_[g];
  if (mf.target != mg.source) throw Error("BadShape", "morphisms not composable");
  return morphism_id(mf.source, mg.target, group_->mul(mf.rep, mg.rep));
}

void OrbitCategory::validate() const {
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    const OrbitMorphism& f = morphisms_[m];
    if (compose(identities_[f.source], m) != m ||
        compose(m, identities_[f.target]) != m)
      throw Error("BadCategory", "identity law fails");
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f)
    for (std::size_t g = 0; g < morphisms_.size(); ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      std::size_t fg = compose(f, g);
      for (std::size_t h = 0; h < morphisms_.size(); ++h) {
        if (morphisms_[g].target != morphisms_[h].source) continue;
        if (compose(fg, h) != compose(f, compose(g, h)))
          throw Error("BadCategory", "associativity fails");
      }
    }
}

}  // namespace bredon
