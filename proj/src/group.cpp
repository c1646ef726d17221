#include "bredon/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bredon {

std::shared_ptr<const FiniteGroup> FiniteGroup::validate(
    std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("NoIdentity", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("BadShape", "Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("BadShape", "entry out of range");
  }
  // a left identity is enough as a candidate; if inverses then exist the
  // identity is automatically two-sided, otherwise NoInverse is the right report
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (table[e][a] != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error("NoIdentity", "no identity element");
  std::vector<int> inverses(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverses[a] = b;
        break;
      }
    if (inverses[a] < 0)
      throw Error("NoInverse", "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    if (table[a][identity] != a)
      throw Error("NoIdentity", "identity is not two-sided");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("NotAssociative",
                      "triple (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_ = std::move(table);
  g->inverses_ = std::move(inverses);
  g->identity_ = identity;
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error("BadShape", "label count does not match order");
  g->labels_ = std::move(labels);
  return g;
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = perm[j];
    }
    os << ")";
  }
  return any ? os.str() : "e";
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(
    int degree, const std::vector<std::vector<int>>& generators) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error("BadShape", "permutation degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[x])
        throw Error("BadShape", "not a permutation");
      hit[x] = true;
    }
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems = {id};
  index[id] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<int> prod(degree);
      // (elems[i] then g)
      for (int x = 0; x < degree; ++x) prod[x] = g[elems[i][x]];
      if (!index.count(prod)) {
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  // left-action convention: (a*b) acts by applying b first, then a
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
      table[a][b] = index.at(prod);
    }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = cycle_notation(elems[a]);
  return validate(std::move(table), std::move(labels));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size())
    return elements.size() < o.elements.size();
  return elements < o.elements;
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) os << ",";
    if (!group->labels().empty())
      os << group->labels()[elements[i]];
    else
      os << elements[i];
  }
  os << "}";
  return os.str();
}

Subgroup subgroup_generated(const GroupPtr& g, std::vector<int> elements) {
  std::set<int> closure = {g->identity()};
  for (int x : elements) {
    if (x < 0 || x >= g->order()) throw Error("BadShape", "element out of range");
    closure.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur)
      for (int b : cur)
        if (closure.insert(g->mul(a, b)).second) grew = true;
  }
  return {g, std::vector<int>(closure.begin(), closure.end())};
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return {g, {g->identity()}};
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return {g, std::move(all)};
}

Subgroup conjugate(const Subgroup& h, int g) {
  std::vector<int> out;
  out.reserve(h.elements.size());
  for (int x : h.elements) out.push_back(h.group->conj(x, g));
  std::sort(out.begin(), out.end());
  return {h.group, std::move(out)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.elements.begin(), a.elements.end(),
                        b.elements.begin(), b.elements.end(),
                        std::back_inserter(out));
  return {a.group, std::move(out)};
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.elements.begin(), k.elements.end(),
                       h.elements.begin(), h.elements.end());
}

bool is_valid_subgroup(const Subgroup& h) {
  if (!h.contains(h.group->identity())) return false;
  for (int a : h.elements) {
    if (!h.contains(h.group->inv(a))) return false;
    for (int b : h.elements)
      if (!h.contains(h.group->mul(a, b))) return false;
  }
  return true;
}

std::optional<std::size_t> Family::index_of(const Subgroup& s) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return i;
  return std::nullopt;
}

bool Family::is_conjugation_closed() const {
  for (const auto& m : members)
    for (int g = 0; g < group->order(); ++g)
      if (!index_of(conjugate(m, g))) return false;
  return true;
}

Family make_family(const GroupPtr& g, std::vector<Subgroup> members,
                   bool close_under_conjugation) {
  if (close_under_conjugation) return close_family(g, members);
  Family f{g, std::move(members)};
  std::sort(f.members.begin(), f.members.end());
  f.members.erase(std::unique(f.members.begin(), f.members.end()),
                  f.members.end());
  if (f.members.empty()) throw Error("EmptySeed", "a family must be non-empty");
  for (const auto& m : f.members)
    if (!is_valid_subgroup(m))
      throw Error("BadShape", "family member is not a subgroup");
  if (!f.is_conjugation_closed())
    throw Error("NotConjugationClosed",
                "family is not closed under conjugation");
  return f;
}

Family close_family(const GroupPtr& g, const std::vector<Subgroup>& seeds) {
  if (seeds.empty()) throw Error("EmptySeed", "a family must be non-empty");
  std::set<Subgroup> closure;
  for (const auto& s : seeds) {
    if (!is_valid_subgroup(s))
      throw Error("BadShape", "family seed is not a subgroup");
    for (int x = 0; x < g->order(); ++x) closure.insert(conjugate(s, x));
  }
  Family f{g, std::vector<Subgroup>(closure.begin(), closure.end())};
  return f;
}

std::optional<int> is_subconjugate(const Subgroup& h, const Subgroup& k) {
  for (int g = 0; g < h.group->order(); ++g) {
    if (is_subgroup_of(conjugate(h, g), k)) return g;
  }
  return std::nullopt;
}

std::vector<std::size_t> fp0_witness(const Family& f) {
  const std::size_t n = f.members.size();
  if (n > 20) throw Error("BudgetExceeded", "family too large for subset search");
  // subconjugacy matrix
  std::vector<std::vector<bool>> covers(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      covers[i][j] = is_subconjugate(f.members[i], f.members[j]).has_value();
  std::vector<std::size_t> best;
  bool found = false;
  for (std::size_t size = 1; size <= n && !found; ++size) {
    // subsets by increasing size; lexicographic order gives the canonical tie-break
    std::vector<std::size_t> pick(size);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
      if (pos == size) {
        for (std::size_t i = 0; i < n; ++i) {
          bool covered = false;
          for (std::size_t j : pick)
            if (covers[i][j]) {
              covered = true;
              break;
            }
          if (!covered) return false;
        }
        return true;
      }
      for (std::size_t j = start; j < n; ++j) {
        pick[pos] = j;
        if (self(self, pos + 1, j + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) {
      best = pick;
      found = true;
    }
  }
  return best;
}

SubgroupGroup as_group(const Subgroup& h) {
  const int n = h.order();
  SubgroupGroup out;
  out.to_ambient = h.elements;
  out.from_ambient.assign(h.group->order(), -1);
  for (int i = 0; i < n; ++i) out.from_ambient[h.elements[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = h.group->mul(h.elements[a], h.elements[b]);
      if (out.from_ambient[p] < 0)
        throw Error("BadShape", "element set not closed under product");
      table[a][b] = out.from_ambient[p];
    }
  std::vector<std::string> labels;
  if (!h.group->labels().empty())
    for (int e : h.elements) labels.push_back(h.group->labels()[e]);
  out.group = FiniteGroup::validate(std::move(table), std::move(labels));
  return out;
}

IntersectedFamily intersect_family(const Family& f, const Subgroup& lambda) {
  IntersectedFamily out;
  std::set<Subgroup> seen;
  for (const auto& xi : f.members) seen.insert(intersect(xi, lambda));
  out.members_ambient.assign(seen.begin(), seen.end());
  out.contained = true;
  for (const auto& m : out.members_ambient)
    if (!f.index_of(m)) out.contained = false;
  return out;
}

}  // namespace bredon
