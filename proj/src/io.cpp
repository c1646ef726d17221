#include "bredon/io.hpp"

#include <fstream>

namespace bredon::io {
namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw Error("ManifestError", context + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) fail(context, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::vector<int>> int_table(const json& j,
                                        const std::string& context) {
  if (!j.is_array()) fail(context, "expected an array of integer arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(context, "expected an array of integer arrays");
    out.push_back(row.get<std::vector<int>>());
  }
  return out;
}

/// action as {"0": [..], "1": [..]} or positional array of arrays
std::vector<std::vector<int>> action_table(const json& j, std::size_t order,
                                           const std::string& context) {
  if (j.is_array()) {
    auto t = int_table(j, context);
    if (t.size() != order) fail(context, "one permutation per group element expected");
    return t;
  }
  if (!j.is_object()) fail(context, "expected an action object");
  std::vector<std::vector<int>> out(order);
  std::vector<bool> seen(order, false);
  for (const auto& [key, perm] : j.items()) {
    std::size_t g = 0;
    try {
      g = std::stoul(key);
    } catch (...) {
      fail(context, "non-numeric element index \"" + key + "\"");
    }
    if (g >= order) fail(context, "element index " + key + " out of range");
    out[g] = perm.get<std::vector<int>>();
    seen[g] = true;
  }
  for (std::size_t g = 0; g < order; ++g)
    if (!seen[g]) fail(context, "missing action of element " + std::to_string(g));
  return out;
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error("ManifestError", "matrix with " + std::to_string(rows) +
                                     " rows expected");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw Error("ManifestError", "matrix row of width " +
                                       std::to_string(cols) + " expected");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = row.at(c);
      try {
        m(i, c) = cell.is_string() ? Int(cell.get<std::string>())
                                   : Int(cell.get<long long>());
      } catch (const Error&) {
        throw;
      } catch (...) {
        throw Error("ManifestError", "bad matrix entry " + cell.dump());
      }
    }
  }
  return m;
}

json invariants_to_json(const AbelianGroupInvariants& inv) {
  json torsion = json::array();
  for (const auto& d : inv.torsion) torsion.push_back(d.str());
  return {{"free_rank", inv.free_rank}, {"torsion", std::move(torsion)}};
}

AbelianGroupInvariants invariants_from_json(const json& j) {
  AbelianGroupInvariants inv;
  inv.free_rank = field(j, "free_rank", "invariants").get<std::size_t>();
  for (const auto& d : field(j, "torsion", "invariants"))
    inv.torsion.emplace_back(d.is_string() ? Int(d.get<std::string>())
                                           : Int(d.get<long long>()));
  return inv;
}

json presentation_to_json(const FPAbelianGroup& g) {
  return {{"generators", g.generators}, {"relations", matrix_to_json(g.relations)}};
}

FPAbelianGroup presentation_from_json(const json& j) {
  std::size_t gens = field(j, "generators", "presentation").get<std::size_t>();
  const json& rel = field(j, "relations", "presentation");
  std::size_t cols = rel.empty() || !rel.at(0).is_array() ? 0 : rel.at(0).size();
  if (gens == 0) return FPAbelianGroup::free(0);
  return {gens, matrix_from_json(rel, gens, cols)};
}

GroupPtr group_from_json(const json& j) {
  if (j.contains("degree"))
    return FiniteGroup::from_permutations(
        field(j, "degree", "group").get<int>(),
        int_table(field(j, "generators", "group"), "group.generators"));
  auto table = int_table(field(j, "table", "group"), "group.table");
  std::size_t order = field(j, "order", "group").get<std::size_t>();
  if (table.size() != order) fail("group", "order does not match table size");
  if (j.contains("labels"))
    return FiniteGroup::validate(table, j.at("labels").get<std::vector<std::string>>());
  return FiniteGroup::validate(table);
}

Family family_from_json(const json& j, const GroupPtr& g) {
  std::vector<Subgroup> seeds;
  for (const auto& elems : field(j, "subgroups", "family")) {
    std::vector<int> e = elems.get<std::vector<int>>();
    for (int x : e)
      if (x < 0 || x >= g->order())
        fail("family", "element index " + std::to_string(x) + " out of range");
    std::sort(e.begin(), e.end());
    seeds.push_back(Subgroup{g, std::move(e)});
  }
  bool close = j.value("close_conjugation", false);
  return close ? close_family(g, seeds) : make_family(g, std::move(seeds), false);
}

Workspace workspace_from_json(const json& j, const std::string& context) {
  Workspace ws;
  ws.group = group_from_json(field(j, "group", context));
  ws.cat = OrbitCategory::build(
      ws.group, family_from_json(field(j, "family", context), ws.group));

  if (j.contains("complex")) {
    const json& c = j.at("complex");
    GammaSet v;
    v.group = ws.group;
    v.size = field(c, "vertices", context + ".complex").get<std::size_t>();
    v.action = action_table(field(c, "action", context + ".complex"),
                            ws.group->order(), context + ".complex.action");
    ws.simplices = int_table(field(c, "simplices", context + ".complex"),
                             context + ".complex.simplices");
    ws.complex = validate_complex(v, ws.simplices);
  }

  if (j.contains("filtration")) {
    if (!ws.complex) fail(context, "filtration without a complex");
    std::vector<std::vector<std::vector<int>>> stages;
    for (const auto& stage :
         field(j.at("filtration"), "stages", context + ".filtration")) {
      std::vector<std::vector<int>> cells;
      for (const auto& id : stage) {
        std::size_t i = id.get<std::size_t>();
        if (i >= ws.simplices.size())
          fail(context + ".filtration", "simplex id " + std::to_string(i) +
                                            " out of range");
        cells.push_back(ws.simplices[i]);
      }
      stages.push_back(std::move(cells));
    }
    ws.filtration = make_filtration(*ws.complex, stages);
  }

  if (j.contains("modules")) {
    for (const auto& [name, mj] : j.at("modules").items()) {
      const std::string mctx = context + ".modules." + name;
      BredonModule m;
      m.cat = ws.cat;
      std::string var = field(mj, "variance", mctx).get<std::string>();
      if (var != "left" && var != "right")
        fail(mctx, "variance must be \"left\" or \"right\"");
      m.variance = var == "left" ? Variance::Left : Variance::Right;
      for (const auto& vj : field(mj, "values", mctx))
        m.values.push_back(presentation_from_json(vj));
      if (m.values.size() != ws.cat->object_count())
        fail(mctx, "one value per orbit-category object expected");
      m.action.resize(ws.cat->morphism_count());
      std::vector<bool> seen(m.action.size(), false);
      for (const auto& [key, aj] : field(mj, "actions", mctx).items()) {
        std::size_t mid = 0;
        try {
          mid = std::stoul(key);
        } catch (...) {
          fail(mctx, "non-numeric morphism id \"" + key + "\"");
        }
        if (mid >= m.action.size()) fail(mctx, "morphism id " + key + " out of range");
        m.action[mid] = matrix_from_json(
            aj, m.values[m.action_target(mid)].generators,
            m.values[m.action_source(mid)].generators);
        seen[mid] = true;
      }
      for (std::size_t mid = 0; mid < seen.size(); ++mid)
        if (!seen[mid])
          fail(mctx, "missing action of morphism " + std::to_string(mid));
      auto rep = validate_module(m);
      if (!rep.ok) fail(mctx, rep.detail);
      ws.modules.emplace(name, std::make_shared<const BredonModule>(std::move(m)));
    }
  }

  if (j.contains("coefficients")) {
    ws.coefficients = j.at("coefficients").get<std::string>();
    if (!ws.modules.count(ws.coefficients))
      fail(context, "coefficients name \"" + ws.coefficients +
                        "\" is not a declared module");
  }
  return ws;
}

Workspace load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ManifestError", path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    throw Error("ManifestError", path + ": " + e.what());
  }
  return workspace_from_json(j, path);
}

}  // namespace bredon::io
