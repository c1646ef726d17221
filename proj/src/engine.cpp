#include "bredon/engine.hpp"

#include <sstream>

#include "bredon/tensor.hpp"

namespace bredon::engine {
namespace {

using io::json;

std::string subgroup_str(const CategoryPtr& cat, std::size_t o) {
  const Subgroup& h = cat->subgroup(o);
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    if (i) s += ", ";
    s += h.group->labels()[h.elements[i]];
  }
  return s + "}";
}

std::string inv_str(const AbelianGroupInvariants& inv) {
  std::vector<std::string> parts;
  if (inv.free_rank == 1) parts.push_back("Z");
  if (inv.free_rank > 1) parts.push_back("Z^" + std::to_string(inv.free_rank));
  for (const auto& d : inv.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

json subgroup_json(const Subgroup& h) {
  return json(h.elements);
}

const GammaComplex& need_complex(const io::Workspace& ws) {
  if (!ws.complex) throw Error("ValidationError", "manifest declares no complex");
  return *ws.complex;
}

const Filtration& need_filtration(const io::Workspace& ws) {
  if (!ws.filtration)
    throw Error("ValidationError", "manifest declares no filtration");
  return *ws.filtration;
}

ModulePtr coefficient_module(const io::Workspace& ws, const Flags& flags,
                             Variance v) {
  std::string name = !flags.module.empty() ? flags.module : ws.coefficients;
  if (name.empty())
    return std::make_shared<const BredonModule>(trivial_module(ws.cat, v));
  auto it = ws.modules.find(name);
  if (it == ws.modules.end())
    throw Error("ValidationError", "no module named \"" + name + "\"");
  if (it->second->variance != v)
    throw Error("ValidationError",
                "module \"" + name + "\" has the wrong variance");
  return it->second;
}

CommandResult finish(const Flags& flags, const json& j, std::string text,
                     int code = 0) {
  if (flags.json) return {code, j.dump(2) + "\n"};
  return {code, std::move(text)};
}

CommandResult cmd_orbitcat(const io::Workspace& ws, const Flags& flags) {
  const auto& cat = ws.cat;
  std::ostringstream out;
  json j;
  j["objects"] = json::array();
  out << "objects (" << cat->object_count() << "):\n";
  for (std::size_t o = 0; o < cat->object_count(); ++o) {
    out << "  " << o << ": G/" << subgroup_str(cat, o) << " (order "
        << cat->subgroup(o).order() << ")\n";
    j["objects"].push_back({{"subgroup", subgroup_json(cat->subgroup(o))}});
  }
  out << "hom-set sizes (source row, target column):\n";
  j["hom"] = json::array();
  for (std::size_t a = 0; a < cat->object_count(); ++a) {
    json row = json::array();
    out << " ";
    for (std::size_t b = 0; b < cat->object_count(); ++b) {
      out << " " << cat->hom(a, b).size();
      row.push_back(cat->hom(a, b).size());
    }
    out << "\n";
    j["hom"].push_back(std::move(row));
  }
  j["morphisms"] = cat->morphism_count();
  out << "morphisms: " << cat->morphism_count() << "\n";
  return finish(flags, j, out.str());
}

CommandResult cmd_homology(const io::Workspace& ws, const Flags& flags) {
  const GammaComplex& x = need_complex(ws);
  if (flags.k < (flags.reduced ? -1 : 0))
    throw Error("ValidationError", "degree out of range");
  BredonModule h = flags.reduced ? reduced_bredon_homology(ws.cat, x, flags.k)
                                 : bredon_homology(ws.cat, x, flags.k);
  std::ostringstream out;
  json j;
  j["k"] = flags.k;
  j["reduced"] = flags.reduced;
  j["values"] = json::array();
  out << (flags.reduced ? "reduced " : "") << "homology in degree " << flags.k
      << ":\n";
  for (std::size_t o = 0; o < ws.cat->object_count(); ++o) {
    auto inv = invariants(h.value(o));
    out << "  G/" << subgroup_str(ws.cat, o) << ": " << inv_str(inv) << "\n";
    j["values"].push_back({{"object", o},
                           {"invariants", io::invariants_to_json(inv)},
                           {"presentation", io::presentation_to_json(h.value(o))}});
  }
  return finish(flags, j, out.str());
}

CommandResult cmd_fp0(const io::Workspace& ws, const Flags& flags) {
  auto idx = fp0_witness(ws.cat->family());
  std::ostringstream out;
  json j;
  out << "F0 size " << idx.size() << "\n";
  j["size"] = idx.size();
  j["members"] = json::array();
  for (std::size_t i : idx) {
    out << "  G/" << subgroup_str(ws.cat, i) << "\n";
    j["members"].push_back(subgroup_json(ws.cat->subgroup(i)));
  }
  if (ws.complex) {
    FP0Witness w = fp0_constructive_witness(ws.cat, *ws.complex);
    out << "constructive witness: " << w.family0.size() << " subgroups, "
        << (w.verified ? "verified" : "NOT COVERING") << "\n";
    j["constructive"] = {{"size", w.family0.size()}, {"verified", w.verified}};
    j["constructive"]["members"] = json::array();
    for (const auto& s : w.family0)
      j["constructive"]["members"].push_back(subgroup_json(s));
  }
  return finish(flags, j, out.str());
}

CommandResult cmd_good(const io::Workspace& ws, const Flags& flags) {
  GoodnessReport r = is_F_n_good(ws.cat, need_complex(ws), flags.n);
  std::ostringstream out;
  json j;
  j["n"] = flags.n;
  j["good"] = r.good;
  j["acyclic"] = r.acyclicity.acyclic;
  out << "good for n = " << flags.n << ": " << (r.good ? "yes" : "no") << "\n";
  if (!r.acyclicity.acyclic) {
    out << "  reduced homology survives in degree " << r.acyclicity.failed_degree
        << " at G/" << subgroup_str(ws.cat, r.acyclicity.failed_object) << "\n";
    j["failed_degree"] = r.acyclicity.failed_degree;
    j["failed_object"] = r.acyclicity.failed_object;
  }
  j["stabilizers"] = json::array();
  for (const auto& s : r.stabilizers) {
    out << "  cell (" << s.dim << ", " << s.cell << "): family "
        << (s.family_contained ? "contained" : "NOT contained") << ", finiteness "
        << (s.fp_holds ? "holds" : "fails") << "\n";
    j["stabilizers"].push_back({{"dim", s.dim},
                                {"cell", s.cell},
                                {"family_contained", s.family_contained},
                                {"fp_holds", s.fp_holds}});
  }
  return finish(flags, j, out.str());
}

CommandResult cmd_brown(const io::Workspace& ws, const Flags& flags) {
  BrownReport r = brown_check(ws.cat, need_filtration(ws), flags.n);
  const char* verdict = r.verdict == BrownVerdict::Consistent ? "CONSISTENT"
                        : r.verdict == BrownVerdict::Inapplicable
                            ? "INAPPLICABLE"
                            : "THEOREM VIOLATION";
  std::ostringstream out;
  json j;
  j["n"] = flags.n;
  j["hypothesis_good"] = {{"holds", r.goodness.good},
                          {"acyclic", r.goodness.acyclicity.acyclic}};
  j["hypothesis_good"]["stabilizers"] = json::array();
  for (const auto& s : r.goodness.stabilizers)
    j["hypothesis_good"]["stabilizers"].push_back(
        {{"dim", s.dim},
         {"cell", s.cell},
         {"family_contained", s.family_contained},
         {"fp_holds", s.fp_holds}});
  j["finiteness"] = {{"holds", r.fp.holds}, {"ranks", r.fp.ranks}};
  j["systems"] = json::array();
  for (std::size_t i = 0; i < r.systems.size(); ++i)
    j["systems"].push_back({{"k", static_cast<int>(i) - 1},
                            {"essentially_trivial", r.systems[i].trivial},
                            {"beta", r.systems[i].beta}});
  j["verdict"] = verdict;
  out << "goodness hypothesis: " << (r.goodness.good ? "holds" : "fails")
      << "\n";
  out << "finiteness: " << (r.fp.holds ? "holds" : "fails") << "\n";
  for (std::size_t i = 0; i < r.systems.size(); ++i)
    out << "degree " << static_cast<int>(i) - 1 << " system: "
        << (r.systems[i].trivial ? "essentially trivial" : "survives") << "\n";
  out << verdict << "\n";
  return finish(flags, j, out.str(),
                r.verdict == BrownVerdict::Violation ? 3 : 0);
}

CommandResult cmd_tor(const io::Workspace& ws, const Flags& flags) {
  if (flags.k < 0) throw Error("ValidationError", "degree out of range");
  ModulePtr m = coefficient_module(ws, flags, Variance::Left);
  TorTable t = bredon_homology_of_group(ws.cat, *m, flags.k);
  std::ostringstream out;
  json j;
  j["degrees"] = json::array();
  for (std::size_t k = 0; k < t.degrees.size(); ++k) {
    out << "Tor_" << k << ": " << inv_str(t.degrees[k]) << "\n";
    j["degrees"].push_back(io::invariants_to_json(t.degrees[k]));
  }
  return finish(flags, j, out.str());
}

CommandResult cmd_resolve(const io::Workspace& ws, const Flags& flags) {
  if (flags.n < 0) throw Error("ValidationError", "length out of range");
  ModulePtr m = coefficient_module(ws, flags, Variance::Right);
  Resolution r = resolve(m, flags.n);
  std::ostringstream out;
  json j;
  j["ranks"] = json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    out << "P_" << i << ": free on " << r.terms[i].rank() << " orbits, "
        << r.terms[i].module->total_generators() << " generators\n";
    j["ranks"].push_back({{"orbits", r.terms[i].rank()},
                          {"generators", r.terms[i].module->total_generators()}});
  }
  return finish(flags, j, out.str());
}

CommandResult cmd_equiv(const io::Workspace& ws, const Flags& flags) {
  if (flags.k < 0) throw Error("ValidationError", "degree out of range");
  ModulePtr m = coefficient_module(ws, flags, Variance::Left);
  auto inv = equivariant_homology(ws.cat, need_complex(ws), m, flags.k);
  json j;
  j["k"] = flags.k;
  j["invariants"] = io::invariants_to_json(inv);
  return finish(flags, j,
                "H_" + std::to_string(flags.k) + ": " + inv_str(inv) + "\n");
}

CommandResult cmd_indres(const io::Workspace& ws, const Flags& flags) {
  if (flags.subgroup >= ws.cat->object_count())
    throw Error("ValidationError", "subgroup index out of range");
  SubgroupContext ctx = make_subgroup_context(ws.cat, ws.cat->subgroup(flags.subgroup));
  std::ostringstream out;
  json j;
  j["subgroup"] = subgroup_json(ctx.lambda);
  j["family_contained"] = ctx.contained;
  j["subcategory_objects"] = ctx.subcat->object_count();
  out << "subgroup G/" << subgroup_str(ws.cat, flags.subgroup) << "\n";
  out << "intersected family " << (ctx.contained ? "contained" : "not contained")
      << ", " << ctx.subcat->object_count() << " objects\n";
  InducedTrivial ind = induce_trivial_with_comparison(ctx);
  bool iso = morphism_is_iso(ind.comparison);
  j["induction_comparison_iso"] = iso;
  out << "induced constant module vs represented: "
      << (iso ? "isomorphic" : "NOT isomorphic") << "\n";
  json vals = json::array();
  for (std::size_t o = 0; o < ws.cat->object_count(); ++o) {
    auto inv = invariants(ind.module->value(o));
    out << "  G/" << subgroup_str(ws.cat, o) << ": " << inv_str(inv) << "\n";
    vals.push_back(io::invariants_to_json(inv));
  }
  j["induced_values"] = std::move(vals);
  return finish(flags, j, out.str());
}

}  // namespace

CommandResult run(const io::Workspace& ws, const std::string& command,
                  const Flags& flags) {
  try {
    if (command == "orbitcat") return cmd_orbitcat(ws, flags);
    if (command == "homology") return cmd_homology(ws, flags);
    if (command == "fp0") return cmd_fp0(ws, flags);
    if (command == "good") return cmd_good(ws, flags);
    if (command == "brown") return cmd_brown(ws, flags);
    if (command == "tor") return cmd_tor(ws, flags);
    if (command == "resolve") return cmd_resolve(ws, flags);
    if (command == "equiv") return cmd_equiv(ws, flags);
    if (command == "indres") return cmd_indres(ws, flags);
    throw Error("ValidationError", "unknown command \"" + command + "\"");
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult run_file(const std::string& command,
                       const std::string& manifest_path, const Flags& flags) {
  try {
    io::Workspace ws = io::load_manifest(manifest_path);
    return run(ws, command, flags);
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace bredon::engine
