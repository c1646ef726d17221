#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "bredon/capi.h"

namespace {

struct Options {
  std::string manifest;
  int k = 0;
  int n = 0;
  bool reduced = false;
  bool json = false;
  std::size_t subgroup = 0;
  std::string module;
};

std::string flags_json(const Options& o) {
  std::string s = "{";
  s += "\"k\": " + std::to_string(o.k);
  s += ", \"n\": " + std::to_string(o.n);
  s += std::string(", \"reduced\": ") + (o.reduced ? "true" : "false");
  s += std::string(", \"json\": ") + (o.json ? "true" : "false");
  s += ", \"subgroup\": " + std::to_string(o.subgroup);
  if (!o.module.empty()) s += ", \"module\": \"" + o.module + "\"";
  return s + "}";
}

int run(const std::string& command, const Options& o) {
  bredon_workspace* ws = bredon_workspace_open(o.manifest.c_str());
  if (!ws) {
    std::fprintf(stderr, "error: %s\n", bredon_last_error());
    return BREDON_ERR_VALIDATION;
  }
  char* report = nullptr;
  int code = bredon_run(ws, command.c_str(), flags_json(o).c_str(), &report);
  if (report) {
    std::fputs(report, code == 0 ? stdout : stderr);
    bredon_string_free(report);
  } else if (code != 0) {
    std::fprintf(stderr, "error: %s\n", bredon_last_error());
  }
  bredon_workspace_close(ws);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bredon homology and finiteness checks over orbit categories"};
  app.require_subcommand(1);
  Options o;
  std::string command;

  auto add = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("manifest", o.manifest, "JSON manifest")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_option("--module", o.module, "coefficient module name");
    sub->callback([&command, name] { command = name; });
    return sub;
  };

  add("orbitcat", "orbit category summary and hom-set table");
  add("homology", "objectwise homology of the fixed-point complexes")
      ->add_option("--k", o.k, "degree")
      ->required();
  app.get_subcommand("homology")
      ->add_flag("--reduced", o.reduced, "reduced homology");
  add("fp0", "minimal covering subfamily, with constructive witness");
  add("good", "goodness hypothesis check")->add_option("--n", o.n)->required();
  add("brown", "finiteness consistency verdict")
      ->add_option("--n", o.n)
      ->required();
  add("tor", "derived tensor of the constant module")
      ->add_option("--k", o.k, "top degree")
      ->required();
  add("resolve", "free resolution ranks")->add_option("--n", o.n)->required();
  add("equiv", "equivariant homology through the total complex")
      ->add_option("--k", o.k, "degree")
      ->required();
  add("indres", "induction / restriction along a subgroup")
      ->add_option("--subgroup", o.subgroup, "family index")
      ->required();

  CLI11_PARSE(app, argc, argv);
  return run(command, o);
}
