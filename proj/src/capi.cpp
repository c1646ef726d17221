#include "bredon/capi.h"

#include <cstdlib>
#include <cstring>

#include "bredon/engine.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct bredon_workspace {
  bredon::io::Workspace ws;
};

extern "C" {

const char* bredon_version(void) { return "1.0.0"; }

bredon_workspace* bredon_workspace_open(const char* manifest_path) {
  if (!manifest_path) {
    g_last_error = "manifest_path is null";
    return nullptr;
  }
  try {
    auto* h = new bredon_workspace{bredon::io::load_manifest(manifest_path)};
    g_last_error.clear();
    return h;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void bredon_workspace_close(bredon_workspace* ws) { delete ws; }

int bredon_run(bredon_workspace* ws, const char* command,
               const char* flags_json, char** report_out) {
  if (!ws || !command || !report_out) {
    g_last_error = "null argument";
    return BREDON_ERR_ARGUMENT;
  }
  *report_out = nullptr;
  try {
    bredon::engine::Flags flags;
    if (flags_json && *flags_json) {
      auto j = bredon::io::json::parse(flags_json);
      flags.k = j.value("k", 0);
      flags.n = j.value("n", 0);
      flags.reduced = j.value("reduced", false);
      flags.json = j.value("json", false);
      flags.subgroup = j.value("subgroup", std::size_t{0});
      flags.module = j.value("module", std::string{});
    }
    bredon::engine::CommandResult r =
        bredon::engine::run(ws->ws, command, flags);
    *report_out = dup_string(r.report);
    if (!*report_out) {
      g_last_error = "out of memory";
      return BREDON_ERR_INTERNAL;
    }
    g_last_error = r.code == 0 ? "" : r.report;
    return r.code;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BREDON_ERR_INTERNAL;
  }
}

const char* bredon_last_error(void) { return g_last_error.c_str(); }

void bredon_string_free(char* s) { std::free(s); }

}  // extern "C"
