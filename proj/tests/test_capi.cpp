#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "bredon/capi.h"
#include "bredon/io.hpp"

namespace {

struct Report {
  int code = -1;
  std::string text;
};

Report run(bredon_workspace* ws, const char* cmd, const char* flags) {
  char* out = nullptr;
  Report r;
  r.code = bredon_run(ws, cmd, flags, &out);
  if (out) {
    r.text = out;
    bredon_string_free(out);
  }
  return r;
}

struct Handle {
  bredon_workspace* ws = nullptr;
  explicit Handle(const char* path) : ws(bredon_workspace_open(path)) {}
  ~Handle() { bredon_workspace_close(ws); }
};

}  // namespace

TEST_CASE("lifecycle and errors") {
  CHECK(std::string(bredon_version()).size() > 0);
  CHECK(bredon_workspace_open("examples/no_such_file.json") == nullptr);
  CHECK(std::string(bredon_last_error()).find("ManifestError") !=
        std::string::npos);
  CHECK(bredon_workspace_open(nullptr) == nullptr);

  Handle h("examples/c2_square.json");
  REQUIRE(h.ws);
  CHECK(run(h.ws, "frobnicate", "").code == BREDON_ERR_VALIDATION);
  CHECK(run(h.ws, "homology", "{\"k\": -3}").code == BREDON_ERR_VALIDATION);
  char* out = nullptr;
  CHECK(bredon_run(nullptr, "fp0", "", &out) == BREDON_ERR_ARGUMENT);
}

TEST_CASE("shipped examples behave as documented") {
  Handle cone("examples/c2_cone.json");
  REQUIRE(cone.ws);
  Report brown = run(cone.ws, "brown", "{\"n\": 2}");
  CHECK(brown.code == 0);
  CHECK(brown.text.find("CONSISTENT") != std::string::npos);

  Handle s3("examples/s3_reflections.json");
  REQUIRE(s3.ws);
  Report fp0 = run(s3.ws, "fp0", "");
  CHECK(fp0.code == 0);
  CHECK(fp0.text.find("F0 size 1") != std::string::npos);
  CHECK(fp0.text.find("verified") != std::string::npos);

  Handle square("examples/c2_square.json");
  REQUIRE(square.ws);
  Report h0 = run(square.ws, "homology", "{\"k\": 0, \"reduced\": true}");
  CHECK(h0.code == 0);
  // the flip fixes exactly the two poles: reduced H_0 at G/{e, t} is Z
  CHECK(h0.text.find("G/{e, t}: Z\n") != std::string::npos);
  CHECK(h0.text.find("G/{e}: 0") != std::string::npos);

  // the square at n = 1 fails the hypotheses and must not report a violation
  Report b1 = run(square.ws, "brown", "{\"n\": 1}");
  CHECK(b1.code == 0);
  CHECK(b1.text.find("INAPPLICABLE") != std::string::npos);
}

TEST_CASE("remaining commands run on the corpus") {
  Handle cone("examples/c2_cone.json");
  REQUIRE(cone.ws);
  CHECK(run(cone.ws, "orbitcat", "").code == 0);
  CHECK(run(cone.ws, "good", "{\"n\": 2}").text.find("yes") !=
        std::string::npos);
  Report tor = run(cone.ws, "tor", "{\"k\": 2}");
  CHECK(tor.code == 0);
  CHECK(tor.text.find("Tor_1: 0") != std::string::npos);
  CHECK(run(cone.ws, "resolve", "{\"n\": 2}").code == 0);
  Report eq = run(cone.ws, "equiv", "{\"k\": 0}");
  CHECK(eq.code == 0);
  CHECK(eq.text.find("H_0: Z") != std::string::npos);
  CHECK(run(cone.ws, "indres", "{\"subgroup\": 1}").text.find("isomorphic") !=
        std::string::npos);
}

TEST_CASE("json reports round-trip and are deterministic") {
  Handle cone("examples/c2_cone.json");
  REQUIRE(cone.ws);
  Report a = run(cone.ws, "homology", "{\"k\": 1, \"json\": true}");
  Report b = run(cone.ws, "homology", "{\"k\": 1, \"json\": true}");
  REQUIRE(a.code == 0);
  CHECK(a.text == b.text);  // byte-identical

  auto j = bredon::io::json::parse(a.text);
  for (const auto& entry : j.at("values")) {
    auto pres = bredon::io::presentation_from_json(entry.at("presentation"));
    auto reported = bredon::io::invariants_from_json(entry.at("invariants"));
    CHECK(bredon::invariants(pres) == reported);
  }

  Report c = run(cone.ws, "brown", "{\"n\": 2, \"json\": true}");
  auto bj = bredon::io::json::parse(c.text);
  CHECK(bj.at("verdict") == "CONSISTENT");
  CHECK(bj.at("hypothesis_good").at("holds") == true);
  CHECK(bj.at("finiteness").at("holds") == true);
}
