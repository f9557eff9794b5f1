// Copyright 2026 The sdmw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sdm/sdm.h"

using Json = nlohmann::ordered_json;

namespace {

struct Ctx {
  sdm_context* c = sdm_context_new();
  ~Ctx() { sdm_context_free(c); }
  Json result() const { return Json::parse(sdm_result(c)); }
};

const char* kPc =
    R"({"size": 3, "leq": [[true,true,true],[false,true,true],[false,false,true]],
        "neg": [2, 0, 0]})";

}  // namespace

TEST_CASE("null arguments are input errors") {
  Ctx x;
  CHECK(sdm_parse(nullptr, "p") == SDM_EINPUT);
  CHECK(sdm_parse(x.c, nullptr) == SDM_EINPUT);
  CHECK(std::string(sdm_error(x.c)).find("missing") != std::string::npos);
  CHECK(sdm_algebra_kernel(x.c, nullptr) == SDM_EINPUT);
  sdm_proof* p = reinterpret_cast<sdm_proof*>(1);
  CHECK(sdm_proof_load(x.c, "{", &p) == SDM_EINPUT);
  CHECK(p == nullptr);
  sdm_algebra_free(nullptr);
  sdm_proof_free(nullptr);
  CHECK(std::string(sdm_status_name(SDM_NEGATIVE)) == "negative");
}

TEST_CASE("parse and translate") {
  Ctx x;
  REQUIRE(sdm_parse(x.c, "(seq p (box (circ p)))") == SDM_OK);
  Json j = x.result();
  CHECK(j["kind"] == "sequent");
  CHECK(j["text"] == "(seq p (box (circ p)))");
  REQUIRE(sdm_parse(x.c, "(cap one (circ p))") == SDM_OK);
  CHECK(x.result()["sort"] == "K");
  CHECK(sdm_parse(x.c, "(and p") == SDM_EINPUT);
  CHECK(std::string(sdm_result(x.c)).empty());
  REQUIRE(sdm_translate(x.c, "(seq (not p) p)") == SDM_OK);
  CHECK(x.result()["text"] == "(seq (box (sim (circ p))) p)");
  CHECK(sdm_translate(x.c, "(seq p)") == SDM_EINPUT);
}

TEST_CASE("algebra handles") {
  Ctx x;
  sdm_algebra* a = nullptr;
  REQUIRE(sdm_algebra_load(x.c, kPc, &a) == SDM_OK);
  REQUIRE(a != nullptr);
  CHECK(x.result()["flags"] == Json{"LQMA", "DPL", "APL", "WSA"});

  REQUIRE(sdm_algebra_kernel(x.c, a) == SDM_OK);
  CHECK(x.result()["D"]["size"] == 2);

  REQUIRE(sdm_algebra_heterogenize(x.c, a) == SDM_OK);
  std::string hetero = sdm_result(x.c);
  sdm_algebra* h = nullptr;
  REQUIRE(sdm_algebra_load(x.c, hetero.c_str(), &h) == SDM_OK);
  CHECK(x.result()["kind"] == "hetero");
  CHECK(sdm_algebra_kernel(x.c, h) == SDM_EINPUT);

  const char* dn = "(seq (box (sim (circ (box (sim (circ p)))))) p)";
  CHECK(sdm_validate(x.c, a, dn) == SDM_NEGATIVE);
  CHECK(x.result()["counter"]["p"] == 1);
  CHECK(sdm_validate(x.c, h, dn) == SDM_NEGATIVE);
  CHECK(sdm_validate(x.c, a, "(seq p p)") == SDM_OK);
  sdm_algebra_free(a);
  sdm_algebra_free(h);

  const char* bad =
      R"({"size": 2, "leq": [[true,true],[false,true]], "neg": [0, 0]})";
  a = nullptr;
  CHECK(sdm_algebra_load(x.c, bad, &a) == SDM_NEGATIVE);
  CHECK(a == nullptr);
  CHECK(x.result()["report"]["summary"].get<std::string>().find(
            "S2 fails at bottom") != std::string::npos);
  CHECK(sdm_algebra_load(x.c, R"({"leq": 1})", &a) == SDM_EINPUT);
}

TEST_CASE("enumerate") {
  Ctx x;
  REQUIRE(sdm_enumerate(x.c, 3, "") == SDM_OK);
  CHECK(x.result()["count"] == 4);
  REQUIRE(sdm_enumerate(x.c, 3, "DPL") == SDM_OK);
  CHECK(x.result()["count"] == 3);
  CHECK(sdm_enumerate(x.c, 3, "NOPE") == SDM_EINPUT);
  CHECK(sdm_enumerate(x.c, 0, nullptr) == SDM_EINPUT);
}

TEST_CASE("prove, serialize and check") {
  Ctx x;
  sdm_proof* p = nullptr;
  REQUIRE(sdm_prove(x.c, "(seq htop (box (sim (circ bot))))", "sm", 25, 0,
                    &p) == SDM_OK);
  REQUIRE(p != nullptr);
  Json pj = x.result()["proof"];
  REQUIRE(sdm_proof_json(x.c, p) == SDM_OK);
  CHECK(x.result() == pj);

  sdm_proof* q = nullptr;
  REQUIRE(sdm_proof_load(x.c, pj.dump().c_str(), &q) == SDM_OK);
  REQUIRE(sdm_proof_check(x.c, q, "sm") == SDM_OK);
  CHECK(x.result()["cut_free"] == true);
  CHECK(sdm_proof_check(x.c, q, "nope") == SDM_EINPUT);
  sdm_proof_free(p);
  sdm_proof_free(q);

  CHECK(sdm_prove(x.c, "(seq (box (sim (circ (box (sim (circ p)))))) p)", "sm",
                  40, 0, &p) == SDM_NEGATIVE);
  CHECK(x.result()["status"] == "refuted");
  CHECK(p == nullptr);
  CHECK(sdm_prove(x.c, "(seq p p)", "sm", 0, 0, &p) == SDM_EINPUT);

  // A tampered rule name is rejected by the checker.
  Json bad = pj;
  bad["rule"] = "box_L";
  REQUIRE(sdm_proof_load(x.c, bad.dump().c_str(), &q) == SDM_OK);
  CHECK(sdm_proof_check(x.c, q, "sm") == SDM_NEGATIVE);
  CHECK(!x.result()["diagnostics"].empty());
  sdm_proof_free(q);
}

TEST_CASE("cut reduction through the handle") {
  Ctx x;
  sdm_proof* p = nullptr;
  REQUIRE(sdm_prove(x.c, "(seq p p)", "sm", 5, 0, &p) == SDM_OK);
  CHECK(sdm_reduce_cut(x.c, p, "", nullptr) == SDM_NEGATIVE);
  CHECK(x.result().contains("rejected"));
  CHECK(sdm_reduce_cut(x.c, p, "3.1", nullptr) == SDM_EINPUT);
  CHECK(sdm_reduce_cut(x.c, p, "x", nullptr) == SDM_EINPUT);
  sdm_proof_free(p);
}

TEST_CASE("classify") {
  Ctx x;
  REQUIRE(sdm_classify(x.c, "(seq top (or (box (sim (circ p))) (box (circ p))))") ==
          SDM_OK);
  Json j = x.result();
  CHECK(j["verdict"] == "analytic-inductive");
  CHECK(j["witness"]["vars"] == Json{"p"});
  CHECK(sdm_classify(x.c, "(seq (box (sim (circ (box (circ p))))) p)") ==
        SDM_NEGATIVE);
  CHECK(x.result()["verdict"] == "not-analytic-inductive");
  CHECK(sdm_classify(x.c, "(seq (hand p q) p)") == SDM_EINPUT);
}

TEST_CASE("suite runs a single criterion") {
  Ctx x;
  REQUIRE(sdm_suite(x.c, "quick", 7) == SDM_OK);
  Json j = x.result();
  CHECK(j["ok"] == true);
  REQUIRE(j["criteria"].size() == 1);
  CHECK(j["criteria"][0]["id"] == 7);
  CHECK(sdm_suite(x.c, "huge", 1) == SDM_EINPUT);
  CHECK(sdm_suite(x.c, "quick", 9) == SDM_EINPUT);
}
