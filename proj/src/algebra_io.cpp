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

#include "sdm/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace sdm {
namespace {

LeqTable leq_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("leq"))
    throw AlgebraError(where + ": missing \"leq\"");
  const Json& t = j["leq"];
  if (!t.is_array()) throw AlgebraError(where + ": \"leq\" must be an array");
  LeqTable leq;
  for (const Json& row : t) {
    if (!row.is_array())
      throw AlgebraError(where + ": \"leq\" rows must be arrays");
    std::vector<bool> r;
    for (const Json& v : row) {
      if (v.is_boolean()) r.push_back(v.get<bool>());
      else if (v.is_number_integer() && (v == 0 || v == 1))
        r.push_back(v.get<int>() == 1);
      else
        throw AlgebraError(where + ": \"leq\" entries must be booleans");
    }
    leq.push_back(std::move(r));
  }
  for (const auto& r : leq)
    if (r.size() != leq.size())
      throw AlgebraError(where + ": \"leq\" is not square");
  if (j.contains("size")) {
    if (!j["size"].is_number_integer() ||
        j["size"].get<long long>() != static_cast<long long>(leq.size()))
      throw AlgebraError(where + ": \"size\" does not match \"leq\"");
  }
  return leq;
}

std::vector<int> ints_from_json(const Json& j, const char* key,
                                const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw AlgebraError(where + ": missing \"" + key + "\"");
  const Json& t = j[key];
  if (!t.is_array())
    throw AlgebraError(where + ": \"" + key + "\" must be an array");
  std::vector<int> out;
  for (const Json& v : t) {
    if (!v.is_number_integer())
      throw AlgebraError(where + ": \"" + key + "\" entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Json leq_json(const FiniteLattice& l) {
  Json rows = Json::array();
  for (int a = 0; a < l.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < l.size(); ++b) row.push_back(l.leq(a, b));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

SmaTables sma_tables_from_json(const Json& j) {
  return {leq_from_json(j, "algebra"), ints_from_json(j, "neg", "algebra")};
}

bool is_hetero_json(const Json& j) {
  return j.is_object() && j.contains("L") && j.contains("D");
}

HeteroTables hetero_tables_from_json(const Json& j) {
  if (!is_hetero_json(j)) throw AlgebraError("expected fields \"L\" and \"D\"");
  HeteroTables t;
  t.L = leq_from_json(j["L"], "L");
  t.D = leq_from_json(j["D"], "D");
  t.star = ints_from_json(j["D"], "star", "D");
  t.e = ints_from_json(j, "e", "algebra");
  t.h = ints_from_json(j, "h", "algebra");
  return t;
}

Json to_json(const FiniteLattice& l) {
  Json j;
  j["size"] = l.size();
  j["leq"] = leq_json(l);
  return j;
}

Json to_json(const FiniteSMA& a) {
  Json j = to_json(a.lat);
  j["neg"] = a.neg;
  return j;
}

Json to_json(const FiniteDMA& d) {
  Json j = to_json(d.lat);
  j["star"] = d.star;
  j["boolean"] = d.boolean;
  return j;
}

Json to_json(const HeteroAlgebra& hh) {
  Json j;
  j["L"] = to_json(hh.L);
  j["D"] = to_json(hh.D);
  j["e"] = hh.e;
  j["h"] = hh.h;
  Json flags = Json::array();
  std::istringstream names(hflag_names(hh.flags));
  for (std::string f; names >> f;) flags.push_back(f);
  j["flags"] = flags;
  return j;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["ok"] = c.ok;
    if (!c.ok) {
      j["witness"] = c.witness;
      if (!c.detail.empty()) j["detail"] = c.detail;
    }
    out.push_back(j);
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw AlgebraError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace sdm
