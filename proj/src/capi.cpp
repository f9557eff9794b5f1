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
#include "sdm/sdm.h"

#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "sdm/algebra.hpp"
#include "sdm/algebra_io.hpp"
#include "sdm/cut.hpp"
#include "sdm/enumerate.hpp"
#include "sdm/inductive.hpp"
#include "sdm/proof.hpp"
#include "sdm/search.hpp"
#include "sdm/semantics.hpp"
#include "sdm/suite.hpp"

struct sdm_context {
  std::string result;
  std::string error;
};

struct sdm_algebra {
  std::variant<sdm::FiniteSMA, sdm::HeteroAlgebra> value;
};

struct sdm_proof {
  sdm::ProofTree tree;
};

namespace {

using sdm::Json;

// Thrown for well-formed requests that make no sense (wrong algebra kind).
struct BadRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
sdm_status guarded(sdm_context* ctx, F&& f) {
  if (!ctx) return SDM_EINPUT;
  ctx->result.clear();
  ctx->error.clear();
  try {
    return f();
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return SDM_EINTERNAL;
  } catch (const sdm::InternalError& e) {
    ctx->error = e.what();
    return SDM_EINTERNAL;
  } catch (const std::invalid_argument& e) {  // parse, system, profile, path
    ctx->error = e.what();
    return SDM_EINPUT;
  } catch (const std::out_of_range& e) {
    ctx->error = e.what();
    return SDM_EINPUT;
  } catch (const std::runtime_error& e) {  // algebra, proof format
    ctx->error = e.what();
    return SDM_EINPUT;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return SDM_EINTERNAL;
  }
}

std::string need(const char* s, const char* what) {
  if (!s) throw BadRequest(std::string("missing ") + what);
  return s;
}

sdm_status emit(sdm_context* ctx, const Json& j, bool ok = true) {
  ctx->result = j.dump(2);
  return ok ? SDM_OK : SDM_NEGATIVE;
}

const char* sort_name(sdm::Sort s) { return s == sdm::Sort::DL ? "DL" : "K"; }

Json words(const std::string& text) {
  Json a = Json::array();
  std::istringstream in(text);
  for (std::string w; in >> w;) a.push_back(w);
  return a;
}

bool is_sequent_text(const std::string& t) {
  auto i = t.find_first_not_of(" \t\r\n");
  return i != std::string::npos && t.compare(i, 4, "(seq") == 0;
}

// Parses a term in whichever sort fits.
sdm::Term parse_any(const std::string& text) {
  try {
    return sdm::parse_term(text, sdm::Sort::DL);
  } catch (const sdm::ParseError& e) {
    if (e.kind() != sdm::ParseErrorKind::Sort) throw;
    return sdm::parse_term(text, sdm::Sort::K);
  }
}

// Top-level items of "(seq A B)" as raw text.
std::pair<std::string, std::string> split_seq(const std::string& text) {
  auto open = text.find("(seq");
  auto close = text.find_last_of(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw sdm::ParseError(sdm::ParseErrorKind::Syntax, 0, "expected (seq A B)");
  std::string body = text.substr(open + 4, close - open - 4);
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (space && depth == 0) {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
      continue;
    }
    depth += c == '(';
    depth -= c == ')';
    cur += c;
  }
  if (!cur.empty()) items.push_back(cur);
  if (items.size() != 2 || depth != 0)
    throw sdm::ParseError(sdm::ParseErrorKind::Arity, open,
                          "seq takes two arguments");
  return {items[0], items[1]};
}

Json term_json(const sdm::Term& t) {
  Json j;
  j["sort"] = sort_name(t.sort());
  j["text"] = sdm::render(t);
  j["unicode"] = sdm::render_unicode(t);
  j["formula"] = t.is_formula();
  j["size"] = t.size();
  j["height"] = t.height();
  return j;
}

Json valuation_json(const sdm::Valuation& v) {
  Json j = Json::object();
  for (const auto& [k, x] : v) j[k] = x;
  return j;
}

Json report_json(const sdm::Report& r) {
  Json j;
  j["ok"] = r.ok();
  j["checks"] = sdm::to_json(r);
  j["summary"] = r.summary();
  return j;
}

const sdm::FiniteSMA& sma_of(const sdm_algebra* a, const char* op) {
  if (!a) throw BadRequest("missing algebra");
  if (auto* s = std::get_if<sdm::FiniteSMA>(&a->value)) return *s;
  throw BadRequest(std::string(op) + " needs a single-type algebra");
}

sdm::HeteroAlgebra hetero_of(const sdm_algebra* a) {
  if (!a) throw BadRequest("missing algebra");
  if (auto* s = std::get_if<sdm::FiniteSMA>(&a->value))
    return sdm::heterogenize(*s);
  return std::get<sdm::HeteroAlgebra>(a->value);
}

sdm::ProofPath parse_path(const std::string& text) {
  sdm::ProofPath p;
  std::string t;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') t += c == ',' ? '.' : c;
  std::istringstream in(t);
  for (std::string item; std::getline(in, item, '.');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != item.size())
      throw BadRequest("bad proof path '" + text + "'");
    p.push_back(v);
  }
  return p;
}

std::vector<int> cut_sizes(const sdm::ProofTree& t) {
  std::vector<int> out;
  for (const auto& f : sdm::cut_formulas(t)) out.push_back(int(f.size()));
  return out;
}

Json witness_json(const sdm::InductiveWitness& w) {
  Json j;
  j["vars"] = w.vars;
  Json eps = Json::array();
  for (auto e : w.epsilon) eps.push_back(e == sdm::Polarity::One ? "1" : "∂");
  j["epsilon"] = eps;
  Json om = Json::array();
  for (auto [k, i] : w.omega) om.push_back({w.vars[k], w.vars[i]});
  j["omega"] = om;
  Json br = Json::array();
  for (const auto& b : w.branches)
    br.push_back({{"tree", b.tree == 0 ? "+lhs" : "-rhs"},
                  {"path", b.path},
                  {"pia_from", b.pia_from}});
  j["branches"] = br;
  j["text"] = sdm::render(w);
  return j;
}

}  // namespace

extern "C" {

sdm_context* sdm_context_new(void) { return new (std::nothrow) sdm_context; }

void sdm_context_free(sdm_context* ctx) { delete ctx; }

const char* sdm_result(const sdm_context* ctx) {
  return ctx ? ctx->result.c_str() : "";
}

const char* sdm_error(const sdm_context* ctx) {
  return ctx ? ctx->error.c_str() : "no context";
}

const char* sdm_status_name(sdm_status s) {
  switch (s) {
    case SDM_OK: return "ok";
    case SDM_NEGATIVE: return "negative";
    case SDM_EINPUT: return "input error";
    case SDM_EINTERNAL: return "internal error";
  }
  return "unknown";
}

sdm_status sdm_parse(sdm_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    std::string t = need(text, "text");
    Json j;
    if (is_sequent_text(t)) {
      sdm::Sequent s = sdm::parse_sequent(t);
      std::string why = sdm::placement_error(s);
      if (!why.empty())
        throw sdm::ParseError(sdm::ParseErrorKind::Sort, 0, why);
      j["kind"] = "sequent";
      j["sort"] = sort_name(s.sort());
      j["text"] = sdm::render(s);
      j["unicode"] = sdm::render_unicode(s);
      j["ant"] = term_json(s.ant);
      j["suc"] = term_json(s.suc);
    } else {
      j = term_json(parse_any(t));
      j["kind"] = "term";
    }
    return emit(ctx, j);
  });
}

sdm_status sdm_translate(sdm_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    std::string t = need(text, "text");
    Json j;
    if (is_sequent_text(t)) {
      auto [a, b] = split_seq(t);
      sdm::Sequent s =
          sdm::translate(sdm::parse_formula(a), sdm::parse_formula(b));
      j["kind"] = "sequent";
      j["text"] = sdm::render(s);
      j["unicode"] = sdm::render_unicode(s);
    } else {
      sdm::Term r = sdm::translate(sdm::parse_formula(t));
      j = term_json(r);
      j["kind"] = "term";
    }
    return emit(ctx, j);
  });
}

sdm_status sdm_algebra_load(sdm_context* ctx, const char* json,
                            sdm_algebra** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!out) throw BadRequest("missing output handle");
    Json in = sdm::parse_json_text(need(json, "algebra json"));
    Json j;
    if (sdm::is_hetero_json(in)) {
      sdm::HeteroCheck c = sdm::check_hetero(sdm::hetero_tables_from_json(in));
      j["kind"] = "hetero";
      j["report"] = report_json(c.report);
      j["valid"] = c.hh.has_value();
      j["flags"] = words(sdm::hflag_names(c.flags));
      if (!c.hh) return emit(ctx, j, false);
      *out = new sdm_algebra{std::move(*c.hh)};
    } else {
      sdm::SmaCheck c = sdm::check_sma(sdm::sma_tables_from_json(in));
      j["kind"] = "sma";
      j["report"] = report_json(c.report);
      j["valid"] = c.sma.has_value();
      if (!c.sma) return emit(ctx, j, false);
      j["flags"] = words(sdm::variety_names(sdm::classify(*c.sma)));
      *out = new sdm_algebra{std::move(*c.sma)};
    }
    return emit(ctx, j);
  });
}

void sdm_algebra_free(sdm_algebra* a) { delete a; }

sdm_status sdm_algebra_describe(sdm_context* ctx, const sdm_algebra* a) {
  return guarded(ctx, [&] {
    if (!a) throw BadRequest("missing algebra");
    Json j;
    if (auto* s = std::get_if<sdm::FiniteSMA>(&a->value)) {
      j["kind"] = "sma";
      j["algebra"] = sdm::to_json(*s);
      j["flags"] = words(sdm::variety_names(sdm::classify(*s)));
    } else {
      const auto& h = std::get<sdm::HeteroAlgebra>(a->value);
      j["kind"] = "hetero";
      j["algebra"] = sdm::to_json(h);
      j["flags"] = words(sdm::hflag_names(h.flags));
    }
    return emit(ctx, j);
  });
}

sdm_status sdm_algebra_kernel(sdm_context* ctx, const sdm_algebra* a) {
  return guarded(ctx, [&] {
    sdm::Kernel k = sdm::kernel(sma_of(a, "kernel"));
    Json j;
    j["D"] = sdm::to_json(k.k);
    j["e"] = k.e;
    j["h"] = k.h;
    j["report"] = report_json(sdm::check_dma(k.k.lat, k.k.star));
    return emit(ctx, j);
  });
}

sdm_status sdm_algebra_heterogenize(sdm_context* ctx, const sdm_algebra* a) {
  return guarded(ctx, [&] {
    return emit(ctx, sdm::to_json(sdm::heterogenize(sma_of(a, "heterogenize"))));
  });
}

sdm_status sdm_validate(sdm_context* ctx, const sdm_algebra* a,
                        const char* sequent) {
  return guarded(ctx, [&] {
    sdm::Sequent s = sdm::parse_sequent(need(sequent, "sequent"));
    std::string why = sdm::placement_error(s);
    if (!why.empty()) throw sdm::ParseError(sdm::ParseErrorKind::Sort, 0, why);
    sdm::Validity v = sdm::validate(s, hetero_of(a));
    Json j;
    j["sequent"] = sdm::render(s);
    j["valid"] = v.valid;
    if (!v.valid) {
      j["counter"] = valuation_json(v.counter);
      j["lhs"] = v.lhs;
      j["rhs"] = v.rhs;
    }
    return emit(ctx, j, v.valid);
  });
}

sdm_status sdm_enumerate(sdm_context* ctx, int max_size, const char* variety) {
  return guarded(ctx, [&] {
    if (max_size < 1 || max_size > 8)
      throw BadRequest("max size must be between 1 and 8");
    unsigned v = variety && *variety ? sdm::parse_variety(variety) : 0;
    Json list = Json::array();
    for (const auto& a : sdm::enumerate(max_size, v)) {
      Json j = sdm::to_json(a);
      j["flags"] = words(sdm::variety_names(sdm::classify(a)));
      list.push_back(j);
    }
    Json j;
    j["count"] = list.size();
    j["algebras"] = list;
    return emit(ctx, j);
  });
}

sdm_status sdm_prove(sdm_context* ctx, const char* sequent, const char* system,
                     int max_depth, long max_visited, sdm_proof** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    sdm::Sequent g = sdm::parse_sequent(need(sequent, "sequent"));
    std::string why = sdm::placement_error(g);
    if (!why.empty()) throw sdm::ParseError(sdm::ParseErrorKind::Sort, 0, why);
    sdm::System s = sdm::parse_system(need(system, "system"));
    if (max_depth < 1) throw BadRequest("depth must be positive");
    sdm::SearchBudget b;
    b.max_depth = max_depth;
    if (max_visited > 0) b.max_visited = std::size_t(max_visited);
    sdm::SearchResult r = sdm::search(g, s, b);
    Json j;
    j["goal"] = sdm::render(g);
    j["system"] = sdm::system_name(s);
    j["status"] = sdm::search_status_name(r.status);
    j["visited"] = r.visited;
    if (!r.refutation.empty()) j["refutation"] = r.refutation;
    if (r.proof) {
      j["depth"] = r.proof->depth();
      j["size"] = r.proof->size();
      j["proof"] = sdm::to_json(*r.proof);
      if (out) *out = new sdm_proof{*r.proof};
    }
    return emit(ctx, j, r.status == sdm::SearchStatus::Found);
  });
}

sdm_status sdm_proof_load(sdm_context* ctx, const char* json,
                          sdm_proof** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!out) throw BadRequest("missing output handle");
    Json in = sdm::parse_json_text(need(json, "proof json"));
    sdm::ProofTree t = sdm::proof_from_json(in);
    Json j;
    j["conclusion"] = sdm::render(t.conclusion);
    j["size"] = t.size();
    j["depth"] = t.depth();
    *out = new sdm_proof{std::move(t)};
    return emit(ctx, j);
  });
}

void sdm_proof_free(sdm_proof* p) { delete p; }

sdm_status sdm_proof_json(sdm_context* ctx, const sdm_proof* p) {
  return guarded(ctx, [&] {
    if (!p) throw BadRequest("missing proof");
    return emit(ctx, sdm::to_json(p->tree));
  });
}

sdm_status sdm_proof_check(sdm_context* ctx, const sdm_proof* p,
                           const char* system) {
  return guarded(ctx, [&] {
    if (!p) throw BadRequest("missing proof");
    sdm::System s = sdm::parse_system(need(system, "system"));
    sdm::CheckReport r = sdm::check_proof(p->tree, s);
    Json diags = Json::array();
    for (const auto& d : r.diagnostics)
      diags.push_back({{"path", d.path}, {"rule", d.rule},
                       {"message", d.message}});
    Json j;
    j["system"] = sdm::system_name(s);
    j["conclusion"] = sdm::render(p->tree.conclusion);
    j["accepted"] = r.accepted;
    j["cut_free"] = r.cut_free;
    j["subformula"] = r.subformula;
    j["diagnostics"] = diags;
    return emit(ctx, j, r.accepted);
  });
}

sdm_status sdm_reduce_cut(sdm_context* ctx, const sdm_proof* p,
                          const char* path, sdm_proof** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!p) throw BadRequest("missing proof");
    sdm::ProofPath at = parse_path(path ? path : "");
    sdm::at(p->tree, at);  // out_of_range for a bad path
    Json j;
    j["path"] = sdm::render_path(at);
    try {
      sdm::ProofTree r = sdm::reduce_cut(p->tree, at);
      j["cuts_before"] = cut_sizes(p->tree);
      j["cuts_after"] = cut_sizes(r);
      j["proof"] = sdm::to_json(r);
      if (out) *out = new sdm_proof{std::move(r)};
      return emit(ctx, j);
    } catch (const sdm::CutError& e) {
      j["rejected"] = e.what();
      return emit(ctx, j, false);
    }
  });
}

sdm_status sdm_classify(sdm_context* ctx, const char* sequent) {
  return guarded(ctx, [&] {
    sdm::Sequent s = sdm::parse_sequent(need(sequent, "inequality"));
    if (!s.ant.is_formula() || !s.suc.is_formula())
      throw BadRequest("classify takes an inequality between formulas");
    auto w = sdm::is_analytic_inductive(s.ant, s.suc);
    Json j;
    j["inequality"] = sdm::render(s);
    j["verdict"] = w ? "analytic-inductive" : "not-analytic-inductive";
    if (w) j["witness"] = witness_json(*w);
    return emit(ctx, j, w.has_value());
  });
}

sdm_status sdm_suite(sdm_context* ctx, const char* profile, int criterion) {
  return guarded(ctx, [&] {
    sdm::Profile pr = sdm::parse_profile(profile ? profile : "quick");
    if (criterion < 0 || criterion > sdm::kCriterionCount)
      throw BadRequest("no criterion " + std::to_string(criterion));
    std::vector<sdm::CriterionResult> rs;
    if (criterion == 0)
      rs = sdm::run_suite(pr);
    else
      rs.push_back(sdm::run_criterion(criterion, pr));
    Json list = Json::array();
    bool all = true;
    for (const auto& r : rs) {
      list.push_back({{"id", r.id},
                      {"name", r.name},
                      {"ok", r.ok},
                      {"seconds", r.seconds},
                      {"limit", r.limit},
                      {"detail", r.detail}});
      all = all && r.ok;
    }
    Json j;
    j["profile"] = pr == sdm::Profile::Full ? "full" : "quick";
    j["ok"] = all;
    j["criteria"] = list;
    return emit(ctx, j, all);
  });
}

}  // extern "C"
