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
// sdmw: command-line front end over the sdm C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdm/sdm.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string system = "sm";
  int depth = 40;
  long visits = 0;
  int max_size = 4;
  std::string variety;
  std::string profile = "quick";
  int criterion = 0;
  std::string out;
  std::string text, text2, file, path;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text << "\n";
}

class Session {
 public:
  Session() : ctx_(sdm_context_new()) {}
  ~Session() { sdm_context_free(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  sdm_context* ctx() { return ctx_; }
  Json result() const { return Json::parse(sdm_result(ctx_)); }
  const char* error() const { return sdm_error(ctx_); }

 private:
  sdm_context* ctx_;
};

void print_tree(const Json& t, int indent) {
  std::cout << std::string(indent * 2, ' ') << t["conclusion"].get<std::string>()
            << "   [" << t["rule"].get<std::string>() << "]\n";
  if (t.contains("premises"))
    for (const auto& p : t["premises"]) print_tree(p, indent + 1);
}

void print_report(const Json& rep, bool failures_only) {
  for (const auto& c : rep["checks"]) {
    if (failures_only && c["ok"].get<bool>()) continue;
    std::cout << c["name"].get<std::string>()
              << (c["ok"].get<bool>() ? " ok" : " fails");
    if (c.contains("detail")) std::cout << " " << c["detail"].get<std::string>();
    if (c.contains("witness") && !c["witness"].empty())
      std::cout << " witness " << c["witness"].dump();
    std::cout << "\n";
  }
}

std::string joined(const Json& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w.get<std::string>();
  return s;
}

sdm_algebra* load_algebra(Session& s, const Options& o, sdm_status* st) {
  sdm_algebra* a = nullptr;
  *st = sdm_algebra_load(s.ctx(), slurp(o.file).c_str(), &a);
  return a;
}

sdm_proof* load_proof(Session& s, const std::string& file, sdm_status* st) {
  sdm_proof* p = nullptr;
  *st = sdm_proof_load(s.ctx(), slurp(file).c_str(), &p);
  return p;
}

int finish(Session& s, sdm_status st, const Options& o,
           void (*text)(const Json&, const Options&)) {
  if (st == SDM_EINPUT || st == SDM_EINTERNAL) {
    std::cerr << "sdmw: " << s.error() << "\n";
    return st == SDM_EINPUT ? 2 : 3;
  }
  Json j = s.result();
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    text(j, o);
  return st;
}

void text_term(const Json& j, const Options&) {
  std::cout << j["text"].get<std::string>() << "\n"
            << j["unicode"].get<std::string>() << "\n";
  if (j.contains("sort")) std::cout << "sort " << j["sort"].get<std::string>() << "\n";
}

void text_dump(const Json& j, const Options&) { std::cout << j.dump() << "\n"; }

void text_check_algebra(const Json& j, const Options&) {
  if (!j["valid"].get<bool>()) {
    print_report(j["report"], true);
    return;
  }
  std::cout << "ok (" << j["kind"].get<std::string>() << ")\n";
  std::cout << "flags: " << joined(j["flags"]) << "\n";
}

void text_kernel(const Json& j, const Options&) {
  std::cout << "D: " << j["D"].dump() << "\n"
            << "e: " << j["e"].dump() << "\n"
            << "h: " << j["h"].dump() << "\n";
  print_report(j["report"], false);
}

void text_validate(const Json& j, const Options&) {
  if (j["valid"].get<bool>()) {
    std::cout << "valid\n";
    return;
  }
  std::cout << "invalid at";
  for (const auto& [k, v] : j["counter"].items()) std::cout << " " << k << "=" << v;
  std::cout << " (lhs " << j["lhs"] << ", rhs " << j["rhs"] << ")\n";
}

void text_prove(const Json& j, const Options&) {
  std::cout << j["status"].get<std::string>() << " in "
            << j["system"].get<std::string>() << " after " << j["visited"]
            << " nodes\n";
  if (j.contains("refutation"))
    std::cout << j["refutation"].get<std::string>() << "\n";
  if (j.contains("proof")) print_tree(j["proof"], 0);
}

void text_check_proof(const Json& j, const Options&) {
  if (j["accepted"].get<bool>()) {
    std::cout << "accepted in " << j["system"].get<std::string>();
    std::cout << (j["cut_free"].get<bool>() ? ", cut-free" : ", with cuts");
    if (j["subformula"].get<bool>()) std::cout << ", subformula property";
    std::cout << "\n";
    return;
  }
  std::cout << "rejected\n";
  for (const auto& d : j["diagnostics"])
    std::cout << "  at " << d["path"].dump() << " "
              << d["rule"].get<std::string>() << ": "
              << d["message"].get<std::string>() << "\n";
}

void text_reduce(const Json& j, const Options& o) {
  if (j.contains("rejected")) {
    std::cout << "rejected: " << j["rejected"].get<std::string>() << "\n";
    return;
  }
  std::cout << "cut formula sizes " << j["cuts_before"].dump() << " -> "
            << j["cuts_after"].dump() << "\n";
  if (o.out.empty()) print_tree(j["proof"], 0);
}

void text_classify(const Json& j, const Options&) {
  std::cout << j["verdict"].get<std::string>() << "\n";
  if (j.contains("witness"))
    std::cout << j["witness"]["text"].get<std::string>() << "\n";
}

void text_enumerate(const Json& j, const Options&) {
  for (const auto& a : j["algebras"])
    std::cout << "size " << a["size"] << " neg " << a["neg"].dump() << " leq "
              << a["leq"].dump() << "  " << joined(a["flags"]) << "\n";
  std::cout << j["count"] << " algebras\n";
}

void text_suite(const Json& j, const Options&) {
  for (const auto& c : j["criteria"]) {
    char line[64];
    std::snprintf(line, sizeof line, "%.2fs/%.0fs", c["seconds"].get<double>(),
                  c["limit"].get<double>());
    std::cout << "criterion " << c["id"] << " " << c["name"].get<std::string>()
              << ": " << (c["ok"].get<bool>() ? "PASS" : "FAIL") << "  "
              << line << "  " << c["detail"].get<std::string>() << "\n";
  }
}

int run(const std::string& cmd, Options& o) {
  Session s;
  sdm_status st = SDM_OK;
  if (cmd == "parse") return finish(s, sdm_parse(s.ctx(), o.text.c_str()), o, text_term);
  if (cmd == "translate")
    return finish(s, sdm_translate(s.ctx(), o.text.c_str()), o, text_term);
  if (cmd == "check-algebra") {
    sdm_algebra* a = load_algebra(s, o, &st);
    sdm_algebra_free(a);
    return finish(s, st, o, text_check_algebra);
  }
  if (cmd == "kernel" || cmd == "heterogenize" || cmd == "validate") {
    sdm_algebra* a = load_algebra(s, o, &st);
    if (!a) return finish(s, st, o, text_check_algebra);
    if (cmd == "kernel")
      st = sdm_algebra_kernel(s.ctx(), a);
    else if (cmd == "heterogenize")
      st = sdm_algebra_heterogenize(s.ctx(), a);
    else
      st = sdm_validate(s.ctx(), a, o.text.c_str());
    sdm_algebra_free(a);
    if (cmd == "heterogenize") {
      if (st == SDM_OK && !o.out.empty()) write_file(o.out, s.result().dump(2));
      return finish(s, st, o, [](const Json& j, const Options&) {
        std::cout << j.dump(2) << "\n";
      });
    }
    return finish(s, st, o, cmd == "kernel" ? text_kernel : text_validate);
  }
  if (cmd == "enumerate")
    return finish(s, sdm_enumerate(s.ctx(), o.max_size, o.variety.c_str()), o,
                  text_enumerate);
  if (cmd == "prove") {
    sdm_proof* p = nullptr;
    st = sdm_prove(s.ctx(), o.text.c_str(), o.system.c_str(), o.depth,
                   o.visits, &p);
    if (p && !o.out.empty()) write_file(o.out, s.result()["proof"].dump(2));
    sdm_proof_free(p);
    return finish(s, st, o, text_prove);
  }
  if (cmd == "check-proof") {
    sdm_proof* p = load_proof(s, o.file, &st);
    if (!p) return finish(s, st, o, text_dump);
    st = sdm_proof_check(s.ctx(), p, o.system.c_str());
    sdm_proof_free(p);
    return finish(s, st, o, text_check_proof);
  }
  if (cmd == "reduce-cut") {
    sdm_proof* p = load_proof(s, o.file, &st);
    if (!p) return finish(s, st, o, text_dump);
    sdm_proof* r = nullptr;
    st = sdm_reduce_cut(s.ctx(), p, o.path.c_str(), &r);
    sdm_proof_free(p);
    if (r && !o.out.empty()) write_file(o.out, s.result()["proof"].dump(2));
    sdm_proof_free(r);
    return finish(s, st, o, text_reduce);
  }
  if (cmd == "classify")
    return finish(s, sdm_classify(s.ctx(), o.text.c_str()), o, text_classify);
  if (cmd == "suite")
    return finish(s, sdm_suite(s.ctx(), o.profile.c_str(), o.criterion), o,
                  text_suite);
  throw InputError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi De Morgan display calculus workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto system_opt = [&](CLI::App* c) {
    c->add_option("--system", o.system, "sm, lqm, uqm, dp, ap or ws")
        ->check(CLI::IsMember({"sm", "lqm", "uqm", "dp", "ap", "ws"},
                              CLI::ignore_case));
  };
  auto out_opt = [&](CLI::App* c, const char* what) {
    c->add_option("-o,--out", o.out, what);
  };

  auto* c = app.add_subcommand("parse", "Parse and pretty-print a term or sequent");
  c->add_option("text", o.text)->required();
  c = app.add_subcommand("translate", "Translate a single-type formula or (seq A B)");
  c->add_option("text", o.text)->required();
  c = app.add_subcommand("check-algebra", "Validate an algebra file and report its flags");
  c->add_option("file", o.file, "Algebra JSON, or - for stdin")->required();
  c = app.add_subcommand("kernel", "Kernel of a single-type algebra");
  c->add_option("file", o.file)->required();
  c = app.add_subcommand("heterogenize", "Heterogeneous algebra of a single-type algebra");
  c->add_option("file", o.file)->required();
  out_opt(c, "Also write the algebra JSON here");
  c = app.add_subcommand("validate", "Check a sequent on an algebra");
  c->add_option("file", o.file)->required();
  c->add_option("sequent", o.text)->required();
  c = app.add_subcommand("prove", "Search for a cut-free proof");
  c->add_option("sequent", o.text)->required();
  system_opt(c);
  c->add_option("--depth", o.depth, "Maximum proof depth")->check(CLI::PositiveNumber);
  c->add_option("--max-visits", o.visits, "Node budget per search");
  out_opt(c, "Write the proof JSON here");
  c = app.add_subcommand("check-proof", "Check a proof file");
  c->add_option("file", o.file)->required();
  system_opt(c);
  c = app.add_subcommand("reduce-cut", "One principal cut reduction step");
  c->add_option("file", o.file)->required();
  c->add_option("path", o.path, "Premise indices to the cut, e.g. 0.1 (default root)");
  out_opt(c, "Write the reduced proof JSON here");
  c = app.add_subcommand("classify", "Analytic inductive check of (seq lhs rhs)");
  c->add_option("inequality", o.text)->required();
  c = app.add_subcommand("enumerate", "List semi De Morgan algebras up to a size");
  c->add_option("--max-size", o.max_size)->check(CLI::Range(1, 8));
  c->add_option("--variety", o.variety, "e.g. \"DPL WSA\"");
  c = app.add_subcommand("suite", "Run the acceptance battery");
  c->add_option("--profile", o.profile)->check(CLI::IsMember({"quick", "full"}));
  c->add_option("--criterion", o.criterion, "Run one criterion (1-8)")
      ->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::transform(o.system.begin(), o.system.end(), o.system.begin(), ::tolower);
  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const InputError& e) {
    std::cerr << "sdmw: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "sdmw: " << e.what() << "\n";
    return 3;
  }
}
