// Command line front end; talks to the kernel through the C API only.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "../include/quqe.h"

using nlohmann::json;

namespace {

struct Opts {
  std::string theory;
  std::string mode = "ef";
  bool as_json = false;
  bool expand_sugar = false;
  long fuel = 100000;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { quqe_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

quqe_theory* open_theory(const Opts& o) {
  Owned err;
  quqe_theory* th = nullptr;
  int rc;
  if (!o.theory.empty()) {
    rc = quqe_theory_load_file(o.theory.c_str(), &th, &err.p);
  } else if (o.mode == "general") {
    rc = quqe_theory_load_text("mode general\n", &th, &err.p);
  } else {
    rc = quqe_theory_create(&th, &err.p);
  }
  if (rc != 0) {
    std::cerr << "error: " << err.str() << "\n";
    std::exit(3);
  }
  quqe_set_fuel(th, o.fuel);
  quqe_set_expand_sugar(th, o.expand_sugar ? 1 : 0);
  return th;
}

int emit(const Opts& o, int rc, const std::string& kind, const Owned& out,
         const Owned& err) {
  if (o.as_json) {
    json j = {{"status", rc}, {"kind", kind}};
    if (out.p) j["result"] = out.str();
    if (err.p) j["error"] = err.str();
    std::cout << j.dump() << "\n";
  } else {
    if (out.p) std::cout << out.str() << "\n";
    if (err.p) std::cerr << "error: " << err.str() << "\n";
  }
  return rc;
}

int run_status_word(const Opts& o, int rc, const std::string& kind,
                    const char* words[4]) {
  Owned none;
  if (o.as_json) {
    json j = {{"status", rc}, {"kind", kind}, {"result", words[rc]}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << words[rc] << "\n";
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker and rewrite engine for a logic with quotation and "
               "evaluation"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--theory", o.theory, "theory file (.quqe)");
  app.add_option("--mode", o.mode, "mode of the empty theory: ef|general")
      ->check(CLI::IsMember({"ef", "general"}));
  app.add_option("--fuel", o.fuel, "normalization fuel");
  app.add_flag("--json", o.as_json, "machine readable output");
  app.add_flag("--expand-sugar", o.expand_sugar,
               "print raw kernel structure, no abbreviations");

  std::string w1, w2, w3;
  auto* c_check = app.add_subcommand("check-wff", "parse and validate a wff");
  c_check->add_option("wff", w1)->required();
  auto* c_ty = app.add_subcommand("typecheck", "print the type of a wff");
  c_ty->add_option("wff", w1)->required();
  auto* c_norm = app.add_subcommand("normalize", "normalize a wff");
  c_norm->add_option("wff", w1)->required();
  auto* c_quote = app.add_subcommand("quote", "canonical construction of a wff");
  c_quote->add_option("wff", w1)->required();
  auto* c_eval = app.add_subcommand("eval", "evaluate a type-eps wff");
  c_eval->add_option("wff", w1)->required();
  auto* c_sub = app.add_subcommand("sub", "substitute A for variable X in D");
  c_sub->add_option("a", w1)->required();
  c_sub->add_option("x", w2)->required();
  c_sub->add_option("d", w3)->required();
  auto* c_cl = app.add_subcommand("cleanse", "strip evaluations from a wff");
  c_cl->add_option("d", w1)->required();
  auto* c_nfi = app.add_subcommand("not-free-in", "is X not free in D");
  c_nfi->add_option("x", w1)->required();
  c_nfi->add_option("d", w2)->required();
  auto* c_taut = app.add_subcommand("taut", "propositional tautology check");
  c_taut->add_option("wff", w1)->required();
  auto* c_prove = app.add_subcommand("prove", "check a proof script (.qpf)");
  c_prove->add_option("file", w1)->required();
  auto* c_demo = app.add_subcommand("demo", "run a small demonstration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 3;
  }

  quqe_theory* th = open_theory(o);
  int rc = 3;
  Owned out, err;
  if (c_check->parsed()) {
    rc = emit(o, quqe_check_wff(th, w1.c_str(), &out.p, &err.p), "wff", out, err);
  } else if (c_ty->parsed()) {
    rc = emit(o, quqe_typecheck(th, w1.c_str(), &out.p, &err.p), "type", out, err);
  } else if (c_norm->parsed()) {
    rc = emit(o, quqe_normalize(th, w1.c_str(), &out.p, &err.p), "normal-form",
              out, err);
  } else if (c_quote->parsed()) {
    rc = emit(o, quqe_quote(th, w1.c_str(), &out.p, &err.p), "construction",
              out, err);
  } else if (c_eval->parsed()) {
    int s = quqe_eval(th, w1.c_str(), &out.p, &err.p);
    if (!out.p && !err.p && s != 0) {
      static const char* words[4] = {"", "undefined", "unknown", "error"};
      rc = run_status_word(o, s, "evaluation", words);
    } else {
      rc = emit(o, s, "evaluation", out, err);
    }
  } else if (c_sub->parsed()) {
    int s = quqe_sub(th, w1.c_str(), w2.c_str(), w3.c_str(), &out.p, &err.p);
    if (!out.p && !err.p && s != 0) {
      static const char* words[4] = {"", "undefined", "unknown", "error"};
      rc = run_status_word(o, s, "substitution", words);
    } else {
      rc = emit(o, s, "substitution", out, err);
    }
  } else if (c_cl->parsed()) {
    int s = quqe_cleanse(th, w1.c_str(), &out.p, &err.p);
    if (!out.p && !err.p && s != 0) {
      static const char* words[4] = {"", "undefined", "unknown", "error"};
      rc = run_status_word(o, s, "cleanse", words);
    } else {
      rc = emit(o, s, "cleanse", out, err);
    }
  } else if (c_nfi->parsed()) {
    int s = quqe_not_free_in(th, w1.c_str(), w2.c_str(), &err.p);
    if (err.p) {
      rc = emit(o, s, "not-free-in", out, err);
    } else {
      static const char* words[4] = {"true", "false", "unknown", "error"};
      rc = run_status_word(o, s, "not-free-in", words);
    }
  } else if (c_taut->parsed()) {
    int s = quqe_taut(th, w1.c_str(), &err.p);
    if (err.p) {
      rc = emit(o, s, "taut", out, err);
    } else {
      static const char* words[4] = {"tautologous", "not-tautologous",
                                     "not-propositional", "error"};
      rc = run_status_word(o, s, "taut", words);
    }
  } else if (c_prove->parsed()) {
    int s = quqe_check_proof_file(th, w1.c_str(), &out.p, &err.p);
    if (o.as_json) {
      if (out.p) std::cout << out.str() << "\n";
      if (err.p) std::cerr << "error: " << err.str() << "\n";
      rc = s;
    } else if (out.p) {
      json j = json::parse(out.str());
      std::cout << (j["ok"].get<bool>() ? "accepted" : "REJECTED") << ": "
                << j["lines"].get<std::size_t>() << " lines, "
                << j["primitive_steps"].get<std::size_t>()
                << " primitive steps\n";
      for (const auto& d : j["diagnostics"])
        if (!d["ok"].get<bool>())
          std::cout << "  line " << d["line"].get<int>() << " "
                    << d["class"].get<std::string>() << ": "
                    << d["message"].get<std::string>() << "\n";
      rc = s;
    } else {
      if (err.p) std::cerr << "error: " << err.str() << "\n";
      rc = s;
    }
  } else if (c_demo->parsed()) {
    const char* script = "line 1: T ; axiom 6.2 {c=#Q:((o o) o)}\n";
    Owned rep;
    quqe_check_proof_text(th, script, &rep.p, &err.p);
    std::cout << "proof of T: " << rep.str() << "\n";
    Owned nf;
    quqe_normalize(th, "((\\ x:o . (x:o & T)) (T | F))", &nf.p, nullptr);
    std::cout << "normalize ((\\\\ x:o . (x & T)) (T | F)) = " << nf.str()
              << "\n";
    Owned q;
    quqe_quote(th, "(p:o & q:o)", &q.p, nullptr);
    std::cout << "quote (p & q) = " << q.str() << "\n";
    rc = 0;
  }
  quqe_theory_free(th);
  return rc;
}
