#pragma once
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ast.hpp"
#include "signature.hpp"
#include "sugar.hpp"

namespace quqe {

// ---------- theories ----------

struct Theory {
  Signature sig;
  TheoryMode mode = TheoryMode::EvalFree;
  std::vector<WffPtr> hyps;
};

// Theory files: '//' comments, 'mode ef|general', 'const NAME : TYPE',
// 'def NAME : TYPE := WFF', 'hyp WFF'. In ef mode every hypothesis must be
// evaluation-free and closed; in general mode it must be syntactically closed.
std::optional<Theory> parse_theory(const std::string& text, std::string* err);
std::optional<Theory> load_theory_file(const std::string& path, std::string* err);

// ---------- axiom schemas and rules ----------

using AxiomParam = std::variant<WffPtr, TypePtr>;
using AxiomParams = std::map<std::string, AxiomParam>;

struct KernelError {
  std::string cls;  // diagnostic class, stable across messages
  std::string msg;
};

// Diagnostic classes: UnknownSchema, MissingParam, BadParam, SideCondition,
// NotTautologous, IllegalPath, NoSuchSubterm, NotAnEquation, PremiseMismatch,
// NotAnImplication, BadLineRef, WffMismatch, BadJustification, ParseError,
// MacroFailure, BadHypothesis.

// Instantiates an axiom schema; validates parameter types and the schema's
// syntactic side conditions. Ids: "1".."3", "4.1".."4.10", "5", "6.1".."6.11",
// "7", "8.1", "8.2", "9.1", "9.2", "10.1".."10.3", "11.1".."11.6", "12.1",
// "12.2.1".."12.9.10" (specification clauses).
std::optional<WffPtr> instantiate_axiom(const Signature& sig, const std::string& id,
                                        const AxiomParams& params, KernelError* err);

// Rule 1: from A ~~ B (or A = B, either orientation) and C, replace the
// occurrence of one side at `path` in C by the other side. The path may not
// pass through a quotation body or an abstraction binder; an evaluation's
// designated type is not addressable. Returns the new formula.
std::optional<WffPtr> apply_rule1(const WffPtr& premise, const WffPtr& target,
                                  const Path& path, KernelError* err);

// Rule 2: modus ponens.
std::optional<WffPtr> apply_rule2(const WffPtr& implication, const WffPtr& antecedent,
                                  KernelError* err);

// ---------- proof scripts ----------

// Line grammar:  line N: <wff> ; <justification>
// Justifications:
//   hyp K
//   axiom ID {k=v, ...}        (wff values inline, type values prefixed ':')
//   rule1 I J at PATH          (I: equation line, J: target line)
//   rule2 I J                  (I: implication line, J: antecedent line)
//   macro NAME {k=v, ...}      (line refs as '@K')
// Macros: ugen{x,from}, uinst{from,beta}, beta{x,body,arg},
//   subeq{a,x,b}, conapp2{op,a,b}, nfi{x,b}, wffhood{b}, evalfree{b},
//   cleanseid{b}, litdef{b}.

struct LineDiag {
  int number = 0;
  bool ok = false;
  std::string cls;
  std::string msg;
};

struct CheckReport {
  bool ok = false;
  std::size_t lines = 0;
  std::size_t primitive_steps = 0;  // expanded kernel steps, macros included
  std::vector<LineDiag> diags;
};

CheckReport check_proof_text(const Theory& th, const std::string& text);
CheckReport check_proof_file(const Theory& th, const std::string& path);

// ---------- elaboration (exposed for tests) ----------

// A derivation buffer whose mutating operations all pass through the primitive
// checkers above; MacroFailure is reported via KernelError exceptions.
struct MacroError {
  KernelError e;
};

class ProofBuilder {
 public:
  explicit ProofBuilder(const Signature& sig) : sig_(sig) {}
  const Signature& sig() const { return sig_; }
  const WffPtr& at(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(lines_.size()); }

  int given(const WffPtr& w);  // previously checked fact
  int axiom(const std::string& id, const AxiomParams& ps);
  int taut(const WffPtr& goal);  // axiom 5 at the stated formula
  int mp(int implication, int antecedent);
  int rule1(int premise, int target, const Path& path);

 private:
  const Signature& sig_;
  std::vector<WffPtr> lines_;
};

// Derived-step helpers; each returns the index of the concluding line.
int prove_conj(ProofBuilder& b, const std::vector<int>& parts);
int prove_defined(ProofBuilder& b, const WffPtr& w);
int prove_lit_defined(ProofBuilder& b, const WffPtr& represented);

struct BetaResult {
  int line;      // proves redex ~~ value (or redex = value)
  WffPtr value;
  bool is_eq;
};
BetaResult derive_beta(ProofBuilder& b, const WffPtr& x, const WffPtr& body,
                       const WffPtr& arg, int arg_defined);

int derive_nfi(ProofBuilder& b, const WffPtr& v, const WffPtr& w, bool quote_form);
int derive_varpred(ProofBuilder& b, const WffPtr& x);
int derive_wffpred(ProofBuilder& b, const WffPtr& w);
int derive_evalfree_lit(ProofBuilder& b, const WffPtr& w);
int derive_efpred(ProofBuilder& b, const WffPtr& w);
int derive_synclosed_quot(ProofBuilder& b, const WffPtr& quoted);
int derive_cleanse_id(ProofBuilder& b, const WffPtr& w);

struct SubResult {
  int line;      // proves sub E(a) E(x) E(bw) = E(value)
  WffPtr value;
};
SubResult derive_sub_equation(ProofBuilder& b, const WffPtr& a, const WffPtr& x,
                              const WffPtr& bw);

int derive_ugen(ProofBuilder& b, const WffPtr& x, int from);
int derive_uinst(ProofBuilder& b, int forall_line, int beta_line);
int derive_conapp2(ProofBuilder& b, const WffPtr& op, const WffPtr& aw,
                   const WffPtr& bw);

}  // namespace quqe
