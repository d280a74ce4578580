#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zcheck/core.hpp"
#include "zcheck/lexicon.hpp"

namespace zcheck {

enum class Rule { Map, NForm, EuForm, CuForm, CuElim };

std::string rule_name(Rule r);  // "MAP", "n-Form", "EU-Form", "CU-Form", "CU-Elim"

// A tree of rule applications justifying its conclusion.
//
// Shapes produced by the checker:
//   MAP      zero premises; an atom's order judgment or a lexical
//            restriction membership b : r
//   EU-Form  zero premises; side condition: the universe is declared
//   CU-Form  one EU-Form premise for the head universe and one per
//            argument universe
//   CU-Elim  the CU-Form derivation, then one membership premise per
//            restricted position in ascending order
//   n-Form   one premise per immediate subterm (the head's judgment at its
//            occurrence order, then each argument's derivation), then the
//            CU-Elim derivation for the application
struct Derivation {
  Judgment conclusion;
  Rule rule;
  std::vector<Derivation> premises;
};

enum class FailureKind {
  UnknownMorpheme,
  NoRule,
  ArityMismatch,
  UniverseMismatch,
  RestrictionViolation,
};

std::string failure_kind_name(FailureKind k);

struct RestrictionViolationDetail {
  std::string head_surface;
  std::size_t position = 0;
  std::string required;             // restriction id imposed at the position
  std::string argument;             // rendered argument term
  std::set<std::string> argument_satisfies;  // what the argument can witness
};

struct CheckFailure {
  FailureKind kind;
  std::string subject;  // offending term or token, rendered
  std::string message;
  std::optional<RestrictionViolationDetail> violation;
};

using CheckResult = std::variant<Derivation, CheckFailure>;

bool check_ok(const CheckResult& r);
const Derivation& check_derivation(const CheckResult& r);
const CheckFailure& check_failure(const CheckResult& r);

// Lexical judgment for one token: concludes atom : M_0.
CheckResult check_map(const Lexicon& lex, const std::string& surface);

// Concludes universe_id : M iff the universe is declared.
CheckResult check_eu_form(const Lexicon& lex, const std::string& universe_id);

// Forms the complex universe A(B,...) for an application from the head's
// universe and the arguments' external universes.
CheckResult check_cu_form(const Lexicon& lex, const MTermPtr& t);

// Enforces the head's restriction signature position by position; reports
// the lowest failing position. Includes the CU-Form derivation.
CheckResult check_cu_elim(const Lexicon& lex, const MTermPtr& t);

// Full bottom-up check. Arguments are checked depth-first left to right, so
// the reported failure is the leftmost innermost one. The final conclusion
// is t : M_n with n the term's order.
CheckResult check_term(const Lexicon& lex, const MTermPtr& t);

// Whether a term can witness restriction `restriction_id` in an argument
// position: atoms consult their satisfies set; applications consult the
// universe_satisfies declaration for their external universe when present,
// and otherwise delegate to their first argument.
bool term_satisfies(const Lexicon& lex, const MTerm& t, const std::string& restriction_id);

// The memberships term_satisfies would grant, for diagnostics.
std::set<std::string> effective_satisfies(const Lexicon& lex, const MTerm& t);

// Structural audit: re-checks every node's premises against its rule's
// schema. True for every derivation the checker produces.
bool replay_derivation(const Lexicon& lex, const Derivation& d);

// All well-formed, restriction-respecting terms buildable from the lexicon
// with application nesting at most `depth`, in canonical order. Depth 0
// yields every atom.
std::vector<MTermPtr> enumerate_fragment(const Lexicon& lex, std::size_t depth);

// Pluggable definedness predicate for the projection check.
using RestrictionPredicate =
    std::function<bool(const std::optional<Restriction>&, const Lexicon&)>;

struct AuditViolator {
  std::string surface;
  std::vector<std::size_t> missing_positions;  // empty for Q1 violators
};

// Q1: does every entry of arity >= 1 impose at least one restriction?
// Q2: does every entry that imposes restrictions cover all its positions?
struct AuditReport {
  bool q1 = true;
  std::vector<AuditViolator> q1_violators;
  bool q2 = true;
  std::vector<AuditViolator> q2_violators;
};

AuditReport audit_questions(const Lexicon& lex);

struct Counterexample {
  enum class Direction {
    Missing,   // a suitable position lacks a restriction
    Spurious,  // a restriction appears out of range
  };
  MTermPtr term;
  std::size_t position = 0;
  Direction direction = Direction::Missing;
};

struct CheckedTerm {
  MTermPtr term;
  std::size_t arity = 0;
  std::vector<bool> position_ok;  // positions 1..probe_limit
};

struct TheoremReport {
  std::size_t depth = 0;
  std::size_t probe_limit = 0;  // positions probed: 1..max_arity + 1
  std::vector<CheckedTerm> checked;
  std::vector<Counterexample> counterexamples;
  AuditReport audit;
  bool holds() const { return counterexamples.empty(); }
};

// Checks, for every term x of the fragment up to `depth` and every position
// y in 1..max_arity+1, that y lies in 1..arity(x) exactly when the
// restriction lookup at (x, y) is defined and declared. The arity bound
// applies to the term; one probe past max_arity witnesses the out-of-range
// side. `pred` defaults to p_holds.
TheoremReport verify_projection_theorem(const Lexicon& lex, std::size_t depth,
                                        const RestrictionPredicate& pred = {});

std::string render_check_failure(const CheckFailure& f);

}  // namespace zcheck
