#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zcheck/core.hpp"

namespace zcheck {

// States which category modifies which: a head of `head_universe` consumes
// adjacent constituents of `arg_universes` (in order, on either side of the
// head) and the result exposes `external_universe` for further composition.
// Higher precedence binds first.
struct HeadRule {
  int precedence = 0;
  std::string head_universe;
  std::vector<std::string> arg_universes;
  std::string external_universe;
  bool operator==(const HeadRule&) const = default;
};

inline constexpr std::size_t kDefaultMaxArity = 14;

// Immutable after load; freely shareable across concurrent readers.
class Lexicon {
 public:
  std::map<std::string, Restriction> restrictions;
  std::map<std::string, ElementaryUniverse> universes;
  std::map<std::string, LexEntry> entries;  // keyed by surface form
  std::vector<HeadRule> head_rules;         // canonical order, see below
  // Default restriction memberships for complex terms, by external universe.
  std::map<std::string, std::set<std::string>> universe_satisfies;
  std::size_t max_arity = kDefaultMaxArity;

  const LexEntry* find_entry(const std::string& surface) const;
  const Restriction* find_restriction(const std::string& id) const;
  bool has_universe(const std::string& id) const;

  // Exact match on (head_universe, arg_universes). Validation guarantees at
  // most one; on unvalidated values the first in canonical order wins.
  const HeadRule* find_rule(const std::string& head_universe,
                            const std::vector<std::string>& arg_universes) const;

  bool operator==(const Lexicon&) const = default;
};

// Rules sort by precedence (descending), then head, arguments, external.
bool head_rule_less(const HeadRule& a, const HeadRule& b);

// The category a term exposes for further composition: the entry's universe
// for atoms, the matching head rule's external universe for applications.
// Empty when some application has no matching rule.
std::optional<std::string> external_universe_of(const MTerm& t, const Lexicon& lex);

struct LoadError {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, best effort for semantic errors
  std::string message;
};

struct Violation {
  std::string invariant;  // stable id, e.g. "dangling-restriction"
  std::string subject;    // offending declaration, e.g. entry "red"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct LoadResult {
  // Present whenever the text was syntactically well formed, even if
  // validation rejected it; absent only on syntax or duplicate errors.
  std::optional<Lexicon> lexicon;
  std::vector<LoadError> errors;  // empty iff the lexicon was accepted
  ValidationReport validation;    // violations found on the constructed value
  bool ok() const { return errors.empty(); }
};

// Parses and validates lexicon text. Line-oriented format, one declaration
// per line, `#` starts a comment outside quotes, blank lines ignored:
//
//   option max_arity <n>
//   restriction <Id> : "<gloss>"
//   universe <Id> : "<gloss>"
//   universe_satisfies <UniverseId> {<RestrictionId>, ...}
//   entry "<surface>" : <UniverseId> / arity <n>
//         [/ restricts <pos> -> <RestrictionId>, ...]
//         [/ satisfies {<RestrictionId>, ...}]
//   headrule <precedence> : <UniverseId> ( <UniverseId>, ... ) => <UniverseId>
//
// Declaration kinds may reference each other in any order. Loading the same
// text twice yields equal lexicons.
LoadResult load_lexicon(const std::string& text);
LoadResult load_lexicon(std::istream& in);
LoadResult load_lexicon_file(const std::string& path);

// Re-runs every structural invariant on an in-memory lexicon. Loading
// accepts a text iff this report is empty on the constructed value.
ValidationReport validate_lexicon(const Lexicon& lex);

// Canonical text form: declarations sorted by kind then id. Reparses to an
// equal lexicon, and serializing that reload is byte-identical.
std::string serialize_lexicon(const Lexicon& lex);

}  // namespace zcheck
