#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace zcheck {

class Lexicon;

// A named selectional restriction, e.g. Phy "physical entity".
struct Restriction {
  std::string id;
  std::string gloss;
  bool operator==(const Restriction&) const = default;
};

// A basic morphosyntactic category, e.g. A "adjective" or X "core argument".
struct ElementaryUniverse {
  std::string id;
  std::string gloss;
  bool operator==(const ElementaryUniverse&) const = default;
};

// One morpheme of the lexicon. Affix surfaces carry a leading hyphen ("-s").
// `signature` maps 1-based argument positions to the restriction the entry
// imposes there; `satisfies` lists the restrictions the entry can witness
// when it occurs in an argument position.
struct LexEntry {
  std::string surface;
  std::string universe;
  std::size_t arity = 0;
  std::map<std::size_t, std::string> signature;
  std::set<std::string> satisfies;
  bool operator==(const LexEntry&) const = default;
};

class MTerm;
using MTermPtr = std::shared_ptr<const MTerm>;

// A relation formula: a lexical atom, or a head applied to a full argument
// sequence. Atoms borrow their LexEntry from the lexicon that produced them,
// so the lexicon must outlive every term built from it. Terms are immutable
// and safe to share across threads.
class MTerm {
 public:
  static MTermPtr atom(const LexEntry& entry);

  // Requires an atomic head whose declared arity equals args.size() and a
  // nonempty argument list; throws std::invalid_argument otherwise.
  static MTermPtr app(MTermPtr head, std::vector<MTermPtr> args);

  // Same shape, but skips the arity-agreement check. Exists so malformed
  // applications can be constructed and handed to the checker, which must
  // reject them itself.
  static MTermPtr app_unchecked(MTermPtr head, std::vector<MTermPtr> args);

  bool is_atom() const { return entry_ != nullptr; }
  const LexEntry& entry() const { return *entry_; }
  const MTermPtr& head() const { return head_; }
  std::span<const MTermPtr> args() const { return args_; }

  // Cached at construction: 0 for atoms, 1 + max argument order otherwise.
  std::size_t order() const { return order_; }

 private:
  MTerm() = default;
  const LexEntry* entry_ = nullptr;
  MTermPtr head_;
  std::vector<MTermPtr> args_;
  std::size_t order_ = 0;
};

// Recomputes the order bottom-up. Always equals MTerm::order().
std::size_t order_of(const MTerm& t);

// Declared arity for atoms; 0 for applications (every argument place is
// consumed at construction).
std::size_t arity_of(const MTerm& t);

// Partial restriction lookup: defined only on atoms whose signature covers
// `position` (1-based). The lexicon supplies the gloss; an id missing from
// the lexicon still comes back with an empty gloss so the definedness
// predicate can rule on it. Never fails, absence is the answer.
std::optional<Restriction> restriction_at(const MTerm& t, std::size_t position,
                                          const Lexicon& lex);

// Definedness predicate over restriction lookups: present and declared.
bool p_holds(const std::optional<Restriction>& r, const Lexicon& lex);

// Canonical notation head(arg1,arg2).
std::string render_term(const MTerm& t);

// Canonical term order: head surface first, atoms before applications,
// then arguments pairwise. Total on well-formed terms.
int compare_terms(const MTerm& a, const MTerm& b);
bool term_equal(const MTerm& a, const MTerm& b);

// ---- Judgments ----

// t : M_n
struct OrderJudgment {
  MTermPtr term;
  std::size_t order = 0;
};

// T : M
struct UniverseJudgment {
  std::string universe;
};

// A(B,...) : M, a complex universe formed from a head category and the
// categories of its arguments.
struct ComplexUniverseJudgment {
  std::string head_universe;
  std::vector<std::string> arg_universes;
};

// b : r, membership of a term in a restriction.
struct MembershipJudgment {
  MTermPtr term;
  std::string restriction;
};

using Judgment = std::variant<OrderJudgment, UniverseJudgment,
                              ComplexUniverseJudgment, MembershipJudgment>;

std::string render_judgment(const Judgment& j);

}  // namespace zcheck
