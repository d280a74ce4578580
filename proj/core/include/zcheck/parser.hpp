#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "zcheck/core.hpp"
#include "zcheck/lexicon.hpp"

namespace zcheck {

// Intermediate parser state: a term covering the token span [start, end).
struct Constituent {
  MTermPtr term;
  std::string external_universe;
  std::size_t start = 0;
  std::size_t end = 0;
};

enum class ParseErrorKind {
  UnknownToken,
  NoApplicableRule,
  AmbiguousRules,
  UnbalancedBrackets,
  NoHeadRule,
  ArityMismatch,
  EmptyInput,
};

struct ParseFailure {
  ParseErrorKind kind;
  std::string message;
  // For NoApplicableRule: the constituents the reduction got stuck on.
  std::vector<Constituent> residual;
};

using ParseResult = std::variant<MTermPtr, ParseFailure>;

bool parse_ok(const ParseResult& r);
const MTermPtr& parsed_term(const ParseResult& r);
const ParseFailure& parse_failure(const ParseResult& r);

// Whitespace split.
std::vector<std::string> tokenize(const std::string& text);

// Called with the constituent row after seeding and after every reduction;
// used to observe the span partition.
using ReductionObserver = std::function<void(const std::vector<Constituent>&)>;

// Deterministic reduction: repeatedly pick, among all contiguous windows
// matching some head rule (head adjacent to its arguments, arguments in
// declared order around the head), the applicable rule with the highest
// precedence, breaking ties toward the leftmost and shortest window. Stops
// when a single constituent covers the input.
ParseResult parse(const std::vector<std::string>& tokens, const Lexicon& lex,
                  const ReductionObserver& observe = {});

// Explicit-grouping input mode: "(head arg ...)" builds the application
// structure exactly as bracketed. Head-rule search is bypassed, but each
// bracket's head and argument universes must still match a declared rule.
// A single bare token is accepted and yields its atom.
ParseResult parse_bracketed(const std::string& text, const Lexicon& lex);

// Bracketed spelling of a term's structure: atoms bare, applications
// "(head arg ...)". parse_bracketed of this string rebuilds the term.
std::string induced_bracketing(const MTerm& t);

std::string render_parse_failure(const ParseFailure& f);

}  // namespace zcheck
