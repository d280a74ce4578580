#include "zcheck/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zcheck/lexicon.hpp"

namespace zcheck {

MTermPtr MTerm::atom(const LexEntry& entry) {
  auto t = std::shared_ptr<MTerm>(new MTerm());
  t->entry_ = &entry;
  t->order_ = 0;
  return t;
}

static std::size_t app_order(const std::vector<MTermPtr>& args) {
  std::size_t highest = 0;
  for (const auto& a : args) highest = std::max(highest, a->order());
  return highest + 1;
}

MTermPtr MTerm::app(MTermPtr head, std::vector<MTermPtr> args) {
  if (!head) throw std::invalid_argument("application needs a head");
  if (args.empty()) throw std::invalid_argument("application needs at least one argument");
  if (!head->is_atom() || head->entry().arity != args.size()) {
    throw std::invalid_argument("head arity does not match argument count");
  }
  return app_unchecked(std::move(head), std::move(args));
}

MTermPtr MTerm::app_unchecked(MTermPtr head, std::vector<MTermPtr> args) {
  if (!head || args.empty()) {
    throw std::invalid_argument("application needs a head and at least one argument");
  }
  auto t = std::shared_ptr<MTerm>(new MTerm());
  t->order_ = app_order(args);
  t->head_ = std::move(head);
  t->args_ = std::move(args);
  return t;
}

std::size_t order_of(const MTerm& t) {
  if (t.is_atom()) return 0;
  std::size_t highest = 0;
  for (const auto& a : t.args()) highest = std::max(highest, order_of(*a));
  return highest + 1;
}

std::size_t arity_of(const MTerm& t) {
  return t.is_atom() ? t.entry().arity : 0;
}

std::optional<Restriction> restriction_at(const MTerm& t, std::size_t position,
                                          const Lexicon& lex) {
  if (!t.is_atom()) return std::nullopt;
  auto it = t.entry().signature.find(position);
  if (it == t.entry().signature.end()) return std::nullopt;
  if (const Restriction* r = lex.find_restriction(it->second)) return *r;
  return Restriction{it->second, ""};
}

bool p_holds(const std::optional<Restriction>& r, const Lexicon& lex) {
  return r.has_value() && lex.find_restriction(r->id) != nullptr;
}

std::string render_term(const MTerm& t) {
  if (t.is_atom()) return t.entry().surface;
  std::ostringstream out;
  out << render_term(*t.head()) << '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out << ',';
    first = false;
    out << render_term(*a);
  }
  out << ')';
  return out.str();
}

int compare_terms(const MTerm& a, const MTerm& b) {
  if (a.is_atom() && b.is_atom()) {
    return a.entry().surface.compare(b.entry().surface);
  }
  // Atoms sort before applications with the same head surface.
  const MTerm& head_a = a.is_atom() ? a : *a.head();
  const MTerm& head_b = b.is_atom() ? b : *b.head();
  if (int c = compare_terms(head_a, head_b); c != 0) return c;
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
  const auto args_a = a.args();
  const auto args_b = b.args();
  if (args_a.size() != args_b.size()) return args_a.size() < args_b.size() ? -1 : 1;
  for (std::size_t i = 0; i < args_a.size(); ++i) {
    if (int c = compare_terms(*args_a[i], *args_b[i]); c != 0) return c;
  }
  return 0;
}

bool term_equal(const MTerm& a, const MTerm& b) { return compare_terms(a, b) == 0; }

std::string render_judgment(const Judgment& j) {
  std::ostringstream out;
  if (const auto* oj = std::get_if<OrderJudgment>(&j)) {
    out << render_term(*oj->term) << " : M_" << oj->order;
  } else if (const auto* uj = std::get_if<UniverseJudgment>(&j)) {
    out << uj->universe << " : M";
  } else if (const auto* cj = std::get_if<ComplexUniverseJudgment>(&j)) {
    out << cj->head_universe << '(';
    for (std::size_t i = 0; i < cj->arg_universes.size(); ++i) {
      if (i) out << ',';
      out << cj->arg_universes[i];
    }
    out << ") : M";
  } else {
    const auto& mj = std::get<MembershipJudgment>(j);
    out << render_term(*mj.term) << " : " << mj.restriction;
  }
  return out.str();
}

}  // namespace zcheck
