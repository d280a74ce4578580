#include "zcheck/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace zcheck {

const LexEntry* Lexicon::find_entry(const std::string& surface) const {
  auto it = entries.find(surface);
  return it == entries.end() ? nullptr : &it->second;
}

const Restriction* Lexicon::find_restriction(const std::string& id) const {
  auto it = restrictions.find(id);
  return it == restrictions.end() ? nullptr : &it->second;
}

bool Lexicon::has_universe(const std::string& id) const {
  return universes.find(id) != universes.end();
}

const HeadRule* Lexicon::find_rule(const std::string& head_universe,
                                   const std::vector<std::string>& arg_universes) const {
  for (const HeadRule& r : head_rules) {
    if (r.head_universe == head_universe && r.arg_universes == arg_universes) return &r;
  }
  return nullptr;
}

bool head_rule_less(const HeadRule& a, const HeadRule& b) {
  if (a.precedence != b.precedence) return a.precedence > b.precedence;
  if (a.head_universe != b.head_universe) return a.head_universe < b.head_universe;
  if (a.arg_universes != b.arg_universes) return a.arg_universes < b.arg_universes;
  return a.external_universe < b.external_universe;
}

std::optional<std::string> external_universe_of(const MTerm& t, const Lexicon& lex) {
  if (t.is_atom()) {
    const LexEntry* e = lex.find_entry(t.entry().surface);
    if (!e) return std::nullopt;
    return e->universe;
  }
  if (!t.head()->is_atom()) return std::nullopt;
  const LexEntry* head = lex.find_entry(t.head()->entry().surface);
  if (!head) return std::nullopt;
  std::vector<std::string> exts;
  exts.reserve(t.args().size());
  for (const auto& a : t.args()) {
    auto ext = external_universe_of(*a, lex);
    if (!ext) return std::nullopt;
    exts.push_back(std::move(*ext));
  }
  const HeadRule* rule = lex.find_rule(head->universe, exts);
  if (!rule) return std::nullopt;
  return rule->external_universe;
}

// ---------------------------------------------------------------------------
// Identifier shapes
// ---------------------------------------------------------------------------

static bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

static bool restriction_id_ok(const std::string& id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) return false;
  return std::all_of(id.begin() + 1, id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

static bool universe_id_ok(const std::string& id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) return false;
  return std::all_of(id.begin() + 1, id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

// ---------------------------------------------------------------------------
// Line scanner
// ---------------------------------------------------------------------------

namespace {

struct SyntaxError {
  std::size_t column;
  std::string message;
};

class LineScanner {
 public:
  explicit LineScanner(const std::string& line) : line_(line) {}

  std::size_t column() const { return pos_ + 1; }

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }

  void expect_end() {
    if (!at_end()) throw SyntaxError{column(), "unexpected trailing input"};
  }

  char peek() {
    skip_ws();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) {
      throw SyntaxError{column(), std::string("expected '") + c + "'"};
    }
  }

  void expect_literal(const std::string& lit) {
    skip_ws();
    if (line_.compare(pos_, lit.size(), lit) != 0) {
      throw SyntaxError{column(), "expected '" + lit + "'"};
    }
    pos_ += lit.size();
  }

  std::string scan_id(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size() && is_id_char(line_[pos_])) ++pos_;
    if (pos_ == start) throw SyntaxError{start + 1, std::string("expected ") + what};
    return line_.substr(start, pos_ - start);
  }

  std::string scan_quoted(const char* what) {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != '"') {
      throw SyntaxError{column(), std::string("expected quoted ") + what};
    }
    std::size_t start = ++pos_;
    while (pos_ < line_.size() && line_[pos_] != '"') ++pos_;
    if (pos_ >= line_.size()) throw SyntaxError{start, "unterminated quote"};
    std::string value = line_.substr(start, pos_ - start);
    ++pos_;
    return value;
  }

  std::size_t scan_nat(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc() || ptr == line_.data() + pos_) {
      throw SyntaxError{start + 1, std::string("expected ") + what};
    }
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }

  int scan_int(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc() || ptr == line_.data() + pos_) {
      throw SyntaxError{start + 1, std::string("expected ") + what};
    }
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }

 private:
  const std::string& line_;
  std::size_t pos_ = 0;
};

// Everything from the first unquoted '#' on is a comment.
std::string strip_comment(const std::string& line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    else if (line[i] == '#' && !in_quote) return line.substr(0, i);
  }
  return line;
}

std::string render_id_set(const std::set<std::string>& ids) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : ids) {
    if (!first) out += ", ";
    first = false;
    out += id;
  }
  out += "}";
  return out;
}

std::string render_head_rule(const HeadRule& r) {
  std::string out = "headrule " + std::to_string(r.precedence) + " : " + r.head_universe + " ( ";
  for (std::size_t i = 0; i < r.arg_universes.size(); ++i) {
    if (i) out += ", ";
    out += r.arg_universes[i];
  }
  out += " ) => " + r.external_universe;
  return out;
}

std::string entry_subject(const std::string& surface) { return "entry \"" + surface + "\""; }

// Source lines per declaration, for mapping validation results back to text.
struct SubjectLines {
  std::map<std::string, std::size_t> lines;

  void note(const std::string& subject, std::size_t line) { lines[subject] = line; }

  std::size_t lookup(const std::string& subject) const {
    auto it = lines.find(subject);
    return it == lines.end() ? 0 : it->second;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport validate_lexicon(const Lexicon& lex) {
  ValidationReport report;
  auto add = [&report](std::string invariant, std::string subject, std::string message) {
    report.violations.push_back({std::move(invariant), std::move(subject), std::move(message)});
  };

  for (const auto& [id, r] : lex.restrictions) {
    (void)r;
    if (!restriction_id_ok(id)) {
      add("id-format", "restriction " + id,
          "restriction id '" + id + "' must match [A-Za-z][A-Za-z0-9_]*");
    }
  }
  for (const auto& [id, u] : lex.universes) {
    (void)u;
    if (!universe_id_ok(id)) {
      add("id-format", "universe " + id,
          "universe id '" + id + "' must match [A-Za-z][A-Za-z0-9_-]*");
    }
    if (lex.restrictions.count(id)) {
      add("namespace-disjoint", "universe " + id,
          "'" + id + "' is declared both as a universe and as a restriction");
    }
  }
  for (const auto& [uid, set] : lex.universe_satisfies) {
    const std::string subject = "universe_satisfies " + uid;
    if (!lex.has_universe(uid)) {
      add("dangling-universe", subject, "universe '" + uid + "' is not declared");
    }
    for (const auto& rid : set) {
      if (!lex.restrictions.count(rid)) {
        add("dangling-restriction", subject, "restriction '" + rid + "' is not declared");
      }
    }
  }
  for (const auto& [surface, e] : lex.entries) {
    const std::string subject = entry_subject(surface);
    if (surface.empty()) {
      add("empty-surface", subject, "entry surface must be nonempty");
    }
    if (!lex.has_universe(e.universe)) {
      add("dangling-universe", subject, "universe '" + e.universe + "' is not declared");
    }
    if (e.arity > lex.max_arity) {
      add("arity-cap", subject,
          "arity " + std::to_string(e.arity) + " exceeds max_arity " +
              std::to_string(lex.max_arity));
    }
    for (const auto& [pos, rid] : e.signature) {
      if (pos < 1 || pos > e.arity) {
        add("signature-position", subject,
            "restricted position " + std::to_string(pos) + " lies outside 1.." +
                std::to_string(e.arity));
      }
      if (!lex.restrictions.count(rid)) {
        add("dangling-restriction", subject, "restriction '" + rid + "' is not declared");
      }
    }
    for (const auto& rid : e.satisfies) {
      if (!lex.restrictions.count(rid)) {
        add("dangling-restriction", subject, "restriction '" + rid + "' is not declared");
      }
    }
  }
  std::map<std::pair<std::string, std::vector<std::string>>, std::size_t> seen_rule_keys;
  for (const HeadRule& r : lex.head_rules) {
    const std::string subject = render_head_rule(r);
    if (r.arg_universes.empty()) {
      add("headrule-args", subject, "head rule needs at least one argument universe");
    }
    if (!lex.has_universe(r.head_universe)) {
      add("dangling-universe", subject, "universe '" + r.head_universe + "' is not declared");
    }
    for (const auto& u : r.arg_universes) {
      if (!lex.has_universe(u)) {
        add("dangling-universe", subject, "universe '" + u + "' is not declared");
      }
    }
    if (!lex.has_universe(r.external_universe)) {
      add("dangling-universe", subject,
          "universe '" + r.external_universe + "' is not declared");
    }
    auto key = std::make_pair(r.head_universe, r.arg_universes);
    if (++seen_rule_keys[key] > 1) {
      add("headrule-conflict", subject,
          "another head rule already covers " + r.head_universe + "(...)" +
              " with the same argument universes");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

LoadResult load_lexicon(const std::string& text) {
  LoadResult result;
  Lexicon lex;
  SubjectLines subjects;
  bool option_seen = false;
  std::size_t option_line = 0;
  std::vector<std::pair<HeadRule, std::size_t>> rules;

  auto error = [&result, &construction_ok](std::size_t line, std::size_t column,
                                           std::string message) {
    construction_ok = false;
    result.errors.push_back({line, column, std::move(message)});
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool construction_ok = true;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    LineScanner scan(line);
    if (scan.at_end()) continue;
    try {
      std::string kind = scan.scan_id("a declaration kind");
      if (kind == "restriction") {
        std::string id = scan.scan_id("a restriction id");
        scan.expect(':');
        std::string gloss = scan.scan_quoted("gloss");
        scan.expect_end();
        if (!lex.restrictions.emplace(id, Restriction{id, gloss}).second) {
          error(lineno, 1, "duplicate declaration: restriction " + id);
        } else {
          subjects.note("restriction " + id, lineno);
        }
      } else if (kind == "universe") {
        std::string id = scan.scan_id("a universe id");
        scan.expect(':');
        std::string gloss = scan.scan_quoted("gloss");
        scan.expect_end();
        if (!lex.universes.emplace(id, ElementaryUniverse{id, gloss}).second) {
          error(lineno, 1, "duplicate declaration: universe " + id);
        } else {
          subjects.note("universe " + id, lineno);
        }
      } else if (kind == "universe_satisfies") {
        std::string id = scan.scan_id("a universe id");
        scan.expect('{');
        std::set<std::string> set;
        do {
          std::string rid = scan.scan_id("a restriction id");
          if (!set.insert(rid).second) {
            throw SyntaxError{scan.column(), "duplicate restriction '" + rid + "' in set"};
          }
        } while (scan.try_consume(','));
        scan.expect('}');
        scan.expect_end();
        if (!lex.universe_satisfies.emplace(id, std::move(set)).second) {
          error(lineno, 1, "duplicate declaration: universe_satisfies " + id);
        } else {
          subjects.note("universe_satisfies " + id, lineno);
        }
      } else if (kind == "entry") {
        std::string surface = scan.scan_quoted("surface form");
        if (surface.empty()) throw SyntaxError{scan.column(), "entry surface must be nonempty"};
        scan.expect(':');
        LexEntry e;
        e.surface = surface;
        e.universe = scan.scan_id("a universe id");
        scan.expect('/');
        scan.expect_literal("arity");
        e.arity = scan.scan_nat("an arity");
        if (scan.try_consume('/')) {
          std::string clause = scan.scan_id("'restricts' or 'satisfies'");
          if (clause == "restricts") {
            do {
              std::size_t pos = scan.scan_nat("a position");
              scan.expect_literal("->");
              std::string rid = scan.scan_id("a restriction id");
              if (!e.signature.emplace(pos, rid).second) {
                throw SyntaxError{scan.column(),
                                  "duplicate position " + std::to_string(pos) + " in restricts"};
              }
            } while (scan.try_consume(','));
            if (scan.try_consume('/')) {
              clause = scan.scan_id("'satisfies'");
              if (clause != "satisfies") throw SyntaxError{scan.column(), "expected 'satisfies'"};
            } else {
              clause.clear();
            }
          }
          if (clause == "satisfies") {
            scan.expect('{');
            do {
              std::string rid = scan.scan_id("a restriction id");
              if (!e.satisfies.insert(rid).second) {
                throw SyntaxError{scan.column(), "duplicate restriction '" + rid + "' in set"};
              }
            } while (scan.try_consume(','));
            scan.expect('}');
          } else if (!clause.empty()) {
            throw SyntaxError{scan.column(), "unknown entry clause '" + clause + "'"};
          }
        }
        scan.expect_end();
        if (!lex.entries.emplace(surface, std::move(e)).second) {
          error(lineno, 1, "duplicate declaration: entry \"" + surface + "\"");
        } else {
          subjects.note(entry_subject(surface), lineno);
        }
      } else if (kind == "headrule") {
        HeadRule r;
        r.precedence = scan.scan_int("a precedence");
        scan.expect(':');
        r.head_universe = scan.scan_id("a universe id");
        scan.expect('(');
        do {
          r.arg_universes.push_back(scan.scan_id("a universe id"));
        } while (scan.try_consume(','));
        scan.expect(')');
        scan.expect_literal("=>");
        r.external_universe = scan.scan_id("a universe id");
        scan.expect_end();
        subjects.note(render_head_rule(r), lineno);
        rules.emplace_back(std::move(r), lineno);
      } else if (kind == "option") {
        std::string name = scan.scan_id("an option name");
        if (name != "max_arity") throw SyntaxError{scan.column(), "unknown option '" + name + "'"};
        std::size_t value = scan.scan_nat("a value");
        scan.expect_end();
        if (option_seen) {
          error(lineno, 1, "duplicate declaration: option max_arity");
        } else {
          option_seen = true;
          option_line = lineno;
          lex.max_arity = value;
          subjects.note("option max_arity", lineno);
        }
      } else {
        throw SyntaxError{1, "unknown declaration kind '" + kind + "'"};
      }
    } catch (const SyntaxError& se) {
      error(lineno, se.column, se.message);
    }
  }
  (void)option_line;

  for (auto& [rule, line] : rules) {
    (void)line;
    lex.head_rules.push_back(std::move(rule));
  }
  std::sort(lex.head_rules.begin(), lex.head_rules.end(), head_rule_less);

  result.validation = validate_lexicon(lex);
  for (const Violation& v : result.validation.violations) {
    std::size_t line = subjects.lookup(v.subject);
    if (v.invariant == "namespace-disjoint") {
      // Either declaration of the clashing pair can go; point at the later one.
      const std::string id = v.subject.substr(std::string("universe ").size());
      line = std::max(subjects.lookup("universe " + id), subjects.lookup("restriction " + id));
    }
    result.errors.push_back({line, 1, v.invariant + ": " + v.subject + ": " + v.message});
  }

  std::stable_sort(result.errors.begin(), result.errors.end(),
                   [](const LoadError& a, const LoadError& b) { return a.line < b.line; });

  result.lexicon = std::move(lex);
  if (!result.errors.empty() && !result.validation.violations.empty() &&
      result.errors.size() != result.validation.violations.size()) {
    // Keep the constructed value available either way; callers gate on ok().
  }
  return result;
}

LoadResult load_lexicon(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str());
}

LoadResult load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    LoadResult result;
    result.errors.push_back({0, 0, "cannot open lexicon file: " + path});
    return result;
  }
  return load_lexicon(in);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string serialize_lexicon(const Lexicon& lex) {
  std::ostringstream out;
  out << "option max_arity " << lex.max_arity << "\n";
  for (const auto& [id, r] : lex.restrictions) {
    out << "restriction " << id << " : \"" << r.gloss << "\"\n";
  }
  for (const auto& [id, u] : lex.universes) {
    out << "universe " << id << " : \"" << u.gloss << "\"\n";
  }
  for (const auto& [id, set] : lex.universe_satisfies) {
    if (set.empty()) continue;  // not expressible; an empty set means absent
    out << "universe_satisfies " << id << " " << render_id_set(set) << "\n";
  }
  for (const auto& [surface, e] : lex.entries) {
    out << "entry \"" << surface << "\" : " << e.universe << " / arity " << e.arity;
    if (!e.signature.empty()) {
      out << " / restricts ";
      bool first = true;
      for (const auto& [pos, rid] : e.signature) {
        if (!first) out << ", ";
        first = false;
        out << pos << " -> " << rid;
      }
    }
    if (!e.satisfies.empty()) {
      out << " / satisfies " << render_id_set(e.satisfies);
    }
    out << "\n";
  }
  for (const HeadRule& r : lex.head_rules) {
    out << render_head_rule(r) << "\n";
  }
  return out.str();
}

}  // namespace zcheck
