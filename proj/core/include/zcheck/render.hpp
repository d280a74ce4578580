#pragma once

#include <set>
#include <string>

#include "zcheck/checker.hpp"
#include "zcheck/lexicon.hpp"

namespace zcheck {

enum class OutputFormat { Text, Records };

// {A, B} with ids sorted.
std::string render_restriction_set(const std::set<std::string>& ids);

// Premises-first tree, two spaces of indent per premise depth, the rule name
// leading each line. The last line is the root, so the output ends with the
// derivation's final rule and conclusion.
std::string render_derivation(const Derivation& d, OutputFormat fmt);

std::string render_theorem_report(const TheoremReport& report, OutputFormat fmt);

std::string render_audit_report(const AuditReport& report, OutputFormat fmt);

std::string render_validation_report(const ValidationReport& report,
                                     const Lexicon* lex, OutputFormat fmt);

std::string render_load_errors(const std::string& path,
                               const std::vector<LoadError>& errors);

}  // namespace zcheck
