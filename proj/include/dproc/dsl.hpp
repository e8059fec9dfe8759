#pragma once

// Text formats for processes (.dproc) and stakeholders (.dstake).
//
// Process files are line oriented; '#' starts a comment:
//
//   process FDAP
//   activities 10                 # declares 1..10, unlabelled
//   activity 11 "Audit contracted"
//   prec 1 2
//   orresp 5 6 7                  # subject, then one or more responders
//   mustexist 4
//
// Stakeholder files hold named boolean expressions, each of which may span
// several lines:
//
//   S1 := contains(4) or contains(5)
//   S3 := (mustexist(6) and (prec(4,6) or prec(5,6))) or not resp(2,3)
//
//   expr   := term ('or' term)*
//   term   := factor ('and' factor)*
//   factor := 'not' factor | '(' expr ')' | atom
//   atom   := contains(a) | mustexist(a) | prec(a,b) | resp(a,b) | succ(a,b)
//           | weakresp(a,b) | orresp(a; b1,b2,...)

#include "dproc/process_model.hpp"
#include "dproc/stakeholder_prefs.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dproc {

/// Diagnostic with a 1-based source location.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string &message() const { return message_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

DeclarativeProcess parse_process(std::string_view text);
std::string serialize_process(const DeclarativeProcess &process);

std::vector<Stakeholder> parse_stakeholders(std::string_view text);
std::string serialize_stakeholders(std::span<const Stakeholder> stakeholders);
std::string serialize_expr(const PreferenceExpr &expr);

} // namespace dproc
