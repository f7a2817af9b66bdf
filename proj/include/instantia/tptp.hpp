#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "instantia/clause.hpp"
#include "instantia/grounding.hpp"
#include "instantia/term.hpp"

namespace instantia {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct Problem {
  std::string name = "<memory>";
  std::vector<Clause> clauses;
  std::map<std::string, int> predicates;  // symbol -> arity
  std::map<std::string, int> functions;   // symbol -> arity (constants: 0)
  std::vector<std::string> constants;     // sorted
  bool is_epr = true;
  std::uint64_t next_fresh = 0;  // fresh-variable counter state after parse

  std::vector<Term> constant_terms() const {
    std::vector<Term> out;
    out.reserve(constants.size());
    for (const auto& c : constants) out.push_back(Term::constant(c));
    return out;
  }
};

namespace detail {

inline void record_symbol(std::map<std::string, int>& table, const std::string& sym,
                          int arity, int line, int col) {
  auto [it, inserted] = table.emplace(sym, arity);
  if (!inserted && it->second != arity)
    throw ParseError("arity clash for symbol '" + sym + "': " +
                         std::to_string(it->second) + " vs " + std::to_string(arity),
                     line, col);
}

inline void scan_term(Problem& p, Term t, int line, int col) {
  if (t.is_variable()) return;
  record_symbol(p.functions, t.name(), static_cast<int>(t.arity()), line, col);
  if (t.is_compound()) {
    p.is_epr = false;  // proper function symbol
    for (Term a : t.args()) scan_term(p, a, line, col);
  }
}

}  // namespace detail

/// Recomputes predicates, functions, constants, and the EPR flag from the
/// clause list. Throws ParseError on arity clashes.
inline void recompute_signature(Problem& p) {
  p.predicates.clear();
  p.functions.clear();
  p.constants.clear();
  p.is_epr = true;
  for (const Clause& c : p.clauses) {
    for (const Literal& l : c.literals()) {
      Term atom = l.atom();
      detail::record_symbol(p.predicates, atom.name(),
                            static_cast<int>(atom.arity()), 0, 0);
      for (Term a : atom.args()) detail::scan_term(p, a, 0, 0);
    }
  }
  for (const auto& [sym, arity] : p.functions)
    if (arity == 0) p.constants.push_back(sym);
}

namespace detail {

struct Token {
  enum Kind { Ident, LParen, RParen, Comma, Dot, Pipe, Tilde, End } kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::End, "", line, col};
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ident += advance();
      return {Token::Ident, ident, line, col};
    }
    advance();
    switch (c) {
      case '(': return {Token::LParen, "(", line, col};
      case ')': return {Token::RParen, ")", line, col};
      case ',': return {Token::Comma, ",", line, col};
      case '.': return {Token::Dot, ".", line, col};
      case '|': return {Token::Pipe, "|", line, col};
      case '~': return {Token::Tilde, "~", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class TptpParser {
public:
  explicit TptpParser(std::string_view text) : lexer_(text) { bump(); }

  Problem parse_problem(std::string problem_name) {
    Problem p;
    p.name = std::move(problem_name);
    FreshVars fresh;
    while (tok_.kind != Token::End) {
      expect_ident("cnf");
      expect(Token::LParen);
      std::string clause_name = expect_any_ident("clause name");
      expect(Token::Comma);
      expect_any_ident("role");
      expect(Token::Comma);
      std::vector<Literal> lits = parse_clause_body();
      expect(Token::RParen);
      expect(Token::Dot);
      Clause raw(std::move(lits), static_cast<ClauseId>(p.clauses.size() + 1),
                 ClauseOrigin::input(clause_name));
      vars_.clear();
      p.clauses.push_back(rename_apart(raw, fresh));
    }
    p.next_fresh = fresh.counter();
    recompute_signature(p);
    return p;
  }

  /// A single standalone literal (used for model certificate lines).
  Literal parse_single_literal() {
    Literal l = parse_literal();
    if (tok_.kind != Token::End)
      throw ParseError("trailing input after literal", tok_.line, tok_.col);
    return l;
  }

private:
  void bump() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind) {
    if (tok_.kind != kind)
      throw ParseError("unexpected token '" + tok_.text + "'", tok_.line, tok_.col);
    bump();
  }

  void expect_ident(const std::string& word) {
    if (tok_.kind != Token::Ident || tok_.text != word)
      throw ParseError("expected '" + word + "', got '" + tok_.text + "'",
                       tok_.line, tok_.col);
    bump();
  }

  std::string expect_any_ident(const std::string& what) {
    if (tok_.kind != Token::Ident)
      throw ParseError("expected " + what + ", got '" + tok_.text + "'", tok_.line,
                       tok_.col);
    std::string s = tok_.text;
    bump();
    return s;
  }

  std::vector<Literal> parse_clause_body() {
    // Both `(L | L)` and a bare disjunction are accepted.
    bool parenthesized = false;
    if (tok_.kind == Token::LParen) {
      parenthesized = true;
      bump();
    }
    std::vector<Literal> lits;
    lits.push_back(parse_literal());
    while (tok_.kind == Token::Pipe) {
      bump();
      lits.push_back(parse_literal());
    }
    if (parenthesized) expect(Token::RParen);
    return lits;
  }

  Literal parse_literal() {
    bool positive = true;
    if (tok_.kind == Token::Tilde) {
      positive = false;
      bump();
    }
    if (tok_.kind != Token::Ident)
      throw ParseError("expected predicate, got '" + tok_.text + "'", tok_.line,
                       tok_.col);
    if (!std::isalpha(static_cast<unsigned char>(tok_.text[0])))
      throw ParseError("predicate must start with a letter: '" + tok_.text + "'",
                       tok_.line, tok_.col);
    std::string pred = tok_.text;
    bump();
    std::vector<Term> args = parse_optional_args();
    Term atom = args.empty() ? Term::constant(pred)
                             : Term::compound(pred, std::move(args));
    return Literal(positive, atom);
  }

  std::vector<Term> parse_optional_args() {
    std::vector<Term> args;
    if (tok_.kind != Token::LParen) return args;
    bump();
    args.push_back(parse_term());
    while (tok_.kind == Token::Comma) {
      bump();
      args.push_back(parse_term());
    }
    expect(Token::RParen);
    return args;
  }

  Term parse_term() {
    if (tok_.kind != Token::Ident)
      throw ParseError("expected term, got '" + tok_.text + "'", tok_.line,
                       tok_.col);
    std::string name = tok_.text;
    int line = tok_.line, col = tok_.col;
    if (!std::isalpha(static_cast<unsigned char>(name[0])))
      throw ParseError("term must start with a letter: '" + name + "'", line, col);
    bool is_var = std::isupper(static_cast<unsigned char>(name[0]));
    bump();
    if (is_var) {
      if (tok_.kind == Token::LParen)
        throw ParseError("variable '" + name + "' cannot take arguments", line, col);
      auto [it, inserted] = vars_.emplace(name, Term());
      if (inserted) it->second = Term::variable(name);
      return it->second;
    }
    std::vector<Term> args = parse_optional_args();
    return args.empty() ? Term::constant(name) : Term::compound(name, std::move(args));
  }

  Lexer lexer_;
  Token tok_;
  std::map<std::string, Term> vars_;  // per-clause variable scope
};

}  // namespace detail

inline Problem parse_tptp_cnf(std::string_view text,
                              std::string problem_name = "<memory>") {
  detail::TptpParser parser(text);
  Problem p = parser.parse_problem(std::move(problem_name));
  check_reserved_constant(p.clauses);
  return p;
}

inline Problem parse_tptp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tptp_cnf(buf.str(), path);
}

inline Literal parse_literal_text(std::string_view text) {
  detail::TptpParser parser(text);
  return parser.parse_single_literal();
}

/// Prints with canonical variable names (X1, X2, ... by first occurrence),
/// so a print/parse round trip yields variants of the originals.
inline std::string print_clause_body(const Clause& c) {
  Substitution canon;
  std::size_t next = 1;
  for (Term v : c.variables())
    canon.bind(v, Term::variable("X" + std::to_string(next++)));
  Clause pc = apply(canon, c);
  std::string body = pc.to_string();
  return c.size() > 1 ? "(" + body + ")" : body;
}

inline std::string print_clause_tptp(const Clause& c) {
  std::string label = c.origin().kind == ClauseOrigin::Kind::Input
                          ? c.origin().label
                          : "i" + std::to_string(c.id());
  return "cnf(" + label + ", axiom, " + print_clause_body(c) + ").";
}

inline std::string print_problem_tptp(const Problem& p) {
  std::string out;
  for (const Clause& c : p.clauses) {
    out += print_clause_tptp(c);
    out += "\n";
  }
  return out;
}

}  // namespace instantia
