#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include <descend/ast.hpp>

namespace descend {

// Parse failure with a source position; the CLI prints it as
// "file:line:col: message".
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string &msg)
      : std::runtime_error(msg), line(line), col(col) {}
  int line;
  int col;
};

// Parses mini-language source text. Grammar (C-like subset):
//
//   program := stmt*
//   stmt    := "int" ident ("=" expr)? ";"
//            | ident "=" expr ";"
//            | "havoc" ident ";"
//            | "while" "(" cond ")" stmt
//            | "if" "(" cond ")" stmt ("else" stmt)?
//            | "{" stmt* "}"
//            | ";"
//   cond    := expr ("<"|"<="|">"|">="|"=="|"!=") expr
//   expr    := term (("+"|"-") term)*
//   term    := factor ("*" factor)*
//   factor  := integer | ident | "(" expr ")" | "-" factor
//
// Line (//) and block comments are skipped. Variables share one flat
// scope; redeclaration and use before declaration are errors.
std::shared_ptr<const Program> parse(const std::string &source);

} // namespace descend
