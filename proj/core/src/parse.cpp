#include <descend/parse.hpp>

#include <cctype>
#include <map>
#include <utility>

namespace descend {

namespace {

enum class Tok {
  End,
  Ident,
  Number,
  KwInt,
  KwWhile,
  KwIf,
  KwElse,
  KwHavoc,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semi,
  Assign,
  Plus,
  Minus,
  Star,
  Lt,
  Le,
  Gt,
  Ge,
  EqEq,
  Ne,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string &src) : src_(src) {}

  Token next() {
    skip_trivia();
    int line = line_, col = col_;
    if (eof()) return {Tok::End, "", line, col};
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        id += advance();
      static const std::map<std::string, Tok> keywords = {
          {"int", Tok::KwInt},
          {"while", Tok::KwWhile},
          {"if", Tok::KwIf},
          {"else", Tok::KwElse},
          {"havoc", Tok::KwHavoc},
      };
      auto it = keywords.find(id);
      return {it == keywords.end() ? Tok::Ident : it->second, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
        num += advance();
      return {Tok::Number, num, line, col};
    }
    advance();
    switch (c) {
    case '(': return {Tok::LParen, "(", line, col};
    case ')': return {Tok::RParen, ")", line, col};
    case '{': return {Tok::LBrace, "{", line, col};
    case '}': return {Tok::RBrace, "}", line, col};
    case ';': return {Tok::Semi, ";", line, col};
    case '+': return {Tok::Plus, "+", line, col};
    case '-': return {Tok::Minus, "-", line, col};
    case '*': return {Tok::Star, "*", line, col};
    case '=':
      if (match('=')) return {Tok::EqEq, "==", line, col};
      return {Tok::Assign, "=", line, col};
    case '<':
      if (match('=')) return {Tok::Le, "<=", line, col};
      return {Tok::Lt, "<", line, col};
    case '>':
      if (match('=')) return {Tok::Ge, ">=", line, col};
      return {Tok::Gt, ">", line, col};
    case '!':
      if (match('=')) return {Tok::Ne, "!=", line, col};
      throw ParseError(line, col, "stray '!'");
    default:
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool match(char want) {
    if (eof() || peek() != want) return false;
    advance();
    return true;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        int line = line_, col = col_;
        advance();
        advance();
        while (true) {
          if (eof()) throw ParseError(line, col, "unterminated block comment");
          char d = advance();
          if (d == '*' && !eof() && peek() == '/') {
            advance();
            break;
          }
        }
      } else {
        break;
      }
    }
  }

  const std::string &src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string &src) : lexer_(src) { bump(); }

  std::shared_ptr<const Program> run() {
    auto prog = std::make_shared<Program>();
    prog_ = prog.get();
    while (cur_.kind != Tok::End) prog->body.push_back(statement());
    prog_ = nullptr;
    return prog;
  }

private:
  void bump() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(cur_.line, cur_.col, msg);
  }

  Token expect(Tok kind, const char *what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what);
    Token t = cur_;
    bump();
    return t;
  }

  std::size_t lookup_var(const Token &name) const {
    std::size_t i = prog_->var_index(name.text);
    if (i == prog_->vars.size())
      throw ParseError(name.line, name.col, "undeclared variable '" + name.text + "'");
    return i;
  }

  StmtPtr statement() {
    switch (cur_.kind) {
    case Tok::KwInt: {
      bump();
      Token name = expect(Tok::Ident, "variable name");
      if (prog_->var_index(name.text) != prog_->vars.size())
        throw ParseError(name.line, name.col, "redeclared variable '" + name.text + "'");
      prog_->vars.push_back(name.text);
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Decl;
      s->var = prog_->vars.size() - 1;
      if (cur_.kind == Tok::Assign) {
        bump();
        s->expr = expression();
      }
      expect(Tok::Semi, "';'");
      return s;
    }
    case Tok::Ident: {
      Token name = cur_;
      bump();
      std::size_t var = lookup_var(name);
      expect(Tok::Assign, "'='");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Assign;
      s->var = var;
      s->expr = expression();
      expect(Tok::Semi, "';'");
      return s;
    }
    case Tok::KwHavoc: {
      bump();
      Token name = expect(Tok::Ident, "variable name");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Havoc;
      s->var = lookup_var(name);
      expect(Tok::Semi, "';'");
      return s;
    }
    case Tok::KwWhile: {
      bump();
      expect(Tok::LParen, "'('");
      Cond c = condition();
      expect(Tok::RParen, "')'");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::While;
      s->cond = c;
      s->children.push_back(statement());
      return s;
    }
    case Tok::KwIf: {
      bump();
      expect(Tok::LParen, "'('");
      Cond c = condition();
      expect(Tok::RParen, "')'");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::If;
      s->cond = c;
      s->children.push_back(statement());
      if (cur_.kind == Tok::KwElse) {
        bump();
        s->children.push_back(statement());
      }
      return s;
    }
    case Tok::LBrace: {
      bump();
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Block;
      while (cur_.kind != Tok::RBrace) {
        if (cur_.kind == Tok::End) fail("expected '}'");
        s->children.push_back(statement());
      }
      bump();
      return s;
    }
    case Tok::Semi: {
      bump();
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Skip;
      return s;
    }
    default:
      fail("expected a statement");
    }
  }

  Cond condition() {
    ExprRef lhs = expression();
    RelOp op;
    switch (cur_.kind) {
    case Tok::Lt: op = RelOp::Lt; break;
    case Tok::Le: op = RelOp::Le; break;
    case Tok::Gt: op = RelOp::Gt; break;
    case Tok::Ge: op = RelOp::Ge; break;
    case Tok::EqEq: op = RelOp::Eq; break;
    case Tok::Ne: op = RelOp::Ne; break;
    default: fail("expected a comparison operator");
    }
    bump();
    return {std::move(lhs), op, expression()};
  }

  ExprRef expression() {
    ExprRef e = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      auto k = cur_.kind == Tok::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      bump();
      e = make_binary(k, e, term());
    }
    return e;
  }

  ExprRef term() {
    ExprRef e = factor();
    while (cur_.kind == Tok::Star) {
      bump();
      e = make_binary(ExprNode::Kind::Mul, e, factor());
    }
    return e;
  }

  ExprRef factor() {
    switch (cur_.kind) {
    case Tok::Number: {
      BigInt n(cur_.text);
      bump();
      return make_const(std::move(n));
    }
    case Tok::Ident: {
      Token name = cur_;
      bump();
      return make_var(lookup_var(name));
    }
    case Tok::LParen: {
      bump();
      ExprRef e = expression();
      expect(Tok::RParen, "')'");
      return e;
    }
    case Tok::Minus: {
      bump();
      return make_neg(factor());
    }
    default:
      fail("expected an expression");
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0, 0};
  Program *prog_ = nullptr;
};

} // namespace

std::shared_ptr<const Program> parse(const std::string &source) {
  return Parser(source).run();
}

// --- rendering and structural comparison ---

namespace {

int precedence(ExprNode::Kind k) {
  switch (k) {
  case ExprNode::Kind::Add:
  case ExprNode::Kind::Sub: return 1;
  case ExprNode::Kind::Mul: return 2;
  default: return 3;
  }
}

void render_expr(const ExprNode &e, const std::vector<std::string> &vars,
                 std::string &out) {
  auto child = [&](const ExprNode &c, bool parens) {
    if (parens) out += "(";
    render_expr(c, vars, out);
    if (parens) out += ")";
  };
  switch (e.kind) {
  case ExprNode::Kind::Const: out += e.value.str(); break;
  case ExprNode::Kind::Var: out += vars[e.var]; break;
  case ExprNode::Kind::Neg:
    out += "-";
    child(*e.lhs, precedence(e.lhs->kind) < 3);
    break;
  default: {
    const char *op = e.kind == ExprNode::Kind::Add   ? " + "
                     : e.kind == ExprNode::Kind::Sub ? " - "
                                                     : " * ";
    int p = precedence(e.kind);
    child(*e.lhs, precedence(e.lhs->kind) < p);
    out += op;
    // Right child needs parens at equal precedence since - and the
    // renderer's shapes are left-associative.
    child(*e.rhs, precedence(e.rhs->kind) <= p);
    break;
  }
  }
}

void render_stmt(const Stmt &s, const std::vector<std::string> &vars, int indent,
                 std::string &out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (s.kind) {
  case Stmt::Kind::Decl:
    out += pad + "int " + vars[s.var];
    if (s.expr) out += " = " + render(*s.expr, vars);
    out += ";\n";
    break;
  case Stmt::Kind::Assign:
    out += pad + vars[s.var] + " = " + render(*s.expr, vars) + ";\n";
    break;
  case Stmt::Kind::Havoc:
    out += pad + "havoc " + vars[s.var] + ";\n";
    break;
  case Stmt::Kind::While:
    out += pad + "while (" + render(*s.cond, vars) + ")\n";
    render_stmt(*s.children[0], vars, indent + 1, out);
    break;
  case Stmt::Kind::If:
    out += pad + "if (" + render(*s.cond, vars) + ")\n";
    render_stmt(*s.children[0], vars, indent + 1, out);
    if (s.children.size() > 1) {
      out += pad + "else\n";
      render_stmt(*s.children[1], vars, indent + 1, out);
    }
    break;
  case Stmt::Kind::Block:
    out += pad + "{\n";
    for (const auto &c : s.children) render_stmt(*c, vars, indent + 1, out);
    out += pad + "}\n";
    break;
  case Stmt::Kind::Skip:
    out += pad + ";\n";
    break;
  }
}

bool expr_equal(const ExprNode &a, const ExprNode &b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
  case ExprNode::Kind::Const: return a.value == b.value;
  case ExprNode::Kind::Var: return a.var == b.var;
  case ExprNode::Kind::Neg: return expr_equal(*a.lhs, *b.lhs);
  default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
}

bool stmt_equal(const Stmt &a, const Stmt &b) {
  if (a.kind != b.kind || a.var != b.var) return false;
  if ((a.expr == nullptr) != (b.expr == nullptr)) return false;
  if (a.expr && !expr_equal(*a.expr, *b.expr)) return false;
  if (a.cond.has_value() != b.cond.has_value()) return false;
  if (a.cond) {
    if (a.cond->op != b.cond->op || !expr_equal(*a.cond->lhs, *b.cond->lhs) ||
        !expr_equal(*a.cond->rhs, *b.cond->rhs))
      return false;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!stmt_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

} // namespace

std::string render(const ExprNode &e, const std::vector<std::string> &vars) {
  std::string out;
  render_expr(e, vars, out);
  return out;
}

std::string render(const Cond &c, const std::vector<std::string> &vars) {
  return render(*c.lhs, vars) + " " + rel_op_text(c.op) + " " + render(*c.rhs, vars);
}

std::string render(const Program &p) {
  std::string out;
  for (const auto &s : p.body) render_stmt(*s, p.vars, 0, out);
  return out;
}

bool structurally_equal(const Program &a, const Program &b) {
  if (a.vars != b.vars || a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!stmt_equal(*a.body[i], *b.body[i])) return false;
  return true;
}

} // namespace descend
