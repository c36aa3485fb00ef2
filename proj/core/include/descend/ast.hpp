#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <descend/bigint.hpp>
#include <descend/interval.hpp>

namespace descend {

// Expression tree for the mini language. Nodes are immutable and
// shared between the AST and CFG edge transformers.
struct ExprNode;
using ExprRef = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Const, Var, Add, Sub, Mul, Neg };
  Kind kind;
  BigInt value;        // Const
  std::size_t var = 0; // Var, index into Program::vars
  ExprRef lhs, rhs;    // Add/Sub/Mul; Neg uses lhs only
};

inline ExprRef make_const(BigInt n) {
  return std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::Const, std::move(n)});
}
inline ExprRef make_var(std::size_t i) {
  ExprNode n{ExprNode::Kind::Var, 0};
  n.var = i;
  return std::make_shared<ExprNode>(std::move(n));
}
inline ExprRef make_binary(ExprNode::Kind k, ExprRef a, ExprRef b) {
  ExprNode n{k, 0};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return std::make_shared<ExprNode>(std::move(n));
}
inline ExprRef make_neg(ExprRef a) {
  ExprNode n{ExprNode::Kind::Neg, 0};
  n.lhs = std::move(a);
  return std::make_shared<ExprNode>(std::move(n));
}

// A condition is a single comparison between two expressions.
struct Cond {
  ExprRef lhs;
  RelOp op;
  ExprRef rhs;
};

inline Cond negate(const Cond &c) { return {c.lhs, negate(c.op), c.rhs}; }

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
  enum class Kind { Decl, Assign, Havoc, While, If, Block, Skip };
  Kind kind;
  std::size_t var = 0;           // Decl/Assign/Havoc
  ExprRef expr;                  // Assign, Decl initializer (may be null)
  std::optional<Cond> cond;      // While/If
  std::vector<StmtPtr> children; // While: body; If: then [, else]; Block: all
};

struct Program {
  std::vector<std::string> vars; // declaration order
  std::vector<StmtPtr> body;

  std::size_t var_index(const std::string &name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return vars.size();
  }
};

std::string render(const ExprNode &e, const std::vector<std::string> &vars);
std::string render(const Cond &c, const std::vector<std::string> &vars);

// Source text that reparses to a structurally equal program.
std::string render(const Program &p);

bool structurally_equal(const Program &a, const Program &b);

} // namespace descend
