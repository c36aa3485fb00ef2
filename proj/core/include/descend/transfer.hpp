#pragma once

#include <descend/cfg.hpp>
#include <descend/env.hpp>
#include <descend/powerset.hpp>

namespace descend {

// Evaluates an expression over a non-bottom environment; D supplies
// constant/add/sub/mul/neg.
template <class D> D eval_expr(const Env<D> &env, const ExprNode &e) {
  switch (e.kind) {
  case ExprNode::Kind::Const: return D::constant(e.value);
  case ExprNode::Kind::Var: return env.get(e.var);
  case ExprNode::Kind::Add: return eval_expr(env, *e.lhs).add(eval_expr(env, *e.rhs));
  case ExprNode::Kind::Sub: return eval_expr(env, *e.lhs).sub(eval_expr(env, *e.rhs));
  case ExprNode::Kind::Mul: return eval_expr(env, *e.lhs).mul(eval_expr(env, *e.rhs));
  case ExprNode::Kind::Neg: return eval_expr(env, *e.lhs).neg();
  }
  return D::top();
}

template <class D> Env<D> env_assign(const Env<D> &env, std::size_t var, const ExprNode &e) {
  if (env.is_bottom()) return env;
  return env.with(var, eval_expr(env, e));
}

template <class D> Env<D> env_havoc(const Env<D> &env, std::size_t var) {
  if (env.is_bottom()) return env;
  return env.with(var, D::top());
}

// Interval refinement for a comparison: each side that is a bare
// variable is intersected with the half-line/point implied by the
// other side's interval value. Anything else (non-variable sides)
// passes through unrefined, which is sound.
inline Box box_assume(const Box &env, const Cond &c) {
  if (env.is_bottom()) return env;
  Box out = env;
  if (c.lhs->kind == ExprNode::Kind::Var) {
    Interval rhs = eval_expr(out, *c.rhs);
    out = out.with(c.lhs->var, refine(out.get(c.lhs->var), c.op, rhs));
    if (out.is_bottom()) return out;
  }
  if (c.rhs->kind == ExprNode::Kind::Var) {
    Interval lhs = eval_expr(out, *c.lhs);
    out = out.with(c.rhs->var, refine(out.get(c.rhs->var), flip(c.op), lhs));
  }
  return out;
}

// Parity tracks no ordering information, so comparisons refine nothing.
inline ParityEnv parity_assume(const ParityEnv &env, const Cond &) { return env; }

inline Box box_transfer(const Box &env, const Transfer &t) {
  switch (t.kind) {
  case Transfer::Kind::Skip: return env;
  case Transfer::Kind::Assign: return env_assign(env, t.var, *t.expr);
  case Transfer::Kind::Assume: return box_assume(env, *t.cond);
  case Transfer::Kind::Havoc: return env_havoc(env, t.var);
  }
  return env;
}

inline ParityEnv parity_transfer(const ParityEnv &env, const Transfer &t) {
  switch (t.kind) {
  case Transfer::Kind::Skip: return env;
  case Transfer::Kind::Assign: return env_assign(env, t.var, *t.expr);
  case Transfer::Kind::Assume: return parity_assume(env, *t.cond);
  case Transfer::Kind::Havoc: return env_havoc(env, t.var);
  }
  return env;
}

// Disjunct-wise lifting to the powerset of boxes.
inline FinitePowerset<Box> pset_transfer(const FinitePowerset<Box> &s, const Transfer &t) {
  return s.transform([&](const Box &b) { return box_transfer(b, t); });
}

// Spec-facing aliases for the box operations.
inline Box box_assign(const Box &env, std::size_t var, const ExprNode &e) {
  return env_assign(env, var, e);
}

} // namespace descend
