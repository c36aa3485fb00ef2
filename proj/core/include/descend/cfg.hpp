#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include <descend/ast.hpp>

namespace descend {

using NodeId = std::size_t; // 1-based, program order

// Edge transformer: the effect of moving along a CFG edge.
struct Transfer {
  enum class Kind { Skip, Assign, Assume, Havoc };
  Kind kind = Kind::Skip;
  std::size_t var = 0;      // Assign/Havoc
  ExprRef expr;             // Assign
  std::optional<Cond> cond; // Assume

  static Transfer skip() { return {}; }
  static Transfer assign(std::size_t var, ExprRef e) {
    Transfer t;
    t.kind = Kind::Assign;
    t.var = var;
    t.expr = std::move(e);
    return t;
  }
  static Transfer assume(Cond c) {
    Transfer t;
    t.kind = Kind::Assume;
    t.cond = std::move(c);
    return t;
  }
  static Transfer havoc(std::size_t var) {
    Transfer t;
    t.kind = Kind::Havoc;
    t.var = var;
    return t;
  }

  std::string render(const std::vector<std::string> &vars) const;
};

struct Edge {
  NodeId src;
  NodeId dst;
  Transfer transfer;
};

// Control-flow graph over the control points of a program. Nodes are
// numbered 1..n in program order; node 1 is the entry (no
// predecessors) and the program's final control point is the exit.
struct Cfg {
  std::shared_ptr<const Program> program;
  std::size_t num_nodes = 0;
  NodeId entry = 1;
  NodeId exit = 1;
  std::vector<Edge> edges;                     // creation order
  std::vector<std::vector<std::size_t>> in_edges;  // node -> edge indices
  std::vector<std::vector<std::size_t>> out_edges; // node -> edge indices

  std::string label(NodeId n) const { return "x" + std::to_string(n); }
  const std::vector<std::string> &vars() const { return program->vars; }
};

Cfg build_cfg(std::shared_ptr<const Program> program);

// Targets of depth-first back edges from the entry; at least one node
// on every cycle.
std::set<NodeId> select_widening_points(const Cfg &cfg);

std::string to_dot(const Cfg &cfg);

} // namespace descend
