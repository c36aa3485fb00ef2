#include <descend/cfg.hpp>

#include <cassert>

namespace descend {

std::string Transfer::render(const std::vector<std::string> &vars) const {
  switch (kind) {
  case Kind::Skip: return "skip";
  case Kind::Assign: return vars[var] + " := " + descend::render(*expr, vars);
  case Kind::Assume: return "assume " + descend::render(*cond, vars);
  case Kind::Havoc: return "havoc " + vars[var];
  }
  return "skip";
}

namespace {

// Statements are built with dangling out-edges that the consumer
// attaches to the next control point once it exists. This way branch
// arms and loop bodies flow directly into their continuation (the
// if-join, the loop head, the next statement's node) and no redundant
// join/skip nodes appear; nodes come out numbered in program order.
struct Outflow {
  std::optional<NodeId> at;                      // resting control point
  std::vector<std::pair<NodeId, Transfer>> edges; // pending out-edges
};

class Builder {
public:
  explicit Builder(std::shared_ptr<const Program> program) {
    cfg_.program = std::move(program);
    cfg_.num_nodes = 1; // entry
  }

  Cfg run() {
    Outflow flow{cfg_.entry, {}};
    for (const auto &s : cfg_.program->body) flow = statement(*s, resolve(flow));
    cfg_.exit = resolve(flow);
    cfg_.in_edges.assign(cfg_.num_nodes + 1, {});
    cfg_.out_edges.assign(cfg_.num_nodes + 1, {});
    for (std::size_t i = 0; i < cfg_.edges.size(); ++i) {
      cfg_.out_edges[cfg_.edges[i].src].push_back(i);
      cfg_.in_edges[cfg_.edges[i].dst].push_back(i);
    }
    return std::move(cfg_);
  }

private:
  NodeId fresh() { return ++cfg_.num_nodes; }

  void edge(NodeId src, NodeId dst, Transfer t) {
    cfg_.edges.push_back({src, dst, std::move(t)});
  }

  // Materializes the control point an outflow continues from.
  NodeId resolve(Outflow flow) {
    if (flow.at && flow.edges.empty()) return *flow.at;
    NodeId n = fresh();
    attach(std::move(flow), n);
    return n;
  }

  void attach(Outflow flow, NodeId target) {
    if (flow.at) edge(*flow.at, target, Transfer::skip());
    for (auto &[src, t] : flow.edges) edge(src, target, std::move(t));
  }

  static Outflow merge(Outflow a, Outflow b) {
    Outflow out;
    out.edges = std::move(a.edges);
    if (a.at) out.edges.push_back({*a.at, Transfer::skip()});
    if (b.at) out.edges.push_back({*b.at, Transfer::skip()});
    for (auto &e : b.edges) out.edges.push_back(std::move(e));
    return out;
  }

  Outflow statement(const Stmt &s, NodeId cur) {
    switch (s.kind) {
    case Stmt::Kind::Decl:
      if (!s.expr) return {cur, {}};
      return {std::nullopt, {{cur, Transfer::assign(s.var, s.expr)}}};
    case Stmt::Kind::Assign:
      return {std::nullopt, {{cur, Transfer::assign(s.var, s.expr)}}};
    case Stmt::Kind::Havoc:
      return {std::nullopt, {{cur, Transfer::havoc(s.var)}}};
    case Stmt::Kind::While: {
      NodeId head = cur;
      NodeId body_entry = fresh();
      edge(head, body_entry, Transfer::assume(*s.cond));
      attach(statement(*s.children[0], body_entry), head); // back edges
      NodeId after = fresh();
      edge(head, after, Transfer::assume(negate(*s.cond)));
      return {after, {}};
    }
    case Stmt::Kind::If: {
      NodeId then_entry = fresh();
      edge(cur, then_entry, Transfer::assume(*s.cond));
      if (s.children.size() > 1) {
        NodeId else_entry = fresh();
        edge(cur, else_entry, Transfer::assume(negate(*s.cond)));
        Outflow then_flow = statement(*s.children[0], then_entry);
        Outflow else_flow = statement(*s.children[1], else_entry);
        return merge(std::move(then_flow), std::move(else_flow));
      }
      Outflow then_flow = statement(*s.children[0], then_entry);
      Outflow skip_flow{std::nullopt, {{cur, Transfer::assume(negate(*s.cond))}}};
      return merge(std::move(then_flow), std::move(skip_flow));
    }
    case Stmt::Kind::Block: {
      Outflow flow{cur, {}};
      for (const auto &c : s.children) flow = statement(*c, resolve(flow));
      return flow;
    }
    case Stmt::Kind::Skip:
      return {cur, {}};
    }
    return {cur, {}};
  }

  Cfg cfg_;
};

} // namespace

Cfg build_cfg(std::shared_ptr<const Program> program) {
  return Builder(std::move(program)).run();
}

std::set<NodeId> select_widening_points(const Cfg &cfg) {
  std::set<NodeId> wp;
  std::vector<char> state(cfg.num_nodes + 1, 0); // 0 new, 1 on stack, 2 done
  struct Frame {
    NodeId node;
    std::size_t next_out;
  };
  std::vector<Frame> stack{{cfg.entry, 0}};
  state[cfg.entry] = 1;
  while (!stack.empty()) {
    Frame &f = stack.back();
    const auto &outs = cfg.out_edges[f.node];
    if (f.next_out < outs.size()) {
      NodeId dst = cfg.edges[outs[f.next_out++]].dst;
      if (state[dst] == 1) {
        wp.insert(dst);
      } else if (state[dst] == 0) {
        state[dst] = 1;
        stack.push_back({dst, 0});
      }
    } else {
      state[f.node] = 2;
      stack.pop_back();
    }
  }
  return wp;
}

std::string to_dot(const Cfg &cfg) {
  std::string out = "digraph cfg {\n";
  for (NodeId n = 1; n <= cfg.num_nodes; ++n)
    out += "  " + cfg.label(n) + ";\n";
  for (const Edge &e : cfg.edges)
    out += "  " + cfg.label(e.src) + " -> " + cfg.label(e.dst) + " [label=\"" +
           e.transfer.render(cfg.vars()) + "\"];\n";
  out += "}\n";
  return out;
}

} // namespace descend
