#include <descend/oracle.hpp>

#include <deque>

namespace descend {

namespace {

void collect_reads(const ExprNode &e, std::vector<bool> &reads) {
  switch (e.kind) {
  case ExprNode::Kind::Var: reads[e.var] = true; break;
  case ExprNode::Kind::Const: break;
  case ExprNode::Kind::Neg: collect_reads(*e.lhs, reads); break;
  default:
    collect_reads(*e.lhs, reads);
    collect_reads(*e.rhs, reads);
  }
}

struct EdgeEffect {
  std::vector<bool> reads;
  std::optional<std::size_t> writes;
};

EdgeEffect edge_effect(const Transfer &t, std::size_t nvars) {
  EdgeEffect eff;
  eff.reads.assign(nvars, false);
  switch (t.kind) {
  case Transfer::Kind::Skip: break;
  case Transfer::Kind::Assign:
    collect_reads(*t.expr, eff.reads);
    eff.writes = t.var;
    break;
  case Transfer::Kind::Assume:
    collect_reads(*t.cond->lhs, eff.reads);
    collect_reads(*t.cond->rhs, eff.reads);
    break;
  case Transfer::Kind::Havoc: eff.writes = t.var; break;
  }
  return eff;
}

BigInt eval_concrete(const ExprNode &e, const ConcreteState &s) {
  switch (e.kind) {
  case ExprNode::Kind::Const: return e.value;
  case ExprNode::Kind::Var: return BigInt(s[e.var]);
  case ExprNode::Kind::Add: return eval_concrete(*e.lhs, s) + eval_concrete(*e.rhs, s);
  case ExprNode::Kind::Sub: return eval_concrete(*e.lhs, s) - eval_concrete(*e.rhs, s);
  case ExprNode::Kind::Mul: return eval_concrete(*e.lhs, s) * eval_concrete(*e.rhs, s);
  case ExprNode::Kind::Neg: return -eval_concrete(*e.lhs, s);
  }
  return 0;
}

bool holds(RelOp op, const BigInt &a, const BigInt &b) {
  switch (op) {
  case RelOp::Lt: return a < b;
  case RelOp::Le: return a <= b;
  case RelOp::Gt: return a > b;
  case RelOp::Ge: return a >= b;
  case RelOp::Eq: return a == b;
  default: return a != b;
  }
}

} // namespace

std::vector<bool> live_at_entry(const Cfg &cfg) {
  std::size_t nvars = cfg.vars().size();
  std::vector<EdgeEffect> effects;
  effects.reserve(cfg.edges.size());
  for (const Edge &e : cfg.edges) effects.push_back(edge_effect(e.transfer, nvars));

  // live[n][v]: v may be read before written along some path from n.
  std::vector<std::vector<bool>> live(cfg.num_nodes + 1,
                                      std::vector<bool>(nvars, false));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ei = 0; ei < cfg.edges.size(); ++ei) {
      const Edge &e = cfg.edges[ei];
      const EdgeEffect &eff = effects[ei];
      for (std::size_t v = 0; v < nvars; ++v) {
        bool l = eff.reads[v] || (eff.writes != v && live[e.dst][v]);
        if (l && !live[e.src][v]) {
          live[e.src][v] = true;
          changed = true;
        }
      }
    }
  }
  return live[cfg.entry];
}

ConcreteStateSet collect(const Cfg &cfg, const OracleConfig &config) {
  ConcreteStateSet out;
  out.per_node.assign(cfg.num_nodes + 1, {});

  std::size_t nvars = cfg.vars().size();
  std::vector<bool> live = live_at_entry(cfg);
  std::size_t live_count = 0;
  for (bool b : live) live_count += b;

  // Entry frontier: the Cartesian product over entry-live variables.
  double entry_states = 1;
  for (std::size_t i = 0; i < live_count; ++i)
    entry_states *= static_cast<double>(2 * config.bound + 1);
  if (entry_states > static_cast<double>(config.max_states)) {
    out.feasible = false;
    return out;
  }

  std::deque<std::pair<NodeId, ConcreteState>> work;
  auto push = [&](NodeId n, ConcreteState s) {
    auto [it, inserted] = out.per_node[n].insert(std::move(s));
    if (inserted) {
      ++out.total_states;
      work.push_back({n, *it});
    }
  };

  ConcreteState base(nvars, 0);
  std::vector<std::size_t> live_vars;
  for (std::size_t v = 0; v < nvars; ++v)
    if (live[v]) live_vars.push_back(v);
  // Odometer over the live variables.
  ConcreteState seed = base;
  for (std::size_t v : live_vars) seed[v] = -config.bound;
  while (true) {
    push(cfg.entry, seed);
    std::size_t i = 0;
    for (; i < live_vars.size(); ++i) {
      if (seed[live_vars[i]] < config.bound) {
        ++seed[live_vars[i]];
        break;
      }
      seed[live_vars[i]] = -config.bound;
    }
    if (i == live_vars.size()) break;
    if (out.total_states > config.max_states) {
      out.feasible = false;
      return out;
    }
  }

  BigInt bound(config.bound);
  while (!work.empty()) {
    auto [n, s] = work.front();
    work.pop_front();
    for (std::size_t ei : cfg.out_edges[n]) {
      const Edge &e = cfg.edges[ei];
      const Transfer &t = e.transfer;
      switch (t.kind) {
      case Transfer::Kind::Skip:
        push(e.dst, s);
        break;
      case Transfer::Kind::Assign: {
        BigInt v = eval_concrete(*t.expr, s);
        if (v < -bound || v > bound) break; // truncated
        ConcreteState next = s;
        next[t.var] = static_cast<long long>(v);
        push(e.dst, std::move(next));
        break;
      }
      case Transfer::Kind::Assume:
        if (holds(t.cond->op, eval_concrete(*t.cond->lhs, s),
                  eval_concrete(*t.cond->rhs, s)))
          push(e.dst, s);
        break;
      case Transfer::Kind::Havoc:
        for (long long v = -config.bound; v <= config.bound; ++v) {
          ConcreteState next = s;
          next[t.var] = v;
          push(e.dst, std::move(next));
        }
        break;
      }
      if (out.total_states > config.max_states) {
        out.feasible = false;
        return out;
      }
    }
  }
  return out;
}

namespace {

bool value_contains(const Value &v, const ConcreteState &s) {
  if (const auto *pe = std::get_if<ParityEnv>(&v)) {
    if (pe->is_bottom()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!pe->get(i).contains(BigInt(s[i]))) return false;
    return true;
  }
  if (const auto *b = std::get_if<Box>(&v)) {
    if (b->is_bottom()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!b->get(i).contains(BigInt(s[i]))) return false;
    return true;
  }
  const auto &ps = std::get<Pset>(v);
  for (const Box &b : ps.elements()) {
    bool inside = true;
    for (std::size_t i = 0; i < s.size() && inside; ++i)
      inside = b.get(i).contains(BigInt(s[i]));
    if (inside) return true;
  }
  return false;
}

} // namespace

std::vector<SoundnessViolation> check_soundness(const Assignment &abstract,
                                                DomainId,
                                                const ConcreteStateSet &concrete) {
  std::vector<SoundnessViolation> out;
  for (NodeId n = 1; n < abstract.size() && n < concrete.per_node.size(); ++n)
    for (const ConcreteState &s : concrete.per_node[n])
      if (!value_contains(abstract[n], s)) out.push_back({n, s});
  return out;
}

} // namespace descend
