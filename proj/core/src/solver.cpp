#include <descend/solver.hpp>

#include <cassert>
#include <chrono>

namespace descend {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

EquationSystem::EquationSystem(const Cfg &cfg, std::set<NodeId> wp)
    : cfg_(&cfg), wp_(std::move(wp)) {}

Value EquationSystem::eval_rhs(NodeId n, const Assignment &x, const Domain &dom) const {
  if (n == cfg_->entry) return dom.top();
  Value acc = dom.bottom();
  for (std::size_t ei : cfg_->in_edges[n]) {
    const Edge &e = cfg_->edges[ei];
    if (dom.is_bottom(x[e.src])) continue; // transfers preserve bottom
    acc = dom.lub(acc, dom.transfer(x[e.src], e.transfer));
  }
  return acc;
}

bool EquationSystem::is_post_fixpoint(const Assignment &x, const Domain &dom) const {
  for (NodeId n = 1; n <= nodes(); ++n)
    if (!dom.leq(eval_rhs(n, x, dom), x[n])) return false;
  return true;
}

std::string AnalysisConfig::describe() const {
  std::string out = domain_id_name(asc);
  if (decoupled()) out += " > " + domain_id_name(desc);
  return out;
}

std::pair<Assignment, PhaseTrace> ascend(const EquationSystem &sys, const Domain &dom,
                                         int widening_delay, int max_sweeps) {
  if (!dom.has_widening())
    throw DiagnosticError("domain '" + dom.name() +
                          "' has no widening operator and can only be used in "
                          "the descending phase");
  const Cfg &cfg = sys.cfg();
  Assignment x(sys.nodes() + 1, dom.bottom());
  x[cfg.entry] = dom.top();

  PhaseTrace trace;
  trace.phase = Phase::Ascending;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool changed = false;
    for (NodeId n = 1; n <= sys.nodes(); ++n) {
      Value rhs = sys.eval_rhs(n, x, dom);
      bool widen_here = sys.widening_points().count(n) && sweep > widening_delay;
      Value next = widen_here ? dom.widen(x[n], rhs) : dom.lub(x[n], rhs);
      if (!dom.equal(next, x[n])) {
        changed = true;
        x[n] = std::move(next);
      }
    }
    trace.sweeps.push_back(x);
    if (!changed) {
      trace.stabilized = true;
      break;
    }
  }
  if (!trace.stabilized)
    throw DiagnosticError("ascending phase did not stabilize within " +
                          std::to_string(max_sweeps) +
                          " sweeps; the widening operator looks broken");
  assert(sys.is_post_fixpoint(x, dom));
  return {std::move(x), std::move(trace)};
}

std::pair<Assignment, PhaseTrace> descend(const EquationSystem &sys, const Domain &dom,
                                          const Assignment &start, int k,
                                          bool force_glb) {
  if (!sys.is_post_fixpoint(start, dom))
    throw DiagnosticError("descending phase started from a value that is not a "
                          "post-fixpoint of the equation system");
  bool native = dom.has_native_narrowing() && !force_glb;
  Assignment x = start;
  PhaseTrace trace;
  trace.phase = Phase::Descending;
  for (int sweep = 1; sweep <= k; ++sweep) {
    bool changed = false;
    for (NodeId n = 1; n <= sys.nodes(); ++n) {
      Value rhs = sys.eval_rhs(n, x, dom);
      bool narrow_here = sys.widening_points().count(n) && native;
      Value next = narrow_here ? dom.narrow(x[n], rhs) : dom.glb(x[n], rhs);
      if (!dom.equal(next, x[n])) {
        changed = true;
        x[n] = std::move(next);
      }
    }
    trace.sweeps.push_back(x);
    if (!changed) {
      trace.stabilized = true;
      break;
    }
  }
  assert(sys.is_post_fixpoint(x, dom));
  return {std::move(x), std::move(trace)};
}

std::set<NodeId> effective_widening_points(const Cfg &cfg, const AnalysisConfig &config) {
  if (config.wp_override) {
    for (NodeId n : *config.wp_override)
      if (n < 1 || n > cfg.num_nodes)
        throw ConfigError("widening-point override names node " + std::to_string(n) +
                          " but the graph has " + std::to_string(cfg.num_nodes) +
                          " nodes");
    return *config.wp_override;
  }
  return select_widening_points(cfg);
}

AnalysisResult analyze_classical(const Cfg &cfg, const AnalysisConfig &config) {
  auto dom = make_domain(config.asc, *cfg.program, config.max_disjuncts);
  EquationSystem sys(cfg, effective_widening_points(cfg, config));

  AnalysisResult r;
  r.program = cfg.program;
  r.config = config;
  r.wp = sys.widening_points();

  auto t0 = std::chrono::steady_clock::now();
  auto [post, asc_trace] = ascend(sys, *dom, config.widening_delay,
                                  config.max_ascending_sweeps);
  r.ascend_seconds = seconds_since(t0);
  r.ascending = std::move(asc_trace);
  r.post_fixpoint = post;

  t0 = std::chrono::steady_clock::now();
  auto [fin, desc_trace] = descend(sys, *dom, post, config.k,
                                   config.force_glb_narrowing);
  r.descend_seconds = seconds_since(t0);
  r.descending = std::move(desc_trace);
  r.final = std::move(fin);
  return r;
}

AnalysisResult analyze_decoupled(const Cfg &cfg, const AnalysisConfig &config) {
  if (!is_registered_pair(config.asc, config.desc))
    throw ConfigError("no concretization registered for " +
                      domain_id_name(config.asc) + " > " + domain_id_name(config.desc));
  auto asc_dom = make_domain(config.asc, *cfg.program, config.max_disjuncts);
  auto desc_dom = make_domain(config.desc, *cfg.program, config.max_disjuncts);
  EquationSystem sys(cfg, effective_widening_points(cfg, config));

  AnalysisResult r;
  r.program = cfg.program;
  r.config = config;
  r.wp = sys.widening_points();

  auto t0 = std::chrono::steady_clock::now();
  auto [post, asc_trace] = ascend(sys, *asc_dom, config.widening_delay,
                                  config.max_ascending_sweeps);
  r.ascend_seconds = seconds_since(t0);
  r.ascending = std::move(asc_trace);
  r.post_fixpoint = post;

  Assignment start(sys.nodes() + 1, desc_dom->bottom());
  for (NodeId n = 1; n <= sys.nodes(); ++n)
    start[n] = apply_gamma(config.asc, config.desc, post[n]);
  if (!sys.is_post_fixpoint(start, *desc_dom))
    throw DiagnosticError(
        "internal soundness failure: the transferred ascending post-fixpoint is "
        "not a post-fixpoint on domain '" + desc_dom->name() +
        "' (broken transfer lifting)");
  r.transferred = start;

  t0 = std::chrono::steady_clock::now();
  auto [fin, desc_trace] = descend(sys, *desc_dom, start, config.k,
                                   config.force_glb_narrowing);
  r.descend_seconds = seconds_since(t0);
  r.descending = std::move(desc_trace);
  r.final = std::move(fin);
  return r;
}

AnalysisResult analyze(const Cfg &cfg, const AnalysisConfig &config) {
  return config.decoupled() ? analyze_decoupled(cfg, config)
                            : analyze_classical(cfg, config);
}

bool check_lemma1(const EquationSystem &sys, const Domain &asc_dom,
                  const Domain &desc_dom, const Assignment &x) {
  Assignment gx(x.size(), desc_dom.bottom());
  for (NodeId n = 1; n <= sys.nodes(); ++n)
    gx[n] = apply_gamma(asc_dom.id(), desc_dom.id(), x[n]);
  return sys.is_post_fixpoint(gx, desc_dom);
}

bool check_prop1(const EquationSystem &sys, const Domain &asc_dom,
                 const Domain &desc_dom, const Assignment &x, int k) {
  Assignment gx(x.size(), desc_dom.bottom());
  for (NodeId n = 1; n <= sys.nodes(); ++n)
    gx[n] = apply_gamma(asc_dom.id(), desc_dom.id(), x[n]);

  auto [xa, ta] = descend(sys, asc_dom, x, k, /*force_glb=*/true);
  auto [xd, td] = descend(sys, desc_dom, gx, k, /*force_glb=*/true);

  for (NodeId n = 1; n <= sys.nodes(); ++n) {
    Value gxa = apply_gamma(asc_dom.id(), desc_dom.id(), xa[n]);
    if (!desc_dom.leq(xd[n], gxa)) return false;
  }
  return true;
}

} // namespace descend
