#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include <descend/cfg.hpp>
#include <descend/domain.hpp>

namespace descend {

// Analysis-level failure (broken widening, precondition violation,
// internal soundness check).
class DiagnosticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One abstract value per node, indexed by NodeId (slot 0 unused).
using Assignment = std::vector<Value>;

// The per-node equation system x_i = lub of transfer(e)(x_src) over
// incoming edges e; the entry equation is the constant top.
class EquationSystem {
public:
  EquationSystem(const Cfg &cfg, std::set<NodeId> wp);

  const Cfg &cfg() const { return *cfg_; }
  const std::set<NodeId> &widening_points() const { return wp_; }
  std::size_t nodes() const { return cfg_->num_nodes; }

  Value eval_rhs(NodeId n, const Assignment &x, const Domain &dom) const;

  // True iff x is a post-fixpoint: eval_rhs(n, x) <= x[n] at every node.
  bool is_post_fixpoint(const Assignment &x, const Domain &dom) const;

private:
  const Cfg *cfg_;
  std::set<NodeId> wp_;
};

enum class Phase { Ascending, Descending };

// Snapshot of every completed sweep of one phase, in order, including
// the final no-change sweep when stabilization was detected.
struct PhaseTrace {
  Phase phase;
  std::vector<Assignment> sweeps;
  bool stabilized = false;
};

struct AnalysisConfig {
  DomainId asc = DomainId::Box;
  DomainId desc = DomainId::Box;
  int k = 3;                // max descending sweeps / glb-narrowing threshold
  int widening_delay = 0;   // sweeps of plain lub before widening kicks in
  std::optional<std::set<NodeId>> wp_override;
  bool force_glb_narrowing = false; // ignore native narrowing operators
  std::optional<std::size_t> max_disjuncts;
  int max_ascending_sweeps = 1000;

  bool decoupled() const { return asc != desc; }
  std::string describe() const;
};

struct AnalysisResult {
  std::shared_ptr<const Program> program;
  AnalysisConfig config;
  std::set<NodeId> wp;
  PhaseTrace ascending;
  Assignment post_fixpoint;              // end of the ascending phase
  std::optional<Assignment> transferred; // gamma image, decoupled runs only
  PhaseTrace descending;
  Assignment final;
  double ascend_seconds = 0;
  double descend_seconds = 0;
};

/*
 * Sweep schedule (pinned; the iterate tables depend on it): every
 * sweep recomputes all equations in node order 1..m, and within a
 * sweep each right-hand side reads the newest values already computed
 * in that same sweep. A sweep that changes nothing stabilizes the
 * phase.
 */

// Ascending phase with widening at the widening points. Requires a
// domain with a widening (or one where the lub already stabilizes).
// Throws DiagnosticError when the hard sweep cap is exceeded.
std::pair<Assignment, PhaseTrace> ascend(const EquationSystem &sys, const Domain &dom,
                                         int widening_delay = 0,
                                         int max_sweeps = 1000);

// Descending phase from a post-fixpoint, at most k sweeps. Native
// narrowing is applied at widening points unless force_glb is set or
// the domain has none, in which case the glb is used (the glb-based
// narrowing with threshold k). Throws DiagnosticError when start is
// not a post-fixpoint.
std::pair<Assignment, PhaseTrace> descend(const EquationSystem &sys, const Domain &dom,
                                          const Assignment &start, int k,
                                          bool force_glb = false);

AnalysisResult analyze_classical(const Cfg &cfg, const AnalysisConfig &config);
AnalysisResult analyze_decoupled(const Cfg &cfg, const AnalysisConfig &config);

// Dispatches on config.decoupled().
AnalysisResult analyze(const Cfg &cfg, const AnalysisConfig &config);

// gamma(x) is a post-fixpoint of the descending-domain equations
// whenever x is one of the ascending-domain equations.
bool check_lemma1(const EquationSystem &sys, const Domain &asc_dom,
                  const Domain &desc_dom, const Assignment &x);

// The k-sweep descent on the finer domain from gamma(x) stays below
// the gamma image of the k-sweep descent on the coarser domain, when
// both use the glb-based narrowing with the same threshold.
bool check_prop1(const EquationSystem &sys, const Domain &asc_dom,
                 const Domain &desc_dom, const Assignment &x, int k);

std::set<NodeId> effective_widening_points(const Cfg &cfg, const AnalysisConfig &config);

} // namespace descend
