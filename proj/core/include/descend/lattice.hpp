#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace descend {

// Generic checks for the two operator contracts every shipped domain
// must satisfy:
//   widening:  a1 <= a1 W a2  and  a2 <= a1 W a2
//   narrowing: a1 >= a1 N a2 >= a1 glb a2
// Checks report violations instead of aborting so a fuzzing run can
// collect every offending pair.

struct AxiomViolation {
  std::size_t pair_index;
  std::string what;
};

template <class B>
std::vector<AxiomViolation>
check_widening_axioms(std::span<const std::pair<B, B>> samples) {
  std::vector<AxiomViolation> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto &[a, b] = samples[i];
    B w = a.widen(b);
    if (!a.leq(w)) out.push_back({i, "first argument not below widening result"});
    if (!b.leq(w)) out.push_back({i, "second argument not below widening result"});
  }
  return out;
}

template <class B>
std::vector<AxiomViolation>
check_narrowing_axioms(std::span<const std::pair<B, B>> samples) {
  std::vector<AxiomViolation> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto &[a, b] = samples[i];
    B n = a.narrow(b);
    if (!n.leq(a)) out.push_back({i, "narrowing result not below first argument"});
    if (!a.glb(b).leq(n)) out.push_back({i, "narrowing result below the glb"});
  }
  return out;
}

enum class ChainOp { Widen, Narrow };

// Feeds a chain through the iterate recurrence x0 = c0,
// x_{i+1} = x_i op c_{i+1} and reports whether it reaches a fixed
// value within max_steps; the chain's last element repeats once the
// chain is exhausted. A bound can refute stabilization only up to
// max_steps, never prove divergence.
template <class B, class Op>
bool stabilizes_with(std::span<const B> chain, Op &&op, std::size_t max_steps) {
  if (chain.empty()) return true;
  B x = chain[0];
  for (std::size_t i = 1; i <= max_steps; ++i) {
    const B &next = chain[std::min(i, chain.size() - 1)];
    B y = op(x, next);
    if (y.equal(x)) return true;
    x = std::move(y);
  }
  return false;
}

template <class B>
bool stabilizes(std::span<const B> chain, ChainOp op, std::size_t max_steps) {
  if (op == ChainOp::Widen)
    return stabilizes_with(chain, [](const B &a, const B &b) { return a.widen(b); },
                           max_steps);
  return stabilizes_with(chain, [](const B &a, const B &b) { return a.narrow(b); },
                         max_steps);
}

// Glb-based narrowing: behaves as the glb for the first threshold_k
// applications of a run, then returns its first argument unchanged,
// forcing any descending sequence to stabilize.
template <class B> class GlbNarrowing {
public:
  explicit GlbNarrowing(std::size_t threshold_k) : threshold_(threshold_k) {}

  B operator()(const B &a, const B &b) {
    if (applications_ >= threshold_) return a;
    ++applications_;
    return a.glb(b);
  }

  void reset() { applications_ = 0; }
  std::size_t threshold() const { return threshold_; }

private:
  std::size_t threshold_;
  std::size_t applications_ = 0;
};

} // namespace descend
