#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

namespace descend {

/*
 * Finite powerset lifting of a base lattice B. Elements are kept
 * finite and non-redundant: no bottom members, and no member strictly
 * below another member (one representative survives among equals).
 * The order is the Hoare order: S1 <= S2 iff every member of S1 is
 * below some member of S2. Bottom is the empty set.
 *
 * There is no proper widening; lub stands in for the pairwise widening
 * axioms and the glb serves as the threshold-driven narrowing, which
 * restricts this domain to descending-phase use in the solver.
 */
template <class B> class FinitePowerset {
public:
  static FinitePowerset bottom() { return FinitePowerset(); }

  static FinitePowerset singleton(B v) {
    FinitePowerset s;
    if (!v.is_bottom()) s.elems_.push_back(std::move(v));
    return s;
  }

  // Removes bottoms and dominated members, keeps the first of equal
  // members, sorts structurally. Quadratic in the number of members.
  static FinitePowerset normalize(std::vector<B> raw) {
    std::vector<char> drop(raw.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].is_bottom()) {
        drop[i] = 1;
        continue;
      }
      for (std::size_t j = 0; j < raw.size(); ++j) {
        if (i == j || drop[j]) continue;
        if (!raw[i].leq(raw[j])) continue;
        if (!raw[j].leq(raw[i]) || j < i) {
          drop[i] = 1;
          break;
        }
      }
    }
    FinitePowerset s;
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (!drop[i]) s.elems_.push_back(std::move(raw[i]));
    std::sort(s.elems_.begin(), s.elems_.end(),
              [](const B &a, const B &b) { return B::cmp(a, b) < 0; });
    return s;
  }

  const std::vector<B> &elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_bottom() const { return elems_.empty(); }

  bool is_top() const {
    for (const B &e : elems_)
      if (e.is_top()) return true;
    return false;
  }

  bool leq(const FinitePowerset &o) const {
    for (const B &a : elems_) {
      bool covered = false;
      for (const B &b : o.elems_)
        if (a.leq(b)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  bool equal(const FinitePowerset &o) const { return leq(o) && o.leq(*this); }

  FinitePowerset lub(const FinitePowerset &o) const {
    std::vector<B> raw = elems_;
    raw.insert(raw.end(), o.elems_.begin(), o.elems_.end());
    return normalize(std::move(raw));
  }

  FinitePowerset glb(const FinitePowerset &o) const {
    std::vector<B> raw;
    raw.reserve(elems_.size() * o.elems_.size());
    for (const B &a : elems_)
      for (const B &b : o.elems_) raw.push_back(a.glb(b));
    return normalize(std::move(raw));
  }

  FinitePowerset widen(const FinitePowerset &o) const { return lub(o); }
  FinitePowerset narrow(const FinitePowerset &o) const { return glb(o); }

  // Element-wise lifting of a base-domain transformer.
  template <class F> FinitePowerset transform(F &&f) const {
    std::vector<B> raw;
    raw.reserve(elems_.size());
    for (const B &a : elems_) raw.push_back(f(a));
    return normalize(std::move(raw));
  }

  // Base-domain hull of all members; the empty set collapses to bottom.
  B collapse(B bottom_value) const {
    B acc = std::move(bottom_value);
    for (const B &a : elems_) acc = acc.lub(a);
    return acc;
  }

  // "{ e1 ; e2 ; ... }", members ordered by their rendering; "{ }" when
  // empty.
  template <class R> std::string render(R &&render_elem) const {
    if (elems_.empty()) return "{ }";
    std::vector<std::string> parts;
    parts.reserve(elems_.size());
    for (const B &a : elems_) parts.push_back(render_elem(a));
    std::sort(parts.begin(), parts.end());
    std::string out = "{ ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += " ; ";
      out += parts[i];
    }
    out += " }";
    return out;
  }

  static int cmp(const FinitePowerset &a, const FinitePowerset &b) {
    std::size_t n = std::min(a.elems_.size(), b.elems_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (int c = B::cmp(a.elems_[i], b.elems_[i])) return c;
    if (a.elems_.size() != b.elems_.size())
      return a.elems_.size() < b.elems_.size() ? -1 : 1;
    return 0;
  }

private:
  FinitePowerset() = default;
  std::vector<B> elems_;
};

} // namespace descend
