#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <string>
#include <vector>

#include <descend/interval.hpp>
#include <descend/parity.hpp>

namespace descend {

// Pointwise lifting of a base lattice to environments over a fixed,
// ordered variable set. Bottom is smashed: an environment where any
// variable would be bottom collapses to the bottom environment, so a
// non-bottom Env never holds a bottom component.
template <class D> class Env {
public:
  static Env bottom(std::size_t vars) {
    Env e;
    e.bottom_ = true;
    e.vars_ = vars;
    return e;
  }

  static Env top(std::size_t vars) {
    Env e;
    e.bottom_ = false;
    e.vars_ = vars;
    e.vals_.assign(vars, D::top());
    return e;
  }

  static Env of(std::vector<D> vals) {
    for (const D &v : vals)
      if (v.is_bottom()) return bottom(vals.size());
    Env e;
    e.bottom_ = false;
    e.vars_ = vals.size();
    e.vals_ = std::move(vals);
    return e;
  }

  std::size_t vars() const { return vars_; }
  bool is_bottom() const { return bottom_; }

  bool is_top() const {
    if (bottom_) return false;
    for (const D &v : vals_)
      if (!v.is_top()) return false;
    return true;
  }

  const D &get(std::size_t i) const {
    assert(!bottom_ && i < vals_.size());
    return vals_[i];
  }

  Env with(std::size_t i, D v) const {
    assert(!bottom_);
    if (v.is_bottom()) return bottom(vars_);
    Env e = *this;
    e.vals_[i] = std::move(v);
    return e;
  }

  bool leq(const Env &o) const {
    assert(vars_ == o.vars_);
    if (bottom_) return true;
    if (o.bottom_) return false;
    for (std::size_t i = 0; i < vals_.size(); ++i)
      if (!vals_[i].leq(o.vals_[i])) return false;
    return true;
  }

  bool equal(const Env &o) const { return leq(o) && o.leq(*this); }

  Env lub(const Env &o) const {
    assert(vars_ == o.vars_);
    if (bottom_) return o;
    if (o.bottom_) return *this;
    Env e = *this;
    for (std::size_t i = 0; i < vals_.size(); ++i)
      e.vals_[i] = vals_[i].lub(o.vals_[i]);
    return e;
  }

  Env glb(const Env &o) const {
    assert(vars_ == o.vars_);
    if (bottom_ || o.bottom_) return bottom(vars_);
    std::vector<D> vals;
    vals.reserve(vals_.size());
    for (std::size_t i = 0; i < vals_.size(); ++i)
      vals.push_back(vals_[i].glb(o.vals_[i]));
    return of(std::move(vals));
  }

  Env widen(const Env &o) const {
    assert(vars_ == o.vars_);
    if (bottom_) return o;
    if (o.bottom_) return *this;
    Env e = *this;
    for (std::size_t i = 0; i < vals_.size(); ++i)
      e.vals_[i] = vals_[i].widen(o.vals_[i]);
    return e;
  }

  Env narrow(const Env &o) const {
    assert(vars_ == o.vars_);
    if (bottom_ || o.bottom_) return bottom(vars_);
    std::vector<D> vals;
    vals.reserve(vals_.size());
    for (std::size_t i = 0; i < vals_.size(); ++i)
      vals.push_back(vals_[i].narrow(o.vals_[i]));
    return of(std::move(vals));
  }

  // "a in [0,5], b in [1,1]" with variables in name order.
  std::string render(std::span<const std::string> names) const {
    assert(names.size() == vars_);
    if (bottom_) return "bot";
    std::vector<std::size_t> order(vars_);
    for (std::size_t i = 0; i < vars_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k) out += ", ";
      out += names[order[k]] + " in " + vals_[order[k]].render();
    }
    return out;
  }

  static int cmp(const Env &a, const Env &b) {
    assert(a.vars_ == b.vars_);
    if (a.bottom_ || b.bottom_) return int(b.bottom_) - int(a.bottom_);
    for (std::size_t i = 0; i < a.vals_.size(); ++i)
      if (int c = D::cmp(a.vals_[i], b.vals_[i])) return c;
    return 0;
  }

private:
  Env() : bottom_(true), vars_(0) {}
  bool bottom_;
  std::size_t vars_;
  std::vector<D> vals_;
};

using Box = Env<Interval>;
using ParityEnv = Env<Parity>;

} // namespace descend
