#pragma once

#include <descend/env.hpp>
#include <descend/powerset.hpp>

namespace descend {

// Concretization adapters between a coarse ascending domain and a
// finer descending domain. Each adapter is the minimal computable
// embedding: bottom maps to the empty set, anything else to the
// singleton set. alpha_collapse is its left inverse (the base-domain
// hull), so alpha(gamma(a)) = a and s <= gamma(alpha(s)).

template <class B> FinitePowerset<B> gamma_singleton(const B &a) {
  return FinitePowerset<B>::singleton(a);
}

inline FinitePowerset<Interval> gamma_itv_to_iset(const Interval &a) {
  return gamma_singleton(a);
}

inline FinitePowerset<Box> gamma_box_to_bset(const Box &a) {
  return gamma_singleton(a);
}

inline Interval alpha_collapse(const FinitePowerset<Interval> &s) {
  return s.collapse(Interval::bottom());
}

inline Box alpha_collapse(const FinitePowerset<Box> &s, std::size_t vars) {
  return s.collapse(Box::bottom(vars));
}

} // namespace descend
