#pragma once

#include <cassert>
#include <optional>
#include <string>

#include <descend/bigint.hpp>

namespace descend {

// An integer bound extended with -inf / +inf.
class Bound {
public:
  static Bound minus_inf() { return Bound(Kind::NegInf); }
  static Bound plus_inf() { return Bound(Kind::PosInf); }

  Bound(BigInt n) : kind_(Kind::Finite), n_(std::move(n)) {}
  Bound(long long n) : kind_(Kind::Finite), n_(n) {}

  bool is_minus_inf() const { return kind_ == Kind::NegInf; }
  bool is_plus_inf() const { return kind_ == Kind::PosInf; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  const BigInt &value() const {
    assert(is_finite());
    return n_;
  }

  Bound operator-() const {
    switch (kind_) {
    case Kind::NegInf: return plus_inf();
    case Kind::PosInf: return minus_inf();
    default: return Bound(-n_);
    }
  }

  // -inf + +inf never occurs: interval sums pair lower with lower and
  // upper with upper bounds.
  Bound operator+(const Bound &o) const {
    if (is_finite() && o.is_finite()) return Bound(n_ + o.n_);
    if (!is_finite()) {
      assert(o.is_finite() || o.kind_ == kind_);
      return *this;
    }
    return o;
  }

  // 0 * inf = 0, otherwise infinities keep the product's sign.
  Bound operator*(const Bound &o) const {
    if (is_finite() && o.is_finite()) return Bound(n_ * o.n_);
    int s = sign() * o.sign();
    if (s == 0) return Bound(0);
    return s > 0 ? plus_inf() : minus_inf();
  }

  bool operator==(const Bound &o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || n_ == o.n_);
  }
  bool operator!=(const Bound &o) const { return !(*this == o); }

  bool operator<=(const Bound &o) const {
    if (kind_ == Kind::NegInf || o.kind_ == Kind::PosInf) return true;
    if (kind_ == Kind::PosInf) return o.kind_ == Kind::PosInf;
    if (o.kind_ == Kind::NegInf) return false;
    return n_ <= o.n_;
  }
  bool operator<(const Bound &o) const { return *this <= o && *this != o; }
  bool operator>=(const Bound &o) const { return o <= *this; }
  bool operator>(const Bound &o) const { return o < *this; }

  static Bound min(const Bound &a, const Bound &b) { return a <= b ? a : b; }
  static Bound max(const Bound &a, const Bound &b) { return a <= b ? b : a; }

  // Predecessor/successor for strict-comparison refinement; infinities
  // are fixed points.
  Bound pred() const { return is_finite() ? Bound(n_ - 1) : *this; }
  Bound succ() const { return is_finite() ? Bound(n_ + 1) : *this; }

  std::string str() const {
    if (is_minus_inf()) return "-inf";
    if (is_plus_inf()) return "+inf";
    return n_.str();
  }

  // Total order for canonical container sorting: -inf < finite < +inf.
  static int cmp(const Bound &a, const Bound &b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
  }

private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Bound(Kind k) : kind_(k), n_(0) {}
  int sign() const {
    if (kind_ == Kind::NegInf) return -1;
    if (kind_ == Kind::PosInf) return 1;
    return n_ == 0 ? 0 : (n_ < 0 ? -1 : 1);
  }
  Kind kind_;
  BigInt n_;
};

// Integer intervals: bottom, or [lo,hi] with lo <= hi over extended
// bounds. Top is [-inf,+inf].
class Interval {
public:
  static Interval bottom() { return Interval(); }
  static Interval top() { return Interval(Bound::minus_inf(), Bound::plus_inf()); }
  static Interval constant(const BigInt &n) { return Interval(Bound(n), Bound(n)); }

  Interval(Bound lo, Bound hi) : bottom_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.is_plus_inf() || hi_.is_minus_inf() || !(lo_ <= hi_)) {
      *this = Interval();
    }
  }

  bool is_bottom() const { return bottom_; }
  bool is_top() const { return !bottom_ && lo_.is_minus_inf() && hi_.is_plus_inf(); }

  const Bound &lo() const { assert(!bottom_); return lo_; }
  const Bound &hi() const { assert(!bottom_); return hi_; }

  bool leq(const Interval &o) const {
    if (bottom_) return true;
    if (o.bottom_) return false;
    return o.lo_ <= lo_ && hi_ <= o.hi_;
  }

  bool equal(const Interval &o) const { return leq(o) && o.leq(*this); }

  Interval lub(const Interval &o) const {
    if (bottom_) return o;
    if (o.bottom_) return *this;
    return Interval(Bound::min(lo_, o.lo_), Bound::max(hi_, o.hi_));
  }

  Interval glb(const Interval &o) const {
    if (bottom_ || o.bottom_) return bottom();
    return Interval(Bound::max(lo_, o.lo_), Bound::min(hi_, o.hi_));
  }

  // [l0,u0] widen [l1,u1] = [l1 < l0 ? -inf : l0, u0 < u1 ? +inf : u0];
  // bottom is neutral.
  Interval widen(const Interval &o) const {
    if (bottom_) return o;
    if (o.bottom_) return *this;
    return Interval(o.lo_ < lo_ ? Bound::minus_inf() : lo_,
                    hi_ < o.hi_ ? Bound::plus_inf() : hi_);
  }

  // [l0,u0] narrow [l1,u1] = [l0 = -inf ? l1 : l0, u0 = +inf ? u1 : u0];
  // bottom is absorbing.
  Interval narrow(const Interval &o) const {
    if (bottom_ || o.bottom_) return bottom();
    return Interval(lo_.is_minus_inf() ? o.lo_ : lo_,
                    hi_.is_plus_inf() ? o.hi_ : hi_);
  }

  Interval add(const Interval &o) const {
    if (bottom_ || o.bottom_) return bottom();
    return Interval(lo_ + o.lo_, hi_ + o.hi_);
  }

  Interval neg() const {
    if (bottom_) return bottom();
    return Interval(-hi_, -lo_);
  }

  Interval sub(const Interval &o) const { return add(o.neg()); }

  Interval mul(const Interval &o) const {
    if (bottom_ || o.bottom_) return bottom();
    Bound ll = lo_ * o.lo_, lu = lo_ * o.hi_, ul = hi_ * o.lo_, uu = hi_ * o.hi_;
    return Interval(Bound::min(Bound::min(ll, lu), Bound::min(ul, uu)),
                    Bound::max(Bound::max(ll, lu), Bound::max(ul, uu)));
  }

  bool contains(const BigInt &n) const {
    if (bottom_) return false;
    Bound b{n};
    return lo_ <= b && b <= hi_;
  }

  std::optional<BigInt> singleton() const {
    if (!bottom_ && lo_ == hi_) return lo_.value();
    return std::nullopt;
  }

  std::string render() const {
    if (bottom_) return "bot";
    return "[" + lo_.str() + "," + hi_.str() + "]";
  }

  static int cmp(const Interval &a, const Interval &b) {
    if (a.bottom_ || b.bottom_) return int(b.bottom_) - int(a.bottom_);
    if (int c = Bound::cmp(a.lo_, b.lo_)) return c;
    return Bound::cmp(a.hi_, b.hi_);
  }

private:
  Interval() : bottom_(true), lo_(0), hi_(0) {}
  bool bottom_;
  Bound lo_, hi_;
};

// Interval refinement for "v ? [a,b]" where ? ranges over the six
// comparison operators and [a,b] is the evaluation of the other side.
// Disequality refines only when the other side is a singleton touching
// an endpoint of v.
enum class RelOp { Lt, Le, Gt, Ge, Eq, Ne };

inline RelOp negate(RelOp op) {
  switch (op) {
  case RelOp::Lt: return RelOp::Ge;
  case RelOp::Le: return RelOp::Gt;
  case RelOp::Gt: return RelOp::Le;
  case RelOp::Ge: return RelOp::Lt;
  case RelOp::Eq: return RelOp::Ne;
  default: return RelOp::Eq;
  }
}

// Mirror image: (a ? b) == (b ?' a).
inline RelOp flip(RelOp op) {
  switch (op) {
  case RelOp::Lt: return RelOp::Gt;
  case RelOp::Le: return RelOp::Ge;
  case RelOp::Gt: return RelOp::Lt;
  case RelOp::Ge: return RelOp::Le;
  default: return op;
  }
}

inline const char *rel_op_text(RelOp op) {
  switch (op) {
  case RelOp::Lt: return "<";
  case RelOp::Le: return "<=";
  case RelOp::Gt: return ">";
  case RelOp::Ge: return ">=";
  case RelOp::Eq: return "==";
  default: return "!=";
  }
}

inline Interval refine(const Interval &v, RelOp op, const Interval &rhs) {
  if (v.is_bottom() || rhs.is_bottom()) return Interval::bottom();
  switch (op) {
  case RelOp::Lt:
    return v.glb(Interval(Bound::minus_inf(), rhs.hi().pred()));
  case RelOp::Le:
    return v.glb(Interval(Bound::minus_inf(), rhs.hi()));
  case RelOp::Gt:
    return v.glb(Interval(rhs.lo().succ(), Bound::plus_inf()));
  case RelOp::Ge:
    return v.glb(Interval(rhs.lo(), Bound::plus_inf()));
  case RelOp::Eq:
    return v.glb(rhs);
  case RelOp::Ne:
    if (auto c = rhs.singleton()) {
      Bound b{*c};
      if (v.lo() == b && v.hi() == b) return Interval::bottom();
      if (v.lo() == b) return Interval(v.lo().succ(), v.hi());
      if (v.hi() == b) return Interval(v.lo(), v.hi().pred());
    }
    return v;
  }
  return v;
}

} // namespace descend
