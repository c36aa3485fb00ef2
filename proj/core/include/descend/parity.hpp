#pragma once

#include <cassert>
#include <string>

#include <descend/bigint.hpp>

namespace descend {

// The four-element parity lattice: bot <= even,odd <= top, with even
// and odd incomparable.
class Parity {
public:
  enum class Tag { Bottom, Even, Odd, Top };

  static Parity bottom() { return Parity(Tag::Bottom); }
  static Parity even() { return Parity(Tag::Even); }
  static Parity odd() { return Parity(Tag::Odd); }
  static Parity top() { return Parity(Tag::Top); }
  static Parity constant(const BigInt &n) { return n % 2 == 0 ? even() : odd(); }

  Tag tag() const { return tag_; }
  bool is_bottom() const { return tag_ == Tag::Bottom; }
  bool is_top() const { return tag_ == Tag::Top; }

  bool leq(const Parity &o) const {
    return tag_ == Tag::Bottom || o.tag_ == Tag::Top || tag_ == o.tag_;
  }
  bool equal(const Parity &o) const { return tag_ == o.tag_; }

  Parity lub(const Parity &o) const {
    if (leq(o)) return o;
    if (o.leq(*this)) return *this;
    return top();
  }

  Parity glb(const Parity &o) const {
    if (leq(o)) return *this;
    if (o.leq(*this)) return o;
    return bottom();
  }

  // Parity satisfies the ACC, so the lub is a valid widening; the glb
  // serves as the (threshold-driven) narrowing.
  Parity widen(const Parity &o) const { return lub(o); }
  Parity narrow(const Parity &o) const { return glb(o); }

  Parity add(const Parity &o) const {
    if (is_bottom() || o.is_bottom()) return bottom();
    if (is_top() || o.is_top()) return top();
    return tag_ == o.tag_ ? even() : odd();
  }

  // Parity is preserved by negation, so subtraction reduces to addition.
  Parity neg() const { return *this; }
  Parity sub(const Parity &o) const { return add(o); }

  Parity mul(const Parity &o) const {
    if (is_bottom() || o.is_bottom()) return bottom();
    if (tag_ == Tag::Even || o.tag_ == Tag::Even) return even();
    if (is_top() || o.is_top()) return top();
    return odd();
  }

  bool contains(const BigInt &n) const {
    switch (tag_) {
    case Tag::Bottom: return false;
    case Tag::Even: return n % 2 == 0;
    case Tag::Odd: return n % 2 != 0;
    default: return true;
    }
  }

  std::string render() const {
    switch (tag_) {
    case Tag::Bottom: return "bot";
    case Tag::Even: return "even";
    case Tag::Odd: return "odd";
    default: return "top";
    }
  }

  static int cmp(const Parity &a, const Parity &b) {
    return int(a.tag_) - int(b.tag_);
  }

private:
  explicit Parity(Tag t) : tag_(t) {}
  Tag tag_;
};

} // namespace descend
