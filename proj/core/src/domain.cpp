#include <descend/domain.hpp>

#include <cassert>

namespace descend {

std::optional<DomainId> parse_domain_id(const std::string &text) {
  if (text == "par") return DomainId::Par;
  if (text == "itv") return DomainId::Itv;
  if (text == "box") return DomainId::Box;
  if (text == "iset") return DomainId::ISet;
  if (text == "bset") return DomainId::BSet;
  return std::nullopt;
}

std::string domain_id_name(DomainId id) {
  switch (id) {
  case DomainId::Par: return "par";
  case DomainId::Itv: return "itv";
  case DomainId::Box: return "box";
  case DomainId::ISet: return "iset";
  default: return "bset";
  }
}

namespace {

class ParityDomain final : public Domain {
public:
  explicit ParityDomain(const Program &p) : vars_(p.vars) {}

  DomainId id() const override { return DomainId::Par; }
  Value bottom() const override { return ParityEnv::bottom(vars_.size()); }
  Value top() const override { return ParityEnv::top(vars_.size()); }
  bool is_bottom(const Value &v) const override { return get(v).is_bottom(); }
  bool leq(const Value &a, const Value &b) const override { return get(a).leq(get(b)); }
  Value lub(const Value &a, const Value &b) const override { return get(a).lub(get(b)); }
  Value glb(const Value &a, const Value &b) const override { return get(a).glb(get(b)); }
  bool has_widening() const override { return true; } // ACC domain, lub suffices
  Value widen(const Value &a, const Value &b) const override { return get(a).widen(get(b)); }
  bool has_native_narrowing() const override { return false; }
  Value narrow(const Value &a, const Value &b) const override { return get(a).narrow(get(b)); }
  Value transfer(const Value &v, const Transfer &t) const override {
    return parity_transfer(get(v), t);
  }
  std::string render(const Value &v) const override {
    const ParityEnv &e = get(v);
    if (vars_.size() == 1) return e.is_bottom() ? "bot" : e.get(0).render();
    return e.render(vars_);
  }

private:
  static const ParityEnv &get(const Value &v) { return std::get<ParityEnv>(v); }
  std::vector<std::string> vars_;
};

class BoxDomain final : public Domain {
public:
  BoxDomain(const Program &p, bool single_var_view)
      : vars_(p.vars), single_(single_var_view) {}

  DomainId id() const override { return single_ ? DomainId::Itv : DomainId::Box; }
  Value bottom() const override { return Box::bottom(vars_.size()); }
  Value top() const override { return Box::top(vars_.size()); }
  bool is_bottom(const Value &v) const override { return get(v).is_bottom(); }
  bool leq(const Value &a, const Value &b) const override { return get(a).leq(get(b)); }
  Value lub(const Value &a, const Value &b) const override { return get(a).lub(get(b)); }
  Value glb(const Value &a, const Value &b) const override { return get(a).glb(get(b)); }
  bool has_widening() const override { return true; }
  Value widen(const Value &a, const Value &b) const override { return get(a).widen(get(b)); }
  bool has_native_narrowing() const override { return true; }
  Value narrow(const Value &a, const Value &b) const override { return get(a).narrow(get(b)); }
  Value transfer(const Value &v, const Transfer &t) const override {
    return box_transfer(get(v), t);
  }
  std::string render(const Value &v) const override {
    const Box &e = get(v);
    if (single_) return e.is_bottom() ? "bot" : e.get(0).render();
    return e.render(vars_);
  }

private:
  static const Box &get(const Value &v) { return std::get<Box>(v); }
  std::vector<std::string> vars_;
  bool single_;
};

class PsetDomain final : public Domain {
public:
  PsetDomain(const Program &p, bool single_var_view, std::optional<std::size_t> cap)
      : vars_(p.vars), single_(single_var_view), cap_(cap) {}

  DomainId id() const override { return single_ ? DomainId::ISet : DomainId::BSet; }
  Value bottom() const override { return Pset::bottom(); }
  Value top() const override { return Pset::singleton(Box::top(vars_.size())); }
  bool is_bottom(const Value &v) const override { return get(v).is_bottom(); }
  bool leq(const Value &a, const Value &b) const override { return get(a).leq(get(b)); }
  Value lub(const Value &a, const Value &b) const override {
    return capped(get(a).lub(get(b)));
  }
  Value glb(const Value &a, const Value &b) const override {
    return capped(get(a).glb(get(b)));
  }
  bool has_widening() const override { return false; } // descending-phase only
  Value widen(const Value &a, const Value &b) const override { return lub(a, b); }
  bool has_native_narrowing() const override { return false; }
  Value narrow(const Value &a, const Value &b) const override { return glb(a, b); }
  Value transfer(const Value &v, const Transfer &t) const override {
    return capped(pset_transfer(get(v), t));
  }
  std::string render(const Value &v) const override {
    const Pset &s = get(v);
    if (single_)
      return s.render([](const Box &b) { return b.get(0).render(); });
    return s.render([this](const Box &b) { return b.render(vars_); });
  }

private:
  static const Pset &get(const Value &v) { return std::get<Pset>(v); }

  // Opt-in disjunct cap: collapse to the box hull when exceeded.
  Pset capped(Pset s) const {
    if (cap_ && s.size() > *cap_)
      return Pset::singleton(alpha_collapse(s, vars_.size()));
    return s;
  }

  std::vector<std::string> vars_;
  bool single_;
  std::optional<std::size_t> cap_;
};

} // namespace

std::unique_ptr<Domain> make_domain(DomainId id, const Program &program,
                                    std::optional<std::size_t> max_disjuncts) {
  bool single = id == DomainId::Itv || id == DomainId::ISet;
  if (single && program.vars.size() != 1)
    throw ConfigError("domain '" + domain_id_name(id) +
                      "' is the single-variable view; this program declares " +
                      std::to_string(program.vars.size()) + " variables (use '" +
                      domain_id_name(id == DomainId::Itv ? DomainId::Box : DomainId::BSet) +
                      "')");
  switch (id) {
  case DomainId::Par: return std::make_unique<ParityDomain>(program);
  case DomainId::Itv:
  case DomainId::Box: return std::make_unique<BoxDomain>(program, single);
  default: return std::make_unique<PsetDomain>(program, single, max_disjuncts);
  }
}

bool is_registered_pair(DomainId asc, DomainId desc) {
  if (asc == desc) return true;
  if (asc == DomainId::Itv && desc == DomainId::ISet) return true;
  if (asc == DomainId::Box && desc == DomainId::BSet) return true;
  return false;
}

Value apply_gamma(DomainId asc, DomainId desc, const Value &v) {
  if (!is_registered_pair(asc, desc))
    throw ConfigError("no concretization registered for " + domain_id_name(asc) +
                      " > " + domain_id_name(desc));
  if (asc == desc) return v;
  return gamma_box_to_bset(std::get<Box>(v));
}

std::optional<DomainId> common_comparison_domain(DomainId a, DomainId b) {
  if (a == b) return a;
  bool a_par = a == DomainId::Par, b_par = b == DomainId::Par;
  if (a_par || b_par) return std::nullopt;
  return DomainId::BSet;
}

Value embed_for_comparison(DomainId from, const Value &v) {
  switch (from) {
  case DomainId::Par: return v;
  case DomainId::Itv:
  case DomainId::Box: return gamma_box_to_bset(std::get<Box>(v));
  default: return v;
  }
}

} // namespace descend
