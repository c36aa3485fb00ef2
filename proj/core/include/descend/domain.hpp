#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <descend/cfg.hpp>
#include <descend/env.hpp>
#include <descend/galois.hpp>
#include <descend/powerset.hpp>
#include <descend/transfer.hpp>

namespace descend {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Runtime analysis value: a parity environment, an interval
// environment, or a finite powerset of interval environments. The
// single-variable ids (itv, iset) share the box representations and
// differ only in rendering.
using Pset = FinitePowerset<Box>;
using Value = std::variant<ParityEnv, Box, Pset>;

enum class DomainId { Par, Itv, Box, ISet, BSet };

std::optional<DomainId> parse_domain_id(const std::string &text);
std::string domain_id_name(DomainId id);

// Abstract-domain contract used by the equation solver: a bounded
// lattice with widening/narrowing plus the edge transformers, closed
// over Value. Instances are bound to one program's variable set.
class Domain {
public:
  virtual ~Domain() = default;

  virtual DomainId id() const = 0;
  std::string name() const { return domain_id_name(id()); }

  virtual Value bottom() const = 0;
  virtual Value top() const = 0;
  virtual bool is_bottom(const Value &v) const = 0;
  virtual bool leq(const Value &a, const Value &b) const = 0;
  virtual Value lub(const Value &a, const Value &b) const = 0;
  virtual Value glb(const Value &a, const Value &b) const = 0;

  // Widening usable by the ascending solver. Domains without one (the
  // powersets) expose the lub so the pairwise axioms still hold, but
  // the solver refuses to ascend on them.
  virtual bool has_widening() const = 0;
  virtual Value widen(const Value &a, const Value &b) const = 0;

  // Narrowing: the interval/box domains carry the textbook operator;
  // the others fall back to the glb (threshold-limited by the solver).
  virtual bool has_native_narrowing() const = 0;
  virtual Value narrow(const Value &a, const Value &b) const = 0;

  virtual Value transfer(const Value &v, const Transfer &t) const = 0;
  virtual std::string render(const Value &v) const = 0;

  // equal derived from leq both ways so semantically equal powersets
  // with different representations compare equal.
  bool equal(const Value &a, const Value &b) const { return leq(a, b) && leq(b, a); }
};

// Creates the domain instance for a program. Throws ConfigError for
// the single-variable ids (itv, iset) on multi-variable programs.
// max_disjuncts, when set, collapses powerset values to their box hull
// once they exceed the cap.
std::unique_ptr<Domain> make_domain(DomainId id, const Program &program,
                                    std::optional<std::size_t> max_disjuncts = {});

// Concretization registry for decoupled analyses (ascending domain to
// descending domain). Identity pairs are always registered; the
// non-trivial pairs are the singleton embeddings itv>iset and
// box>bset.
bool is_registered_pair(DomainId asc, DomainId desc);
Value apply_gamma(DomainId asc, DomainId desc, const Value &v);

// Embeds a value into the common comparison domain. Every non-parity
// id embeds into the powerset of boxes; parity values compare only
// against parity values.
std::optional<DomainId> common_comparison_domain(DomainId a, DomainId b);
Value embed_for_comparison(DomainId from, const Value &v);

} // namespace descend
