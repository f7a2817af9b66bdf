#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "instantia/substitution.hpp"
#include "instantia/term.hpp"

namespace instantia {

class Literal {
public:
  Literal() = default;
  Literal(bool positive, Term atom) : positive_(positive), atom_(atom) {}

  bool positive() const { return positive_; }
  bool negative() const { return !positive_; }
  Term atom() const { return atom_; }

  Literal complement() const { return Literal(!positive_, atom_); }

  /// Predicate symbol of the atom.
  const std::string& predicate() const { return atom_.name(); }
  std::size_t predicate_arity() const { return atom_.arity(); }

  bool operator==(const Literal& other) const = default;

  std::size_t hash() const {
    return atom_.hash() ^ (positive_ ? 0 : 0x9e3779b97f4a7c15ull);
  }

  std::string to_string() const {
    return (positive_ ? "" : "~") + atom_.to_string();
  }

private:
  bool positive_ = true;
  Term atom_;
};

using ClauseId = std::int64_t;

struct ClauseOrigin {
  enum class Kind { Input, Derived };
  Kind kind = Kind::Input;
  std::string label;              // input clause name, or inference rule name
  std::vector<ClauseId> parents;  // for derived clauses
  Substitution sigma;             // substitution applied by the inference

  static ClauseOrigin input(std::string name) {
    return {Kind::Input, std::move(name), {}, {}};
  }
  static ClauseOrigin derived(std::string rule, std::vector<ClauseId> parents,
                              Substitution sigma) {
    return {Kind::Derived, std::move(rule), std::move(parents), std::move(sigma)};
  }
};

/// Disjunction of literals, implicitly universally quantified. The literal
/// order is preserved from construction; variant and instance checks are
/// order-sensitive per literal. An empty literal list is the empty clause.
class Clause {
public:
  Clause() = default;
  Clause(std::vector<Literal> literals, ClauseId id, ClauseOrigin origin)
      : literals_(std::move(literals)), id_(id), origin_(std::move(origin)) {}

  const std::vector<Literal>& literals() const { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  ClauseId id() const { return id_; }
  const ClauseOrigin& origin() const { return origin_; }

  bool is_ground() const {
    for (const Literal& l : literals_)
      if (!l.atom().is_ground()) return false;
    return true;
  }

  /// Variables in first-occurrence order, literal by literal.
  std::vector<Term> variables() const {
    std::vector<Term> out;
    for (const Literal& l : literals_) l.atom().collect_variables(out);
    return out;
  }

  std::string to_string() const {
    if (literals_.empty()) return "$false";
    std::string s;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
      if (i > 0) s += " | ";
      s += literals_[i].to_string();
    }
    return s;
  }

private:
  std::vector<Literal> literals_;
  ClauseId id_ = -1;
  ClauseOrigin origin_;
};

inline Literal apply(const Substitution& s, const Literal& l) {
  return Literal(l.positive(), s.apply(l.atom()));
}

inline Clause apply(const Substitution& s, const Clause& c) {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& l : c.literals()) lits.push_back(apply(s, l));
  return Clause(std::move(lits), c.id(), c.origin());
}

/// Returns a variant of `c` whose variables are freshly issued and therefore
/// disjoint from every clause renamed with an earlier counter state.
inline Clause rename_apart(const Clause& c, FreshVars& fresh) {
  Substitution renaming;
  for (Term v : c.variables()) renaming.bind(v, fresh.fresh());
  if (renaming.empty()) return c;
  return apply(renaming, c);
}

/// Literal sequence with variables renamed canonically (left-to-right first
/// occurrence). Two clauses are variants iff their canonical literal
/// sequences are identical.
inline std::vector<Literal> canonical_literals(const Clause& c) {
  Substitution renaming;
  std::size_t next = 0;
  for (Term v : c.variables())
    renaming.bind(v, Term::variable("*" + std::to_string(next++)));
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c.literals()) out.push_back(apply(renaming, l));
  return out;
}

inline bool is_variant(const Clause& c1, const Clause& c2) {
  if (c1.size() != c2.size()) return false;
  return canonical_literals(c1) == canonical_literals(c2);
}

/// Hashable key for variant-modulo filtering of clause sets.
struct ClauseKey {
  std::vector<Literal> canon;

  explicit ClauseKey(const Clause& c) : canon(canonical_literals(c)) {}
  bool operator==(const ClauseKey& other) const = default;
};

struct ClauseKeyHash {
  std::size_t operator()(const ClauseKey& k) const {
    std::size_t h = 0x51ab5e1e;
    for (const Literal& l : k.canon) h = detail::hash_combine(h, l.hash());
    return h;
  }
};

}  // namespace instantia

template <>
struct std::hash<instantia::Literal> {
  std::size_t operator()(const instantia::Literal& l) const { return l.hash(); }
};
