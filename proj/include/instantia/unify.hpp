#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "instantia/clause.hpp"
#include "instantia/substitution.hpp"
#include "instantia/term.hpp"

namespace instantia {

namespace detail {

using Bindings = std::unordered_map<Term, Term>;

inline Term walk(Term t, const Bindings& b) {
  while (t.is_variable()) {
    auto it = b.find(t);
    if (it == b.end()) break;
    t = it->second;
  }
  return t;
}

inline bool occurs(Term var, Term t, const Bindings& b) {
  t = walk(t, b);
  if (t == var) return true;
  if (t.is_compound()) {
    for (Term a : t.args())
      if (occurs(var, a, b)) return true;
  }
  return false;
}

inline bool unify_rec(Term a, Term b, Bindings& bind) {
  a = walk(a, bind);
  b = walk(b, bind);
  if (a == b) return true;
  if (a.is_variable()) {
    if (occurs(a, b, bind)) return false;
    bind.emplace(a, b);
    return true;
  }
  if (b.is_variable()) {
    if (occurs(b, a, bind)) return false;
    bind.emplace(b, a);
    return true;
  }
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!unify_rec(a.args()[i], b.args()[i], bind)) return false;
  return true;
}

// Fully resolves triangular bindings into a term without bound variables.
// Terminates because the occurs check keeps the binding graph acyclic.
inline Term resolve(Term t, const Bindings& bind, std::unordered_map<Term, Term>& memo) {
  if (t.is_ground()) return t;
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  Term out;
  if (t.is_variable()) {
    Term w = walk(t, bind);
    out = w.is_variable() ? w : resolve(w, bind, memo);
  } else {
    std::vector<Term> args;
    args.reserve(t.arity());
    for (Term a : t.args()) args.push_back(resolve(a, bind, memo));
    out = Term::compound(t.name(), std::move(args));
  }
  memo.emplace(t, out);
  return out;
}

}  // namespace detail

/// Most general unifier of two terms (Robinson, with occurs check).
/// The result is idempotent. Failure is an outcome, not a fault.
inline std::optional<Substitution> mgu(Term a, Term b) {
  detail::Bindings bind;
  if (!detail::unify_rec(a, b, bind)) return std::nullopt;
  Substitution out;
  std::unordered_map<Term, Term> memo;
  for (const auto& [var, _] : bind)
    out.bind(var, detail::resolve(var, bind, memo));
  return out;
}

namespace detail {

inline bool match_rec(Term general, Term specific, Substitution& out) {
  if (general.is_variable()) {
    if (auto bound = out.lookup(general)) return *bound == specific;
    out.bind(general, specific);
    return true;
  }
  if (general.kind() != specific.kind() || general.name() != specific.name() ||
      general.arity() != specific.arity())
    return false;
  for (std::size_t i = 0; i < general.arity(); ++i)
    if (!match_rec(general.args()[i], specific.args()[i], out)) return false;
  return true;
}

}  // namespace detail

/// One-way matcher: binds only variables of `general` so that
/// apply(result, general) == specific. Variables of `specific` are rigid.
inline std::optional<Substitution> match(Term general, Term specific) {
  Substitution out;
  if (!detail::match_rec(general, specific, out)) return std::nullopt;
  return out;
}

inline bool matches_onto(Term general, Term specific) {
  return match(general, specific).has_value();
}

/// Literal-wise one-way clause matcher (order-sensitive, single consistent
/// substitution across all literals).
inline std::optional<Substitution> clause_match(const Clause& general,
                                                const Clause& specific) {
  if (general.size() != specific.size()) return std::nullopt;
  Substitution out;
  for (std::size_t i = 0; i < general.size(); ++i) {
    if (general[i].positive() != specific[i].positive()) return std::nullopt;
    if (!detail::match_rec(general[i].atom(), specific[i].atom(), out))
      return std::nullopt;
  }
  return out;
}

/// True iff c1 is an instance of c2 but not a variant of it.
inline bool is_proper_instance(const Clause& c1, const Clause& c2) {
  return clause_match(c2, c1).has_value() && !is_variant(c1, c2);
}

/// Strict instance ordering on atoms: a is more specific than b.
inline bool more_specific_atom(Term a, Term b) {
  return matches_onto(b, a) && !matches_onto(a, b);
}

/// A pair of opposite-polarity literals in two clauses whose atoms unify.
struct Link {
  ClauseId clause1 = -1;
  int lit1 = -1;
  ClauseId clause2 = -1;
  int lit2 = -1;
  Substitution sigma;
};

/// All links between two clauses. The clauses must not share variables.
inline std::vector<Link> find_links_between(const Clause& a, const Clause& b) {
  std::vector<Link> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Literal& la = a[i];
      const Literal& lb = b[j];
      if (la.positive() == lb.positive()) continue;
      if (la.predicate() != lb.predicate()) continue;
      if (la.predicate_arity() != lb.predicate_arity()) continue;
      if (auto s = mgu(la.atom(), lb.atom()))
        out.push_back({a.id(), static_cast<int>(i), b.id(), static_cast<int>(j),
                       std::move(*s)});
    }
  }
  return out;
}

/// (predicate, arity, polarity)-bucketed index over a clause sequence.
/// Avoids quadratic literal scans when finding links.
class LiteralIndex {
public:
  void add(std::size_t clause_pos, const Clause& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Literal& l = c[i];
      buckets_[key(l.predicate(), l.predicate_arity(), l.positive())].push_back(
          {clause_pos, i});
    }
  }

  /// Occurrences of opposite-polarity literals with the same predicate.
  std::span<const std::pair<std::size_t, std::size_t>> complements(
      const Literal& l) const {
    auto it = buckets_.find(key(l.predicate(), l.predicate_arity(), !l.positive()));
    if (it == buckets_.end()) return {};
    return it->second;
  }

private:
  static std::string key(const std::string& pred, std::size_t arity, bool pos) {
    return (pos ? "+" : "-") + pred + "/" + std::to_string(arity);
  }

  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> buckets_;
};

/// Every link between `c` and the clauses of `against` (must be renamed
/// apart; a clause with the same id as `c` is skipped — engines handle
/// self-links by passing a renamed copy explicitly).
inline std::vector<Link> find_links(const Clause& c,
                                    std::span<const Clause> against) {
  LiteralIndex index;
  for (std::size_t pos = 0; pos < against.size(); ++pos)
    index.add(pos, against[pos]);
  std::vector<Link> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (auto [pos, j] : index.complements(c[i])) {
      const Clause& d = against[pos];
      if (d.id() == c.id()) continue;
      if (auto s = mgu(c[i].atom(), d[j].atom()))
        out.push_back({c.id(), static_cast<int>(i), d.id(), static_cast<int>(j),
                       std::move(*s)});
    }
  }
  return out;
}

}  // namespace instantia
