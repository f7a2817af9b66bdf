#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "instantia/term.hpp"

namespace instantia {

/// Finite map variable -> term with simultaneous-application semantics:
/// apply() replaces each bound variable once, without chasing bindings.
/// Identity bindings x -> x are never stored. Bindings are kept sorted by
/// variable name so iteration and printing are deterministic.
class Substitution {
public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  std::optional<Term> lookup(Term var) const {
    auto it = find(var);
    if (it == bindings_.end() || it->first != var) return std::nullopt;
    return it->second;
  }

  /// Adds or overwrites a binding. Identity bindings are dropped.
  void bind(Term var, Term value) {
    assert(var.is_variable());
    if (var == value) {
      auto it = find(var);
      if (it != bindings_.end() && it->first == var) bindings_.erase(it);
      return;
    }
    auto it = find(var);
    if (it != bindings_.end() && it->first == var) {
      it->second = value;
    } else {
      bindings_.insert(it, {var, value});
    }
  }

  Term apply(Term t) const {
    if (bindings_.empty() || t.is_ground()) return t;
    if (t.is_variable()) {
      auto v = lookup(t);
      return v ? *v : t;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (Term a : t.args()) {
      Term b = apply(a);
      changed = changed || b != a;
      args.push_back(b);
    }
    if (!changed) return t;
    return Term::compound(t.name(), std::move(args));
  }

  /// Composition: apply(a.compose(b), t) == b.apply(a.apply(t)).
  Substitution compose(const Substitution& then) const {
    Substitution out;
    for (const auto& [var, value] : bindings_) out.bind(var, then.apply(value));
    for (const auto& [var, value] : then.bindings_) {
      if (!lookup(var)) out.bind(var, value);
    }
    return out;
  }

  const std::vector<std::pair<Term, Term>>& bindings() const { return bindings_; }

  bool operator==(const Substitution& other) const = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [var, value] : bindings_) {
      if (!first) s += ", ";
      first = false;
      s += var.to_string();
      s += " -> ";
      s += value.to_string();
    }
    s += "}";
    return s;
  }

private:
  std::vector<std::pair<Term, Term>>::iterator find(Term var) {
    return std::lower_bound(
        bindings_.begin(), bindings_.end(), var,
        [](const auto& entry, Term v) { return entry.first.name() < v.name(); });
  }
  std::vector<std::pair<Term, Term>>::const_iterator find(Term var) const {
    return std::lower_bound(
        bindings_.begin(), bindings_.end(), var,
        [](const auto& entry, Term v) { return entry.first.name() < v.name(); });
  }

  std::vector<std::pair<Term, Term>> bindings_;
};

}  // namespace instantia
