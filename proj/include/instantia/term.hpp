#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace instantia {

enum class TermKind : std::uint8_t { Variable, Constant, Compound };

class Term;

namespace detail {

struct TermNode {
  TermKind kind;
  bool ground;
  std::size_t hash;
  std::string name;         // variable name, constant symbol, or functor
  std::vector<Term> args;   // empty unless Compound
};

}  // namespace detail

/// Handle to a hash-consed term node. Structural equality is pointer
/// equality; nodes are immutable and live for the whole process.
class Term {
public:
  Term() : node_(nullptr) {}

  static Term variable(std::string_view name);
  static Term constant(std::string_view name);
  static Term compound(std::string_view functor, std::vector<Term> args);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const { return node_->kind; }
  bool is_variable() const { return node_->kind == TermKind::Variable; }
  bool is_constant() const { return node_->kind == TermKind::Constant; }
  bool is_compound() const { return node_->kind == TermKind::Compound; }
  bool is_ground() const { return node_->ground; }

  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Term& other) const = default;

  /// True iff `var` occurs anywhere in this term (occurs check).
  bool contains(Term var) const {
    if (*this == var) return true;
    if (var.is_variable() && is_ground()) return false;
    if (is_compound()) {
      for (Term a : args())
        if (a.contains(var)) return true;
    }
    return false;
  }

  /// Appends variables in first-occurrence order, skipping ones already in `out`.
  void collect_variables(std::vector<Term>& out) const {
    if (is_ground()) return;
    if (is_variable()) {
      for (Term v : out)
        if (v == *this) return;
      out.push_back(*this);
      return;
    }
    for (Term a : args()) a.collect_variables(out);
  }

  std::vector<Term> variables() const {
    std::vector<Term> out;
    collect_variables(out);
    return out;
  }

  std::string to_string() const {
    std::string s = name();
    if (is_compound()) {
      s += '(';
      bool first = true;
      for (Term a : args()) {
        if (!first) s += ',';
        first = false;
        s += a.to_string();
      }
      s += ')';
    }
    return s;
  }

private:
  friend struct detail::TermNode;
  explicit Term(const detail::TermNode* node) : node_(node) {}

  const detail::TermNode* node_;

  static const detail::TermNode* intern(detail::TermNode&& proto);
};

namespace detail {

struct NodeHash {
  using is_transparent = void;
  std::size_t operator()(const TermNode* n) const { return n->hash; }
};

struct NodeEq {
  bool operator()(const TermNode* a, const TermNode* b) const {
    return a->kind == b->kind && a->hash == b->hash && a->name == b->name &&
           a->args == b->args;
  }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

inline std::size_t node_hash(const TermNode& n) {
  std::size_t h = hash_combine(std::hash<int>{}(static_cast<int>(n.kind)),
                               std::hash<std::string>{}(n.name));
  for (Term a : n.args) h = hash_combine(h, a.hash());
  return h;
}

// Process-wide interner. Insertion is locked; interned nodes are immutable
// and may be read concurrently. Nodes are never freed.
class TermBank {
public:
  const TermNode* intern(TermNode&& proto) {
    proto.hash = node_hash(proto);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = set_.find(&proto);
    if (it != set_.end()) return *it;
    auto* owned = new TermNode(std::move(proto));
    set_.insert(owned);
    return owned;
  }

  static TermBank& instance() {
    static TermBank bank;
    return bank;
  }

private:
  std::mutex mutex_;
  std::unordered_set<TermNode*, NodeHash, NodeEq> set_;
};

}  // namespace detail

inline const detail::TermNode* Term::intern(detail::TermNode&& proto) {
  return detail::TermBank::instance().intern(std::move(proto));
}

inline Term Term::variable(std::string_view name) {
  detail::TermNode proto{TermKind::Variable, false, 0, std::string(name), {}};
  return Term(intern(std::move(proto)));
}

inline Term Term::constant(std::string_view name) {
  detail::TermNode proto{TermKind::Constant, true, 0, std::string(name), {}};
  return Term(intern(std::move(proto)));
}

inline Term Term::compound(std::string_view functor, std::vector<Term> args) {
  if (args.empty()) return constant(functor);
  bool ground = true;
  for (Term a : args) {
    assert(a.valid());
    ground = ground && a.is_ground();
  }
  detail::TermNode proto{TermKind::Compound, ground, 0, std::string(functor),
                         std::move(args)};
  return Term(intern(std::move(proto)));
}

/// Issues process-unique variables. The names use a leading underscore,
/// which the input grammar cannot produce, so fresh variables never clash
/// with parsed ones. Confine one generator to one engine run.
class FreshVars {
public:
  explicit FreshVars(std::uint64_t start = 0) : counter_(start) {}
  Term fresh() { return Term::variable("_" + std::to_string(counter_++)); }
  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t counter_;
};

}  // namespace instantia

template <>
struct std::hash<instantia::Term> {
  std::size_t operator()(const instantia::Term& t) const { return t.hash(); }
};
