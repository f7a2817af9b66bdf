#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "instantia/clause.hpp"
#include "instantia/sat.hpp"
#include "instantia/term.hpp"

namespace instantia {

/// The reserved grounding constant. It lies outside the input grammar
/// (identifiers cannot start with '$'), so it never occurs in a parsed
/// signature.
inline constexpr std::string_view kBottomName = "$bot";

inline Term bottom_constant() { return Term::constant(kBottomName); }

/// Uniformly replaces every variable by the reserved constant.
inline Term bottom_ground(Term t) {
  if (t.is_ground()) return t;
  if (t.is_variable()) return bottom_constant();
  std::vector<Term> args;
  args.reserve(t.arity());
  for (Term a : t.args()) args.push_back(bottom_ground(a));
  return Term::compound(t.name(), std::move(args));
}

inline Literal bottom_ground(const Literal& l) {
  return Literal(l.positive(), bottom_ground(l.atom()));
}

inline Clause bottom_ground(const Clause& c) {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& l : c.literals()) lits.push_back(bottom_ground(l));
  return Clause(std::move(lits), c.id(), c.origin());
}

inline bool term_uses_reserved(Term t) {
  if (!t.is_variable() && t.name() == kBottomName) return true;
  if (t.is_compound()) {
    for (Term a : t.args())
      if (term_uses_reserved(a)) return true;
  }
  return false;
}

inline void check_reserved_constant(std::span<const Clause> clauses) {
  for (const Clause& c : clauses)
    for (const Literal& l : c.literals())
      if (term_uses_reserved(l.atom()))
        throw std::invalid_argument(
            "input uses the reserved grounding constant " + std::string(kBottomName));
}

/// Bijection between ground atoms and propositional variables, plus the
/// abstracted CNF. Grows incrementally; a source clause has exactly one
/// propositional image and variable indices are reused across additions.
/// Tautologous propositional clauses are retained.
class PropAbstraction {
public:
  /// Appends the bottom-grounding of `c`; returns the prop clause index.
  std::size_t add_clause(const Clause& c) {
    std::vector<int> prop;
    prop.reserve(c.size());
    for (const Literal& l : c.literals()) prop.push_back(lit_of(bottom_ground(l)));
    cnf_.push_back(std::move(prop));
    provenance_.push_back(c.id());
    return cnf_.size() - 1;
  }

  /// Signed propositional literal for a ground first-order literal,
  /// allocating a variable for an unseen atom.
  int lit_of(const Literal& ground_lit) {
    int v = ensure_var(ground_lit.atom());
    return ground_lit.positive() ? v : -v;
  }

  int ensure_var(Term ground_atom) {
    assert(ground_atom.is_ground());
    auto it = atom_var_.find(ground_atom);
    if (it != atom_var_.end()) return it->second;
    atoms_.push_back(ground_atom);
    int v = static_cast<int>(atoms_.size()) - 1;
    atom_var_.emplace(ground_atom, v);
    return v;
  }

  /// 0 when the atom has no variable yet.
  int var_of(Term ground_atom) const {
    auto it = atom_var_.find(ground_atom);
    return it == atom_var_.end() ? 0 : it->second;
  }

  int num_vars() const { return static_cast<int>(atoms_.size()) - 1; }
  std::size_t num_clauses() const { return cnf_.size(); }
  const std::vector<std::vector<int>>& cnf() const { return cnf_; }
  Term atom_of(int var) const { return atoms_[static_cast<std::size_t>(var)]; }
  ClauseId provenance(std::size_t prop_idx) const { return provenance_[prop_idx]; }

  /// True iff the ground literal's image holds under the model.
  bool literal_true(const Literal& ground_lit, const std::vector<bool>& model) const {
    int v = var_of(ground_lit.atom());
    if (v == 0) return false;
    return model[static_cast<std::size_t>(v)] == ground_lit.positive();
  }

  PropCNF to_cnf() const { return PropCNF{num_vars(), cnf_}; }

  void dump_dimacs(std::ostream& out) const {
    for (int v = 1; v <= num_vars(); ++v)
      out << "c " << v << " " << atoms_[static_cast<std::size_t>(v)].to_string()
          << "\n";
    out << "p cnf " << num_vars() << " " << cnf_.size() << "\n";
    for (const auto& clause : cnf_) {
      for (int l : clause) out << l << " ";
      out << "0\n";
    }
  }

private:
  std::unordered_map<Term, int> atom_var_;
  std::vector<Term> atoms_{Term()};  // index 0 unused
  std::vector<std::vector<int>> cnf_;
  std::vector<ClauseId> provenance_;
};

/// One chosen literal per clause whose bottom-grounded images are all true
/// under a propositional model. The image set never contains a
/// complementary pair.
struct Path {
  std::vector<int> choice;                 // literal index per clause position
  std::unordered_set<Literal> bottom_set;  // bottom images of chosen literals

  bool selects(std::size_t clause_pos, int lit_idx) const {
    return choice[clause_pos] == lit_idx;
  }
  /// Membership of the literal's bottom image in the path set.
  bool selects_bottom(const Literal& l) const {
    return bottom_set.count(bottom_ground(l)) > 0;
  }
};

/// Precondition: `model` satisfies the abstraction of `clauses` (which must
/// be the clauses the abstraction was built from, in order).
inline Path extract_path(const std::vector<bool>& model,
                         std::span<const Clause> clauses,
                         const PropAbstraction& abstraction) {
  Path path;
  path.choice.reserve(clauses.size());
  for (const Clause& c : clauses) {
    int chosen = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Literal img = bottom_ground(c[i]);
      if (abstraction.literal_true(img, model)) {
        chosen = static_cast<int>(i);
        path.bottom_set.insert(img);
        break;
      }
    }
    assert(chosen >= 0 && "model does not satisfy the abstraction");
    path.choice.push_back(chosen);
  }
  return path;
}

}  // namespace instantia
