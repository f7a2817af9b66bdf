#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace instantia {

/// Propositional CNF over variables 1..num_vars; literals are signed indices.
struct PropCNF {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Assigns `value` to `var`: clauses satisfied by the assignment are removed,
/// falsified literal occurrences are deleted. An empty clause in the result
/// signals a contradiction to the caller.
inline PropCNF simplify(const PropCNF& cnf, int var, bool value) {
  PropCNF out;
  out.num_vars = cnf.num_vars;
  const int true_lit = value ? var : -var;
  for (const auto& clause : cnf.clauses) {
    bool satisfied = false;
    std::vector<int> rest;
    for (int lit : clause) {
      if (lit == true_lit) {
        satisfied = true;
        break;
      }
      if (lit != -true_lit) rest.push_back(lit);
    }
    if (!satisfied) out.clauses.push_back(std::move(rest));
  }
  return out;
}

enum class SatStatus { Sat, Unsat };

/// DPLL solver with two-watched-literal unit propagation and chronological
/// backtracking. Branching picks the unassigned variable with the highest
/// occurrence count (ties by lowest index), trying true first. Clauses may
/// be appended between solve calls; nothing learned is kept, which stays
/// sound under clause addition. Fully deterministic.
class SatSolver {
public:
  void ensure_vars(int n) {
    if (n > num_vars_) num_vars_ = n;
  }

  void add_clause(std::vector<int> lits) {
    for (int l : lits) {
      if (l == 0) throw std::invalid_argument("zero literal in clause");
      ensure_vars(std::abs(l));
    }
    clauses_.push_back(std::move(lits));
  }

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }
  std::uint64_t solve_calls() const { return solve_calls_; }

  /// Model valid after a Sat result; index 1..num_vars.
  const std::vector<bool>& model() const { return model_; }

  SatStatus solve() {
    ++solve_calls_;
    val_.assign(num_vars_ + 1, 0);
    trail_.clear();
    trail_lim_.clear();
    decisions_.clear();
    qhead_ = 0;

    // Static branching order for this call.
    std::vector<int> count(num_vars_ + 1, 0);
    for (const auto& c : clauses_)
      for (int l : c) ++count[std::abs(l)];
    order_.resize(num_vars_);
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return count[a] > count[b]; });

    init_watches();
    for (const auto& c : clauses_) {
      if (c.empty()) return SatStatus::Unsat;
      if (c.size() == 1 && !enqueue(c[0])) return SatStatus::Unsat;
    }
    while (!propagate()) {
      if (!resolve_conflict()) return SatStatus::Unsat;
    }

    for (;;) {
      int v = pick_branch_var();
      if (v == 0) {
        model_.assign(num_vars_ + 1, false);
        for (int i = 1; i <= num_vars_; ++i) model_[i] = val_[i] > 0;
        return SatStatus::Sat;
      }
      trail_lim_.push_back(trail_.size());
      decisions_.push_back({v, false});
      enqueue(v);
      while (!propagate()) {
        if (!resolve_conflict()) return SatStatus::Unsat;
      }
    }
  }

private:
  struct Decision {
    int var;
    bool flipped;
  };

  static std::size_t lit_slot(int l) {
    return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0);
  }

  int value(int l) const {
    int v = val_[std::abs(l)];
    return l > 0 ? v : -v;
  }

  bool enqueue(int l) {
    int v = value(l);
    if (v > 0) return true;
    if (v < 0) return false;
    val_[std::abs(l)] = l > 0 ? 1 : -1;
    trail_.push_back(l);
    return true;
  }

  void init_watches() {
    watch_.assign(2 * (num_vars_ + 1), {});
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      auto& c = clauses_[ci];
      if (c.size() >= 2) {
        watch_[lit_slot(c[0])].push_back(ci);
        watch_[lit_slot(c[1])].push_back(ci);
      }
    }
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      const int lit = trail_[qhead_++];
      auto& ws = watch_[lit_slot(-lit)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::size_t ci = ws[i];
        auto& c = clauses_[ci];
        if (c[0] == -lit) std::swap(c[0], c[1]);
        if (value(c[0]) > 0) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watch_[lit_slot(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (!enqueue(c[0])) {
          while (++i < ws.size()) ws[keep++] = ws[i];
          ws.resize(keep);
          return false;
        }
      }
      ws.resize(keep);
    }
    return true;
  }

  /// Chronological backtracking: flip the deepest unflipped decision.
  bool resolve_conflict() {
    while (!decisions_.empty() && decisions_.back().flipped) {
      undo_level();
      decisions_.pop_back();
    }
    if (decisions_.empty()) return false;
    int v = decisions_.back().var;
    undo_to(trail_lim_.back());
    decisions_.back().flipped = true;
    enqueue(-v);
    return true;
  }

  void undo_level() {
    undo_to(trail_lim_.back());
    trail_lim_.pop_back();
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[std::abs(trail_.back())] = 0;
      trail_.pop_back();
    }
    qhead_ = trail_.size();
  }

  int pick_branch_var() const {
    for (int v : order_)
      if (val_[v] == 0) return v;
    return 0;
  }

  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::vector<int8_t> val_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;
  std::vector<Decision> decisions_;
  std::size_t qhead_ = 0;
  std::vector<int> order_;
  std::vector<bool> model_;
  std::uint64_t solve_calls_ = 0;
};

inline SatStatus solve(const PropCNF& cnf, std::vector<bool>* model = nullptr) {
  SatSolver solver;
  solver.ensure_vars(cnf.num_vars);
  for (const auto& c : cnf.clauses) solver.add_clause(c);
  SatStatus st = solver.solve();
  if (st == SatStatus::Sat && model) *model = solver.model();
  return st;
}

inline PropCNF parse_dimacs(std::istream& in) {
  PropCNF cnf;
  std::string line;
  bool header_seen = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ss(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      int nv = 0, nc = 0;
      if (!(ss >> p >> fmt >> nv >> nc) || fmt != "cnf")
        throw std::runtime_error("malformed DIMACS header: " + line);
      cnf.num_vars = nv;
      header_seen = true;
      continue;
    }
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        cnf.num_vars = std::max(cnf.num_vars, std::abs(lit));
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) cnf.clauses.push_back(current);
  if (!header_seen && cnf.clauses.empty() && cnf.num_vars == 0)
    throw std::runtime_error("empty DIMACS input");
  return cnf;
}

inline void write_dimacs(std::ostream& out, const PropCNF& cnf,
                         const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int l : clause) out << l << " ";
    out << "0\n";
  }
}

}  // namespace instantia
