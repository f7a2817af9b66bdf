#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "instantia/clause.hpp"
#include "instantia/model.hpp"
#include "instantia/tptp.hpp"
#include "instantia/unify.hpp"

namespace instantia {

enum class ProverStatus { Unsatisfiable, Satisfiable, ResourceOut };

inline std::string to_string(ProverStatus s) {
  switch (s) {
    case ProverStatus::Unsatisfiable: return "Unsatisfiable";
    case ProverStatus::Satisfiable: return "Satisfiable";
    case ProverStatus::ResourceOut: return "ResourceOut";
  }
  return "?";
}

struct ResourceLimits {
  double timeout_sec = 30.0;
  std::uint64_t max_instances = 100000;
  bool audit = true;  // per-instance soundness audit against the inputs
};

class Deadline {
public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const { return std::chrono::steady_clock::now() >= end_; }

private:
  std::chrono::steady_clock::time_point end_;
};

struct EngineStats {
  std::uint64_t instances = 0;    // clause instances generated and kept
  std::uint64_t sat_calls = 0;
  std::uint64_t expansions = 0;   // tableau expansions
  std::uint64_t splits = 0;       // semantic-tree splits
  std::uint64_t closed_branches = 0;
  std::uint64_t rounds = 0;
  std::uint64_t audits = 0;       // soundness audits performed
  std::uint64_t active = 0;       // final active-set size (saturation engines)
};

struct EngineResult {
  ProverStatus status = ProverStatus::ResourceOut;
  std::string reason;  // set on ResourceOut
  EngineStats stats;
  std::optional<ModelCertificate> model;  // set on Satisfiable
  std::string proof;                      // trace / tableau / tree dump
};

/// True iff `c` literal-wise matches some input clause (a one-way matcher
/// maps the input onto `c`).
inline bool instance_of_some_input(const Clause& c, std::span<const Clause> inputs) {
  for (const Clause& in : inputs)
    if (clause_match(in, c)) return true;
  return false;
}

/// Soundness audit: every derived clause must be an instance of an input
/// clause. A failure here is an engine bug, not a prover outcome.
inline void audit_instance(const Clause& c, std::span<const Clause> inputs,
                           EngineStats& stats) {
  ++stats.audits;
  if (!instance_of_some_input(c, inputs))
    throw std::logic_error("soundness audit failed: derived clause '" +
                           c.to_string() + "' matches no input clause");
}

/// Instance bound for function-free inputs: N * (k+1)^v with N input
/// clauses, k constants (at least one, as the Herbrand domain of a
/// constant-free problem gets a fresh constant) and v the maximum number of
/// distinct variables in any input clause. Saturates at 10^15.
inline std::uint64_t epr_instance_bound(const Problem& p) {
  constexpr std::uint64_t kCap = 1000000000000000ull;
  std::uint64_t k = std::max<std::uint64_t>(p.constants.size(), 1);
  std::size_t vmax = 0;
  for (const Clause& c : p.clauses) vmax = std::max(vmax, c.variables().size());
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < vmax; ++i) {
    if (bound > kCap / (k + 1)) return kCap;
    bound *= k + 1;
  }
  if (bound > kCap / std::max<std::uint64_t>(p.clauses.size(), 1)) return kCap;
  return bound * p.clauses.size();
}

/// Certified domain for model output: the problem constants, or one fresh
/// constant when there are none (first of c0, c1, ... that is unused).
inline std::vector<std::string> certificate_domain(const Problem& p) {
  if (!p.constants.empty()) return p.constants;
  for (int i = 0;; ++i) {
    std::string name = "c" + std::to_string(i);
    if (!p.functions.count(name)) return {name};
  }
}

inline std::vector<Term> domain_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Term::constant(n));
  return out;
}

}  // namespace instantia
