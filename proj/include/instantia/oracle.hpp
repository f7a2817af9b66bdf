#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "instantia/engine.hpp"
#include "instantia/grounding.hpp"
#include "instantia/model.hpp"
#include "instantia/sat.hpp"
#include "instantia/tptp.hpp"

namespace instantia {

struct OracleOptions {
  std::uint64_t max_ground_clauses = 1000000;
};

class OracleRefusal : public std::runtime_error {
public:
  explicit OracleRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline void check_oracle_pre(const Problem& p, const OracleOptions& opts,
                             const std::vector<Term>& domain) {
  if (!p.is_epr)
    throw OracleRefusal("herbrand oracle requires an EPR (function-free) problem");
  std::uint64_t total = 0;
  for (const Clause& c : p.clauses) {
    total += grounding_count(c.variables().size(), domain.size(),
                             opts.max_ground_clauses);
    if (total > opts.max_ground_clauses)
      throw OracleRefusal("grounding size estimate " + std::to_string(total) +
                          "+ exceeds bound " +
                          std::to_string(opts.max_ground_clauses));
  }
}

}  // namespace detail

/// Ground-truth satisfiability for EPR: enumerate all ground instances over
/// the constant domain (a fresh constant if there is none), abstract, and
/// run the SAT solver. On Sat, `model_out` (if given) receives the ground
/// model as a certificate. `count_out` (if given) receives the number of
/// ground clauses produced.
inline ProverStatus herbrand_oracle(const Problem& p,
                                    const OracleOptions& opts = {},
                                    ModelCertificate* model_out = nullptr,
                                    std::uint64_t* count_out = nullptr) {
  std::vector<std::string> domain_names = certificate_domain(p);
  std::vector<Term> domain = domain_terms(domain_names);
  detail::check_oracle_pre(p, opts, domain);

  PropAbstraction abstraction;
  SatSolver solver;
  std::uint64_t count = 0;
  for (const Clause& c : p.clauses) {
    std::vector<Term> vars = c.variables();
    for_each_grounding(vars, domain, [&](const Substitution& g) {
      std::size_t idx = abstraction.add_clause(apply(g, c));
      solver.ensure_vars(abstraction.num_vars());
      solver.add_clause(abstraction.cnf()[idx]);
      ++count;
      return true;
    });
  }
  if (count_out) *count_out = count;
  if (solver.solve() == SatStatus::Unsat) return ProverStatus::Unsatisfiable;
  if (model_out) {
    ModelCertificate cert;
    cert.domain = domain_names;
    const std::vector<bool>& model = solver.model();
    for (int v = 1; v <= abstraction.num_vars(); ++v) {
      if (model[static_cast<std::size_t>(v)]) {
        cert.literals.push_back(Literal(true, abstraction.atom_of(v)));
        cert.provenance.push_back(-1);
      }
    }
    *model_out = std::move(cert);
  }
  return ProverStatus::Satisfiable;
}

/// Checks a satisfiability certificate exhaustively: every ground instance
/// of every clause over the input constants (plus the certificate domain)
/// must hold under the induced interpretation. Refuses non-EPR problems,
/// where this check would not terminate in general.
inline bool verify_model(const Problem& p, const ModelCertificate& cert,
                         std::string* failure = nullptr) {
  if (!p.is_epr)
    throw std::invalid_argument("verify_model requires an EPR problem");
  std::vector<std::string> names = p.constants;
  for (const auto& d : cert.domain)
    if (std::find(names.begin(), names.end(), d) == names.end())
      names.push_back(d);
  if (names.empty()) names = certificate_domain(p);
  std::vector<Term> domain = domain_terms(names);

  Interpretation interp = cert.interpretation();
  for (const Clause& c : p.clauses) {
    std::vector<Term> vars = c.variables();
    bool ok = for_each_grounding(vars, domain, [&](const Substitution& g) {
      Clause ground = apply(g, c);
      if (!interp.satisfies(ground)) {
        if (failure)
          *failure = "clause " + std::to_string(c.id()) + " instance '" +
                     ground.to_string() + "' is false";
        return false;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace instantia
