#pragma once

#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "instantia/clause.hpp"
#include "instantia/tptp.hpp"
#include "instantia/unify.hpp"

namespace instantia {

/// Interpretation induced by an ordered list of possibly non-ground
/// literals: a ground atom takes its polarity from the most specific
/// matching literal; between variants or incomparable matches the later
/// entry wins; atoms matched by nothing are false.
class Interpretation {
public:
  Interpretation() = default;
  explicit Interpretation(std::vector<Literal> literals)
      : literals_(std::move(literals)) {}

  const std::vector<Literal>& literals() const { return literals_; }

  bool value(Term ground_atom) const {
    const Literal* winner = nullptr;
    for (const Literal& l : literals_) {
      if (!matches_onto(l.atom(), ground_atom)) continue;
      if (winner == nullptr || !more_specific_atom(winner->atom(), l.atom()))
        winner = &l;
    }
    return winner != nullptr && winner->positive();
  }

  bool satisfies(const Literal& ground_lit) const {
    return value(ground_lit.atom()) == ground_lit.positive();
  }

  bool satisfies(const Clause& ground_clause) const {
    for (const Literal& l : ground_clause.literals())
      if (satisfies(l)) return true;
    return false;
  }

private:
  std::vector<Literal> literals_;
};

/// Enumerates every mapping of `vars` into `domain` in lexicographic order
/// (first variable most significant, domain in given order). Calls `fn`
/// once with the empty substitution when `vars` is empty. Returns false if
/// `fn` ever returns false (early stop).
template <typename Fn>
bool for_each_grounding(std::span<const Term> vars, std::span<const Term> domain,
                        Fn&& fn) {
  if (vars.empty()) {
    return fn(Substitution());
  }
  assert(!domain.empty());
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Substitution sub;
    for (std::size_t i = 0; i < vars.size(); ++i) sub.bind(vars[i], domain[idx[i]]);
    if (!fn(sub)) return false;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
  }
}

/// Number of ground instances |domain|^|vars|, saturating at `cap`.
inline std::uint64_t grounding_count(std::size_t num_vars, std::size_t domain_size,
                                     std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (n > cap / (domain_size == 0 ? 1 : domain_size)) return cap;
    n *= domain_size;
  }
  return n;
}

/// Satisfiability certificate: an ordered literal list inducing an
/// interpretation (see Interpretation), the certified constant domain, and
/// per-literal provenance (generating clause id, -1 if not applicable).
struct ModelCertificate {
  std::vector<Literal> literals;
  std::vector<ClauseId> provenance;
  std::vector<std::string> domain;

  Interpretation interpretation() const { return Interpretation(literals); }

  std::string to_text() const {
    std::string out = "% domain:";
    for (const auto& c : domain) out += " " + c;
    out += "\n";
    for (std::size_t i = 0; i < literals.size(); ++i) {
      Substitution canon;
      std::size_t next = 1;
      std::vector<Term> vars = literals[i].atom().variables();
      for (Term v : vars) canon.bind(v, Term::variable("X" + std::to_string(next++)));
      out += apply(canon, literals[i]).to_string();
      if (i < provenance.size() && provenance[i] >= 0)
        out += " % from clause " + std::to_string(provenance[i]);
      out += "\n";
    }
    return out;
  }

  static ModelCertificate from_text(std::string_view text) {
    ModelCertificate cert;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '%') {
        std::size_t d = line.find("domain:");
        if (d != std::string::npos) {
          std::istringstream ds(line.substr(d + 7));
          std::string c;
          while (ds >> c) cert.domain.push_back(c);
        }
        continue;
      }
      cert.literals.push_back(parse_literal_text(line.substr(start)));
      cert.provenance.push_back(-1);
    }
    return cert;
  }
};

}  // namespace instantia
