#pragma once

// Brute-force search for derivation sequences phi_1 .. phi_n of distinct
// clauses of F with
//   phi_1 = psi, phi_n = phi,
//   ant(phi_{i+1}) within the antecedents and consequents of phi_1 .. phi_i,
//   every consequent of phi_2 .. phi_{n-1} used in a later antecedent.

#include <algorithm>
#include <set>
#include <vector>

#include "cground/clause.hpp"

namespace support {

using cground::Atom;
using cground::DefiniteClause;

namespace detail {

inline bool consequents_used(const std::vector<const DefiniteClause*>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    bool used = false;
    for (std::size_t j = i + 1; j < seq.size() && !used; ++j) used = seq[j]->in_antecedent(seq[i]->consequent());
    if (!used) return false;
  }
  return true;
}

inline bool extend(const std::vector<DefiniteClause>& f, const DefiniteClause& phi,
                   std::vector<const DefiniteClause*>& seq, std::vector<bool>& used, std::set<Atom>& known) {
  const auto covered = [&](const DefiniteClause& c) {
    return std::all_of(c.antecedent().begin(), c.antecedent().end(), [&](Atom a) { return known.contains(a); });
  };
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (used[k] || !covered(f[k])) continue;
    seq.push_back(&f[k]);
    if (f[k] == phi) {
      const bool ok = consequents_used(seq);
      seq.pop_back();
      if (ok) return true;
      continue;
    }
    used[k] = true;
    const bool fresh = known.insert(f[k].consequent()).second;
    const bool found = extend(f, phi, seq, used, known);
    if (fresh) known.erase(f[k].consequent());
    used[k] = false;
    seq.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace detail

/// Whether a derivation of phi w.r.t. psi and f exists; psi and phi must be in f.
inline bool has_derivation(const std::vector<DefiniteClause>& f, const DefiniteClause& psi,
                           const DefiniteClause& phi) {
  if (psi == phi) return true;
  std::vector<bool> used(f.size(), false);
  const auto start = std::find(f.begin(), f.end(), psi);
  if (start == f.end() || std::find(f.begin(), f.end(), phi) == f.end()) return false;
  used[start - f.begin()] = true;
  std::set<Atom> known(psi.antecedent().begin(), psi.antecedent().end());
  known.insert(psi.consequent());
  std::vector<const DefiniteClause*> seq{&*start};
  return detail::extend(f, phi, seq, used, known);
}

}  // namespace support
