#include "cground/entail.hpp"

#include <algorithm>

namespace cground {

ForwardChainer::ForwardChainer(std::vector<DefiniteClause> clauses) : clauses_(std::move(clauses)) {
  sorted_ = std::is_sorted(clauses_.begin(), clauses_.end());
  std::uint32_t max_id = 0;
  for (const auto& c : clauses_) {
    for (Atom a : c.antecedent()) max_id = std::max(max_id, a.id());
  }
  occ_offset_.assign(clauses_.empty() ? 1 : max_id + 2, 0);
  for (const auto& c : clauses_) {
    for (Atom a : c.antecedent()) ++occ_offset_[a.id() + 1];
  }
  for (std::size_t i = 1; i < occ_offset_.size(); ++i) occ_offset_[i] += occ_offset_[i - 1];
  occ_clause_.resize(occ_offset_.back());
  std::vector<std::uint32_t> fill(occ_offset_.begin(), occ_offset_.end() - 1);
  for (std::uint32_t i = 0; i < clauses_.size(); ++i) {
    for (Atom a : clauses_[i].antecedent()) occ_clause_[fill[a.id()]++] = i;
  }
  remaining_.resize(clauses_.size());
  fired_round_.assign(clauses_.size(), 0);
}

std::span<const std::uint32_t> ForwardChainer::occurrences(Atom a) const noexcept {
  if (a.id() + 1 >= occ_offset_.size()) return {};
  return {occ_clause_.data() + occ_offset_[a.id()], occ_clause_.data() + occ_offset_[a.id() + 1]};
}

void ForwardChainer::mark(Atom a, std::vector<std::uint32_t>& ready) {
  if (a.id() >= holds_.size()) holds_.resize(std::max<std::size_t>(Atom::universe_size(), a.id() + 1), 0);
  if (holds_[a.id()] != 0) return;
  holds_[a.id()] = 1;
  touched_.push_back(a);
  for (std::uint32_t ci : occurrences(a)) {
    if (--remaining_[ci] == 0 && ci != disabled_) ready.push_back(ci);
  }
}

void ForwardChainer::run(std::span<const Atom> seed, std::size_t disabled) {
  for (Atom a : touched_) holds_[a.id()] = 0;
  touched_.clear();
  disabled_ = disabled;
  rounds_ = 0;

  std::vector<std::uint32_t> ready;
  for (std::uint32_t i = 0; i < clauses_.size(); ++i) {
    remaining_[i] = static_cast<std::uint32_t>(clauses_[i].antecedent().size());
    fired_round_[i] = 0;
    if (remaining_[i] == 0 && i != disabled) ready.push_back(i);
  }
  for (Atom a : seed) mark(a, ready);

  std::vector<std::uint32_t> next;
  while (!ready.empty()) {
    ++rounds_;
    next.clear();
    for (std::uint32_t ci : ready) {
      fired_round_[ci] = static_cast<std::uint32_t>(rounds_);
      mark(clauses_[ci].consequent(), next);
    }
    ready.swap(next);
  }
}

bool ForwardChainer::holds_all(std::span<const Atom> atoms) const noexcept {
  return std::all_of(atoms.begin(), atoms.end(), [this](Atom a) { return holds(a); });
}

std::vector<Atom> ForwardChainer::derived() const {
  std::vector<Atom> out(touched_.begin(), touched_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> ForwardChainer::index_of(const DefiniteClause& c) const {
  if (sorted_) {
    auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
    if (it != clauses_.end() && *it == c) return static_cast<std::size_t>(it - clauses_.begin());
    return std::nullopt;
  }
  auto it = std::find(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - clauses_.begin());
}

Closure close(const HornExpression& f, std::span<const Atom> seed) {
  ForwardChainer chainer(f);
  chainer.run(seed);
  Closure out;
  const auto derived = chainer.derived();
  out.derived.insert(derived.begin(), derived.end());
  out.rounds = chainer.rounds();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < chainer.size(); ++i) {
    if (chainer.fired(i)) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return chainer.fired_round(a) < chainer.fired_round(b); });
  for (std::size_t i : order) out.used_clauses.push_back(chainer.clauses()[i]);
  return out;
}

bool entails_clause(const HornExpression& f, const DefiniteClause& c) {
  if (c.is_trivial()) return true;
  ForwardChainer chainer(f);
  chainer.run(c.antecedent());
  return chainer.holds(c.consequent());
}

bool derives(const HornExpression& f, const DefiniteClause& psi, const DefiniteClause& phi) {
  ForwardChainer chainer(f.with(psi));
  chainer.run(psi.antecedent());
  return chainer.holds_all(phi.antecedent());
}

}  // namespace cground
