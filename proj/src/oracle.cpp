#include "cground/oracle.hpp"

#include <algorithm>
#include <map>

#include "cground/analysis.hpp"
#include "bitlogic.hpp"

namespace cground {

namespace {

std::set<Atom> universe_of(const RuleFile& rf, const SearchBounds& bounds) {
  return bounds.universe ? *bounds.universe : rf.atoms();
}

/// Index sets {i_1 < ... < i_k}, 1 <= k <= max_size, over n options, in
/// order of size then lexicographically.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    cur.clear();
    for (std::size_t i = 0; i < k; ++i) cur.push_back(i);
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

/// The antecedent holds a disjoint pair, so the clause can never fire.
bool unsatisfiable(const DefiniteClause& c, const Background& b) {
  const auto ant = c.antecedent();
  for (std::size_t i = 0; i < ant.size(); ++i) {
    for (std::size_t j = i + 1; j < ant.size(); ++j) {
      if (b.disjoint(ant[i], ant[j])) return true;
    }
  }
  return false;
}

struct Space {
  HornExpression united;
  std::vector<DefiniteClause> inputs;
  std::vector<std::vector<DefiniteClause>> options;
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  std::uint64_t size = 1;
};

Space build_space(const RuleFile& rf, const SearchBounds& bounds) {
  if (bounds.max_weakenings == 0) throw std::invalid_argument("max_weakenings must be at least 1");
  Space s;
  s.united = rf.united();
  const auto universe = universe_of(rf, bounds);
  for (const auto& c : s.united.clauses()) {
    s.inputs.push_back(c);
    auto options = weakenings_of(c, universe, bounds.max_added_atoms);
    std::erase_if(options, [&](const DefiniteClause& w) { return w != c && unsatisfiable(w, rf.background); });
    s.options.push_back(std::move(options));
    s.choices.push_back(subsets(s.options.back().size(), bounds.max_weakenings));
    s.size = saturating_mul(s.size, s.choices.back().size());
  }
  return s;
}

}  // namespace

BoundsExplosion::BoundsExplosion(std::uint64_t size, std::uint64_t cap)
    : std::runtime_error("search space of " + (size == UINT64_MAX ? std::string(">= 2^64") : std::to_string(size)) +
                         " exceeds the cap of " + std::to_string(cap)),
      size_(size) {}

std::vector<DefiniteClause> weakenings_of(const DefiniteClause& c, const std::set<Atom>& universe,
                                          std::size_t max_added) {
  std::vector<Atom> extra;
  for (Atom a : universe) {
    if (a != c.consequent() && !c.in_antecedent(a)) extra.push_back(a);
  }
  std::vector<DefiniteClause> out;
  if (!c.is_trivial()) out.push_back(c);
  for (const auto& idx : subsets(extra.size(), max_added)) {
    DefiniteClause w = c;
    for (std::size_t i : idx) w = weaken(w, extra[i]);
    if (!w.is_trivial()) out.push_back(std::move(w));
  }
  return out;
}

CandidateStream::CandidateStream(const RuleFile& rf, const SearchBounds& bounds) {
  auto space = build_space(rf, bounds);
  if (space.size > bounds.cap) throw BoundsExplosion(space.size, bounds.cap);
  united_ = std::move(space.united);
  inputs_ = std::move(space.inputs);
  options_ = std::move(space.options);
  choices_ = std::move(space.choices);
  size_ = space.size;
  odometer_.assign(inputs_.size(), 0);
  done_ = size_ == 0;
}

std::optional<HornExpression> CandidateStream::next() {
  if (done_) return std::nullopt;
  HornExpression out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    for (std::size_t k : choices_[i][odometer_[i]]) out.insert(options_[i][k], united_.provenance(inputs_[i]));
  }
  std::size_t i = inputs_.size();
  while (i > 0) {
    --i;
    if (++odometer_[i] < choices_[i].size()) break;
    odometer_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (inputs_.empty()) done_ = true;
  return out;
}

namespace {

/// Bitmask screening of a full candidate for P2 and P6, assuming P1, P3,
/// P4 and P5 already hold (P1 and P3 are pruned on, P4 and P5 hold by construction).
class LeafScreen {
 public:
  LeafScreen(const bits::Encoder& enc, std::span<const HornExpression> inputs, const HornExpression& united,
             const Background& b, P6Scope scope)
      : enc_(enc), scope_(scope) {
    for (const auto& fi : inputs) {
      auto& v = stakeholders_.emplace_back();
      for (const auto& c : fi.clauses()) v.push_back(enc.encode(c));
    }
    for (const auto& c : united.clauses()) united_.push_back(enc.encode(c));
    united_coherent_ = is_coherent(united, b);
  }

  bool pass(std::span<const bits::Clause> g) const { return p2(g) && p6(g); }

 private:
  bool p2(std::span<const bits::Clause> g) const {
    if (!united_coherent_) return true;
    for (const auto& c : united_) {
      if (!bits::entails(g, c)) return false;
    }
    for (const auto& c : g) {
      if (!bits::entails(united_, c)) return false;
    }
    return true;
  }

  bool coherent_with(std::span<const bits::Clause> g, const bits::Clause& extra) const {
    if (std::find(g.begin(), g.end(), extra) != g.end()) return bits::coherent(g, enc_);
    std::vector<bits::Clause> h(g.begin(), g.end());
    h.push_back(extra);
    return bits::coherent(h, enc_);
  }

  bool p6(std::span<const bits::Clause> g) const {
    std::vector<bits::Clause> subs;
    for (const auto& phi : g) {
      for (unsigned p = 0; p < 64; ++p) {
        if (!(phi.ant & bits::bit(p))) continue;
        const bits::Mask excl = enc_.excludents(p);
        if (!excl) continue;
        subs.clear();
        for (unsigned q = 0; q < 64; ++q) {
          if (excl & bits::bit(q)) subs.push_back({(phi.ant & ~bits::bit(p)) | bits::bit(q), phi.cons});
        }
        const auto keeps = [&](const bits::Clause& s) { return coherent_with(g, s); };
        const bool premise = scope_ == P6Scope::AllExcludents ? std::all_of(subs.begin(), subs.end(), keeps)
                                                              : std::any_of(subs.begin(), subs.end(), keeps);
        if (!premise) continue;
        const bits::Clause dropped{phi.ant & ~bits::bit(p), phi.cons};
        for (const auto& fi : stakeholders_) {
          const bool some = std::any_of(subs.begin(), subs.end(), [&](const auto& s) { return bits::entails(fi, s); });
          if (some && bits::entails(fi, dropped)) return false;
        }
      }
    }
    return true;
  }

  const bits::Encoder& enc_;
  P6Scope scope_;
  std::vector<std::vector<bits::Clause>> stakeholders_;
  std::vector<bits::Clause> united_;
  bool united_coherent_ = false;
};

}  // namespace

namespace {

/// Static part of P6 for one weakening: for each antecedent atom p that some
/// stakeholder makes removable (it entails phi^{-p} and some phi^{q\p}), the
/// substitutions phi^{q\p}. In a common ground these must not all be coherent
/// with F (or, under the other scope, none may be).
struct P6Need {
  std::vector<bits::Clause> subs;
};

std::vector<P6Need> p6_needs(const bits::Clause& phi, const bits::Encoder& enc,
                             const std::vector<std::vector<bits::Clause>>& stakeholders) {
  std::vector<P6Need> out;
  for (unsigned p = 0; p < 64; ++p) {
    if (!(phi.ant & bits::bit(p)) || !enc.excludents(p)) continue;
    P6Need need;
    for (unsigned q = 0; q < 64; ++q) {
      if (enc.excludents(p) & bits::bit(q)) need.subs.push_back({(phi.ant & ~bits::bit(p)) | bits::bit(q), phi.cons});
    }
    const bits::Clause dropped{phi.ant & ~bits::bit(p), phi.cons};
    const bool removable = std::any_of(stakeholders.begin(), stakeholders.end(), [&](const auto& fi) {
      return bits::entails(fi, dropped) &&
             std::any_of(need.subs.begin(), need.subs.end(), [&](const auto& s) { return bits::entails(fi, s); });
    });
    if (removable) out.push_back(std::move(need));
  }
  return out;
}

/// Over-approximates "F u {s} is incoherent for some coherent F within `pool`".
/// With F coherent, any incoherence of F u {s} either sits on s (s entailed,
/// or a clash derivation between s and a clause) or runs through a
/// derivation in which s fires from the antecedent of some clause. All of
/// these are monotone in F, so testing them on the whole pool is sound.
class InteractionTest {
 public:
  InteractionTest(std::span<const bits::Clause> pool, const bits::Encoder& enc) : pool_(pool), enc_(enc) {
    closures_.reserve(pool.size());
    for (const auto& c : pool) closures_.push_back(bits::closure(pool, c.ant));
  }

  bool may_be_incoherent(const bits::Clause& s) const {
    const bits::Mask from_s = bits::closure(pool_, s.ant | bits::bit(s.cons));
    if (bits::closure(pool_, s.ant) & bits::bit(s.cons)) return true;
    const bits::Mask excl = enc_.excludents(s.cons);
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if ((s.ant & ~closures_[i]) == 0) return true;
      if ((excl & bits::bit(pool_[i].cons)) && (pool_[i].ant & ~from_s) == 0) return true;
    }
    return false;
  }

 private:
  std::span<const bits::Clause> pool_;
  const bits::Encoder& enc_;
  std::vector<bits::Mask> closures_;
};

bool justified(const std::vector<P6Need>& needs, const InteractionTest& test, P6Scope scope) {
  for (const auto& need : needs) {
    const auto hit = [&](const bits::Clause& s) { return test.may_be_incoherent(s); };
    const bool ok = scope == P6Scope::AllExcludents ? std::any_of(need.subs.begin(), need.subs.end(), hit)
                                                    : std::all_of(need.subs.begin(), need.subs.end(), hit);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

SearchResult search(const RuleFile& rf, const SearchBounds& bounds, const SearchOptions& options) {
  const auto space = build_space(rf, bounds);
  const auto inputs = rf.expressions();
  const auto& b = rf.background;
  const std::size_t n = space.inputs.size();
  SearchResult result;
  std::set<std::vector<DefiniteClause>> seen;

  std::set<Atom> atoms = rf.atoms();
  for (const auto& opts : space.options) {
    for (const auto& w : opts) {
      for (Atom a : w.antecedent()) atoms.insert(a);
    }
  }
  const auto enc = options.reference_checks ? std::nullopt : bits::Encoder::make(atoms, b);

  std::vector<std::vector<bits::Clause>> encoded(n);
  std::vector<bits::Clause> encoded_inputs;
  if (enc) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& w : space.options[i]) encoded[i].push_back(enc->encode(w));
    }
    for (const auto& c : space.inputs) encoded_inputs.push_back(enc->encode(c));
  }
  std::optional<LeafScreen> screen;
  std::vector<std::vector<std::vector<P6Need>>> needs(n);
  if (enc) {
    screen.emplace(*enc, inputs, space.united, b, options.postulates.p6_scope);
    std::vector<std::vector<bits::Clause>> stakeholders;
    for (const auto& fi : inputs) {
      auto& v = stakeholders.emplace_back();
      for (const auto& c : fi.clauses()) v.push_back(enc->encode(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& w : encoded[i]) needs[i].push_back(p6_needs(w, *enc, stakeholders));
    }
  }
  const P6Scope scope = options.postulates.p6_scope;

  HornExpression partial;
  std::vector<bits::Clause> gb;

  // A partial candidate stays viable while it is coherent and entails no
  // clash with an input clause. Adding clauses cannot undo either failure,
  // so a weakening that is not viable next to the partial candidate stays
  // dead further down, and a clause left without live weakenings cuts the branch.
  const auto viable = [&]() {
    if (enc) return bits::coherent(gb, *enc) && bits::clash_free(gb, encoded_inputs, *enc);
    return check_p3(inputs, partial, b).pass && is_coherent(partial, b);
  };
  const auto viable_with = [&](std::size_t i, std::size_t k) {
    if (enc) {
      const auto& w = encoded[i][k];
      if (std::find(gb.begin(), gb.end(), w) != gb.end()) return true;
      gb.push_back(w);
      const bool ok = viable();
      gb.pop_back();
      return ok;
    }
    const auto& w = space.options[i][k];
    if (partial.contains(w)) return true;
    const HornExpression g = partial.with(w);
    return check_p3(inputs, g, b).pass && is_coherent(g, b);
  };

  using Domains = std::vector<std::vector<std::size_t>>;  // live option indices per input clause
  Domains initial(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < space.options[i].size(); ++k) initial[i].push_back(k);
  }
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> chosen(n);
  bool stopped = false;

  const auto leaf = [&]() {
    if (screen && !screen->pass(gb)) return;
    auto key = partial.to_vector();
    if (seen.contains(key)) return;
    if (check_all(inputs, partial, b, options.postulates).all_pass()) {
      seen.insert(std::move(key));
      result.found.push_back(partial);
      if (options.stop_after && result.found.size() >= *options.stop_after) stopped = true;
    }
  };

  const auto visit = [&](auto&& self, std::size_t depth, const Domains& domains) -> void {
    if (depth == n) {
      leaf();
      return;
    }
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!assigned[i] && (pick == n || domains[i].size() < domains[pick].size())) pick = i;
    }
    assigned[pick] = true;
    const auto& live = domains[pick];
    const auto& prov = space.united.provenance(space.inputs[pick]);
    for (const auto& choice : subsets(live.size(), bounds.max_weakenings)) {
      if (++result.explored > bounds.cap) throw BoundsExplosion(result.explored, bounds.cap);
      const HornExpression saved = partial;
      const std::size_t mark = gb.size();
      chosen[pick].clear();
      for (std::size_t c : choice) {
        const std::size_t k = live[c];
        chosen[pick].push_back(k);
        if (partial.insert(space.options[pick][k], prov) && enc) gb.push_back(encoded[pick][k]);
      }
      if (viable()) {
        Domains next = domains;
        bool dead = false;
        for (std::size_t i = 0; i < n && !dead; ++i) {
          if (assigned[i]) continue;
          std::erase_if(next[i], [&](std::size_t k) { return !viable_with(i, k); });
          dead = next[i].empty();
        }
        if (enc) {
          // P6 lookahead: drop weakenings that no completion can justify.
          bool changed = true;
          while (changed && !dead) {
            changed = false;
            std::vector<bits::Clause> pool = gb;
            for (std::size_t i = 0; i < n; ++i) {
              if (assigned[i]) continue;
              for (std::size_t k : next[i]) pool.push_back(encoded[i][k]);
            }
            const InteractionTest test(pool, *enc);
            for (std::size_t i = 0; i < n && !dead; ++i) {
              if (!assigned[i]) continue;
              for (std::size_t k : chosen[i]) {
                if (!justified(needs[i][k], test, scope)) dead = true;
              }
            }
            for (std::size_t i = 0; i < n && !dead; ++i) {
              if (assigned[i]) continue;
              const std::size_t before = next[i].size();
              std::erase_if(next[i], [&](std::size_t k) { return !justified(needs[i][k], test, scope); });
              changed = changed || next[i].size() != before;
              dead = next[i].empty();
            }
          }
        }
        if (!dead) self(self, depth + 1, next);
      }
      partial = saved;
      gb.resize(mark);
      if (stopped) break;
    }
    assigned[pick] = false;
  };
  visit(visit, 0, initial);

  std::sort(result.found.begin(), result.found.end(),
            [](const HornExpression& x, const HornExpression& y) { return x.to_vector() < y.to_vector(); });
  result.exhausted = !stopped;
  return result;
}

}  // namespace cground
