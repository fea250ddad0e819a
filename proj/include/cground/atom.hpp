#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cground {

namespace detail {
struct AtomEntry {
  std::string name;
  std::uint32_t id;
};
}  // namespace detail

/// A propositional variable.
///
/// Atoms are interned: two atoms with the same name share one entry in a
/// process-wide table, so copies are pointer-sized and equality is a pointer
/// comparison. Each interned atom also carries a dense integer id, which the
/// forward-chaining engine uses to index flat arrays.
///
/// Ordering is lexicographic on the name, which gives every container of
/// atoms a canonical iteration order.
class Atom {
 public:
  /// Interns `name`. Throws std::invalid_argument unless the name is a
  /// non-empty run of letters, digits and underscores.
  explicit Atom(std::string_view name);

  [[nodiscard]] const std::string& name() const noexcept { return entry_->name; }
  [[nodiscard]] std::uint32_t id() const noexcept { return entry_->id; }

  friend bool operator==(Atom lhs, Atom rhs) noexcept { return lhs.entry_ == rhs.entry_; }
  friend std::strong_ordering operator<=>(Atom lhs, Atom rhs) noexcept {
    if (lhs.entry_ == rhs.entry_) return std::strong_ordering::equal;
    return lhs.entry_->name.compare(rhs.entry_->name) < 0 ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
  }

  /// Number of atoms interned so far; every id is below this bound.
  static std::size_t universe_size() noexcept;

  static bool is_valid_name(std::string_view name) noexcept;

 private:
  const detail::AtomEntry* entry_;
};

}  // namespace cground

template <>
struct std::hash<cground::Atom> {
  std::size_t operator()(cground::Atom a) const noexcept { return std::hash<std::uint32_t>{}(a.id()); }
};
