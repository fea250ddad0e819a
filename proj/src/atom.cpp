#include "cground/atom.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace cground {

namespace {

class AtomTable {
 public:
  const detail::AtomEntry* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    // deque never relocates existing elements, so handed-out pointers stay valid
    auto& entry = entries_.emplace_back(
        detail::AtomEntry{std::string(name), static_cast<std::uint32_t>(entries_.size())});
    index_.emplace(entry.name, &entry);
    size_.store(entries_.size(), std::memory_order_release);
    return &entry;
  }

  std::size_t size() const noexcept { return size_.load(std::memory_order_acquire); }

 private:
  std::mutex mutex_;
  std::deque<detail::AtomEntry> entries_;
  std::unordered_map<std::string, const detail::AtomEntry*> index_;
  std::atomic<std::size_t> size_{0};
};

AtomTable& table() {
  static AtomTable instance;
  return instance;
}

}  // namespace

bool Atom::is_valid_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Atom::Atom(std::string_view name) {
  if (!is_valid_name(name)) {
    throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  }
  entry_ = table().intern(name);
}

std::size_t Atom::universe_size() noexcept { return table().size(); }

}  // namespace cground
