#ifndef FRAGWL_INTERNER_HPP
#define FRAGWL_INTERNER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace fragwl {

using Color = std::int64_t;

/// Tags that keep the key spaces of different refinement stages disjoint
/// inside a single interner.
enum class KeyTag : std::int64_t {
  WlInit = 1,
  WlRound,
  NfLabel,
  FwlInit,
  FwlRound,
  FragnetNodeInit,
  FragnetFragmentInit,
  FragnetEdgeInit,
  FragnetEdgeMessage,
  FragnetNodeFromNodes,
  FragnetNodeFromFragments,
  FragnetFragmentFromNodes,
  FragnetFragmentFromFragments,
  FragnetNodeUpdate,
  FragnetFragmentUpdate,
  FragnetEdgeUpdate,
};

/// Injective map from integer tuples to dense ids, assigned in first-seen
/// order. This is the "hash" of color refinement without collision risk.
///
/// Not thread-safe; use one interner per comparison.
class ColorInterner {
 public:
  Color intern(std::span<const std::int64_t> key) {
    auto [it, inserted] =
        ids_.try_emplace(std::vector<std::int64_t>(key.begin(), key.end()),
                         static_cast<Color>(ids_.size()));
    return it->second;
  }

  Color intern(std::initializer_list<std::int64_t> key) {
    return intern(std::span<const std::int64_t>(key.begin(), key.size()));
  }

  std::size_t size() const noexcept { return ids_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::int64_t x : key) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  std::unordered_map<std::vector<std::int64_t>, Color, KeyHash> ids_;
};

inline std::int64_t tag(KeyTag t) noexcept { return static_cast<std::int64_t>(t); }

}  // namespace fragwl

#endif  // FRAGWL_INTERNER_HPP
