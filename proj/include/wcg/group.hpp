#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcg/coxeter.hpp"

namespace wcg {

// Handle to a group element inside one CoxeterGroup. Ids are assigned in
// ShortLex order of normal forms, so comparing ids compares (length, word).
struct Elem {
  std::uint32_t id = 0;
  auto operator<=>(const Elem&) const = default;
};

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

// Word engine for a rank-3 Coxeter group.
//
// Elements are created level by level: the complete ball of length n is
// built from the ball of length n - 1 by prepending generators, using the
// dihedral parabolic parts of each element to decide descents without any
// rewriting. Every element records its ShortLex normal form, length,
// weight, descent sets, inverse and one-letter multiplication on both
// sides. Levels are added on demand; readers never observe a partially
// built level.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem sys, std::size_t max_elements = kDefaultElementCap);
  ~CoxeterGroup();
  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterSystem& system() const { return sys_; }

  Elem identity() const { return Elem{0}; }
  Elem generator(int a) { return mul_gen(identity(), a, Side::Right); }

  // Throws ParseError on labels outside {r, s, t}.
  Elem normal_form(std::string_view word);

  Elem mul_gen(Elem w, int a, Side side);
  Elem mul(Elem x, Elem y);
  Elem inverse(Elem w) const { return Elem{node(w).inverse}; }

  int length(Elem w) const { return node(w).length; }
  long weight(Elem w) const { return node(w).weight; }
  GenSet descents(Elem w, Side side) const { return node(w).desc[static_cast<int>(side)]; }
  const std::string& word(Elem w) const { return node(w).word; }

  bool is_length_additive(Elem x, Elem y);

  // Length-additive w = first . second. Right side: second in W_J and
  // R(first) disjoint from J. Left side: first in W_J and L(second)
  // disjoint from J.
  std::pair<Elem, Elem> parabolic_factorize(Elem w, GenSet J, Side side);

  bool parabolic_is_finite(GenSet J) const;
  std::optional<Elem> longest_element(GenSet J);

  bool bruhat_leq(Elem x, Elem y);
  // All x <= w in ShortLex order.
  std::vector<Elem> lower_interval(Elem w);

  // Makes every element of length <= n available; a finite group stops
  // growing at its longest element. Throws ResourceCapExceeded.
  void ensure_length(int n);
  std::size_t ball_size(int n);
  std::vector<Elem> ball(int n);
  // Length of the longest element if the group is finite and fully built.
  std::optional<int> max_length() const;
  std::size_t max_elements() const { return cap_; }

 private:
  struct Node {
    std::string word;
    int length = 0;
    long weight = 0;
    GenSet desc[2] = {0, 0};
    std::int32_t mult[2][3] = {{-1, -1, -1}, {-1, -1, -1}};
    // Length of the dihedral part of the element in W_{a,b} on each side,
    // indexed by pair_index(a, b).
    std::int32_t part[2][3] = {{0, 0, 0}, {0, 0, 0}};
    std::uint32_t inverse = 0;
  };
  static constexpr std::size_t kChunkBits = 14;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;

  const Node& node(Elem w) const {
    return chunks_[w.id >> kChunkBits][w.id & (kChunkSize - 1)];
  }
  Node& node_mut(std::uint32_t id) { return chunks_[id >> kChunkBits][id & (kChunkSize - 1)]; }
  std::uint32_t append_node(Node n);

  void build_next_level();
  std::uint32_t walk(std::uint32_t from, int first, int other, int count, Side side);
  std::uint32_t mult_raw(std::uint32_t id, int a, Side side) const {
    return static_cast<std::uint32_t>(node(Elem{id}).mult[static_cast<int>(side)][a]);
  }

  CoxeterSystem sys_;
  std::size_t cap_;
  std::unique_ptr<std::unique_ptr<Node[]>[]> chunks_;
  std::size_t chunk_count_ = 0;
  std::size_t size_ = 0;
  // level_begin_[n] is the first id of length n; level_begin_.back() is size_.
  std::vector<std::size_t> level_begin_;
  std::atomic<int> complete_len_{-1};
  bool exhausted_ = false;
  mutable std::mutex grow_mutex_;
};

}  // namespace wcg
