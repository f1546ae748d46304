#include "wcg/group.hpp"

#include <algorithm>
#include <climits>

#include "wcg/error.hpp"

namespace wcg {

namespace {
constexpr int kL = static_cast<int>(Side::Left);
constexpr int kR = static_cast<int>(Side::Right);
constexpr int kExhausted = INT_MAX;

int lowest_gen(GenSet J) {
  for (int a = 0; a < kRank; ++a)
    if (contains(J, a)) return a;
  return -1;
}
}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterSystem sys, std::size_t max_elements)
    : sys_(sys), cap_(std::max<std::size_t>(max_elements, 1)) {
  chunks_ = std::make_unique<std::unique_ptr<Node[]>[]>(cap_ / kChunkSize + 1);
  Node e;
  append_node(std::move(e));
  level_begin_ = {0, 1};
  complete_len_.store(-1, std::memory_order_release);
  std::lock_guard lock(grow_mutex_);
  build_next_level();
}

CoxeterGroup::~CoxeterGroup() = default;

std::uint32_t CoxeterGroup::append_node(Node n) {
  if (size_ >= cap_)
    throw ResourceCapExceeded("element table for " + sys_.describe() + " would exceed " +
                              std::to_string(cap_) + " elements");
  const std::size_t chunk = size_ >> kChunkBits;
  if (chunk >= chunk_count_) {
    chunks_[chunk] = std::make_unique<Node[]>(kChunkSize);
    chunk_count_ = chunk + 1;
  }
  const auto id = static_cast<std::uint32_t>(size_);
  node_mut(id) = std::move(n);
  ++size_;
  return id;
}

std::uint32_t CoxeterGroup::walk(std::uint32_t from, int first, int other, int count, Side side) {
  std::uint32_t x = from;
  for (int i = 0; i < count; ++i) {
    const std::int32_t next = node(Elem{x}).mult[static_cast<int>(side)][i % 2 == 0 ? first : other];
    if (next < 0) throw InvariantViolation("word engine walked onto an unbuilt entry");
    x = static_cast<std::uint32_t>(next);
  }
  return x;
}

// Builds level n = (current top) + 1. Requires grow_mutex_.
void CoxeterGroup::build_next_level() {
  const int n = static_cast<int>(level_begin_.size()) - 1;
  const std::size_t b0 = level_begin_[n - 1];
  const std::size_t b1 = level_begin_[n];

  // Prepend c to every q with c not in L(q); keep cq when c = min L(cq).
  for (int c = 0; c < kRank; ++c) {
    for (std::size_t qi = b0; qi < b1; ++qi) {
      const auto q = static_cast<std::uint32_t>(qi);
      const Node& qn = node(Elem{q});
      if (contains(qn.desc[kL], c)) continue;
      GenSet lset = gen_bit(c);
      for (int a = 0; a < kRank; ++a) {
        if (a == c || !sys_.finite_bond(a, c)) continue;
        if (qn.part[kL][pair_index(a, c)] + 1 == sys_.m(a, c)) lset |= gen_bit(a);
      }
      if (lowest_gen(lset) != c) continue;
      Node w;
      w.word = std::string(1, kGenLabels[c]) + qn.word;
      w.length = n;
      w.weight = qn.weight + sys_.weight(c);
      w.desc[kL] = lset;
      for (int a = 0; a < kRank; ++a)
        if (a != c) w.part[kL][pair_index(a, c)] = qn.part[kL][pair_index(a, c)] + 1;
      w.mult[kL][c] = static_cast<std::int32_t>(q);
      const std::uint32_t id = append_node(std::move(w));
      node_mut(q).mult[kL][c] = static_cast<std::int32_t>(id);
    }
  }
  const std::size_t b2 = size_;
  level_begin_.push_back(b2);
  if (b2 == b1) {
    exhausted_ = true;
    complete_len_.store(kExhausted, std::memory_order_release);
    return;
  }

  // Remaining left descents a != c: a.w = (alternation of length m-1
  // starting with c) . w^J where J = {a, c}.
  for (std::size_t wi = b1; wi < b2; ++wi) {
    const auto w = static_cast<std::uint32_t>(wi);
    Node& wn = node_mut(w);
    const int c = gen_index(wn.word[0]);
    const auto q = static_cast<std::uint32_t>(wn.mult[kL][c]);
    for (int a = 0; a < kRank; ++a) {
      if (a == c || !contains(wn.desc[kL], a)) continue;
      const int m = sys_.m(a, c);
      const std::uint32_t coset_min = walk(q, a, c, m - 1, Side::Left);
      const int innermost = (m - 2) % 2 == 0 ? c : a;
      const std::uint32_t aw = walk(coset_min, innermost, innermost == c ? a : c, m - 1, Side::Left);
      wn.mult[kL][a] = static_cast<std::int32_t>(aw);
      node_mut(aw).mult[kL][a] = static_cast<std::int32_t>(w);
    }
    // Dihedral part for the pair not containing c.
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    const bool da = contains(wn.desc[kL], a), db = contains(wn.desc[kL], b);
    int len = 0;
    if (da && db)
      len = sys_.m(a, b);
    else if (da || db)
      len = node(Elem{static_cast<std::uint32_t>(wn.mult[kL][da ? a : b])}).part[kL][c] + 1;
    wn.part[kL][c] = len;
  }

  // Right side: w = p . b with b the last letter of the normal form.
  for (std::size_t wi = b1; wi < b2; ++wi) {
    const auto w = static_cast<std::uint32_t>(wi);
    Node& wn = node_mut(w);
    const int c = gen_index(wn.word.front());
    const int b = gen_index(wn.word.back());
    std::uint32_t p = 0;
    if (n > 1) {
      const auto q = static_cast<std::uint32_t>(wn.mult[kL][c]);
      p = mult_raw(mult_raw(q, b, Side::Right), c, Side::Left);
    }
    const Node& pn = node(Elem{p});
    GenSet rset = gen_bit(b);
    for (int a = 0; a < kRank; ++a) {
      if (a == b) continue;
      wn.part[kR][pair_index(a, b)] = pn.part[kR][pair_index(a, b)] + 1;
      if (sys_.finite_bond(a, b) && pn.part[kR][pair_index(a, b)] + 1 == sys_.m(a, b))
        rset |= gen_bit(a);
    }
    wn.desc[kR] = rset;
    wn.mult[kR][b] = static_cast<std::int32_t>(p);
    node_mut(p).mult[kR][b] = static_cast<std::int32_t>(w);
  }
  for (std::size_t wi = b1; wi < b2; ++wi) {
    const auto w = static_cast<std::uint32_t>(wi);
    Node& wn = node_mut(w);
    const int b = gen_index(wn.word.back());
    const auto p = static_cast<std::uint32_t>(wn.mult[kR][b]);
    for (int a = 0; a < kRank; ++a) {
      if (a == b || !contains(wn.desc[kR], a)) continue;
      const int m = sys_.m(a, b);
      const std::uint32_t coset_min = walk(p, a, b, m - 1, Side::Right);
      const int first = (m - 1) % 2 == 1 ? b : a;
      const std::uint32_t wa = walk(coset_min, first, first == b ? a : b, m - 1, Side::Right);
      wn.mult[kR][a] = static_cast<std::int32_t>(wa);
      node_mut(wa).mult[kR][a] = static_cast<std::int32_t>(w);
    }
    const int a = (b + 1) % 3, d = (b + 2) % 3;
    const bool da = contains(wn.desc[kR], a), dd = contains(wn.desc[kR], d);
    int len = 0;
    if (da && dd)
      len = sys_.m(a, d);
    else if (da || dd)
      len = node(Elem{static_cast<std::uint32_t>(wn.mult[kR][da ? a : d])}).part[kR][b] + 1;
    wn.part[kR][b] = len;
  }

  // (c q)^{-1} = q^{-1} c.
  for (std::size_t wi = b1; wi < b2; ++wi) {
    const auto w = static_cast<std::uint32_t>(wi);
    Node& wn = node_mut(w);
    const int c = gen_index(wn.word[0]);
    const auto q = static_cast<std::uint32_t>(wn.mult[kL][c]);
    wn.inverse = mult_raw(node(Elem{q}).inverse, c, Side::Right);
  }
  complete_len_.store(n - 1, std::memory_order_release);
}

void CoxeterGroup::ensure_length(int n) {
  if (complete_len_.load(std::memory_order_acquire) >= n - 1) return;
  std::lock_guard lock(grow_mutex_);
  while (!exhausted_ && static_cast<int>(level_begin_.size()) - 2 < n) build_next_level();
}

std::size_t CoxeterGroup::ball_size(int n) {
  if (n < 0) return 0;
  ensure_length(n);
  std::lock_guard lock(grow_mutex_);
  const int top = static_cast<int>(level_begin_.size()) - 2;
  return level_begin_[std::min(n, top) + 1];
}

std::vector<Elem> CoxeterGroup::ball(int n) {
  const std::size_t count = ball_size(n);
  std::vector<Elem> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = Elem{static_cast<std::uint32_t>(i)};
  return out;
}

std::optional<int> CoxeterGroup::max_length() const {
  std::lock_guard lock(grow_mutex_);
  if (!exhausted_) return std::nullopt;
  return static_cast<int>(level_begin_.size()) - 3;
}

Elem CoxeterGroup::mul_gen(Elem w, int a, Side side) {
  const Node& wn = node(w);
  if (complete_len_.load(std::memory_order_acquire) < wn.length) ensure_length(wn.length + 1);
  return Elem{static_cast<std::uint32_t>(wn.mult[static_cast<int>(side)][a])};
}

Elem CoxeterGroup::normal_form(std::string_view word) {
  for (char ch : word)
    if (gen_index(ch) < 0)
      throw ParseError("unknown generator label '" + std::string(1, ch) + "' in \"" +
                       std::string(word) + "\"");
  Elem x = identity();
  for (char ch : word) x = mul_gen(x, gen_index(ch), Side::Right);
  return x;
}

Elem CoxeterGroup::mul(Elem x, Elem y) {
  for (char ch : word(y)) x = mul_gen(x, gen_index(ch), Side::Right);
  return x;
}

bool CoxeterGroup::is_length_additive(Elem x, Elem y) {
  return length(mul(x, y)) == length(x) + length(y);
}

std::pair<Elem, Elem> CoxeterGroup::parabolic_factorize(Elem w, GenSet J, Side side) {
  Elem rest = w, part = identity();
  const Side other = side == Side::Right ? Side::Left : Side::Right;
  while (GenSet d = static_cast<GenSet>(descents(rest, side) & J)) {
    const int a = lowest_gen(d);
    rest = mul_gen(rest, a, side);
    part = mul_gen(part, a, other);
  }
  if (side == Side::Right) return {rest, part};
  return {part, rest};
}

bool CoxeterGroup::parabolic_is_finite(GenSet J) const {
  int gens[3], k = 0;
  for (int a = 0; a < kRank; ++a)
    if (contains(J, a)) gens[k++] = a;
  if (k <= 1) return true;
  if (k == 2) return sys_.finite_bond(gens[0], gens[1]);
  return is_finite_group(sys_);
}

std::optional<Elem> CoxeterGroup::longest_element(GenSet J) {
  if (!parabolic_is_finite(J)) return std::nullopt;
  Elem x = identity();
  while (GenSet up = static_cast<GenSet>(J & ~descents(x, Side::Left)))
    x = mul_gen(x, lowest_gen(up), Side::Left);
  return x;
}

bool CoxeterGroup::bruhat_leq(Elem x, Elem y) {
  while (true) {
    if (length(x) > length(y)) return false;
    if (y == identity()) return x == identity();
    const int a = lowest_gen(descents(y, Side::Left));
    if (contains(descents(x, Side::Left), a)) x = mul_gen(x, a, Side::Left);
    y = mul_gen(y, a, Side::Left);
  }
}

std::vector<Elem> CoxeterGroup::lower_interval(Elem w) {
  std::vector<Elem> chain;
  for (Elem x = w; x != identity(); x = mul_gen(x, gen_index(word(x)[0]), Side::Left))
    chain.push_back(x);
  std::vector<Elem> below{identity()};
  // lower(w) = lower(a w) together with a . lower(a w), a the first letter.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const int a = gen_index(word(*it)[0]);
    const std::size_t k = below.size();
    for (std::size_t i = 0; i < k; ++i) below.push_back(mul_gen(below[i], a, Side::Left));
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
  }
  return below;
}

}  // namespace wcg
