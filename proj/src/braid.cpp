#include "wcg/braid.hpp"

#include <deque>

#include "wcg/error.hpp"

namespace wcg {

std::set<std::string> braid_class(const CoxeterSystem& sys, std::string_view word) {
  std::set<std::string> seen{std::string(word)};
  std::deque<std::string> todo{std::string(word)};
  while (!todo.empty()) {
    std::string w = std::move(todo.front());
    todo.pop_front();
    for (int a = 0; a < kRank; ++a)
      for (int b = 0; b < kRank; ++b) {
        if (a == b || !sys.finite_bond(a, b)) continue;
        const int m = sys.m(a, b);
        if (static_cast<int>(w.size()) < m) continue;
        std::string lhs, rhs;
        for (int i = 0; i < m; ++i) {
          lhs += kGenLabels[i % 2 == 0 ? a : b];
          rhs += kGenLabels[i % 2 == 0 ? b : a];
        }
        for (std::size_t pos = w.find(lhs); pos != std::string::npos; pos = w.find(lhs, pos + 1)) {
          std::string v = w;
          v.replace(pos, m, rhs);
          if (seen.insert(v).second) todo.push_back(std::move(v));
        }
      }
  }
  return seen;
}

std::string braid_normal_form(const CoxeterSystem& sys, std::string_view word) {
  for (char ch : word)
    if (gen_index(ch) < 0) throw ParseError("unknown generator label in \"" + std::string(word) + "\"");
  std::string current(word);
  while (true) {
    const auto cls = braid_class(sys, current);
    bool cancelled = false;
    for (const auto& w : cls) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) {
          current = w.substr(0, i) + w.substr(i + 2);
          cancelled = true;
          break;
        }
      if (cancelled) break;
    }
    if (!cancelled) return *cls.begin();
  }
}

}  // namespace wcg
