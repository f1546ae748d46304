#include "wcg/hecke.hpp"

#include <algorithm>
#include <thread>

namespace wcg {

void add_term(HeckeElement& h, Elem w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = h.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

HeckeElement& operator+=(HeckeElement& h, const HeckeElement& o) {
  for (const auto& [w, c] : o) add_term(h, w, c);
  return h;
}

HeckeElement scaled(const HeckeElement& h, const LaurentPoly& c) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : h) out.emplace(w, a * c);
  return out;
}

int max_degree(const HeckeElement& h) {
  int d = kDegNegInf;
  for (const auto& [w, c] : h) d = std::max(d, c.deg());
  return d;
}

bool in_H_leq0(const HeckeElement& h) { return max_degree(h) <= 0; }
bool in_H_leq0_shifted(const HeckeElement& h, int k) { return max_degree(h) <= k; }
bool in_H_lt0_shifted(const HeckeElement& h, int k) { return max_degree(h) < k; }

std::string hecke_to_string(const CoxeterGroup& g, const HeckeElement& h) {
  if (h.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : h) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*T_" + g.word(w);
  }
  return out;
}

Hecke::Hecke(CoxeterGroup& g) : g_(g) {
  for (int a = 0; a < kRank; ++a) xi_[a] = LaurentPoly::v_minus_vinv(g.system().weight(a));
}

HeckeElement Hecke::t_mult_gen(const HeckeElement& h, int a, Side side) const {
  HeckeElement out;
  for (const auto& [w, c] : h) {
    const Elem wa = g_.mul_gen(w, a, side);
    add_term(out, wa, c);
    if (contains(g_.descents(w, side), a)) add_term(out, w, c * xi_[a]);
  }
  return out;
}

HeckeElement Hecke::right_mult(const HeckeElement& h, Elem y) const {
  HeckeElement out = h;
  for (char ch : g_.word(y)) out = t_mult_gen(out, gen_index(ch), Side::Right);
  return out;
}

HeckeElement Hecke::left_mult(Elem x, const HeckeElement& h) const {
  HeckeElement out = h;
  const std::string& w = g_.word(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = t_mult_gen(out, gen_index(*it), Side::Left);
  return out;
}

HeckeElement Hecke::t_mult(Elem x, Elem y) const { return right_mult(T(x), y); }

HeckeElement Hecke::mult(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [y, cy] : b) {
    if (cy.is_zero()) continue;
    out += scaled(right_mult(a, y), cy);
  }
  return out;
}

LaurentPoly Hecke::f_coeff(Elem x, Elem y, Elem z) const {
  const int lz = g_.length(z);
  const std::string& word = g_.word(y);
  HeckeElement cur = T(x);
  int remaining = static_cast<int>(word.size());
  for (char ch : word) {
    cur = t_mult_gen(cur, gen_index(ch), Side::Right);
    --remaining;
    for (auto it = cur.begin(); it != cur.end();) {
      const int l = g_.length(it->first);
      if (l > lz + remaining || l < lz - remaining)
        it = cur.erase(it);
      else
        ++it;
    }
  }
  auto it = cur.find(z);
  return it == cur.end() ? LaurentPoly{} : it->second;
}

BoundInfo compute_bound(CoxeterGroup& g) {
  BoundInfo info;
  std::vector<GenSet> subsets;
  for (GenSet J = 1; J <= kAllGens; ++J) subsets.push_back(J);
  std::stable_sort(subsets.begin(), subsets.end(), [](GenSet a, GenSet b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return genset_string(a) < genset_string(b);
  });
  for (GenSet J : subsets) {
    auto w = g.longest_element(J);
    if (!w) continue;
    info.breakdown.push_back({J, *w, g.weight(*w)});
    info.N = std::max(info.N, g.weight(*w));
  }
  for (const auto& e : info.breakdown)
    if (e.weight == info.N) info.M.push_back(e.longest);
  std::sort(info.M.begin(), info.M.end());
  return info;
}

namespace {

struct Partial {
  long pairs = 0, triples = 0;
  int max_degree = kDegNegInf;
  std::vector<DegreeWitness> witnesses;
  long bound_violations = 0, fact_a = 0, fact_b = 0;

  void note(const DegreeWitness& w) {
    if (w.degree > max_degree) {
      max_degree = w.degree;
      witnesses.clear();
    }
    if (w.degree == max_degree) {
      witnesses.push_back(w);
      std::sort(witnesses.begin(), witnesses.end());
      if (witnesses.size() > kMaxWitnesses) witnesses.pop_back();
    }
  }

  void merge(const Partial& o) {
    pairs += o.pairs;
    triples += o.triples;
    bound_violations += o.bound_violations;
    fact_a += o.fact_a;
    fact_b += o.fact_b;
    for (const auto& w : o.witnesses) note(w);
  }
};

}  // namespace

VerifyReport verify_bound(CoxeterGroup& g, int x_max_len, int y_max_len, int threads,
                          std::optional<long> bound_override) {
  VerifyReport rep;
  rep.config = g.system().describe();
  rep.bound = compute_bound(g);
  rep.bound_checked = bound_override.value_or(rep.bound.N);
  rep.x_max_len = x_max_len;
  rep.y_max_len = y_max_len;
  g.ensure_length(x_max_len + y_max_len);
  const auto xs = g.ball(x_max_len);
  const auto ys = g.ball(y_max_len);
  const Hecke hecke(g);
  const long bound = rep.bound_checked;
  threads = std::max(1, threads);

  auto work = [&](int worker, Partial& part) {
    for (std::size_t i = static_cast<std::size_t>(worker); i < xs.size();
         i += static_cast<std::size_t>(threads)) {
      const Elem x = xs[i];
      for (const Elem y : ys) {
        const HeckeElement prod = hecke.t_mult(x, y);
        ++part.pairs;
        const Elem e = g.identity();
        const bool inverse_pair = g.inverse(y) == x;
        auto it_e = prod.find(e);
        const LaurentPoly fe = it_e == prod.end() ? LaurentPoly{} : it_e->second;
        if (fe != (inverse_pair ? LaurentPoly::constant(1) : LaurentPoly{})) ++part.fact_a;
        const long lxy = std::min(g.weight(x), g.weight(y));
        for (const auto& [z, c] : prod) {
          ++part.triples;
          const int d = c.deg();
          if (d > std::min(lxy, g.weight(z))) ++part.fact_b;
          if (d > bound) ++part.bound_violations;
          part.note({x, y, z, d});
        }
      }
    }
  };

  std::vector<Partial> parts(static_cast<std::size_t>(threads));
  if (threads == 1) {
    work(0, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, std::ref(parts[static_cast<std::size_t>(t)]));
    for (auto& th : pool) th.join();
  }
  Partial total;
  for (const auto& p : parts) total.merge(p);

  rep.pairs_checked = total.pairs;
  rep.triples_checked = total.triples;
  rep.max_degree = total.max_degree;
  rep.witnesses = total.witnesses;
  rep.bound_violations = total.bound_violations;
  rep.fact_a_violations = total.fact_a;
  rep.fact_b_violations = total.fact_b;

  rep.sharp = rep.max_degree == bound;
  for (const Elem u : rep.bound.M) {
    const int d = hecke.f_coeff(u, u, u).deg();
    rep.m_witnesses.emplace_back(u, d);
    if (d == bound) rep.sharp = true;
    if (d > bound) ++rep.bound_violations;
  }
  rep.pass = rep.bound_violations == 0 && rep.fact_a_violations == 0 &&
             rep.fact_b_violations == 0 && rep.sharp;
  return rep;
}

}  // namespace wcg
