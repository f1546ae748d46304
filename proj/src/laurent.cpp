#include "wcg/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "wcg/error.hpp"

namespace wcg {

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow in addition");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

LaurentPoly LaurentPoly::constant(Coeff c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, Coeff c) {
  if (c == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, c}});
}

LaurentPoly LaurentPoly::v_minus_vinv(int n) {
  if (n == 0) return {};
  if (n < 0) return -v_minus_vinv(-n);
  return LaurentPoly(std::vector<Term>{{-n, -1}, {n, 1}});
}

LaurentPoly LaurentPoly::v_plus_vinv(int n) {
  if (n == 0) return constant(2);
  if (n < 0) n = -n;
  return LaurentPoly(std::vector<Term>{{-n, 1}, {n, 1}});
}

int LaurentPoly::low_deg() const {
  return terms_.empty() ? std::numeric_limits<int>::max() : terms_.front().exp;
}

Coeff LaurentPoly::coeff_at(int n) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == n) ? it->coeff : 0;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back({-it->exp, it->coeff});
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp < 0) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::positive_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp > 0) out.push_back(t);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = checked::mul(t.coeff, -1);
  return r;
}

void LaurentPoly::merge(const LaurentPoly& o, Coeff sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back({b->exp, checked::mul(b->coeff, sign)});
      ++b;
    } else {
      Coeff c = checked::add(a->coeff, checked::mul(b->coeff, sign));
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  merge(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  merge(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) {
      t.exp += b.terms_[0].exp;
      t.coeff = checked::mul(t.coeff, b.terms_[0].coeff);
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  // Dense accumulation over the exponent window; windows stay small in
  // practice (a few multiples of the largest weight times the length).
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<Coeff> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
      slot = checked::add(slot, checked::mul(x.coeff, y.coeff));
    }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.push_back({lo + static_cast<int>(i), acc[i]});
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = checked::mul(t.coeff, c);
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  merge(a * b, 1);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->coeff);
    out += "*v^";
    out += std::to_string(it->exp);
  }
  return out;
}

namespace {

template <typename Int>
Int parse_int(std::string_view s, std::string_view whole) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("malformed Laurent polynomial: \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : next - pos);
    std::size_t star = term.find("*v^");
    if (star == std::string_view::npos)
      throw ParseError("malformed Laurent polynomial: \"" + std::string(text) + "\"");
    Coeff c = parse_int<Coeff>(term.substr(0, star), text);
    int e = parse_int<int>(term.substr(star + 3), text);
    if (c == 0 || (!terms.empty() && terms.back().exp <= e))
      throw ParseError("Laurent polynomial terms must be non-zero and strictly descending: \"" +
                       std::string(text) + "\"");
    terms.push_back({e, c});
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  std::reverse(terms.begin(), terms.end());
  return LaurentPoly(std::move(terms));
}

}  // namespace wcg
