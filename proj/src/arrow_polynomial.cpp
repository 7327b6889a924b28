#include "zh/arrow_polynomial.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace zh {

int Monomial::k_degree() const noexcept {
  int d = 0;
  for (auto [i, e] : k) d += i * e;
  return d;
}

namespace {

Monomial multiply(const Monomial& x, const Monomial& y) {
  Monomial m;
  m.a = x.a + y.a;
  auto i = x.k.begin(), j = y.k.begin();
  while (i != x.k.end() || j != y.k.end()) {
    if (j == y.k.end() || (i != x.k.end() && i->first < j->first)) {
      m.k.push_back(*i++);
    } else if (i == x.k.end() || j->first < i->first) {
      m.k.push_back(*j++);
    } else {
      m.k.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

}  // namespace

ArrowPolynomial ArrowPolynomial::constant(std::int64_t c) { return a_power(0, c); }

ArrowPolynomial ArrowPolynomial::a_power(int a, std::int64_t c) {
  ArrowPolynomial p;
  p.add_term(Monomial{a, {}}, c);
  return p;
}

ArrowPolynomial ArrowPolynomial::k_var(int index) {
  if (index < 0) throw std::invalid_argument("K index must be non-negative");
  if (index == 0) return constant(1);
  ArrowPolynomial p;
  p.add_term(Monomial{0, {{index, 1}}}, 1);
  return p;
}

ArrowPolynomial ArrowPolynomial::loop_value() { return a_power(2, -1) + a_power(-2, -1); }

bool ArrowPolynomial::k_free() const noexcept {
  for (const auto& [m, c] : terms_)
    if (!m.k_free()) return false;
  return true;
}

void ArrowPolynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ArrowPolynomial& ArrowPolynomial::operator+=(const ArrowPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ArrowPolynomial& ArrowPolynomial::operator-=(const ArrowPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ArrowPolynomial operator*(const ArrowPolynomial& p, const ArrowPolynomial& q) {
  ArrowPolynomial r;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term(multiply(m1, m2), c1 * c2);
  return r;
}

ArrowPolynomial ArrowPolynomial::scaled(std::int64_t c) const {
  ArrowPolynomial r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

ArrowPolynomial ArrowPolynomial::shifted(int shift) const {
  ArrowPolynomial r;
  for (const auto& [key, v] : terms_) {
    Monomial m = key;
    m.a += shift;
    r.terms_.emplace(std::move(m), v);
  }
  return r;
}

ArrowPolynomial ArrowPolynomial::inverted_a() const {
  ArrowPolynomial r;
  for (const auto& [key, v] : terms_) {
    Monomial m = key;
    m.a = -m.a;
    r.terms_.emplace(std::move(m), v);
  }
  return r;
}

std::string ArrowPolynomial::to_string(char letter) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (m.a != 0) factors.push_back(m.a == 1 ? "A" : "A^" + std::to_string(m.a));
    for (auto [i, e] : m.k) {
      std::string f = std::string(1, letter) + std::to_string(i);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    if (factors.empty()) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) factors.insert(factors.begin(), std::to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += '*';
      out += factors[i];
    }
  }
  return out;
}

nlohmann::json ArrowPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json k = nlohmann::json::array();
    for (auto [i, e] : m.k) k.push_back({i, e});
    arr.push_back({{"coeff", c}, {"a", m.a}, {"k", k}});
  }
  return arr;
}

ArrowPolynomial poly_add(const ArrowPolynomial& p, const ArrowPolynomial& q) { return p + q; }
ArrowPolynomial poly_mul(const ArrowPolynomial& p, const ArrowPolynomial& q) { return p * q; }
ArrowPolynomial poly_scale(const ArrowPolynomial& p, std::int64_t c) { return p.scaled(c); }

ArrowPolynomial normalize(const ArrowPolynomial& p, int w) {
  // (-A)^(-3w) = (-1)^(3w) A^(-3w) = (-1)^w A^(-3w)
  return p.shifted(-3 * w).scaled(w % 2 == 0 ? 1 : -1);
}

ArrowPolynomial parse_arrow_polynomial(std::string_view text) {
  ArrowPolynomial result;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + why);
  };
  auto read_int = [&]() -> long {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    if (i == start) throw fail("expected integer");
    return neg ? -v : v;
  };
  skip();
  if (text.substr(i) == "0") return result;
  int sign = 1;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? -1 : 1;
  while (true) {
    skip();
    Monomial m;
    std::map<int, int> k;
    std::int64_t coeff = 1;
    bool any = false;
    while (true) {
      skip();
      if (i >= text.size()) break;
      char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= read_int();
      } else if (ch == 'A') {
        ++i;
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(read_int());
        }
        m.a += e;
      } else if (ch == 'K' || ch == 'Z') {
        ++i;
        int idx = static_cast<int>(read_int());
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(read_int());
        }
        if (idx < 0 || e < 0) throw fail("negative K index or exponent");
        if (idx > 0 && e > 0) k[idx] += e;
      } else {
        break;
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (!any) throw fail("expected term");
    for (auto [idx, e] : k) m.k.emplace_back(idx, e);
    result.add_term(m, sign * coeff);
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i++] == '-' ? -1 : 1;
    } else {
      throw fail("unexpected character");
    }
  }
  return result;
}

}  // namespace zh
