#include "zh/quandle.hpp"

#include <numeric>
#include <sstream>

namespace zh {

namespace {

int mod(std::int64_t a, int n) {
  std::int64_t r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
}

FiniteQuandle linear_quandle(int n, std::int64_t a, std::int64_t b, std::string name) {
  if (n < 1) throw AxiomViolation("quandle size must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = mod(a * x + b * y, n);
  return FiniteQuandle(n, std::move(table), std::move(name), LinearForm{a, b});
}

}  // namespace

std::optional<std::string> quandle_axiom_violation(int n, const std::vector<int>& table) {
  if (n < 1) return "quandle size must be positive";
  if (table.size() != static_cast<std::size_t>(n) * n) return "table must have n*n entries";
  auto op = [&](int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; };
  for (int v : table)
    if (v < 0 || v >= n) return "table entry " + std::to_string(v) + " is out of range";
  for (int x = 0; x < n; ++x)
    if (op(x, x) != x) return "axiom I fails at x = " + std::to_string(x);
  for (int y = 0; y < n; ++y) {
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (hit[op(x, y)]) return "axiom II fails: right translation by " + std::to_string(y) + " is not a bijection";
      hit[op(x, y)] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) return "axiom III fails at " + triple(x, y, z);
  return std::nullopt;
}

FiniteQuandle::FiniteQuandle(int n, std::vector<int> table, std::string name, std::optional<LinearForm> linear)
    : n_(n), table_(std::move(table)), name_(std::move(name)), linear_(linear) {
  if (auto why = quandle_axiom_violation(n_, table_)) throw AxiomViolation(name_ + ": " + *why);
  div_.assign(table_.size(), 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) div_[static_cast<std::size_t>(op(x, y)) * n_ + y] = x;
}

nlohmann::json FiniteQuandle::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int x = 0; x < n_; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < n_; ++y) row.push_back(op(x, y));
    rows.push_back(row);
  }
  return {{"name", name_}, {"size", n_}, {"table", rows}};
}

std::string FiniteQuandle::to_csv() const {
  std::ostringstream out;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out << (y ? "," : "") << op(x, y);
    out << '\n';
  }
  return out.str();
}

FiniteQuandle make_dihedral(int n) { return linear_quandle(n, -1, 2, "dihedral:" + std::to_string(n)); }

FiniteQuandle make_alexander(int n, int t) {
  if (n < 1) throw AxiomViolation("quandle size must be positive");
  if (std::gcd(mod(t, n), n) != 1 && n > 1)
    throw AxiomViolation("alexander:" + std::to_string(n) + ":" + std::to_string(t) + ": t must be a unit mod n");
  return linear_quandle(n, t, 1 - static_cast<std::int64_t>(t),
                        "alexander:" + std::to_string(n) + ":" + std::to_string(t));
}

FiniteQuandle make_trivial(int n) { return linear_quandle(n, 1, 0, "trivial:" + std::to_string(n)); }

FiniteQuandle adjoin_v(const FiniteQuandle& x) {
  const int n = x.size(), m = n + 1;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int r;
      if (a == n)
        r = n;  // v * anything = v
      else if (b == n)
        r = a;  // x * v = x
      else
        r = x.op(a, b);
      table[static_cast<std::size_t>(a) * m + b] = r;
    }
  return FiniteQuandle(m, std::move(table), x.name() + "+v");
}

FiniteQuandle quandle_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad quandle spec '" + spec + "'");
    }
  };
  if (parts.size() == 2 && parts[0] == "trivial") return make_trivial(number(1));
  if (parts.size() == 2 && parts[0] == "dihedral") return make_dihedral(number(1));
  if (parts.size() == 3 && parts[0] == "alexander") return make_alexander(number(1), number(2));
  throw std::invalid_argument("bad quandle spec '" + spec + "' (use trivial:N, dihedral:N or alexander:N:T)");
}

std::vector<FiniteQuandle> builtin_quandles(int max_size) {
  std::vector<FiniteQuandle> out;
  for (int n = 1; n <= max_size; ++n) out.push_back(make_trivial(n));
  for (int n = 3; n <= max_size; ++n) out.push_back(make_dihedral(n));
  for (int n = 2; n <= max_size; ++n)
    for (int t = 2; t < n; ++t)
      if (std::gcd(t, n) == 1) out.push_back(make_alexander(n, t));
  return out;
}

TwoCocycle TwoCocycle::trivial(int n, CyclicGroup g) { return {g, n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)}; }

CocycleCheck check_cocycle(const FiniteQuandle& q, const TwoCocycle& phi) {
  CocycleCheck r;
  const int n = q.size();
  if (phi.n != n || phi.exponent.size() != static_cast<std::size_t>(n) * n) {
    r.ok = false;
    r.reason = "cocycle size does not match the quandle";
    return r;
  }
  const CyclicGroup& g = phi.group;
  for (int x = 0; x < n; ++x)
    if (g.reduce(phi.at(x, x)) != 0) {
      r.ok = false;
      r.reason = "phi(x,x) != 1 at x = " + std::to_string(x);
      r.witness = {x, x, x};
      return r;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = g.mul(phi.at(x, z), phi.at(q.op(x, z), q.op(y, z)));
        int rhs = g.mul(phi.at(q.op(x, y), z), phi.at(x, y));
        if (lhs != rhs) {
          r.ok = false;
          r.reason = "cocycle condition fails at " + triple(x, y, z);
          r.witness = {x, y, z};
          return r;
        }
      }
  return r;
}

void require_cocycle(const FiniteQuandle& x, const TwoCocycle& phi) {
  if (auto r = check_cocycle(x, phi); !r) throw CocycleViolation(r.reason, r.witness);
}

TwoCocycle cjkls_cocycle() {
  TwoCocycle phi = TwoCocycle::trivial(4);
  phi.exponent[0 * 4 + 1] = 1;
  phi.exponent[0 * 4 + 3] = 1;
  return phi;
}

}  // namespace zh
