#include "qgw/cpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgw {

CPoly CPoly::constant(int nvars, const Rat& c) {
  CPoly p(nvars);
  if (c != 0) p.t.emplace(Mono(nvars, 0), c);
  return p;
}

CPoly CPoly::variable(int nvars, int v) {
  CPoly p(nvars);
  Mono m(nvars, 0);
  m[v] = 1;
  p.t.emplace(std::move(m), Rat(1));
  return p;
}

int CPoly::degree() const {
  int d = -1;
  for (auto& [m, c] : t) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

void CPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t.erase(it);
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r(*this);
  for (auto& [m, c] : o.t) r.add_term(m, c);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r(*this);
  for (auto& [m, c] : o.t) r.add_term(m, -c);
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r(nvars);
  for (auto& [m1, c1] : t)
    for (auto& [m2, c2] : o.t) {
      Mono m(nvars);
      for (int i = 0; i < nvars; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

CPoly CPoly::scaled(const Rat& c) const {
  CPoly r(nvars);
  if (c == 0) return r;
  for (auto& [m, k] : t) r.t.emplace(m, k * c);
  return r;
}

CPoly CPoly::derivative(int v) const {
  CPoly r(nvars);
  for (auto& [m, c] : t) {
    if (m[v] == 0) continue;
    Mono d(m);
    d[v] -= 1;
    r.add_term(d, c * m[v]);
  }
  return r;
}

Rat CPoly::evaluate(const std::vector<Rat>& point) const {
  if (int(point.size()) != nvars) throw std::invalid_argument("evaluate: bad point size");
  Rat total(0);
  for (auto& [m, c] : t) {
    Rat v = c;
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

std::string CPoly::str(int N) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < m[i]; ++k) os << "*x[" << i / N + 1 << "," << i % N + 1 << "]";
  }
  return os.str();
}

}  // namespace qgw
