#include "ffrep/multipoly.hpp"

#include <map>

namespace ffrep {

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.is_constant()) return a.constant_value() * b;
  if (b.is_constant()) return b.constant_value() * a;
  if (a.t_.size() == 1 || b.t_.size() == 1) {
    // monomial times polynomial keeps the term order
    const MultiPoly& mono = a.t_.size() == 1 ? a : b;
    const MultiPoly& poly = a.t_.size() == 1 ? b : a;
    MultiPoly r = poly;
    for (auto& [ev, c] : r.t_) { ev = ev + mono.t_[0].first; c = mono.t_[0].second * c; }
    return r;
  }
  std::map<ExpVec, FqElem> acc;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      ExpVec ev = ea + eb;
      auto it = acc.find(ev);
      if (it == acc.end()) acc.emplace(ev, ca * cb);
      else it->second += ca * cb;
    }
  }
  MultiPoly r;
  for (auto& [ev, c] : acc)
    if (!c.is_zero()) r.t_.push_back({ev, c});
  return r;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& a) {
  if (a.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [ev, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!c.is_one() || ev.is_const()) { os << c; printed = true; }
    for (int v = 0; v < kMaxVars; ++v) {
      if (!ev.e[size_t(v)]) continue;
      if (printed) os << "*";
      os << "t" << (v + 1);
      if (ev.e[size_t(v)] > 1) os << "^" << ev.e[size_t(v)];
      printed = true;
    }
  }
  return os;
}

}  // namespace ffrep
