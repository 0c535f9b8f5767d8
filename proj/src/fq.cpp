#include "ffrep/fq.hpp"

#include <deque>
#include <map>

namespace ffrep {

namespace detail {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense F_p[x] helpers on small vectors, enough for modulus validation
using PVec = std::vector<uint32_t>;

PVec pmul(const PVec& a, const PVec& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

PVec pmod(PVec a, const PVec& m, uint32_t p) {
  // m monic of degree >= 1
  while (a.size() >= m.size()) {
    uint32_t lead = a.back() % p;
    size_t shift = a.size() - m.size();
    a.pop_back();
    if (lead) {
      for (size_t i = 0; i + 1 < m.size(); ++i)
        a[shift + i] = (a[shift + i] + ((p - m[i] % p) % p) * lead) % p;
    }
    while (!a.empty() && a.back() % p == 0) a.pop_back();
  }
  return a;
}

PVec ppowmod(PVec base, uint64_t n, const PVec& m, uint32_t p) {
  PVec r{1};
  base = pmod(std::move(base), m, p);
  while (n) {
    if (n & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    n >>= 1;
  }
  return r;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
  auto inv_mod = [&](uint32_t x) {
    uint32_t r = 1, e = p - 2, bx = x % p;
    while (e) { if (e & 1) r = r * bx % p; bx = bx * bx % p; e >>= 1; }
    return r;
  };
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    uint32_t li = inv_mod(b.back());
    PVec bm(b.size());
    for (size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * li % p;
    a = pmod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool modulus_irreducible(uint32_t p, uint32_t e, const std::array<uint8_t, kMaxExtDegree>& mod) {
  PVec m(e + 1);
  for (uint32_t i = 0; i < e; ++i) m[i] = mod[i];
  m[e] = 1;
  // Rabin: x^{p^e} == x mod m, and gcd(x^{p^{e/l}} - x, m) == 1 for primes l | e
  PVec x{0, 1};
  uint64_t pe = 1;
  for (uint32_t i = 0; i < e; ++i) pe *= p;
  PVec xq = ppowmod(x, pe, m, p);
  // xq - x
  PVec diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  if (!diff.empty()) return false;
  for (uint32_t l = 2; l <= e; ++l) {
    if (e % l || !is_prime_u32(l)) continue;
    uint64_t pk = 1;
    for (uint32_t i = 0; i < e / l; ++i) pk *= p;
    PVec xk = ppowmod(x, pk, m, p);
    PVec d = xk;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    while (!d.empty() && d.back() == 0) d.pop_back();
    PVec g = pgcd(m, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

namespace {

struct BuiltinModulus {
  uint64_t q;
  uint32_t p, e;
  std::array<uint8_t, kMaxExtDegree> mod;
};

// Conway polynomials, constant term first.
const BuiltinModulus kBuiltins[] = {
    {4, 2, 2, {1, 1}},        // x^2 + x + 1
    {8, 2, 3, {1, 1, 0}},     // x^3 + x + 1
    {16, 2, 4, {1, 1, 0, 0}}, // x^4 + x + 1
    {9, 3, 2, {2, 2}},        // x^2 + 2x + 2
    {27, 3, 3, {1, 2, 0}},    // x^3 + 2x + 1
    {25, 5, 2, {2, 4}},       // x^2 + 4x + 2
};

std::deque<FqCtx>& registry() {
  static std::deque<FqCtx> r;
  return r;
}
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const FqCtx* fq_context(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
  if (!detail::is_prime_u32(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || e > kMaxExtDegree) throw ConfigError("extension degree out of range");
  std::array<uint8_t, kMaxExtDegree> mod{};
  if (e == 1) {
    // no modulus used
  } else if (!modulus.empty()) {
    if (modulus.size() != e && modulus.size() != e + 1)
      throw ConfigError("modulus must list e (or e+1, monic) coefficients");
    if (modulus.size() == e + 1 && modulus[e] % p != 1)
      throw ConfigError("modulus must be monic");
    for (uint32_t i = 0; i < e; ++i) mod[i] = uint8_t(modulus[i] % p);
    if (!detail::modulus_irreducible(p, e, mod)) throw ConfigError("modulus is reducible");
  } else {
    bool found = false;
    for (const auto& b : kBuiltins)
      if (b.p == p && b.e == e) { mod = b.mod; found = true; break; }
    if (!found) {
      // deterministic search: first irreducible monic by index order
      uint64_t pe = 1;
      for (uint32_t i = 0; i < e; ++i) pe *= p;
      for (uint64_t idx = 0; idx < pe && !found; ++idx) {
        std::array<uint8_t, kMaxExtDegree> cand{};
        uint64_t v = idx;
        for (uint32_t i = 0; i < e; ++i) { cand[i] = uint8_t(v % p); v /= p; }
        if (detail::modulus_irreducible(p, e, cand)) { mod = cand; found = true; }
      }
      if (!found)
        throw ConfigError("no modulus found for p=" + std::to_string(p) + ", e=" + std::to_string(e));
    }
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  for (const auto& c : registry())
    if (c.same(p, e, mod)) return &c;
  FqCtx c;
  c.p = p;
  c.e = e;
  c.mod = mod;
  c.q = 1;
  for (uint32_t i = 0; i < e; ++i) c.q *= p;
  registry().push_back(c);
  return &registry().back();
}

const FqCtx* fq_context_q(uint64_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (!detail::is_prime_u32(p)) continue;
    uint64_t pk = p;
    uint32_t e = 1;
    while (pk < q) { pk *= p; ++e; }
    if (pk == q) return fq_context(p, e);
  }
  throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
}

FqElem embed(const FqElem& a, const FqCtx* E) {
  const FqCtx* F = a.field();
  if (!F || F == E) return a.coerced(E);
  if (F->p != E->p || E->e % F->e != 0) throw Unsupported("no embedding between these fields");
  if (F->e == 1) return FqElem(E, a.coord(0));
  // map gen(F) to a root of F's modulus in E (smallest by index), extend linearly
  FqElem root(E, 0);
  bool found = false;
  for (uint64_t i = 0; i < E->q; ++i) {
    FqElem x = FqElem::from_index(E, i);
    FqElem v = x.pow(F->e);
    for (uint32_t k = 0; k < F->e; ++k) v += FqElem(E, F->mod[k]) * x.pow(k);
    if (v.is_zero()) { root = x; found = true; break; }
  }
  if (!found) throw Unsupported("modulus has no root in target field");
  FqElem r(E, 0);
  for (uint32_t i = 0; i < F->e; ++i) r += FqElem(E, a.coord(i)) * root.pow(i);
  return r;
}

std::vector<FqElem> all_elements(const FqCtx* F) {
  std::vector<FqElem> v;
  v.reserve(size_t(F->q));
  for (uint64_t i = 0; i < F->q; ++i) v.push_back(FqElem::from_index(F, i));
  return v;
}

FqElem multiplicative_generator(const FqCtx* F) {
  for (uint64_t i = 2; i < F->q; ++i) {
    FqElem g = FqElem::from_index(F, i);
    uint64_t ord = 1;
    FqElem x = g;
    while (!x.is_one()) { x *= g; ++ord; }
    if (ord == F->q - 1) return g;
  }
  return FqElem::one(F);  // q = 2
}

}  // namespace ffrep
