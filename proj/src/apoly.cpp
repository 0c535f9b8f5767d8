#include "ffrep/apoly.hpp"

#include <algorithm>
#include <random>

namespace ffrep {

std::ostream& operator<<(std::ostream& os, const APoly& a) {
  if (a.is_zero()) return os << "0";
  bool first = true;
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !a.c_[i].is_one()) os << a.c_[i];
    if (i > 0) {
      if (!a.c_[i].is_one()) os << "*";
      os << "O";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

APoly gcd(APoly a, APoly b) {
  while (!b.is_zero()) {
    APoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

APoly gcd_ext(APoly a, APoly b, APoly& x, APoly& y) {
  APoly x0(1), y0, x1, y1(1);
  while (!b.is_zero()) {
    APoly q, r;
    APoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    APoly x2 = x0 - q * x1, y2 = y0 - q * y1;
    x0 = std::move(x1); y0 = std::move(y1);
    x1 = std::move(x2); y1 = std::move(y2);
  }
  if (!a.is_zero()) {
    FqElem li = a.lead().inverse();
    x = li * x0;
    y = li * y0;
    return a.monic();
  }
  x = x0; y = y0;
  return a;
}

APoly powmod(const APoly& base, uint64_t n, const APoly& mod) {
  APoly r(1), b = base % mod;
  while (n) {
    if (n & 1) r = r * b % mod;
    if (n >>= 1) b = b * b % mod;
  }
  return r;
}

bool is_irreducible(const APoly& f) {
  int d = f.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  const FqCtx* F = f.field();
  const APoly x = APoly::theta(F);
  // Rabin: x^{q^d} = x mod f and gcd(x^{q^{d/l}} - x, f) = 1 for primes l | d
  auto xq_iter = [&](int k) {
    APoly r = x;
    for (int i = 0; i < k; ++i) r = powmod(r, F->q, f);
    return r;
  };
  if (!((xq_iter(d) - x) % f).is_zero()) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l || !detail::is_prime_u32(uint32_t(l))) continue;
    APoly g = gcd(f, xq_iter(d / l) - x);
    if (!g.is_one()) return false;
  }
  return true;
}

APoly squarefree_part(const APoly& f0) {
  APoly f = f0.monic();
  if (f.deg() <= 0) return f;
  const FqCtx* F = f.field();
  APoly d = f.derivative();
  if (d.is_zero()) {
    // f = g(theta^p): take p-th root of the coefficient pattern
    uint32_t p = F->p;
    std::vector<FqElem> g;
    for (int i = 0; i <= f.deg(); i += int(p)) {
      FqElem c = f.coeff(size_t(i));
      // c = b^p has the unique root c^{p^{e-1}}
      for (uint32_t k = 1; k < F->e; ++k) c = c.frobenius();
      g.push_back(c);
    }
    return squarefree_part(APoly(F, g));
  }
  APoly g = gcd(f, d);
  APoly sf = f / g;
  if (g.is_one()) return sf;
  APoly rg = squarefree_part(g);
  return (sf * rg / gcd(sf, rg)).monic();
}

namespace {

// distinct-degree then equal-degree (Cantor-Zassenhaus) splitting
void edf(const APoly& f, int d, std::vector<APoly>& out, std::mt19937_64& rng) {
  if (f.deg() == d) { out.push_back(f.monic()); return; }
  const FqCtx* F = f.field();
  const uint32_t p = F->p;
  uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= F->q;
  while (true) {
    // random polynomial of degree < deg f
    std::vector<FqElem> hc(size_t(f.deg()), FqElem::zero(F));
    for (auto& c : hc) c = FqElem::from_index(F, rng() % F->q);
    APoly h(F, hc);
    if (h.is_zero()) continue;
    APoly g = gcd(f, h);
    if (!g.is_one() && g.deg() < f.deg()) {
      edf(g, d, out, rng);
      edf(f / g, d, out, rng);
      return;
    }
    APoly split;
    if (p == 2) {
      // trace map T(h) = h + h^2 + h^4 + ... over F_{2^(e*d)}
      APoly t, hk = h % f;
      uint32_t bits = F->e * uint32_t(d);
      for (uint32_t i = 0; i < bits; ++i) { t += hk; hk = hk * hk % f; }
      split = t;
    } else {
      split = powmod(h, (qd - 1) / 2, f) - APoly(1);
    }
    g = gcd(f, split);
    if (!g.is_one() && g.deg() < f.deg()) {
      edf(g, d, out, rng);
      edf(f / g, d, out, rng);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<APoly, int>> factor(const APoly& f0, uint64_t seed) {
  std::vector<std::pair<APoly, int>> out;
  if (f0.deg() <= 0) return out;
  const FqCtx* F = f0.field();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  APoly f = f0.monic();

  // peel multiplicities by repeated squarefree-part division
  std::vector<APoly> irr;
  APoly sf = squarefree_part(f);
  // DDF on the squarefree part
  {
    APoly g = sf;
    const APoly x = APoly::theta(F);
    APoly xq = x;
    int d = 1;
    while (g.deg() >= 2 * d) {
      xq = powmod(xq, F->q, g);
      APoly h = gcd(g, xq - x);
      if (!h.is_one()) {
        std::vector<APoly> eq;
        edf(h, d, eq, rng);
        for (auto& e : eq) irr.push_back(e);
        g = g / h;
        xq = xq % g;
      }
      ++d;
    }
    if (g.deg() >= 1) irr.push_back(g.monic());
  }
  std::sort(irr.begin(), irr.end(), [](const APoly& a, const APoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
      uint64_t ia = a.coeff(size_t(i)).index(), ib = b.coeff(size_t(i)).index();
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  for (const auto& g : irr) {
    int mult = 0;
    while ((f % g).is_zero()) { f = f / g; ++mult; }
    out.emplace_back(g, mult);
  }
  return out;
}

std::vector<APoly> monic_divisors(const APoly& f, uint64_t seed) {
  auto fac = factor(f, seed);
  std::vector<APoly> divs{APoly::one(f.field())};
  for (const auto& [g, m] : fac) {
    std::vector<APoly> next;
    APoly gp(1);
    for (int k = 0; k <= m; ++k) {
      for (const auto& d : divs) next.push_back(d * gp);
      gp *= g;
    }
    divs = std::move(next);
  }
  return divs;
}

std::vector<APoly> irreducible_enum(const FqCtx* F, int d_max) {
  std::vector<APoly> out;
  for (int d = 1; d <= d_max; ++d) {
    MonicRange r(F, d);
    r.for_each([&](const APoly& f) {
      if (is_irreducible(f)) out.push_back(f);
    });
  }
  return out;
}

uint64_t irreducible_count(uint64_t q, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int pr = 2; pr * pr <= n; ++pr) {
      if (n % pr == 0) {
        n /= pr;
        if (n % pr == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  int64_t total = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k) continue;
    int mu = mobius(k);
    if (!mu) continue;
    uint64_t qk = 1;
    for (int i = 0; i < d / k; ++i) qk *= q;
    total += mu * int64_t(qk);
  }
  return uint64_t(total / d);
}

std::vector<uint32_t> digits_base_p(uint64_t l, uint32_t p) {
  std::vector<uint32_t> d;
  while (l) { d.push_back(uint32_t(l % p)); l /= p; }
  return d;
}

std::vector<uint32_t> lucas_row(uint64_t l, uint32_t p) {
  std::vector<uint32_t> ld = digits_base_p(l, p);
  std::vector<uint32_t> row(size_t(l) + 1);
  // Pascal rows mod p per digit would also work; Lucas keeps it O(l log l)
  // binom(a,b) mod p for single digits via small Pascal table
  std::vector<std::vector<uint32_t>> pas(p, std::vector<uint32_t>(p, 0));
  for (uint32_t a = 0; a < p; ++a) {
    pas[a][0] = 1;
    for (uint32_t b = 1; b <= a; ++b)
      pas[a][b] = (pas[a - 1][b - 1] + (b <= a - 1 ? pas[a - 1][b] : 0)) % p;
  }
  for (uint64_t r = 0; r <= l; ++r) {
    std::vector<uint32_t> rd = digits_base_p(r, p);
    uint32_t v = 1;
    for (size_t i = 0; i < rd.size() || i < ld.size(); ++i) {
      uint32_t li = i < ld.size() ? ld[i] : 0;
      uint32_t ri = i < rd.size() ? rd[i] : 0;
      v = ri > li ? 0 : (v * pas[li][ri]) % p;
      if (!v) break;
    }
    row[size_t(r)] = v;
  }
  return row;
}

}  // namespace ffrep
