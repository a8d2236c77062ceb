#include "ffmds/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ffmds {

Poly::Poly(const Field* f, std::vector<elem> coeffs) : F(f), c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  return index() < o.index();
}

Poly Poly::from_index(const Field* F, int d, uint64_t index) {
  std::vector<elem> c(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    c[i] = elem(index % uint64_t(F->q));
    index /= uint64_t(F->q);
  }
  c[d] = 1;
  return Poly(F, std::move(c));
}

uint64_t Poly::index() const {
  uint64_t idx = 0;
  for (int i = deg() - 1; i >= 0; --i) idx = idx * uint64_t(F->q) + c[i];
  return idx;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (!c[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<elem> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.F->add(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(a.F, std::move(c));
}

Poly neg(const Poly& a) {
  std::vector<elem> c(a.c);
  for (auto& x : c) x = a.F->neg(x);
  return Poly(a.F, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + neg(b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.F);
  std::vector<elem> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i])
      for (size_t j = 0; j < b.c.size(); ++j)
        if (b.c[j]) c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
  return Poly(a.F, std::move(c));
}

Poly operator*(const Poly& a, elem s) {
  std::vector<elem> c(a.c);
  for (auto& x : c) x = a.F->mul(x, s);
  return Poly(a.F, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field* F = a.F;
  std::vector<elem> r(a.c);
  std::vector<elem> q(std::max(0, a.deg() - b.deg() + 1), 0);
  elem ilc = F->inv(b.lc());
  int rd = int(r.size()) - 1;
  while (rd >= b.deg()) {
    while (rd >= 0 && r[rd] == 0) --rd;
    if (rd < b.deg()) break;
    elem c = F->mul(r[rd], ilc);
    int shift = rd - b.deg();
    q[shift] = c;
    for (int i = 0; i <= b.deg(); ++i)
      r[i + shift] = F->sub(r[i + shift], F->mul(c, b.c[i]));
  }
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

Poly derivative(const Poly& a) {
  if (a.deg() <= 0) return Poly::zero(a.F);
  std::vector<elem> c(a.deg(), 0);
  for (int i = 1; i <= a.deg(); ++i) c[i - 1] = a.F->mul(a.c[i], a.F->from_int(i));
  return Poly(a.F, std::move(c));
}

Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.monic()) return a;
  return a * a.F->inv(a.lc());
}

elem eval(const Poly& a, elem x) {
  elem r = 0;
  for (int i = a.deg(); i >= 0; --i) r = a.F->add(a.F->mul(r, x), a.c[i]);
  return r;
}

Poly powmod(const Poly& base, long e, const Poly& modp) {
  Poly r = Poly::one(base.F), b = mod(base, modp);
  while (e) {
    if (e & 1) r = mod(r * b, modp);
    b = mod(b * b, modp);
    e >>= 1;
  }
  return r;
}

elem resultant(const Poly& f, const Poly& g) {
  const Field* F = f.F;
  if (g.is_zero()) throw std::invalid_argument("resultant: g = 0");
  if (g.deg() == 0) return 1;  // empty product over no roots
  Poly gm = make_monic(g);
  if (f.is_zero()) return 0;
  if (f.deg() == 0) return F->powi(f.c[0], gm.deg());
  // prod_{g(b)=0} f(b) = prod r(b) with r = f mod g; swap via monic symmetry.
  Poly r = mod(f, gm);
  if (r.is_zero()) return 0;
  if (r.deg() == 0) return F->powi(r.c[0], gm.deg());
  elem lead = F->powi(r.lc(), gm.deg());
  elem sub = resultant(gm, make_monic(r));
  elem out = F->mul(lead, sub);
  if ((long(gm.deg()) * r.deg()) % 2 != 0) out = F->neg(out);
  return out;
}

elem laurent_residue(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("laurent_residue: denominator = 0");
  const Field* F = num.F;
  int d = den.deg();
  if (d == 0) return 0;
  Poly r = mod(num, den);
  // num/den = poly + r/den; the T^{-1} coefficient of r/den is
  // coeff_{d-1}(r)/lc(den) since all lower terms contribute below T^{-1}.
  return F->mul(r.coeff(d - 1), F->inv(den.lc()));
}

namespace {

// splitmix64, fixed seed: factorization output must be reproducible
struct DetRng {
  uint64_t s = 0x9E3779B97F4A7C15ull;
  uint64_t next() {
    uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

Poly frob_pth_root(const Poly& f) {
  // f = g(x^p): recover g; coefficients need a p-th root, a^{1/p} = a^{q/p}.
  const Field* F = f.F;
  long p = F->p;
  std::vector<elem> c(f.deg() / p + 1);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F->powi(f.coeff(int(i * p)), F->q / p);
  return Poly(F, std::move(c));
}

void squarefree_decompose(const Poly& f, int outer_mult, std::map<uint64_t, int>& seen,
                          std::vector<std::pair<Poly, int>>& out);

void split_equal_degree(const Poly& f, int d, DetRng& rng, std::vector<Poly>& out) {
  // Cantor-Zassenhaus for odd characteristic
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const Field* F = f.F;
  long q = F->q;
  // exponent (q^d - 1)/2 can overflow long for large q^d; degrees stay tiny here
  long e = 1;
  for (int i = 0; i < d; ++i) e *= q;
  e = (e - 1) / 2;
  while (true) {
    std::vector<elem> rc(f.deg(), 0);
    for (auto& x : rc) x = elem(rng.next() % uint64_t(q));
    Poly h(F, std::move(rc));
    if (h.is_zero()) continue;
    Poly t = powmod(h, e, f);  // h^{(q^d-1)/2} = +-1 mod each factor
    Poly g = gcd(t - Poly::one(F), f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      split_equal_degree(g, d, rng, out);
      split_equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

void factor_squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  // distinct-degree then equal-degree
  const Field* F = f.F;
  Poly rest = f;
  Poly xq = Poly::x(F);
  DetRng rng;
  for (int d = 1; rest.deg() > 0; ++d) {
    if (2 * d > rest.deg()) {
      out.emplace_back(rest, mult);
      break;
    }
    xq = powmod(xq, F->q, rest);
    Poly g = gcd(xq - Poly::x(F), rest);
    if (g.deg() > 0) {
      std::vector<Poly> pieces;
      split_equal_degree(g, d, rng, pieces);
      for (auto& pc : pieces) out.emplace_back(pc, mult);
      rest = divmod(rest, g).first;
      xq = mod(xq, rest);
    }
  }
}

void squarefree_decompose(const Poly& f, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
  // Yun-style decomposition adapted to characteristic p
  const Field* F = f.F;
  Poly a = f;
  Poly d = derivative(a);
  if (d.is_zero()) {
    squarefree_decompose(frob_pth_root(a), outer_mult * int(F->p), out);
    return;
  }
  Poly g = gcd(a, d);
  Poly w = divmod(a, g).first;  // product of distinct factors with mult not divisible by p
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, g);
    Poly z = divmod(w, y).first;  // factors of multiplicity exactly i
    if (z.deg() > 0) factor_squarefree(z, outer_mult * i, out);
    w = y;
    g = divmod(g, y).first;
    ++i;
  }
  if (g.deg() > 0) squarefree_decompose(g, outer_mult, out);  // p-th power part
}

}  // namespace

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization out;
  out.unit = f.lc();
  Poly fm = make_monic(f);
  if (fm.deg() == 0) return out;
  std::vector<std::pair<Poly, int>> primes;
  squarefree_decompose(fm, 1, primes);
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  out.primes = std::move(primes);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.deg() <= 0) return false;
  auto fac = factor(f);
  return fac.primes.size() == 1 && fac.primes[0].second == 1;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return gcd(f, derivative(f)).deg() <= 0;
}

std::vector<Poly> irreducibles(const Field* F, int d) {
  std::vector<Poly> out;
  if (d == 1) {
    for (auto f : MonicRange(F, 1)) out.push_back(f);
    return out;
  }
  for (auto f : MonicRange(F, d)) {
    bool has_root = false;
    if (d <= 3) {
      for (long x = 0; x < F->q && !has_root; ++x) has_root = eval(f, elem(x)) == 0;
      if (has_root) continue;
      if (d <= 3) {  // no roots => irreducible for degrees 2 and 3
        out.push_back(f);
        continue;
      }
    }
    if (is_irreducible(f)) out.push_back(f);
  }
  return out;
}

elem norm_to_base(const Embedding& emb, elem x) {
  if (x == 0) return 0;
  long e = (emb.big->q - 1) / (emb.sub->q - 1);
  return emb.back(emb.big->powi(x, e));
}

}  // namespace ffmds
