#pragma once

#include <cstdint>
#include <vector>

#include "ffmds/gf.hpp"

namespace ffmds {

// Polynomial over a fixed field, ascending coefficients, no trailing zeros.
// The zero polynomial is the empty vector.
struct Poly {
  const Field* F = nullptr;
  std::vector<elem> c;

  Poly() = default;
  Poly(const Field* f, std::vector<elem> coeffs);

  int deg() const { return int(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  elem lc() const { return c.back(); }
  bool monic() const { return !c.empty() && c.back() == 1; }
  elem coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : 0; }

  bool operator==(const Poly& o) const { return F == o.F && c == o.c; }
  bool operator<(const Poly& o) const;  // by degree, then coefficient index

  static Poly zero(const Field* F) { return Poly(F, {}); }
  static Poly one(const Field* F) { return Poly(F, {1}); }
  static Poly constant(const Field* F, elem a) { return a ? Poly(F, {a}) : zero(F); }
  static Poly x(const Field* F) { return Poly(F, {0, 1}); }
  // monic polynomial of degree d with packed low-coefficient index
  static Poly from_index(const Field* F, int d, uint64_t index);
  uint64_t index() const;  // inverse of from_index for monic polynomials

  std::string str() const;  // e.g. "T^2 + 2T + 1"
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, elem s);

Poly neg(const Poly& a);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic unless zero
Poly derivative(const Poly& a);
Poly make_monic(const Poly& a);
elem eval(const Poly& a, elem x);
Poly powmod(const Poly& base, long e, const Poly& modp);

// prod of f over the roots of g counted with multiplicity (g != 0).
// Res(c, g) = c^{deg g}; Res(f, c) = 1 for constants c.
elem resultant(const Poly& f, const Poly& g);

// coefficient of T^{-1} in the Laurent expansion of num/den at infinity
elem laurent_residue(const Poly& num, const Poly& den);

struct Factorization {
  std::vector<std::pair<Poly, int>> primes;  // monic irreducible, multiplicity
  elem unit = 1;
};

// Deterministic complete factorization (square-free + distinct-degree +
// equal-degree with a fixed-seed generator); primes ordered by degree then
// coefficient index.
Factorization factor(const Poly& f);
bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

// Enumeration of monic polynomials of degree d in index order.
class MonicRange {
 public:
  MonicRange(const Field* F, int d) : F_(F), d_(d) {
    count_ = 1;
    for (int i = 0; i < d; ++i) count_ *= uint64_t(F->q);
  }
  uint64_t size() const { return count_; }
  Poly at(uint64_t i) const { return Poly::from_index(F_, d_, i); }

  struct iterator {
    const MonicRange* r;
    uint64_t i;
    Poly operator*() const { return r->at(i); }
    iterator& operator++() {
      ++i;
      return *this;
    }
    bool operator!=(const iterator& o) const { return i != o.i; }
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  const Field* F_;
  int d_;
  uint64_t count_;
};

// Irreducible monic polynomials of degree d, in index order.
std::vector<Poly> irreducibles(const Field* F, int d);

// Norm map F_{q^e} -> F_q through an embedding: Nm(x) = x^{(Q-1)/(q-1)}.
elem norm_to_base(const Embedding& emb, elem x);

}  // namespace ffmds
