#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffmds {

using elem = uint32_t;  // packed base-p coefficient vector of an F_{p^d} element

// F_{p^d} = F_p[x]/(modulus), modulus the lexicographically least monic
// irreducible of degree d.  Elements are indices in [0, q); index
// sum_i c_i p^i stands for sum_i c_i x^i.  Multiplication runs on log/exp
// tables, addition on Zech logarithms, so a field instance costs O(q) memory
// and every arithmetic op is a couple of table lookups.
class Field {
 public:
  // Interned: one instance per (p, d) for the lifetime of the process.
  static const Field* get(long p, int degree);

  long p;
  int degree;
  long q;                    // p^degree
  std::vector<int> modulus;  // ascending, size degree+1, monic

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long c) const {
    long r = c % p;
    return elem(r < 0 ? r + p : r);
  }

  elem add(elem a, elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    long la = log_[a], lb = log_[b];
    long d = lb - la;
    if (d < 0) d += q - 1;
    if (d == half_) return 0;  // 1 + g^d = 0
    long s = la + zech_[d];
    if (s >= q - 1) s -= q - 1;
    return exp_[s];
  }
  elem neg(elem a) const {
    if (a == 0) return 0;
    long s = log_[a] + half_;
    if (s >= q - 1) s -= q - 1;
    return exp_[s];
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    long s = log_[a] + log_[b];
    if (s >= q - 1) s -= q - 1;
    return exp_[s];
  }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    long l = log_[a];
    return exp_[l == 0 ? 0 : q - 1 - l];
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem powi(elem a, long e) const {
    if (a == 0) {
      if (e < 0) throw std::domain_error("0^negative");
      return e == 0 ? 1 : 0;
    }
    long l = (log_[a] * (e % (q - 1))) % (q - 1);
    if (l < 0) l += q - 1;
    return exp_[l];
  }
  elem frob(elem a) const { return powi(a, p); }

  long dlog(elem a) const {
    if (a == 0) throw std::domain_error("dlog(0)");
    return log_[a];
  }
  elem gexp(long k) const {
    k %= (q - 1);
    if (k < 0) k += q - 1;
    return exp_[k];
  }
  elem generator() const { return exp_[1]; }

  // Absolute trace to F_p, returned as an integer in [0, p).
  int trace_fp(elem a) const { return trace_[a]; }
  bool is_square(elem a) const { return a == 0 || (log_[a] & 1) == 0; }

  // Deterministic modulus table used for the shipped small cases; degrees
  // beyond the table fall back to a lex-least search at construction.
  static std::vector<int> lex_least_irreducible(long p, int degree);

 private:
  Field(long p, int degree);
  std::vector<elem> exp_;     // g^i, i in [0, q-1)
  std::vector<long> log_;     // inverse of exp_ (log_[0] unused)
  std::vector<long> zech_;    // zech_[k] = log(1 + g^k), zech_[half_] unused
  std::vector<uint8_t> trace_;
  long half_;  // (q-1)/2, the k with g^k = -1
};

// Subfield embedding F_{p^k} -> F_{p^K} (k | K), the root of the small
// modulus with least packed index.  Any root gives a valid embedding; a
// fixed choice keeps runs reproducible.
class Embedding {
 public:
  Embedding(const Field* sub, const Field* big);
  const Field* sub;
  const Field* big;
  elem fwd(elem a) const { return fwd_[a]; }
  elem back(elem b) const;  // inverse on the image; throws if not in image
 private:
  std::vector<elem> fwd_;
  std::vector<std::pair<elem, elem>> back_sorted_;
};

}  // namespace ffmds
