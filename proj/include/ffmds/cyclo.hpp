#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

namespace ffmds {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<long double>;

// Q(zeta_L) in the power basis 1, zeta, ..., zeta^{phi(L)-1}, reduction by
// the L-th cyclotomic polynomial.  All arithmetic exact; embed() is the only
// place floating point appears.
class CycField {
 public:
  static const CycField* get(int conductor);

  int L;
  int phi;
  std::vector<Int> phi_poly;  // Phi_L, ascending, monic, integer

  // zeta_L^k in the basis, any k
  const std::vector<Int>& zeta_row(int k) const { return rows_[((k % L) + L) % L]; }
  cplx zeta_embed(int k) const { return emb_[((k % L) + L) % L]; }

 private:
  explicit CycField(int conductor);
  std::vector<std::vector<Int>> rows_;  // rows_[k] = zeta^k reduced, k in [0, L)
  std::vector<cplx> emb_;
};

class Cyc {
 public:
  Cyc() : K_(nullptr) {}
  explicit Cyc(const CycField* K) : K_(K), v_(K->phi) {}
  static Cyc zero(const CycField* K) { return Cyc(K); }
  static Cyc one(const CycField* K) { return from_rat(K, 1); }
  static Cyc from_rat(const CycField* K, const Rat& r);
  static Cyc zeta_pow(const CycField* K, long k);

  const CycField* field() const { return K_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // requires is_rational()

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const Rat& r) const;
  Cyc inv() const;
  Cyc conj() const;
  Cyc pow(long e) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  cplx embed() const;
  long double embed_error_bound() const;  // coarse certified bound on |embed - value|

  const std::vector<Rat>& coords() const { return v_; }
  Rat& coord(int i) { return v_[i]; }

  std::string str() const;

 private:
  const CycField* K_;
  std::vector<Rat> v_;
};

// sqrt(q) for q = p^k as an exact element of Q(zeta_L), 4p | L; squares to q
// and embeds onto the positive real axis.
Cyc sqrt_q(const CycField* K, long p, int k);

}  // namespace ffmds
