#include "ffmds/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace ffmds {

namespace {

// raw coefficient-vector arithmetic used only during table construction
using vec = std::vector<int>;

vec raw_mul(const vec& a, const vec& b, const vec& mod, long p) {
  int d = int(mod.size()) - 1;
  std::vector<long> t(2 * d - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + long(a[i]) * b[j]) % p;
  for (int k = int(t.size()) - 1; k >= d; --k) {
    long c = t[k];
    if (c) {
      t[k] = 0;
      for (int j = 0; j < d; ++j) t[k - d + j] = ((t[k - d + j] - c * mod[j]) % p + p) % p;
    }
  }
  vec out(d);
  for (int i = 0; i < d; ++i) out[i] = int(t[i]);
  return out;
}

elem pack(const vec& c, long p) {
  long idx = 0;
  for (int i = int(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
  return elem(idx);
}

vec unpack(elem a, long p, int d) {
  vec c(d);
  for (int i = 0; i < d; ++i) {
    c[i] = int(a % p);
    a = elem(a / p);
  }
  return c;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// gcd of polynomials over F_p with plain int vectors, for the modulus search
vec fp_mod(vec a, const vec& b, long p) {
  auto deg = [](const vec& v) { return int(v.size()) - 1; };
  auto inv_mod_p = [&](long x) {
    long r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  long ilc = inv_mod_p(b.back());
  while (deg(a) >= deg(b) && !a.empty()) {
    long c = a.back() * ilc % p;
    int shift = deg(a) - deg(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

vec fp_gcd(vec a, vec b, long p) {
  while (!b.empty()) {
    vec r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

vec fp_powmod_x_p(const vec& base, const vec& mod, long p) {
  // base^p mod `mod`, square-and-multiply with naive mults
  auto mulmod = [&](const vec& a, const vec& b) {
    std::vector<long> t(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + long(a[i]) * b[j]) % p;
    vec r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = int(t[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return fp_mod(r, mod, p);
  };
  vec result{1}, b = base;
  long e = p;
  while (e) {
    if (e & 1) result = mulmod(result, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return result;
}

bool fp_irreducible(const vec& f, long p) {
  // f monic of degree d is irreducible iff x^{p^d} = x mod f and
  // gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
  int d = int(f.size()) - 1;
  if (d == 1) return true;
  vec x{0, 1};
  std::vector<vec> frob_pows;  // x^{p^i} mod f
  frob_pows.push_back(fp_mod(x, f, p));
  for (int i = 1; i <= d; ++i) frob_pows.push_back(fp_powmod_x_p(frob_pows.back(), f, p));
  auto sub_x = [&](vec v) {
    if (v.size() < 2) v.resize(2, 0);
    v[1] = int(((v[1] - 1) % p + p) % p);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  if (!sub_x(frob_pows[d]).empty()) return false;
  for (long r : prime_factors(d)) {
    vec g = fp_gcd(f, sub_x(frob_pows[d / r]), p);
    if (int(g.size()) - 1 != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> Field::lex_least_irreducible(long p, int degree) {
  if (degree == 1) return {0, 1};  // x
  // candidates ordered by packed index of the low coefficients
  long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    vec f(degree + 1, 0);
    long a = idx;
    for (int i = 0; i < degree; ++i) {
      f[i] = int(a % p);
      a /= p;
    }
    f[degree] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (fp_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(long p_, int degree_) : p(p_), degree(degree_) {
  q = 1;
  for (int i = 0; i < degree; ++i) {
    q *= p;
    if (q > (1L << 26)) throw std::runtime_error("field too large (q > 2^26)");
  }
  modulus = lex_least_irreducible(p, degree);

  // generator: least element of multiplicative order q-1
  auto pf = prime_factors(q - 1);
  auto raw_pow = [&](vec b, long e) {
    vec r(degree, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, b, modulus, p);
      b = raw_mul(b, b, modulus, p);
      e >>= 1;
    }
    return r;
  };
  elem gen = 0;
  for (elem cand = 2; cand < elem(q); ++cand) {
    vec c = unpack(cand, p, degree);
    bool ok = true;
    for (long f : pf) {
      vec r = raw_pow(c, (q - 1) / f);
      if (pack(r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (!gen) throw std::logic_error("no generator found");

  exp_.resize(q - 1);
  log_.assign(q, 0);
  exp_[0] = 1;
  vec g = unpack(gen, p, degree), cur{g};
  exp_[1] = gen;
  log_[1] = 0;
  log_[gen] = 1;
  for (long i = 2; i < q - 1; ++i) {
    cur = raw_mul(cur, g, modulus, p);
    exp_[i] = pack(cur, p);
    log_[exp_[i]] = i;
  }
  half_ = (q - 1) / 2;

  zech_.assign(q - 1, 0);
  for (long k = 0; k < q - 1; ++k) {
    if (k == half_) continue;
    // 1 + g^k, computed on digits
    vec c = unpack(exp_[k], p, degree);
    c[0] = int((c[0] + 1) % p);
    elem s = pack(c, p);
    zech_[k] = log_[s];
  }

  trace_.assign(q, 0);
  for (long a = 1; a < q; ++a) {
    elem t = 0, x = elem(a);
    for (int i = 0; i < degree; ++i) {
      // digit-wise add (no zech available ordering issue here, but zech is ready anyway)
      t = add(t, x);
      x = frob(x);
    }
    if (t >= elem(p)) throw std::logic_error("trace not in prime field");
    trace_[a] = uint8_t(t);
  }
}

const Field* Field::get(long p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, degree);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, degree))).first;
  return it->second.get();
}

Embedding::Embedding(const Field* sub_, const Field* big_) : sub(sub_), big(big_) {
  if (sub->p != big->p || big->degree % sub->degree != 0)
    throw std::invalid_argument("not a subfield");
  // least root of sub->modulus in big
  elem root = 0;
  bool found = false;
  for (long x = 0; x < big->q; ++x) {
    elem acc = 0;
    for (int i = sub->degree; i >= 0; --i)
      acc = big->add(big->mul(acc, elem(x)), big->from_int(sub->modulus[i]));
    if (acc == 0) {
      root = elem(x);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root");
  fwd_.resize(sub->q);
  back_sorted_.reserve(sub->q);
  for (long a = 0; a < sub->q; ++a) {
    elem img = 0, rp = 1;
    long rest = a;
    for (int i = 0; i < sub->degree; ++i) {
      int digit = int(rest % sub->p);
      rest /= sub->p;
      if (digit) img = big->add(img, big->mul(big->from_int(digit), rp));
      rp = big->mul(rp, root);
    }
    fwd_[a] = img;
    back_sorted_.emplace_back(img, elem(a));
  }
  std::sort(back_sorted_.begin(), back_sorted_.end());
}

elem Embedding::back(elem b) const {
  auto it = std::lower_bound(back_sorted_.begin(), back_sorted_.end(),
                             std::make_pair(b, elem(0)));
  if (it == back_sorted_.end() || it->first != b)
    throw std::domain_error("element not in subfield image");
  return it->second;
}

}  // namespace ffmds
