#pragma once

// Conway polynomials over prime fields, computed from the definition:
// the least primitive polynomial (in Conway's ordering) of degree d over GF(p)
// that is compatible with the Conway polynomials of every proper subfield.

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "belsf/errors.hpp"

namespace belsf {

namespace numth {

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Splits q = p^e; throws DomainError when q is not a prime power.
inline std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be a prime power >= 2");
  auto fs = prime_factors(q);
  if (fs.size() != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  unsigned e = 0;
  while (q > 1) {
    q /= fs[0];
    ++e;
  }
  return {static_cast<std::uint32_t>(fs[0]), e};
}

}  // namespace numth

namespace conway {

/// Little-endian coefficients over GF(p).
using Poly = std::vector<std::uint32_t>;

namespace detail {

// Residues mod a monic f of degree d are stored as length-d vectors.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i)
      prod[k - d + i] = (prod[k - d + i] + (p - top) * f[i]) % p;
  }
  Poly out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

inline Poly x_residue(const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  Poly x(d, 0);
  if (d == 1) {
    x[0] = (p - f[0]) % p;  // x = -f0 mod (x + f0)
  } else {
    x[1] = 1;
  }
  return x;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

inline bool is_one(const Poly& r) {
  if (r[0] != 1) return false;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

inline bool is_zero(const Poly& r) {
  for (auto c : r)
    if (c != 0) return false;
  return true;
}

}  // namespace detail

/// True iff x has multiplicative order p^d - 1 modulo the monic f (hence f is primitive).
inline bool is_primitive(const Poly& f, std::uint32_t p) {
  const auto d = static_cast<unsigned>(f.size() - 1);
  if (f[0] == 0) return false;
  const std::uint64_t order = numth::ipow(p, d) - 1;
  const Poly x = detail::x_residue(f, p);
  if (!detail::is_one(detail::powmod(x, order, f, p))) return false;
  for (auto r : numth::prime_factors(order))
    if (detail::is_one(detail::powmod(x, order / r, f, p))) return false;
  return true;
}

Poly polynomial(std::uint32_t p, unsigned d);

namespace detail {

inline bool compatible(const Poly& f, std::uint32_t p, unsigned d) {
  const std::uint64_t top = numth::ipow(p, d) - 1;
  const Poly x = x_residue(f, p);
  for (unsigned m = 1; m < d; ++m) {
    if (d % m != 0) continue;
    const Poly sub = polynomial(p, m);
    const Poly y = powmod(x, top / (numth::ipow(p, m) - 1), f, p);
    // Horner evaluation of sub at y modulo f.
    Poly acc(d, 0);
    for (std::size_t k = sub.size(); k-- > 0;) {
      acc = mulmod(acc, y, f, p);
      acc[0] = (acc[0] + sub[k]) % p;
    }
    if (!is_zero(acc)) return false;
  }
  return true;
}

}  // namespace detail

/// Conway polynomial C_{p,d}; results are memoised process-wide.
inline Poly polynomial(std::uint32_t p, unsigned d) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, d}); it != cache.end()) return it->second;
  }
  if (!numth::is_prime(p)) throw DomainError("characteristic must be prime");
  if (d == 0) throw DomainError("degree must be positive");

  const std::uint64_t candidates = numth::ipow(p, d);
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    // Digits of idx, most significant first, are the signed coefficients
    // (-1)^(d-i) f_i for i = d-1 down to 0.
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < d; ++i) {
      const auto s = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      f[i] = ((d - i) % 2 == 0) ? s : (p - s) % p;
    }
    if (f[0] == 0) continue;
    if (!is_primitive(f, p)) continue;
    if (!detail::compatible(f, p, d)) continue;
    std::lock_guard lock(mu);
    cache[{p, d}] = f;
    return f;
  }
  throw DomainError("no Conway polynomial found");  // unreachable for valid (p, d)
}

}  // namespace conway
}  // namespace belsf
