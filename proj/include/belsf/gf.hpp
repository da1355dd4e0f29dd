#pragma once

// Exact arithmetic in the tower GF(p) <= GF(q) <= GF(q^n).
//
// GF(q) = GF(p)[Y]/C_{p,e} and GF(q^n) = GF(q)[X]/h, where X is a root of the
// Conway polynomial C_{p,en} and h is its minimal polynomial over GF(q) chosen
// so that the norm X^((q^n-1)/(q-1)) equals Y.  Both generators are primitive.
//
// An element is stored as its integer encoding: the coordinate vector over
// GF(q) in the power basis 1, X, ..., X^(n-1), each coordinate itself a GF(p)
// vector in the basis 1, Y, ..., Y^(e-1), flattened little-endian into
// sum a_i p^i.  Elements of GF(q) are therefore exactly the encodings < q.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "belsf/conway.hpp"
#include "belsf/errors.hpp"

namespace belsf {

/// Element of GF(q^n) under the integer encoding above.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// The automorphism x -> x^(q^k) of GF(q^n) over GF(q); k is kept in [0, n).
struct Aut {
  unsigned k = 0;
  friend constexpr auto operator<=>(Aut, Aut) = default;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;
  static constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 16;

  Field(std::uint32_t p, unsigned e, unsigned n) : p_(p), e_(e), n_(n) {
    if (!numth::is_prime(p)) throw DomainError("p=" + std::to_string(p) + " is not prime");
    if (e == 0 || n == 0) throw DomainError("e and n must be positive");
    const std::uint64_t q = numth::ipow(p, e);
    if (q > kTableThreshold) throw DomainError("base field order exceeds 2^16");
    const std::uint64_t order = numth::ipow(q, n);
    if (order > kMaxOrder) throw DomainError("field order exceeds 2^24");
    q_ = static_cast<std::uint32_t>(q);
    order_ = static_cast<std::uint32_t>(order);
    build_base();
    build_extension();
    build_dual_basis();
  }

  /// Context for GF(q^n) with q given as a prime power.
  static std::shared_ptr<const Field> make(std::uint64_t q, unsigned n) {
    auto [p, e] = numth::prime_power(q);
    return std::make_shared<const Field>(p, e, n);
  }

  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  std::uint32_t q() const { return q_; }
  /// q^n
  std::uint32_t order() const { return order_; }
  bool has_tables() const { return !exp_.empty(); }

  const conway::Poly& irr_base() const { return irr_base_; }
  /// Monic degree-n polynomial over GF(q), little-endian base encodings.
  const std::vector<std::uint32_t>& irr_ext() const { return irr_ext_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The primitive generator X.
  Elem generator() const { return Elem{n_ == 1 ? base_generator() : q_}; }
  Elem from_base(std::uint32_t s) const { return Elem{s}; }
  bool is_base(Elem x) const { return x.v < q_; }

  Aut aut(long long k) const {
    const long long m = static_cast<long long>(n_);
    return Aut{static_cast<unsigned>(((k % m) + m) % m)};
  }

  // ---- GF(q) scalars (values 0..q-1) ----

  std::uint32_t badd(std::uint32_t a, std::uint32_t b) const { return add_digits(a, b, e_); }
  std::uint32_t bneg(std::uint32_t a) const { return neg_digits(a, e_); }
  std::uint32_t bsub(std::uint32_t a, std::uint32_t b) const { return add_digits(a, neg_digits(b, e_), e_); }
  std::uint32_t bmul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return bexp_[(blog_[a] + blog_[b]) % (q_ - 1)];
  }
  std::uint32_t binv(std::uint32_t a) const {
    if (a == 0) throw DomainError("inverse of zero in GF(q)");
    return bexp_[(q_ - 1 - blog_[a]) % (q_ - 1)];
  }

  // ---- GF(q^n) ----

  Elem add(Elem a, Elem b) const { return Elem{add_digits(a.v, b.v, e_ * n_)}; }
  Elem neg(Elem a) const { return Elem{neg_digits(a.v, e_ * n_)}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    if (has_tables()) return Elem{exp_[(std::uint64_t{log_[a.v]} + log_[b.v]) % (order_ - 1)]};
    return poly_mul(a, b);
  }

  Elem inv(Elem a) const {
    if (a.v == 0) throw DomainError("inverse of zero");
    if (has_tables()) return Elem{exp_[(order_ - 1 - log_[a.v]) % (order_ - 1)]};
    return pow(a, order_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.v == 0) return zero();
    if (has_tables()) return Elem{exp_[(log_[a.v] * (k % (order_ - 1))) % (order_ - 1)]};
    Elem r = one();
    while (k > 0) {
      if (k & 1U) r = mul(r, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return r;
  }

  /// x^(q^k)
  Elem frob(Elem x, Aut a) const {
    if (a.k == 0 || x.v == 0) return x;
    if (has_tables()) return Elem{exp_[(log_[x.v] * qpow_mod_[a.k]) % (order_ - 1)]};
    return pow(x, numth::ipow(q_, a.k));
  }
  Elem frob(Elem x, long long k) const { return frob(x, aut(k)); }

  /// x^(p^k), an automorphism of GF(q^n) over GF(p); k is taken mod e*n.
  Elem frob_p(Elem x, unsigned k) const {
    k %= (e_ * n_);
    if (k == 0 || x.v == 0) return x;
    return pow(x, numth::ipow(p_, k));
  }

  /// Trace to GF(q).
  Elem trace(Elem x) const {
    Elem s = zero();
    for (unsigned k = 0; k < n_; ++k) s = add(s, frob(x, Aut{k}));
    return s;
  }

  /// Norm onto GF(q^(n/t)): the product of x^(beta^i), i < t, with beta = x -> x^(q^(n/t)).
  Elem rel_norm(Elem x, unsigned t) const {
    if (t == 0 || n_ % t != 0) throw DomainError("t=" + std::to_string(t) + " does not divide n=" + std::to_string(n_));
    const std::uint64_t sub = numth::ipow(q_, n_ / t);
    return pow(x, (std::uint64_t{order_} - 1) / (sub - 1));
  }

  /// Some square root, or nullopt when x is a non-square.
  std::optional<Elem> sqrt(Elem x) const {
    if (x.v == 0) return x;
    if (p_ == 2) return pow(x, std::uint64_t{order_} / 2);
    if (has_tables()) {
      const auto l = log_[x.v];
      if (l % 2 != 0) return std::nullopt;
      return Elem{exp_[l / 2]};
    }
    return tonelli_shanks(x);
  }

  /// Coordinates of x over GF(q) in the power basis.
  std::vector<std::uint32_t> coords(Elem x) const {
    std::vector<std::uint32_t> c(n_);
    for (unsigned k = 0; k < n_; ++k) {
      c[k] = x.v % q_;
      x.v /= q_;
    }
    return c;
  }

  Elem from_coords(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (unsigned k = n_; k-- > 0;) v = v * q_ + c[k];
    return Elem{v};
  }

  /// Basis element X^j.
  Elem basis(unsigned j) const { return Elem{static_cast<std::uint32_t>(numth::ipow(q_, j))}; }

  /// Trace-dual of the power basis: tr(X^j * dual(k)) = [j == k].
  Elem dual_basis(unsigned k) const { return dual_[k]; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.n_ == b.n_;
  }

 private:
  std::uint32_t p_;
  unsigned e_;
  unsigned n_;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  conway::Poly irr_base_;
  std::vector<std::uint32_t> irr_ext_;
  std::vector<std::uint32_t> bexp_, blog_;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint64_t> qpow_mod_;
  std::vector<Elem> dual_;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, unsigned digits) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    std::uint32_t m = 1;
    for (unsigned i = 0; i < digits && (a | b) != 0; ++i) {
      std::uint32_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * m;
      m *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  std::uint32_t neg_digits(std::uint32_t a, unsigned digits) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    std::uint32_t m = 1;
    for (unsigned i = 0; i < digits && a != 0; ++i) {
      const std::uint32_t d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * m;
      m *= p_;
      a /= p_;
    }
    return r;
  }

  std::uint32_t base_generator() const { return bexp_[1 % (q_ - 1 == 0 ? 1 : q_ - 1)]; }

  void build_base() {
    irr_base_ = conway::polynomial(p_, e_);
    bexp_.assign(q_ - 1, 0);
    blog_.assign(q_, 0);
    // Multiply by Y in GF(p)[Y]/irr_base, starting at 1.
    std::vector<std::uint32_t> cur(e_, 0), y = conway::detail::x_residue(irr_base_, p_);
    cur[0] = 1;
    auto encode = [&](const std::vector<std::uint32_t>& c) {
      std::uint32_t v = 0;
      for (unsigned i = e_; i-- > 0;) v = v * p_ + c[i];
      return v;
    };
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      const std::uint32_t v = encode(cur);
      if (i > 0 && v == 1) throw ValidityError("base generator is not primitive");
      bexp_[i] = v;
      blog_[v] = i;
      cur = conway::detail::mulmod(cur, y, irr_base_, p_);
    }
    if (encode(cur) != 1) throw ValidityError("base generator is not primitive");
  }

  // ---- polynomials over GF(q) as little-endian vectors of base values ----

  using BPoly = std::vector<std::uint32_t>;

  void trim(BPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  BPoly bpoly_mod(BPoly a, const BPoly& m) const {
    trim(a);
    const std::uint32_t lead_inv = binv(m.back());
    while (a.size() >= m.size()) {
      const std::uint32_t coef = bmul(a.back(), lead_inv);
      const std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = bsub(a[shift + i], bmul(coef, m[i]));
      trim(a);
    }
    return a;
  }

  BPoly bpoly_mulmod(const BPoly& a, const BPoly& b, const BPoly& m) const {
    if (a.empty() || b.empty()) return {};
    BPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = badd(r[i + j], bmul(a[i], b[j]));
    return bpoly_mod(std::move(r), m);
  }

  BPoly bpoly_gcd(BPoly a, BPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      BPoly r = bpoly_mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    const std::uint32_t li = binv(a.back());
    for (auto& c : a) c = bmul(c, li);
    return a;
  }

  void build_extension() {
    const conway::Poly big = conway::polynomial(p_, e_ * n_);
    if (e_ == 1) {
      irr_ext_.assign(big.begin(), big.end());
    } else {
      // h = gcd(C_{p,en}(X), X^((q^n-1)/(q-1)) - Y) over GF(q).
      BPoly m(big.begin(), big.end());
      BPoly x{0, 1};
      BPoly r{1};
      std::uint64_t k = (std::uint64_t{order_} - 1) / (q_ - 1);
      BPoly base = bpoly_mod(x, m);
      while (k > 0) {
        if (k & 1U) r = bpoly_mulmod(r, base, m);
        base = bpoly_mulmod(base, base, m);
        k >>= 1U;
      }
      r.resize(std::max<std::size_t>(r.size(), 1), 0);
      r[0] = bsub(r[0], p_);  // Y has encoding p
      irr_ext_ = bpoly_gcd(m, r);
      if (irr_ext_.size() != n_ + 1) throw ValidityError("could not isolate the extension polynomial");
    }

    qpow_mod_.assign(n_, 1);
    for (unsigned k = 1; k < n_; ++k)
      qpow_mod_[k] = (qpow_mod_[k - 1] * q_) % (std::uint64_t{order_} - 1 == 0 ? 1 : order_ - 1);

    if (order_ <= kTableThreshold) {
      exp_.assign(order_ - 1, 0);
      log_.assign(order_, 0);
      Elem cur = one();
      for (std::uint32_t i = 0; i < order_ - 1; ++i) {
        if (i > 0 && cur.v == 1) throw ValidityError("generator is not primitive");
        exp_[i] = cur.v;
        log_[cur.v] = i;
        cur = mul_by_generator(cur);
      }
      if (cur.v != 1) throw ValidityError("generator is not primitive");
    } else {
      const Elem g = generator();
      const std::uint64_t ord = std::uint64_t{order_} - 1;
      if (pow(g, ord) != one()) throw ValidityError("generator is not primitive");
      for (auto r : numth::prime_factors(ord))
        if (pow(g, ord / r) == one()) throw ValidityError("generator is not primitive");
    }
  }

  Elem mul_by_generator(Elem x) const {
    if (n_ == 1) return Elem{bmul(x.v, base_generator())};
    auto c = coords(x);
    const std::uint32_t top = c[n_ - 1];
    for (unsigned k = n_ - 1; k > 0; --k) c[k] = c[k - 1];
    c[0] = 0;
    if (top != 0)
      for (unsigned k = 0; k < n_; ++k) c[k] = bsub(c[k], bmul(top, irr_ext_[k]));
    return from_coords(c);
  }

  Elem poly_mul(Elem a, Elem b) const {
    const auto ca = coords(a), cb = coords(b);
    BPoly r(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < n_; ++j) r[i + j] = badd(r[i + j], bmul(ca[i], cb[j]));
    }
    for (unsigned k = 2 * n_ - 1; k-- > n_;) {
      const std::uint32_t top = r[k];
      if (top == 0) continue;
      r[k] = 0;
      for (unsigned i = 0; i < n_; ++i) r[k - n_ + i] = bsub(r[k - n_ + i], bmul(top, irr_ext_[i]));
    }
    r.resize(n_);
    return from_coords(r);
  }

  std::optional<Elem> tonelli_shanks(Elem x) const {
    const std::uint64_t ord = std::uint64_t{order_} - 1;
    if (pow(x, ord / 2) != one()) return std::nullopt;
    std::uint64_t s = 0, t = ord;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    Elem z = generator();  // primitive, hence a non-square
    Elem c = pow(z, t), r = pow(x, (t + 1) / 2), u = pow(x, t);
    std::uint64_t m = s;
    while (u != one()) {
      std::uint64_t i = 0;
      Elem w = u;
      while (w != one()) {
        w = mul(w, w);
        ++i;
      }
      Elem b = c;
      for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      u = mul(u, c);
      m = i;
    }
    return r;
  }

  void build_dual_basis() {
    // Gram matrix G_jk = tr(X^j X^k) over GF(q), inverted by Gauss-Jordan.
    const unsigned n = n_;
    std::vector<std::uint32_t> a(n * 2 * n, 0);
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned k = 0; k < n; ++k) a[j * 2 * n + k] = trace(mul(basis(j), basis(k))).v;
      a[j * 2 * n + n + j] = 1;
    }
    for (unsigned col = 0; col < n; ++col) {
      unsigned piv = col;
      while (piv < n && a[piv * 2 * n + col] == 0) ++piv;
      if (piv == n) throw ValidityError("trace form is degenerate");
      for (unsigned c = 0; c < 2 * n; ++c) std::swap(a[col * 2 * n + c], a[piv * 2 * n + c]);
      const std::uint32_t iv = binv(a[col * 2 * n + col]);
      for (unsigned c = 0; c < 2 * n; ++c) a[col * 2 * n + c] = bmul(a[col * 2 * n + c], iv);
      for (unsigned r = 0; r < n; ++r) {
        if (r == col || a[r * 2 * n + col] == 0) continue;
        const std::uint32_t f = a[r * 2 * n + col];
        for (unsigned c = 0; c < 2 * n; ++c)
          a[r * 2 * n + c] = bsub(a[r * 2 * n + c], bmul(f, a[col * 2 * n + c]));
      }
    }
    dual_.assign(n, zero());
    for (unsigned k = 0; k < n; ++k) {
      Elem d = zero();
      for (unsigned l = 0; l < n; ++l) d = add(d, mul(Elem{a[l * 2 * n + n + k]}, basis(l)));
      dual_[k] = d;
    }
  }
};

}  // namespace belsf
