#include "canmap/arith/prime_field.hpp"

#include <algorithm>

namespace canmap {

Fp inverse(const Fp& a) {
  if (a.is_zero()) throw std::domain_error("division by zero");
  return Fp(static_cast<std::uint32_t>(modp::inv_mod(a.value(), a.modulus())), a.modulus());
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !modp::is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}

namespace modp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 result = 1, b = base % p;
  while (exp) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible modulo p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

namespace {

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo b (b nonzero).
UPoly rem(UPoly a, const UPoly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = mulm(a.back(), lead_inv, p);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] + p - mulm(factor, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

UPoly quo(UPoly a, const UPoly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = mulm(a.back(), lead_inv, p);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] + p - mulm(factor, b[i], p)) % p;
    }
    a.pop_back();
    trim(a);
  }
  return q;
}

UPoly mul_mod(const UPoly& a, const UPoly& b, const UPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulm(a[i], b[j], p)) % p;
  }
  return rem(std::move(out), f, p);
}

UPoly pow_mod_poly(UPoly base, std::uint64_t exp, const UPoly& f, std::uint64_t p) {
  UPoly result{1};
  base = rem(std::move(base), f, p);
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

UPoly monic(UPoly f, std::uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  const std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mulm(c, inv, p);
  return f;
}

void split_roots(const UPoly& g, std::uint64_t p, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(mulm(p - g[0] % p, inv_mod(g[1], p), p) % p);
    return;
  }
  // Equal-degree splitting with the deterministic shifts a = 0, 1, 2, ...
  for (std::uint64_t a = 0; a < p; ++a) {
    UPoly w = pow_mod_poly(UPoly{a % p, 1}, (p - 1) / 2, g, p);
    if (w.empty()) w = {p - 1};
    else w[0] = (w[0] + p - 1) % p;
    trim(w);
    UPoly d = gcd(g, w, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, p, out);
      split_roots(monic(quo(g, d, p), p), p, out);
      return;
    }
  }
}

}  // namespace

UPoly gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

UPoly derivative(const UPoly& f, std::uint64_t p) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % p, p));
  trim(d);
  return d;
}

bool is_squarefree(const UPoly& f, std::uint64_t p) {
  UPoly g = gcd(f, derivative(f, p), p);
  return g.size() == 1;
}

std::vector<std::uint64_t> roots(const UPoly& f_in, std::uint64_t p) {
  UPoly f = monic(f_in, p);
  if (f.size() <= 1) return {};
  UPoly xp = pow_mod_poly(UPoly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  trim(xp);
  UPoly g = gcd(f, xp, p);
  std::vector<std::uint64_t> out;
  split_roots(g, p, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace modp

}  // namespace canmap
