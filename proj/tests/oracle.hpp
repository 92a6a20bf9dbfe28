#pragma once

// Slow reference implementations that share no code with the library.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// Coefficient vectors, constant term first, entries in [0, p).
using Coeffs = std::vector<int>;

inline Coeffs decode(std::uint32_t v, int p, int n) {
  Coeffs c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p));
    v /= static_cast<std::uint32_t>(p);
  }
  return c;
}

inline std::uint32_t encode(const Coeffs& c, int p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[i]);
  return v;
}

// Schoolbook product reduced modulo the monic defining polynomial f (length n+1).
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, int p, const Coeffs& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Coeffs x = decode(a, p, n);
  const Coeffs y = decode(b, p, n);
  Coeffs prod(static_cast<std::size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
  for (int k = 2 * n - 1; k >= n; --k) {
    const int c = prod[static_cast<std::size_t>(k)] % p;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(k - n + i)] -= c * f[static_cast<std::size_t>(i)];
  }
  Coeffs r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
  return encode(r, p);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, int p, int n) {
  Coeffs x = decode(a, p, n);
  const Coeffs y = decode(b, p, n);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
  return encode(x, p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t k, int p, const Coeffs& f) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a, p, f);
  return r;
}

// Root test by evaluation; enough to decide irreducibility in degree <= 3.
inline bool has_root(const Coeffs& f, int p) {
  for (int x = 0; x < p; ++x) {
    long long v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace oracle
