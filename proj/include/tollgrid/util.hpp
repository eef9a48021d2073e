#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tollgrid {

/// Error type for parse and validation failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// x^n by repeated multiplication; n is small (delay exponents).
inline double pow_int(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// FNV-1a over a byte string.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Shortest round-trippable decimal form, stable across runs.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Uniform in [0, 1) from the top 53 bits; avoids distribution objects so
// streams are identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double exp1(std::mt19937_64& rng) { return -std::log1p(-uniform01(rng)); }

// Splits `total` over n cells, Dirichlet(1) weighted.
inline std::vector<double> random_split(std::mt19937_64& rng, double total, std::size_t n) {
  std::vector<double> w(n);
  double s = 0.0;
  for (auto& x : w) {
    x = exp1(rng);
    s += x;
  }
  for (auto& x : w) x = total * (x / s);
  return w;
}

inline std::uint64_t restart_seed(std::uint64_t base, int restart) {
  std::uint64_t s = base + 0x51ul * static_cast<std::uint64_t>(restart + 1);
  return splitmix64(s);
}

}  // namespace detail
}  // namespace tollgrid
