#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace igcount {

// Arbitrary-precision non-negative counter. All coalition/vector counts in
// this library use it; never serialize as a float.
using Big = mpz_class;

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline Big binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Big(0);
  Big r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// 2^e for e >= 0.
inline Big pow2(long e) {
  if (e < 0) throw std::logic_error("pow2: negative exponent");
  Big r(1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

// Malformed input: unknown ids, bad files, dimension mismatches. CLI exit 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structurally valid object that violates a model requirement
// (zero labels in a decision model, fraction value out of range). CLI exit 2.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// A requested engine does not apply to the instance. Carries a certificate
// naming the offending vertex/arc where one exists. CLI exit 3.
struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& what, std::string cert = "")
      : std::runtime_error(what), certificate(std::move(cert)) {}
  std::string certificate;
};

// Brute-force size limit exceeded. CLI exit 4.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

inline void check_cap(int bits, int cap, const std::string& where) {
  if (bits > cap)
    throw CapError(where + ": instance needs 2^" + std::to_string(bits) +
                   " evaluations, cap is 2^" + std::to_string(cap) +
                   " (raise with --cap)");
}

}  // namespace igcount
