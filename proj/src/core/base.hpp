#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace idem {

// Subsets of a carrier are bitmasks; carriers are capped at 64 elements.
using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1; }
inline int count(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text could not be parsed (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An object failed its structural laws (CLI exit code 1).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded; the message names the bound (CLI exit code 2).
class GuardError : public Error {
 public:
  using Error::Error;
};

// Precondition of an operation violated, e.g. localizing at a non-prime.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Size bounds for the expensive enumerations. Safe defaults; the CLI maps
// flags onto these and IDEMSPEC_MAX_CARRIER overrides the carrier cap.
struct Guards {
  int max_carrier = 64;       // hard cap (bitmask width)
  int tensor_pairs = 36;      // |M|x|N| grid bound for tensor filters
  int cong_carrier = 6;       // carrier bound for enumerating all congruences
  int filter_base = 16;       // |C(X)| bound for prime-filter enumeration
  int free_module = 4096;     // |R|^k bound for free modules
};

Guards& guards();

void require_carrier(int n, const std::string& what);
void require_guard(bool ok, const std::string& what, int bound);

}  // namespace idem
