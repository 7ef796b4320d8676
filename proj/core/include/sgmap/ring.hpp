#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sgmap {

/// Exact integer scalar used everywhere coefficients can grow.
using Int = boost::multiprecision::cpp_int;

/// Coefficient rings supported by the kernel.  Z/2 is the only field in v1;
/// the enum leaves room for Z/p later.
enum class Ring { Z, Z2 };

inline const char* ring_name(Ring r) { return r == Ring::Z ? "z" : "z2"; }

/// Reduce a scalar into canonical form for the ring (identity over Z,
/// values in {0,1} over Z/2).
inline Int ring_normalize(Ring r, const Int& x) {
  if (r == Ring::Z) return x;
  Int m = x % 2;
  if (m < 0) m += 2;
  return m;
}

/// Error type for contract violations in the kernel.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgmap
