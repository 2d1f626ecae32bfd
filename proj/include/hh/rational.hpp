#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hh {

// Exact rational arithmetic for the penalty ledgers.  The conservation
// audits compare accumulated penalty mass against exact targets (equality,
// not tolerance), and the beta denominators are products of arbitrary pair
// degrees, so fixed-width arithmetic is not an option.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace hh
