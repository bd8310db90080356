#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fracpart {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a computation would exceed a configured size cap
/// (exact-mode table sizes, enumeration budgets).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& x) { return x.get_d(); }

/// Canonical "p/q" rendering ("p" when q == 1).
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace fracpart
