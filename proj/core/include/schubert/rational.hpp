#pragma once

#include <gmpxx.h>
#include <string>

namespace schubert {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

} // namespace schubert
