#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace zeta3 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

}  // namespace zeta3
