#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kronhwv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact quotient; throws std::logic_error when `den` does not divide `num`.
/// Every call site divides a quantity that is integral by construction, so a
/// remainder means the caller computed something wrong.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw std::logic_error(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string(what) + ": inexact division " + num.str() + " / " +
                           den.str());
  }
  return q;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace kronhwv
