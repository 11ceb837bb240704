#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base exception for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t needed, std::uint64_t cap)
      : Error("instance too large for enumeration: " + std::to_string(needed) +
              " > cap " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

template <typename T>
T ipow(T base, unsigned exponent) {
  T result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

// Exact power with a possibly negative exponent.
inline Rational rpow(const Rational& base, int exponent) {
  if (exponent >= 0) return ipow(base, static_cast<unsigned>(exponent));
  if (base == 0) throw Error("zero raised to a negative power");
  return Rational(1) / ipow(base, static_cast<unsigned>(-exponent));
}

// r^k as an unsigned 64-bit count, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" in lowest terms; integers render as "p/1" so the form is uniform.
inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

// Parses "p", "p/q" or a finite decimal such as "1.5".
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string whole = text.substr(0, dot);
      std::string frac = text.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (negative) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
          whole.find_first_not_of("0123456789") != std::string::npos)
        throw bad();
      BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac.size()));
      Rational value(BigInt(whole) * scale + BigInt(frac), scale);
      return negative ? Rational(-value) : value;
    }
    return Rational(BigInt(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

inline double approx(const Rational& v) { return v.convert_to<double>(); }

}  // namespace mpt
