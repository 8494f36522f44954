#pragma once

// Exact arithmetic helpers shared by every module: arbitrary-precision
// integers and rationals, binomial/multinomial coefficients, integer vector
// utilities, and generators for weak compositions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Error taxonomy.  The CLI maps Kind to process exit codes: everything except
// Violation is a usage/input/resource problem (exit 2); Violation means a
// structural identity that should hold by theorem failed on this input
// (exit 3, with a witness attached by the thrower).
struct Error : std::runtime_error {
  enum class Kind { Usage, Parse, Invalid, Budget, Violation };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error usage_error(const std::string& m) { return Error(Error::Kind::Usage, m); }
inline Error parse_error(const std::string& m) { return Error(Error::Kind::Parse, m); }
inline Error invalid_error(const std::string& m) { return Error(Error::Kind::Invalid, m); }
inline Error budget_error(const std::string& m) { return Error(Error::Kind::Budget, m); }
inline Error violation_error(const std::string& m) { return Error(Error::Kind::Violation, m); }

// Resource limits for enumerations and dynamic programs.
struct Budget {
  std::uint64_t max_objects = 100000;     // enumerated combinatorial objects
  std::uint64_t max_dp_states = 10000000; // memoized dynamic-program states
};

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// multinomial(sum parts; parts) = (sum parts)! / prod(parts!)
inline BigInt multinomial(const std::vector<long long>& parts) {
  long long total = 0;
  BigInt r = 1;
  for (long long p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

inline BigInt ipow(const BigInt& base, long long e) {
  BigInt r = 1, b = base;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

// Weak compositions of total into parts nonnegative entries, lexicographic.
// Calls fn(composition) for each; fn may throw to abort.
template <typename Fn>
void for_each_weak_composition(long long total, int parts, Fn&& fn) {
  if (parts <= 0) {
    if (total == 0) {
      std::vector<long long> empty;
      fn(empty);
    }
    return;
  }
  std::vector<long long> c(static_cast<std::size_t>(parts), 0);
  // Recursive descent kept iterative via explicit first-entry loop.
  struct Rec {
    std::vector<long long>& c;
    Fn& fn;
    void go(int i, long long rest, int parts) {
      if (i == parts - 1) {
        c[static_cast<std::size_t>(i)] = rest;
        fn(c);
        return;
      }
      for (long long v = 0; v <= rest; ++v) {
        c[static_cast<std::size_t>(i)] = v;
        go(i + 1, rest - v, parts);
      }
    }
  } rec{c, fn};
  rec.go(0, total, parts);
}

// Dominance of weak compositions: a >= b in prefix sums (same length).
inline bool dominates(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

// Dense integer polynomial with BigInt coefficients (index = degree).
struct Polynomial {
  std::vector<BigInt> coeff;

  void trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  BigInt at(std::size_t i) const { return i < coeff.size() ? coeff[i] : BigInt(0); }
  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = coeff.size(); i-- > 0;) r = r * x + coeff[i];
    return r;
  }
  bool operator==(const Polynomial& o) const { return coeff == o.coeff; }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (i) s += ", ";
      s += coeff[i].str();
    }
    return s + "]";
  }
};

}  // namespace pf
