#ifndef ORBITA_NUMERIC_HPP
#define ORBITA_NUMERIC_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbita {

// Exact arithmetic is delegated to GMP. BigRat values are kept canonical
// (lowest terms, positive denominator) by mpq_class itself.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Error raised when an input lies outside an operation's mathematical domain
// (degenerate map, off-curve point, ...). Usage errors keep std::invalid_argument.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Nonnegative gcd; gcd(0,0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

// Largest r with r^k <= n. Requires n >= 0 and k >= 1.
BigInt iroot_floor(const BigInt& n, unsigned long k);

// All positive divisors of |n| in increasing order, by trial division.
// Requires n != 0.
std::vector<BigInt> divisors(const BigInt& n);

// Natural log of a positive BigInt, in double precision.
double log_approx(const BigInt& n);

inline BigInt abs(const BigInt& a) { return ::abs(a); }

std::string to_string(const BigInt& a);
std::string to_string(const BigRat& a);

} // namespace orbita

#endif
