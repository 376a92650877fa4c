#include "orbita/numeric.hpp"

#include <cmath>

namespace orbita {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt iroot_floor(const BigInt& n, unsigned long k) {
    if (k == 0) throw std::invalid_argument("iroot_floor: k must be >= 1");
    if (n < 0) throw std::invalid_argument("iroot_floor: n must be >= 0");
    BigInt r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::vector<BigInt> divisors(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be nonzero");
    BigInt m = ::abs(n);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

double log_approx(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("log_approx: n must be positive");
    signed long exp;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string to_string(const BigInt& a) { return a.get_str(); }
std::string to_string(const BigRat& a) { return a.get_str(); }

} // namespace orbita
