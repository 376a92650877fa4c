#ifndef ORBITA_PROJECTIVE_HPP
#define ORBITA_PROJECTIVE_HPP

#include "orbita/numeric.hpp"
#include "orbita/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbita {

// A point of P^n(Q) in canonical coordinates: coprime integers, first
// nonzero coordinate positive. Equality is coordinate-list equality.
class ProjPoint {
public:
    // Clears denominators, divides by the gcd and fixes the sign.
    static ProjPoint from_rationals(const std::vector<BigRat>& coords);
    static ProjPoint from_integers(const std::vector<BigInt>& coords);

    const std::vector<BigInt>& coords() const { return x_; }
    // Projective dimension n (coords has n+1 entries).
    int dim() const { return static_cast<int>(x_.size()) - 1; }

    // Multiplicative Weil height: max |coordinate| of the canonical
    // representative. Always >= 1.
    BigInt height() const;

    std::string str() const; // "[a:b:...]"

    bool operator==(const ProjPoint&) const = default;
    // Lexicographic on coordinates (enumeration uses (height, coords)).
    std::weak_ordering operator<=>(const ProjPoint&) const = default;

private:
    std::vector<BigInt> x_;
};

// Integer homogeneous form in n+1 variables: exponent tuple -> coefficient.
// Every stored tuple sums to the degree; zero coefficients are not stored.
class HomogForm {
public:
    using Exponents = std::vector<unsigned>;

    HomogForm(int nvars, unsigned degree);
    // Adds coeff * x^e (e must have nvars entries summing to degree).
    void add_term(const Exponents& e, const BigInt& coeff);

    int nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt eval(const std::vector<BigInt>& x) const;
    BigInt l1_norm() const;

    HomogForm operator*(const HomogForm& o) const;
    HomogForm operator+(const HomogForm& o) const;
    HomogForm pow(unsigned k) const;

    // Two-variable forms convert to the dense BinaryForm layout.
    BinaryForm to_binary() const;
    static HomogForm from_binary(const BinaryForm& f);

    bool operator==(const HomogForm&) const = default;

private:
    int nvars_;
    unsigned degree_;
    std::map<Exponents, BigInt> terms_;
};

// Dominant self-map of P^n given by n+1 integer forms of common degree d >= 2.
// On P^1 morphism-hood is certified by a nonzero resultant; for n >= 2 the
// base locus is not certified and evaluation may hit it.
class Morphism {
public:
    static Morphism create(std::vector<HomogForm> forms);

    int dim() const { return static_cast<int>(forms_.size()) - 1; }
    unsigned degree() const { return forms_.front().degree(); }
    const std::vector<HomogForm>& forms() const { return forms_; }
    // Cached Res(F0, F1); only present when dim() == 1.
    const BigInt& resultant_p1() const;

    ProjPoint evaluate(const ProjPoint& p) const;
    ProjPoint iterate(const ProjPoint& p, unsigned long k) const;

    // f^{compose k}: formal composition, degree d^k. max_bits caps the
    // coefficient bit size of the result.
    Morphism power(unsigned k, size_t max_bits = 1u << 20) const;

    // Largest max_i ||F_i||_1 over the components.
    BigInt max_l1_norm() const;

    bool operator==(const Morphism&) const = default;

private:
    explicit Morphism(std::vector<HomogForm> forms) : forms_(std::move(forms)) {}
    std::vector<HomogForm> forms_;
    std::optional<BigInt> res_;
};

// Exact rational fiber f^{-1}(Q) on P^1. Empty set is a valid answer.
std::vector<ProjPoint> preimages_p1(const Morphism& f, const ProjPoint& q);

} // namespace orbita

#endif
