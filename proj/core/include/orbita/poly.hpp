#ifndef ORBITA_POLY_HPP
#define ORBITA_POLY_HPP

#include "orbita/numeric.hpp"

#include <vector>

namespace orbita {

// Univariate integer polynomial, coefficient index = monomial degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs);

    // Trailing zero coefficients are stripped on construction.
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(size_t i) const;

    BigInt content() const;
    // Primitive part with positive leading coefficient. Requires nonzero.
    UniPoly primitive_part() const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;

    bool operator==(const UniPoly&) const = default;

private:
    std::vector<BigInt> c_;
};

// Homogeneous binary form of degree d: c[i] is the coefficient of x^{d-i} y^i.
class BinaryForm {
public:
    BinaryForm(unsigned degree, std::vector<BigInt> coeffs);

    unsigned degree() const { return d_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(size_t i) const { return c_.at(i); }
    bool is_zero() const;

    BigInt eval(const BigInt& x, const BigInt& y) const;
    BigInt l1_norm() const;

    // Dehomogenization at y = 1: p(z) = form(z, 1) as a UniPoly.
    UniPoly dehomogenize() const;

    bool operator==(const BinaryForm&) const = default;

private:
    unsigned d_;
    std::vector<BigInt> c_;
};

// Sylvester resultant of two binary forms of equal degree d >= 1,
// computed by fraction-free (Bareiss) elimination of the 2d x 2d matrix.
BigInt resultant(const BinaryForm& F, const BinaryForm& G);

// All rational roots of p (multiplicity discarded), via the rational root
// theorem on the primitive part. Requires p nonzero. Sorted ascending.
std::vector<BigRat> rational_roots(const UniPoly& p);

// Integer-coefficient cofactors of degree d-1 with
//   px*F + qx*G = Res(F,G) * x^{2d-1}   and   py*F + qy*G = Res(F,G) * y^{2d-1}.
// Both identities are re-verified by expansion before returning.
struct SylvesterCofactors {
    BinaryForm px, qx, py, qy;
    BigInt res;
};
SylvesterCofactors solve_sylvester_cofactors(const BinaryForm& F, const BinaryForm& G);

// Exact determinant by Bareiss elimination (used by resultant; exposed for tests).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

} // namespace orbita

#endif
