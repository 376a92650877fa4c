#ifndef ORBITA_CERTIFY_HPP
#define ORBITA_CERTIFY_HPP

#include "orbita/projective.hpp"

namespace orbita {

// Effective height-descent data for a degree-d morphism of P^1:
//   H(f(P)) >= H(P)^d / B   for every P in P^1(Q),
// so every periodic point satisfies H(P) <= M = floor(B^{1/(d-1)}).
struct DescentCertificate {
    unsigned d = 0;
    BigInt B;          // multiplicative descent constant, >= 1
    BigInt M;          // candidate height cap, M^{d-1} <= B < (M+1)^{d-1}
    BigInt resultant;  // Res(F0, F1), nonzero
    BigInt norm_x;     // ||p_x||_1 + ||q_x||_1
    BigInt norm_y;     // ||p_y||_1 + ||q_y||_1
};

// Computes the certificate from the Sylvester cofactor identities
//   p*F + q*G = Res * x^{2d-1}  and  r*F + s*G = Res * y^{2d-1}.
// Evaluating the identity of the largest coordinate of P and using that
// gcd(F(P), G(P)) divides Res gives the bound with B = max(norm_x, norm_y).
DescentCertificate certify_descent(const Morphism& f);

// Tate canonical height approximation: value = log H(f^N(P)) / d^N with a
// rigorous telescoping error bound.
struct CanonicalHeightValue {
    double value = 0;
    double radius = 0;
    unsigned iterations = 0;
};

// target_radius must be positive. coord_bit_limit caps coordinate growth of
// the iterates (wandering points blow up doubly exponentially).
CanonicalHeightValue canonical_height(const Morphism& f, const DescentCertificate& cert,
                                      const ProjPoint& p, double target_radius,
                                      size_t coord_bit_limit = 1u << 22);

} // namespace orbita

#endif
