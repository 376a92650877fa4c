#ifndef ORBITA_ELLIPTIC_HPP
#define ORBITA_ELLIPTIC_HPP

#include "orbita/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbita {

// Point of a short Weierstrass curve: the identity O or an affine pair.
class ECPoint {
public:
    static ECPoint infinity() { return ECPoint(); }
    ECPoint() = default;
    ECPoint(BigRat x, BigRat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }
    const BigRat& x() const { return x_; }
    const BigRat& y() const { return y_; }
    bool is_integral() const;

    std::string str() const; // "O" or "(x, y)"

    bool operator==(const ECPoint& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || (x_ == o.x_ && y_ == o.y_);
    }
    bool operator<(const ECPoint& o) const; // for deterministic ordering

private:
    bool inf_ = true;
    BigRat x_, y_;
};

// y^2 = x^3 + a x + b over Q with integer a, b and nonzero discriminant.
struct EllipticCurve {
    BigInt a, b;
    BigInt disc; // -16 (4a^3 + 27b^2)

    static EllipticCurve create(BigInt a, BigInt b);
    bool contains(const ECPoint& p) const;
    bool operator==(const EllipticCurve&) const = default;
};

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p);
// Chord-tangent addition; rejects off-curve inputs.
ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
// Double-and-add; m may be negative or zero.
ECPoint ec_mul(const EllipticCurve& e, long long m, const ECPoint& p);

enum class GroupShape { Trivial, Cyclic, TwoByTwoN };

struct TorsionGroup {
    std::vector<ECPoint> points;   // complete, O first, rest sorted
    std::vector<unsigned> orders;  // parallel to points
    GroupShape shape = GroupShape::Trivial;
    unsigned exponent = 1;

    bool contains(const ECPoint& p) const;
    unsigned order_of(const ECPoint& p) const;
};

// Complete rational torsion by the Lutz-Nagell sieve (integral candidates
// with y = 0 or y^2 | disc), order-checked with the Mazur cutoff 12.
TorsionGroup torsion_group(const EllipticCurve& e);

// Non-torsion certificate for a rational point.
bool is_torsion(const EllipticCurve& e, const ECPoint& p);

// Points periodic under [m]: exactly the torsion points of order coprime
// to m. Each comes with one period of its backward witness chain inside the
// torsion group (x_{n+1} = [m^{-1} mod order] x_n).
struct MultPeriodicPoint {
    ECPoint point;
    unsigned order = 1;
    unsigned cycle_length = 1; // minimal n with m^n = 1 mod order
    std::vector<ECPoint> chain_period;
};
std::vector<MultPeriodicPoint> periodic_under_mult(const EllipticCurve& e, long long m);

// Self-map of E1 x E2: (P, Q) -> ([m1]P + T1, [m2]Q + T2).
struct ProductSystem {
    EllipticCurve e1, e2;
    long long m1 = 1, m2 = 1;
    ECPoint t1, t2; // default O

    std::pair<ECPoint, ECPoint> evaluate(const ECPoint& p, const ECPoint& q) const;
};

// (P, Q) -> (P + T, [m]Q), the shape of the infinite-backward-orbit examples.
ProductSystem make_translation_doubling(const EllipticCurve& e1, const ECPoint& t,
                                        const EllipticCurve& e2, long long m);

// (P, Q) -> ([d+1]P, Q): every (torsion-killed-by-d point, Q) is periodic, so
// the periodic set is infinite as soon as E2(Q) is.
ProductSystem build_d_plus_one_map(const EllipticCurve& e1, const EllipticCurve& e2,
                                   unsigned d);

// Confirms the chain x_n = (-[n]T, O) satisfies f(x_{n+1}) = x_n for n < depth
// under (P,Q) -> (P + T, [m]Q), with all chain points pairwise distinct.
// T must be certified non-torsion (a torsion T collapses the chain).
struct BackwardChainEvidence {
    size_t depth = 0;
    size_t distinct_points = 0;
    bool verified = false;
};
BackwardChainEvidence verify_backward_chain(const EllipticCurve& e1, const ECPoint& t,
                                            const EllipticCurve& e2, long long m,
                                            size_t depth);

// Affine self-map x -> [m]x + a of a single curve.
struct AffineECMap {
    EllipticCurve curve;
    long long m = 2;
    ECPoint offset;

    ECPoint apply(const ECPoint& p) const;
    ECPoint iterate(const ECPoint& p, size_t k) const;
};

// Checks the torsion-image property under the hypothesis f^{l}(O) = O:
// the offset must be torsion and every torsion point must map to torsion.
struct TorsionImageVerdict {
    bool offset_is_torsion = false;
    bool torsion_preserved = false;
    bool holds() const { return offset_is_torsion && torsion_preserved; }
};
TorsionImageVerdict torsion_image_property(const AffineECMap& f, unsigned l);

} // namespace orbita

#endif
