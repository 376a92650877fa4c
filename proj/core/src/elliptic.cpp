#include "orbita/elliptic.hpp"

#include <algorithm>
#include <numeric>

namespace orbita {

bool ECPoint::is_integral() const {
    return !inf_ && x_.get_den() == 1 && y_.get_den() == 1;
}

std::string ECPoint::str() const {
    if (inf_) return "O";
    return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

bool ECPoint::operator<(const ECPoint& o) const {
    if (inf_ != o.inf_) return inf_; // O sorts first
    if (inf_) return false;
    if (x_ != o.x_) return x_ < o.x_;
    return y_ < o.y_;
}

EllipticCurve EllipticCurve::create(BigInt a, BigInt b) {
    BigInt disc = -16 * (4 * a * a * a + 27 * b * b);
    if (disc == 0) throw domain_error("EllipticCurve: singular curve (zero discriminant)");
    return EllipticCurve{std::move(a), std::move(b), std::move(disc)};
}

bool EllipticCurve::contains(const ECPoint& p) const {
    if (p.is_infinity()) return true;
    const BigRat& x = p.x();
    const BigRat& y = p.y();
    return y * y == x * x * x + BigRat(a) * x + BigRat(b);
}

static void require_on_curve(const EllipticCurve& e, const ECPoint& p, const char* who) {
    if (!e.contains(p)) throw domain_error(std::string(who) + ": point not on curve");
}

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p) {
    require_on_curve(e, p, "ec_neg");
    if (p.is_infinity()) return p;
    return ECPoint(p.x(), -p.y());
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
    require_on_curve(e, p, "ec_add");
    require_on_curve(e, q, "ec_add");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y() == 0) return ECPoint::infinity();
        // tangent line
        BigRat lambda = (3 * p.x() * p.x() + BigRat(e.a)) / (2 * p.y());
        BigRat x3 = lambda * lambda - 2 * p.x();
        BigRat y3 = lambda * (p.x() - x3) - p.y();
        return ECPoint(std::move(x3), std::move(y3));
    }
    BigRat lambda = (q.y() - p.y()) / (q.x() - p.x());
    BigRat x3 = lambda * lambda - p.x() - q.x();
    BigRat y3 = lambda * (p.x() - x3) - p.y();
    return ECPoint(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const EllipticCurve& e, long long m, const ECPoint& p) {
    require_on_curve(e, p, "ec_mul");
    if (m == 0 || p.is_infinity()) return ECPoint::infinity();
    ECPoint base = m < 0 ? ec_neg(e, p) : p;
    unsigned long long n = m < 0 ? -static_cast<unsigned long long>(m) : m;
    ECPoint acc = ECPoint::infinity();
    while (n) {
        if (n & 1) acc = ec_add(e, acc, base);
        n >>= 1;
        if (n) base = ec_add(e, base, base);
    }
    return acc;
}

bool TorsionGroup::contains(const ECPoint& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

unsigned TorsionGroup::order_of(const ECPoint& p) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == p) return orders[i];
    throw std::invalid_argument("TorsionGroup::order_of: point not in group");
}

// Order of p if <= 12 (Mazur), else 0.
static unsigned small_order(const EllipticCurve& e, const ECPoint& p) {
    if (p.is_infinity()) return 1;
    ECPoint acc = p;
    for (unsigned k = 1; k <= 12; ++k) {
        if (acc.is_infinity()) return k;
        // Lutz-Nagell: torsion multiples stay integral; bail out early
        if (!acc.is_integral()) return 0;
        acc = ec_add(e, acc, p);
    }
    return acc.is_infinity() ? 0 : 0;
}

// Integer roots of the monic cubic x^3 + a x + c.
static std::vector<BigInt> monic_cubic_integer_roots(const BigInt& a, const BigInt& c) {
    std::vector<BigInt> roots;
    auto val = [&](const BigInt& x) -> BigInt { return x * x * x + a * x + c; };
    if (c == 0) {
        roots.push_back(0);
        // remaining factor x^2 + a
        if (a < 0) {
            BigInt r = iroot_floor(-a, 2);
            if (r * r == -a) {
                roots.push_back(r);
                roots.push_back(-r);
            }
        }
    } else {
        for (const BigInt& d : divisors(c)) {
            if (val(d) == 0) roots.push_back(d);
            if (val(-d) == 0) roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

TorsionGroup torsion_group(const EllipticCurve& e) {
    std::vector<ECPoint> found{ECPoint::infinity()};
    std::vector<unsigned> orders{1};

    std::vector<BigInt> ys{0};
    const BigInt abs_disc = ::abs(e.disc);
    for (const BigInt& d : divisors(abs_disc))
        if ((abs_disc / d) % d == 0) ys.push_back(d); // d^2 | disc
    for (const BigInt& y : ys) {
        for (const BigInt& x : monic_cubic_integer_roots(e.a, e.b - y * y)) {
            for (const BigInt& yy : {y, BigInt(-y)}) {
                ECPoint p{BigRat(x), BigRat(yy)};
                if (!e.contains(p)) continue;
                if (std::find(found.begin(), found.end(), p) != found.end()) continue;
                unsigned ord = small_order(e, p);
                if (ord == 0) continue;
                found.push_back(p);
                orders.push_back(ord);
            }
        }
    }
    // group-law closure sanity check
    for (const ECPoint& p : found)
        for (const ECPoint& q : found)
            if (std::find(found.begin(), found.end(), ec_add(e, p, q)) == found.end())
                throw std::logic_error("torsion_group: candidate set not closed under addition");

    TorsionGroup g;
    // sort affine points after O for deterministic output
    std::vector<size_t> idx(found.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return found[i] < found[j]; });
    for (size_t i : idx) {
        g.points.push_back(found[i]);
        g.orders.push_back(orders[i]);
    }
    g.exponent = 1;
    for (unsigned o : g.orders) g.exponent = std::lcm(g.exponent, o);
    size_t two_torsion = std::count(g.orders.begin(), g.orders.end(), 2u);
    if (g.points.size() == 1)
        g.shape = GroupShape::Trivial;
    else if (two_torsion == 3)
        g.shape = GroupShape::TwoByTwoN;
    else
        g.shape = GroupShape::Cyclic;
    return g;
}

bool is_torsion(const EllipticCurve& e, const ECPoint& p) {
    require_on_curve(e, p, "is_torsion");
    if (p.is_infinity()) return true;
    if (!p.is_integral()) return false; // Lutz-Nagell
    return small_order(e, p) != 0;
}

std::vector<MultPeriodicPoint> periodic_under_mult(const EllipticCurve& e, long long m) {
    if (m < 2) throw std::invalid_argument("periodic_under_mult: m must be >= 2");
    TorsionGroup tor = torsion_group(e);
    std::vector<MultPeriodicPoint> out;
    for (size_t i = 0; i < tor.points.size(); ++i) {
        unsigned ord = tor.orders[i];
        if (std::gcd(static_cast<long long>(ord), m) != 1) continue;
        MultPeriodicPoint mp;
        mp.point = tor.points[i];
        mp.order = ord;
        // minimal n with m^n = 1 (mod ord)
        unsigned n = 1;
        unsigned long long acc = ((m % ord) + ord) % ord;
        while (acc % ord != 1 % ord) {
            acc = acc * (m % ord) % ord;
            ++n;
        }
        mp.cycle_length = n;
        // backward witness chain: x_{k+1} = [m^{n-1} mod ord] x_k walks the
        // cycle in reverse, one full period
        ECPoint cur = mp.point;
        for (unsigned k = 0; k < n; ++k) {
            mp.chain_period.push_back(cur);
            long long inv = 1;
            for (unsigned j = 0; j + 1 < n; ++j) inv = inv * (m % ord) % ord;
            cur = ec_mul(e, inv, cur);
        }
        out.push_back(std::move(mp));
    }
    return out;
}

std::pair<ECPoint, ECPoint> ProductSystem::evaluate(const ECPoint& p, const ECPoint& q) const {
    ECPoint p2 = ec_add(e1, ec_mul(e1, m1, p), t1);
    ECPoint q2 = ec_add(e2, ec_mul(e2, m2, q), t2);
    return {std::move(p2), std::move(q2)};
}

ProductSystem make_translation_doubling(const EllipticCurve& e1, const ECPoint& t,
                                        const EllipticCurve& e2, long long m) {
    if (m < 2) throw std::invalid_argument("make_translation_doubling: multiplier must be >= 2");
    require_on_curve(e1, t, "make_translation_doubling");
    return ProductSystem{e1, e2, 1, m, t, ECPoint::infinity()};
}

ProductSystem build_d_plus_one_map(const EllipticCurve& e1, const EllipticCurve& e2,
                                   unsigned d) {
    if (d < 1) throw std::invalid_argument("build_d_plus_one_map: d must be >= 1");
    return ProductSystem{e1, e2, static_cast<long long>(d) + 1, 1,
                         ECPoint::infinity(), ECPoint::infinity()};
}

BackwardChainEvidence verify_backward_chain(const EllipticCurve& e1, const ECPoint& t,
                                            const EllipticCurve& e2, long long m,
                                            size_t depth) {
    if (is_torsion(e1, t))
        throw domain_error("verify_backward_chain: translation point is torsion; "
                           "the chain would collapse");
    ProductSystem sys = make_translation_doubling(e1, t, e2, m);
    // x_n = (-[n]T, O)
    std::vector<ECPoint> firsts;
    ECPoint cur = ECPoint::infinity();
    ECPoint neg_t = ec_neg(e1, t);
    for (size_t n = 0; n <= depth; ++n) {
        firsts.push_back(cur);
        cur = ec_add(e1, cur, neg_t);
    }
    for (size_t n = 0; n + 1 <= depth; ++n) {
        auto [p2, q2] = sys.evaluate(firsts[n + 1], ECPoint::infinity());
        if (!(p2 == firsts[n]) || !q2.is_infinity())
            throw std::logic_error("verify_backward_chain: chain relation failed");
    }
    for (size_t i = 0; i < firsts.size(); ++i)
        for (size_t j = i + 1; j < firsts.size(); ++j)
            if (firsts[i] == firsts[j])
                throw std::logic_error("verify_backward_chain: chain points collide");
    return BackwardChainEvidence{depth, firsts.size(), true};
}

ECPoint AffineECMap::apply(const ECPoint& p) const {
    return ec_add(curve, ec_mul(curve, m, p), offset);
}

ECPoint AffineECMap::iterate(const ECPoint& p, size_t k) const {
    ECPoint q = p;
    for (size_t i = 0; i < k; ++i) q = apply(q);
    return q;
}

TorsionImageVerdict torsion_image_property(const AffineECMap& f, unsigned l) {
    if (l < 1) throw std::invalid_argument("torsion_image_property: l must be >= 1");
    if (!f.iterate(ECPoint::infinity(), l).is_infinity())
        throw domain_error("torsion_image_property: hypothesis f^l(O) = O fails");
    TorsionImageVerdict v;
    v.offset_is_torsion = is_torsion(f.curve, f.offset);
    TorsionGroup tor = torsion_group(f.curve);
    v.torsion_preserved = true;
    for (const ECPoint& p : tor.points) {
        if (!tor.contains(f.apply(p))) {
            v.torsion_preserved = false;
            break;
        }
    }
    return v;
}

} // namespace orbita
