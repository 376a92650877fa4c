// Acceptance gate: every check prints one PASS/FAIL line; the process exits
// nonzero when any check fails.
#include "orbita/dsl.hpp"
#include "orbita/json_schema.hpp"
#include "orbita/orbit.hpp"
#include "orbita/serialize.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace orbita;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok) ++failures;
}

Morphism make_map(const std::string& components) {
    ParseResult r = parse("map f : P1 -> P1 = " + components);
    if (!r.ok()) throw std::runtime_error("bad test map: " + components);
    return *r.document->find_map("f");
}

ProjPoint pp(long a, long b) { return ProjPoint::from_integers({BigInt(a), BigInt(b)}); }

ECPoint pt(long x, long y) { return ECPoint(BigRat(x), BigRat(y)); }

// Brute-force periodic-point oracle, independent of the descent machinery:
// enumerate H <= bound, iterate up to `steps`, periodic iff the orbit returns
// to the start. Early exits (a repeated non-start point, or height beyond a
// huge cutoff) only ever certify non-periodicity.
std::vector<ProjPoint> oracle_periodic(const Morphism& f, const BigInt& bound, int steps) {
    std::vector<ProjPoint> out;
    BigInt cutoff = BigInt(10);
    mpz_pow_ui(cutoff.get_mpz_t(), cutoff.get_mpz_t(), 40);
    for (const auto& p : enumerate_bounded(1, bound).points) {
        ProjPoint q = p;
        std::set<ProjPoint> seen;
        for (int i = 0; i < steps; ++i) {
            q = f.evaluate(q);
            if (q == p) {
                out.push_back(p);
                break;
            }
            if (!seen.insert(q).second) break;
            if (q.height() > cutoff) break;
        }
    }
    return out;
}

// The fixed maps plus 20 pseudo-random small-coefficient maps (10 each of
// degree 2 and 3, rejection-sampled for Res != 0 and a desk-scale candidate
// cap so the oracle run stays well under the time budget).
std::vector<Morphism> criterion_maps() {
    std::vector<Morphism> maps;
    maps.push_back(make_map("[x0^2, x1^2]"));
    maps.push_back(make_map("[x0^2 - x1^2, x1^2]"));
    maps.push_back(make_map("[x0^3, x1^3]"));
    maps.push_back(make_map("[x0^2 - 2*x1^2, x1^2]"));

    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (unsigned d : {2u, 3u}) {
        int kept = 0;
        while (kept < 10) {
            std::vector<BigInt> ca(d + 1), cb(d + 1);
            for (auto& c : ca) c = coeff(rng);
            for (auto& c : cb) c = coeff(rng);
            try {
                std::vector<HomogForm> forms;
                forms.push_back(HomogForm::from_binary(BinaryForm(d, ca)));
                forms.push_back(HomogForm::from_binary(BinaryForm(d, cb)));
                Morphism f = Morphism::create(std::move(forms));
                if (certify_descent(f).M > 60) continue; // keep enumeration desk-scale
                maps.push_back(std::move(f));
                ++kept;
            } catch (const std::exception&) {
                continue; // zero form, Res = 0, or degenerate draw
            }
        }
    }
    return maps;
}

void criterion_1_and_2(const std::vector<Morphism>& maps) {
    bool ok1 = true;
    for (const auto& f : maps) {
        auto rep = periodic_points(f);
        BigInt bound = std::max(rep.search_bound, BigInt(100));
        if (rep.periodic_set() != oracle_periodic(f, bound, 500)) ok1 = false;
    }
    report(1, "certified periodic sets match the brute-force oracle on 24 maps", ok1);

    auto sq = periodic_points(make_map("[x0^2, x1^2]"));
    bool ok2 = sq.periodic_set() == std::vector<ProjPoint>{pp(0, 1), pp(1, 0), pp(1, 1)};
    auto zm1 = periodic_points(make_map("[x0^2 - x1^2, x1^2]"));
    ok2 = ok2 && zm1.periodic_set() == std::vector<ProjPoint>{pp(0, 1), pp(1, -1), pp(1, 0)};
    bool cycle_ok = false;
    for (const auto& c : zm1.cycles)
        if (c == std::vector<ProjPoint>{pp(-1, 1), pp(0, 1)} ||
            c == std::vector<ProjPoint>{pp(0, 1), pp(-1, 1)})
            cycle_ok = true;
    ok2 = ok2 && cycle_ok;
    report(2, "z^2 gives {0, 1, inf}; z^2 - 1 gives {inf} plus the 2-cycle {0, -1}", ok2);
}

void criterion_3(const std::vector<Morphism>& maps) {
    bool ok = true;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coord(-10000, 10000);
    for (const auto& f : maps) {
        auto cert = certify_descent(f);
        int n = 0;
        while (n < 1000) {
            long a = coord(rng), b = coord(rng);
            if (a == 0 && b == 0) continue;
            ProjPoint p = pp(a, b);
            BigInt hd = 1;
            for (unsigned i = 0; i < cert.d; ++i) hd *= p.height();
            if (cert.B * f.evaluate(p).height() < hd) {
                ok = false;
                break;
            }
            ++n;
        }
    }
    report(3, "descent bound B*H(f(P)) >= H(P)^d exact on 1000 random points per map", ok);
}

void criterion_4(const std::vector<Morphism>& maps) {
    Morphism sq = make_map("[x0^2, x1^2]");
    auto cert = certify_descent(sq);
    auto v = canonical_height(sq, cert, pp(2, 1), 1e-9);
    // C = 0 for the pure power map, so the predicted iteration count is 0
    bool ok = v.iterations == 0 && v.radius <= 1e-9 &&
              std::fabs(v.value - std::log(2.0)) <= 1e-9;

    for (const auto& f : maps) {
        auto c = certify_descent(f);
        for (const auto& p : periodic_points(f).periodic_set()) {
            auto h = canonical_height(f, c, p, 1e-6);
            if (std::fabs(h.value) > h.radius) ok = false;
        }
    }
    report(4, "canonical height: log 2 for z^2 at [2:1]; periodic points have |h| <= radius",
           ok);
}

void criterion_5() {
    std::mt19937 rng(555);
    bool ok = true;
    int periodic_verdicts = 0;
    for (int trial = 0; trial < 500; ++trial) {
        size_t size = 2 + rng() % 49;
        std::vector<int> next(size);
        for (auto& v : next) v = static_cast<int>(rng() % size);
        size_t len = 4 * size + 8;
        std::vector<int> fwd(len);
        fwd[0] = static_cast<int>(rng() % size);
        for (size_t i = 1; i < len; ++i) fwd[i] = next[fwd[i - 1]];
        std::vector<int> walk(fwd.rbegin(), fwd.rend());
        std::vector<int> s;
        for (size_t i = 0; i < size; ++i)
            if (rng() % 2) s.push_back(static_cast<int>(i));
        size_t horizon = 2 * s.size() + 2 + rng() % 16;
        if (horizon > len) horizon = len;
        if (horizon < 2 * s.size() + 2) continue;
        AbstractChain chain;
        chain.next = next;
        chain.at = [&walk](size_t n) { return n < walk.size() ? walk[n] : -1; };
        auto verdict = check_chain_lemma(chain, s, horizon);
        if (!verdict.periodic) continue;
        ++periodic_verdicts;
        // falsification: the claimed period must hold over the simulated horizon
        // (past it the backward chain may leave the cycle into a tree)
        for (size_t n = 0; n + verdict.period < horizon; ++n)
            if (walk[n] != walk[n + verdict.period]) ok = false;
        // reconstruction from x_0 alone, again over the horizon
        for (size_t n = 0; n < horizon; ++n) {
            int v = walk[0];
            for (size_t k = 0; k < verdict.period - n % verdict.period; ++k) v = next[v];
            if (v != walk[n]) ok = false;
        }
    }
    ok = ok && periodic_verdicts > 50; // the suite must actually exercise the positive case
    report(5, "500 random functional graphs: every returned period verifies and reconstructs",
           ok);
}

void criterion_6(const std::vector<Morphism>& maps) {
    bool ok = true;
    for (const auto& f : maps) {
        for (unsigned k : {2u, 3u}) {
            try {
                if (!power_equivalence_check(f, k).equal) ok = false;
            } catch (const domain_error&) {
                ok = false; // budget exceeded counts as failure at this scale
            }
        }
    }
    report(6, "periodic sets of f and f^k coincide for k in {2, 3} on all 24 maps", ok);
}

void criterion_7() {
    bool ok = enumerate_bounded(1, 1).points.size() == 4 &&
              enumerate_bounded(2, 1).points.size() == 13;
    for (long m = 1; m <= 50 && ok; ++m) {
        size_t naive = 0;
        for (long a = -m; a <= m; ++a)
            for (long b = -m; b <= m; ++b) {
                if (a == 0 && b == 0) continue;
                BigInt g = gcd(BigInt(a), BigInt(b));
                long fnz = a != 0 ? a : b;
                if (g == 1 && fnz > 0) ++naive;
            }
        if (enumerate_bounded(1, m).points.size() != naive) ok = false;
    }
    for (long m = 1; m <= 10 && ok; ++m) {
        size_t naive = 0;
        for (long a = -m; a <= m; ++a)
            for (long b = -m; b <= m; ++b)
                for (long c = -m; c <= m; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    BigInt g = gcd(gcd(BigInt(a), BigInt(b)), BigInt(c));
                    long fnz = a != 0 ? a : (b != 0 ? b : c);
                    if (g == 1 && fnz > 0) ++naive;
                }
        if (enumerate_bounded(2, m).points.size() != naive) ok = false;
    }
    report(7, "point enumeration matches the naive loop oracle (P^1 M<=50, P^2 M<=10)", ok);
}

// Exhaustive torsion oracle: scan integral x in a window, keep perfect-square
// right-hand sides, then keep points of order <= 12 under repeated addition.
std::vector<ECPoint> oracle_torsion(const EllipticCurve& e) {
    std::vector<ECPoint> out{ECPoint::infinity()};
    for (long x = -200; x <= 200; ++x) {
        BigInt rhs = BigInt(x) * x * x + e.a * x + e.b;
        if (rhs < 0) continue;
        BigInt y = iroot_floor(rhs, 2);
        if (y * y != rhs) continue;
        for (BigInt yy : {y, BigInt(-y)}) {
            ECPoint p{BigRat(BigInt(x)), BigRat(yy)};
            if (yy == 0 && y != 0) continue;
            ECPoint acc = p;
            for (int k = 1; k <= 12; ++k) {
                if (acc.is_infinity()) {
                    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
                    break;
                }
                acc = ec_add(e, acc, p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void criterion_8() {
    bool ok = true;
    auto check = [&](long a, long b, size_t n, GroupShape shape) {
        auto e = EllipticCurve::create(a, b);
        auto t = torsion_group(e);
        if (t.points.size() != n || t.shape != shape) ok = false;
        auto oracle = oracle_torsion(e);
        std::vector<ECPoint> got = t.points;
        std::sort(got.begin(), got.end());
        if (got != oracle) ok = false;
    };
    check(0, 1, 6, GroupShape::Cyclic);
    check(-1, 0, 4, GroupShape::TwoByTwoN);
    check(0, -2, 1, GroupShape::Trivial);
    report(8, "torsion: Z/6 on y^2=x^3+1, Z/2xZ/2 on y^2=x^3-x, trivial on y^2=x^3-2", ok);
}

void criterion_9() {
    auto e = EllipticCurve::create(0, 1);
    auto per = periodic_under_mult(e, 2);
    auto tor = torsion_group(e);
    bool ok = per.size() == 3 && tor.points.size() == 6 && per.size() <= tor.points.size();
    for (const auto& entry : per) {
        if (!tor.contains(entry.point)) ok = false;
        const auto& c = entry.chain_period;
        if (c.empty() || c[0] != entry.point) ok = false;
        for (size_t n = 0; n < c.size(); ++n) {
            if (!tor.contains(c[n])) ok = false;
            if (ec_mul(e, 2, c[(n + 1) % c.size()]) != c[n]) ok = false;
        }
    }
    report(9, "backward orbit of [2] on y^2=x^3+1 has 3 points <= 6 torsion, chains verified",
           ok);
}

void criterion_10() {
    auto e = EllipticCurve::create(0, -2);
    ProductSystem sys = make_translation_doubling(e, ECPoint::infinity(), e, 2);
    bool ok = true;
    std::set<ECPoint> distinct;
    for (int k = 1; k <= 10; ++k) {
        ECPoint g = ec_mul(e, k, pt(3, 5));
        distinct.insert(g);
        auto [p2, q2] = sys.evaluate(g, ECPoint::infinity());
        if (!(p2 == g) || !q2.is_infinity()) ok = false;
    }
    ok = ok && distinct.size() == 10;
    report(10, "(P,Q) -> (P,[2]Q) fixes ([k](3,5), O) for k=1..10, all distinct", ok);
}

void criterion_11() {
    auto e = EllipticCurve::create(0, -2);
    bool ok = !is_torsion(e, pt(3, 5));
    try {
        auto ev = verify_backward_chain(e, pt(3, 5), e, 2, 10);
        ok = ok && ev.verified && ev.distinct_points == 11;
    } catch (const std::exception&) {
        ok = false;
    }
    // the transient-return counterexample: f(x, y) = ([2]x, -y + a) on E x E
    // with non-torsion a has f^2(O, O) = (O, O) but f(O, O) = (O, a) non-torsion
    ProductSystem sys{e, e, 2, -1, ECPoint::infinity(), pt(3, 5)};
    auto once = sys.evaluate(ECPoint::infinity(), ECPoint::infinity());
    auto twice = sys.evaluate(once.first, once.second);
    ok = ok && twice.first.is_infinity() && twice.second.is_infinity();
    ok = ok && once.first.is_infinity() && !is_torsion(e, once.second);
    report(11, "backward chain x_n = (-[n](3,5), O) verified to depth 10; "
               "transient-return counterexample reproduced", ok);
}

void criterion_12() {
    bool ok = true;
    // 20-definition corpus round-trip
    std::string corpus =
        "map sq : P1 -> P1 = [x0^2, x1^2]\n"
        "map zm1 : P1 -> P1 = [x0^2 - x1^2, x1^2]\n"
        "map cube : P1 -> P1 = [x0^3, x1^3]\n"
        "map cheb : P1 -> P1 = [x0^3 - 2*x0*x1^2, x1^3]\n"
        "map mix : P1 -> P1 = [2*x0^2 + x1^2, x0*x1 + x1^2]\n"
        "map surf : P2 -> P2 = [x0^2, x1^2, x2^2]\n"
        "map twist : P2 -> P2 = [x1^2, x2^2, x0^2]\n"
        "map big : P1 -> P1 = [7*x0^4 - 3*x0^2*x1^2 + x1^4, x0*x1^3 + 5*x1^4]\n"
        "curve e1 = [0, 1]\ncurve e2 = [0, -2]\ncurve e3 = [-1, 0]\n"
        "curve e4 = [-43, 166]\ncurve e5 = [100, 100]\n"
        "point p1 = [4 : 1]\npoint p2 = [0 : 1]\npoint p3 = [1 : 0]\n"
        "point p4 = [-7 : 3]\npoint p5 = [1/2 : 1]\npoint p6 = [2 : 3 : 5]\n"
        "point p7 = [-1/3 : 2/3]\n";
    ParseResult r = parse(corpus);
    ok = ok && r.ok() && r.document->definitions.size() == 20;
    if (r.ok()) {
        ParseResult again = parse(print(*r.document));
        ok = ok && again.ok() && *again.document == *r.document;
    }
    // the three rejection examples carry positioned diagnostics
    for (const char* bad : {"map g : P1 -> P1 = [x0^2, x0*x1]",
                            "map h : P1 -> P1 = [x0^2 + x1, x1^2]",
                            "map k : P1 -> P1 = [x0^2, x1^2"}) {
        ParseResult rr = parse(bad);
        if (rr.ok() || rr.diagnostics.empty()) ok = false;
        for (const auto& d : rr.diagnostics)
            if (d.line < 1 || d.column < 1) ok = false;
    }
    // JSON documents validate against the shipped schemas
    auto load = [](const std::string& name) {
        std::ifstream in(std::string(ORBITA_SCHEMA_DIR) + "/" + name);
        json j;
        in >> j;
        return j;
    };
    Morphism f = make_map("[x0^2 - x1^2, x1^2]");
    auto rep = periodic_points(f);
    ok = ok && schema_violations(to_json(rep), load("periodic-report.v1.json")).empty();
    ok = ok && schema_violations(to_json(certify_descent(f)), load("certificate.v1.json")).empty();
    ok = ok && schema_violations(to_json(backward_tree(f, pp(0, 1), 3)),
                                 load("backward-tree.v1.json")).empty();
    auto e = EllipticCurve::create(0, 1);
    ok = ok && schema_violations(torsion_to_json(e, torsion_group(e)),
                                 load("torsion.v1.json")).empty();
    report(12, "frontend round-trip, positioned rejections, schema-valid JSON", ok);
}

} // namespace

int main() {
    try {
        std::vector<Morphism> maps = criterion_maps();
        criterion_1_and_2(maps);
        criterion_3(maps);
        criterion_4(maps);
        criterion_5();
        criterion_6(maps);
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
        criterion_11();
        criterion_12();
    } catch (const std::exception& e) {
        std::cout << "FAIL unexpected exception: " << e.what() << "\n";
        return 1;
    }
    if (failures) {
        std::cout << failures << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all 12 acceptance criteria passed\n";
    return 0;
}
