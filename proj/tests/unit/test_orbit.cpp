#include <doctest.h>

#include "orbita/dsl.hpp"
#include "orbita/orbit.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace orbita;

namespace {

Morphism make_map(const std::string& components) {
    ParseResult r = parse("map f : P1 -> P1 = " + components);
    REQUIRE(r.ok());
    return *r.document->find_map("f");
}

ProjPoint pp(long a, long b) { return ProjPoint::from_integers({BigInt(a), BigInt(b)}); }

// Independent brute-force oracle: enumerate H <= bound, iterate each point up
// to `steps`; periodic iff the orbit returns to the start. Early exits: a
// revisited non-start point or a huge height certify non-periodicity.
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
            if (!seen.insert(q).second) break; // entered a cycle avoiding p
            if (q.height() > cutoff) break;    // left every bounded region
        }
    }
    return out;
}

} // namespace

TEST_CASE("enumerate_bounded counts") {
    auto s1 = enumerate_bounded(1, 1);
    CHECK(s1.points.size() == 4);
    CHECK(s1.points == std::vector<ProjPoint>{pp(0, 1), pp(1, -1), pp(1, 0), pp(1, 1)});
    CHECK(enumerate_bounded(1, 2).points.size() == 8);
    CHECK(enumerate_bounded(2, 1).points.size() == 13);
    CHECK_THROWS_AS(enumerate_bounded(3, 10000, 1000), domain_error);
}

TEST_CASE("enumeration matches the naive double-loop oracle for M <= 50") {
    for (long m : {1L, 2L, 3L, 7L, 20L, 50L}) {
        std::set<ProjPoint> naive;
        for (long a = -m; a <= m; ++a)
            for (long b = -m; b <= m; ++b)
                if (a != 0 || b != 0) naive.insert(pp(a, b));
        auto got = enumerate_bounded(1, m).points;
        CHECK(got.size() == naive.size());
        CHECK(std::set<ProjPoint>(got.begin(), got.end()) == naive);
        // (height, coords) order: heights are nondecreasing
        for (size_t i = 1; i < got.size(); ++i)
            CHECK(got[i - 1].height() <= got[i].height());
    }
}

TEST_CASE("periodic_points examples") {
    SUBCASE("squaring map: 0, 1, infinity") {
        auto r = periodic_points(make_map("[x0^2, x1^2]"));
        CHECK(r.certified);
        CHECK(r.periodic_set() == std::vector<ProjPoint>{pp(0, 1), pp(1, 0), pp(1, 1)});
        CHECK(r.cycles.size() == 3);
        for (auto p : r.periods) CHECK(p == 1);
    }
    SUBCASE("z^2 - 1: fixed infinity plus the 2-cycle 0 <-> -1") {
        auto r = periodic_points(make_map("[x0^2 - x1^2, x1^2]"));
        CHECK(r.periodic_set() == std::vector<ProjPoint>{pp(0, 1), pp(1, -1), pp(1, 0)});
        std::multiset<unsigned> periods(r.periods.begin(), r.periods.end());
        CHECK(periods == std::multiset<unsigned>{1, 2});
    }
    SUBCASE("cubing map: 0, infinity, 1, -1") {
        auto r = periodic_points(make_map("[x0^3, x1^3]"));
        CHECK(r.periodic_set() ==
              std::vector<ProjPoint>{pp(0, 1), pp(1, -1), pp(1, 0), pp(1, 1)});
        CHECK(r.cycles.size() == 4);
    }
}

TEST_CASE("periodic_points agrees with the brute-force oracle") {
    for (const char* components :
         {"[x0^2, x1^2]", "[x0^2 - x1^2, x1^2]", "[x0^3, x1^3]",
          "[x0^2 - 2*x1^2, x1^2]", "[2*x0^2 + x1^2, x0*x1 + x1^2]"}) {
        Morphism f = make_map(components);
        auto r = periodic_points(f);
        BigInt bound = std::max(r.search_bound, BigInt(100));
        CHECK(r.periodic_set() == oracle_periodic(f, bound, 200));
    }
}

TEST_CASE("cycle closure and escape soundness") {
    Morphism f = make_map("[x0^2 - x1^2, x1^2]");
    auto r = periodic_points(f);
    for (size_t i = 0; i < r.cycles.size(); ++i) {
        const auto& c = r.cycles[i];
        CHECK(c.size() == r.periods[i]);
        for (size_t j = 0; j < c.size(); ++j)
            CHECK(f.evaluate(c[j]) == c[(j + 1) % c.size()]);
    }
    // every escaping candidate has strictly increasing height once H > M
    REQUIRE(r.certificate.has_value());
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        if (r.classes[i] != PointClass::Escaping) continue;
        ProjPoint q = r.candidates[i];
        bool above = false;
        for (int k = 0; k < 12; ++k) {
            ProjPoint next = f.evaluate(q);
            if (above) CHECK(next.height() > q.height());
            if (next.height() > r.certificate->M) above = true;
            q = next;
        }
        CHECK(above);
    }
}

TEST_CASE("uncapped P^n search mode is explicit about being uncertified") {
    ParseResult r = parse("map f : P2 -> P2 = [x0^2, x1^2, x2^2]");
    REQUIRE(r.ok());
    auto rep = periodic_points_search(*r.document->find_map("f"), 1);
    CHECK_FALSE(rep.certified);
    CHECK(rep.search_bound == 1);
    // all 7 points of {0,1}^3 \ {0} projective classes with 0/1 coords are fixed
    CHECK(rep.periodic_set().size() == 7);
}

TEST_CASE("backward_tree examples") {
    Morphism sq = make_map("[x0^2, x1^2]");
    SUBCASE("root 1, depth 2") {
        auto t = backward_tree(sq, pp(1, 1), 2);
        REQUIRE(t.levels.size() == 3);
        CHECK(t.levels[0].size() == 1);
        REQUIRE(t.levels[1].size() == 2);
        CHECK(t.levels[1][0].point == pp(-1, 1));
        CHECK(t.levels[1][1].point == pp(1, 1));
        // level 2: nothing above -1, {1, -1} above 1
        REQUIRE(t.levels[2].size() == 2);
        for (const auto& n : t.levels[2]) CHECK(t.levels[1][n.parent].point == pp(1, 1));
        CHECK(t.node_count() == 5);
    }
    SUBCASE("root 2: no rational square root") {
        auto t = backward_tree(sq, pp(2, 1), 1);
        REQUIRE(t.levels.size() == 2);
        CHECK(t.levels[1].empty());
    }
    SUBCASE("depth 0") {
        auto t = backward_tree(sq, pp(3, 1), 0);
        CHECK(t.node_count() == 1);
        CHECK(t.levels.size() == 1);
    }
}

TEST_CASE("inverse limit on P^1 equals the periodic set with backward chains") {
    SUBCASE("squaring map: constant chains") {
        auto il = inverse_limit_p1(make_map("[x0^2, x1^2]"));
        REQUIRE(il.size() == 3);
        for (const auto& e : il) {
            CHECK(e.chain_period.size() == 1);
            CHECK(e.chain_period[0] == e.x0);
        }
    }
    SUBCASE("z^2 - 1: the 2-cycle reversed") {
        Morphism f = make_map("[x0^2 - x1^2, x1^2]");
        auto il = inverse_limit_p1(f);
        REQUIRE(il.size() == 3);
        auto it = std::find_if(il.begin(), il.end(),
                               [&](const auto& e) { return e.x0 == pp(0, 1); });
        REQUIRE(it != il.end());
        CHECK(it->chain_period == std::vector<ProjPoint>{pp(0, 1), pp(-1, 1)});
        // backward chain property: f(x_{n+1}) = x_n cyclically
        for (const auto& e : il) {
            const auto& c = e.chain_period;
            for (size_t n = 0; n < c.size(); ++n)
                CHECK(f.evaluate(c[(n + 1) % c.size()]) == c[n]);
        }
    }
    SUBCASE("cubing map: 4 chains") {
        CHECK(inverse_limit_p1(make_map("[x0^3, x1^3]")).size() == 4);
    }
}

namespace {

AbstractChain chain_from_graph(const std::vector<int>& next, std::vector<int> walk) {
    AbstractChain c;
    c.next = next;
    c.at = [walk](size_t n) { return n < walk.size() ? walk[n] : -1; };
    return c;
}

} // namespace

TEST_CASE("chain lemma checker") {
    SUBCASE("constant chain, period 1") {
        auto v = check_chain_lemma(chain_from_graph({0}, std::vector<int>(64, 0)), {0}, 10);
        CHECK(v.periodic);
        CHECK(v.period == 1);
    }
    SUBCASE("3-cycle") {
        std::vector<int> next = {1, 2, 0};
        std::vector<int> walk;
        for (int n = 0; n < 64; ++n) walk.push_back(((0 - n) % 3 + 3) % 3);
        auto v = check_chain_lemma(chain_from_graph(next, walk), {0, 1, 2}, 20);
        CHECK(v.periodic);
        CHECK(v.period == 3);
    }
    SUBCASE("chain never entering S is inconclusive") {
        std::vector<int> next = {0, 1, 2};
        auto v = check_chain_lemma(chain_from_graph(next, std::vector<int>(64, 2)), {0, 1}, 20);
        CHECK_FALSE(v.periodic);
    }
    SUBCASE("horizon precondition") {
        CHECK_THROWS_AS(
            check_chain_lemma(chain_from_graph({0}, std::vector<int>(64, 0)), {0}, 1),
            std::invalid_argument);
    }
    SUBCASE("malformed chain rejected") {
        std::vector<int> next = {1, 0};
        auto v = chain_from_graph(next, {0, 0, 0, 0, 0, 0, 0, 0}); // f(0) = 1 != 0
        CHECK_THROWS_AS(check_chain_lemma(v, {0, 1}, 6), std::invalid_argument);
    }
}

TEST_CASE("chain lemma on random functional graphs never returns a false period") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        size_t size = 2 + rng() % 49;
        std::vector<int> next(size);
        for (auto& v : next) v = static_cast<int>(rng() % size);
        // build a valid backward chain: walk forward far, then read backward
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
        auto verdict = check_chain_lemma(chain_from_graph(next, walk), s, horizon);
        if (verdict.periodic) {
            // falsification attempt within the simulated horizon (past it the
            // backward chain may leave the cycle into a tree)
            for (size_t n = 0; n + verdict.period < horizon; ++n)
                CHECK(walk[n] == walk[n + verdict.period]);
        }
    }
}

TEST_CASE("periodic sets of f and f^k coincide") {
    SUBCASE("squaring map, k = 2") {
        auto r = power_equivalence_check(make_map("[x0^2, x1^2]"), 2);
        CHECK(r.equal);
        CHECK(r.base_set == std::vector<ProjPoint>{pp(0, 1), pp(1, 0), pp(1, 1)});
        CHECK(r.base_set == r.power_set);
    }
    SUBCASE("z^2 - 1, k = 2: the 2-cycle splits into fixed points of f^2") {
        auto r = power_equivalence_check(make_map("[x0^2 - x1^2, x1^2]"), 2);
        CHECK(r.equal);
        CHECK(r.base_set == std::vector<ProjPoint>{pp(0, 1), pp(1, -1), pp(1, 0)});
    }
    SUBCASE("k = 1 trivially equal") {
        auto r = power_equivalence_check(make_map("[x0^3, x1^3]"), 1);
        CHECK(r.equal);
    }
}

TEST_CASE("threaded classification matches single-threaded") {
    Morphism f = make_map("[x0^2 - 2*x1^2, x1^2]");
    OrbitOptions two;
    two.threads = 4;
    auto a = periodic_points(f);
    auto b = periodic_points(f, two);
    CHECK(a.periodic_set() == b.periodic_set());
    CHECK(a.classes == b.classes);
}
