#ifndef ORBITA_ORBIT_HPP
#define ORBITA_ORBIT_HPP

#include "orbita/certify.hpp"
#include "orbita/projective.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace orbita {

// All points of P^n(Q) with multiplicative height <= M, in (height, coords)
// lexicographic order.
struct CandidateSet {
    BigInt bound;
    std::vector<ProjPoint> points;
};

CandidateSet enumerate_bounded(int n, const BigInt& M,
                               unsigned long long max_candidates = 10'000'000ULL);

enum class PointClass { OnCycle, Preperiodic, Escaping };

struct PeriodicReport {
    bool certified = false;               // false in capped P^n search mode
    std::optional<DescentCertificate> certificate;
    BigInt search_bound;                  // M (certified) or the user cap
    std::vector<std::vector<ProjPoint>> cycles; // consecutive under f, last wraps
    std::vector<unsigned> periods;
    std::vector<ProjPoint> candidates;    // the enumerated set S, in order
    std::vector<PointClass> classes;      // parallel to candidates
    std::vector<long> next;               // image index in S, -1 when it leaves S
    size_t escape_count = 0;
    size_t preperiodic_count = 0;

    std::vector<ProjPoint> periodic_set() const;
};

struct OrbitOptions {
    unsigned threads = 1;
    unsigned long long max_candidates = 10'000'000ULL;
};

// Complete certified X(Q)_{per,f} for a morphism of P^1: enumerate the
// candidate set S from the descent certificate, color the functional graph
// of f restricted to S, one height exceedance proves escape.
PeriodicReport periodic_points(const Morphism& f, const OrbitOptions& opts = {});

// Uncertified search within a user-supplied height cap (P^n, n >= 2, or any
// dimension). Points whose orbit leaves the cap are reported Escaping but the
// result carries certified = false.
PeriodicReport periodic_points_search(const Morphism& f, const BigInt& cap,
                                      const OrbitOptions& opts = {});

// Breadth-first rational backward orbit; every edge re-verified forward.
struct BackwardTree {
    struct Node {
        ProjPoint point;
        size_t parent; // index into the previous level (root level: unused)
    };
    ProjPoint root;
    std::vector<std::vector<Node>> levels; // levels[0] = {root}
    size_t node_count() const;
};

BackwardTree backward_tree(const Morphism& f, const ProjPoint& root, unsigned depth);

// x0-coordinates of the inverse limit on certified P^1, each with one period
// of its (unique) chain, i.e. the cycle traversed backward starting at x0.
struct InverseLimitPoint {
    ProjPoint x0;
    std::vector<ProjPoint> chain_period;
};
std::vector<InverseLimitPoint> inverse_limit_p1(const Morphism& f, const OrbitOptions& opts = {});

// Abstract finite dynamical system for the chain lemma: nodes 0..size-1,
// next[i] = f(i) or -1 where undefined. The chain generator returns x_n, or
// -1 when the chain cannot be extended.
struct AbstractChain {
    std::vector<int> next;
    std::function<int(size_t)> at;
};

struct ChainVerdict {
    bool periodic = false;
    unsigned period = 0;
};

// Simulates the chain up to `horizon` (validating f(x_{n+1}) = x_n at every
// step); on a double visit of some element of S, returns the index gap as the
// period once x_{n+p} = x_n holds over the whole simulated prefix and the
// chain is reconstructed from x_0 alone. Otherwise inconclusive.
ChainVerdict check_chain_lemma(const AbstractChain& chain, const std::vector<int>& s,
                               size_t horizon);

// Lemma check X(Q)_{per,f} = X(Q)_{per,f^k}: computes both certified periodic
// sets and compares them.
struct PowerEquivalenceReport {
    unsigned k = 1;
    bool equal = false;
    std::vector<ProjPoint> base_set;
    std::vector<ProjPoint> power_set;
};
PowerEquivalenceReport power_equivalence_check(const Morphism& f, unsigned k,
                                               const OrbitOptions& opts = {});

} // namespace orbita

#endif
