#include "orbita/orbit.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace orbita {

std::vector<ProjPoint> PeriodicReport::periodic_set() const {
    std::vector<ProjPoint> out;
    for (const auto& c : cycles) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

size_t BackwardTree::node_count() const {
    size_t n = 0;
    for (const auto& l : levels) n += l.size();
    return n;
}

CandidateSet enumerate_bounded(int n, const BigInt& M, unsigned long long max_candidates) {
    if (n < 1) throw std::invalid_argument("enumerate_bounded: dimension must be >= 1");
    if (M < 1) throw std::invalid_argument("enumerate_bounded: M must be >= 1");
    BigInt projected = 1;
    for (int i = 0; i <= n; ++i) projected *= 2 * M + 1;
    if (projected > BigInt(static_cast<unsigned long>(max_candidates)))
        throw domain_error("enumerate_bounded: candidate set too large");

    const long m = M.get_si();
    std::vector<ProjPoint> pts;
    std::vector<BigInt> tuple(n + 1);
    // depth-first over [-M, M]^{n+1}, keeping canonical representatives
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            BigInt g = 0;
            int first_nonzero = -1;
            for (int j = 0; j <= n; ++j) {
                g = gcd(g, tuple[j]);
                if (first_nonzero < 0 && tuple[j] != 0) first_nonzero = j;
            }
            if (first_nonzero < 0 || g != 1) return;
            if (tuple[first_nonzero] < 0) return;
            pts.push_back(ProjPoint::from_integers(tuple));
            return;
        }
        for (long v = -m; v <= m; ++v) {
            tuple[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(pts.begin(), pts.end(), [](const ProjPoint& a, const ProjPoint& b) {
        BigInt ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return CandidateSet{M, std::move(pts)};
}

namespace {

// Image index of each candidate under f, or -1 when the image leaves the set.
std::vector<long> image_table(const Morphism& f, const std::vector<ProjPoint>& s,
                              const BigInt& cap, unsigned threads) {
    std::map<ProjPoint, size_t> index;
    for (size_t i = 0; i < s.size(); ++i) index.emplace(s[i], i);
    std::vector<long> next(s.size(), -1);
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            ProjPoint q = f.evaluate(s[i]);
            if (q.height() > cap) {
                next[i] = -1;
            } else {
                next[i] = static_cast<long>(index.at(q));
            }
        }
    };
    if (threads <= 1 || s.size() < 64) {
        work(0, s.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (s.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t lo = std::min(s.size(), t * chunk);
            size_t hi = std::min(s.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return next;
}

// Functional-graph coloring over S with an external ESCAPE sink.
void classify(const std::vector<long>& next, std::vector<PointClass>& cls,
              std::vector<std::vector<size_t>>& cycles) {
    const size_t n = next.size();
    enum : int { Unseen = 0, OnPath = 1, Done = 2 };
    std::vector<int> state(n, Unseen);
    cls.assign(n, PointClass::Escaping);
    for (size_t start = 0; start < n; ++start) {
        if (state[start] != Unseen) continue;
        std::vector<size_t> path;
        size_t u = start;
        PointClass tail_class = PointClass::Escaping;
        size_t cycle_from = static_cast<size_t>(-1);
        while (true) {
            if (state[u] == Done) {
                tail_class = (cls[u] == PointClass::Escaping) ? PointClass::Escaping
                                                              : PointClass::Preperiodic;
                break;
            }
            if (state[u] == OnPath) {
                cycle_from = std::find(path.begin(), path.end(), u) - path.begin();
                break;
            }
            state[u] = OnPath;
            path.push_back(u);
            if (next[u] < 0) {
                tail_class = PointClass::Escaping;
                break;
            }
            u = static_cast<size_t>(next[u]);
        }
        if (cycle_from != static_cast<size_t>(-1)) {
            std::vector<size_t> cyc(path.begin() + cycle_from, path.end());
            for (size_t v : cyc) cls[v] = PointClass::OnCycle;
            cycles.push_back(std::move(cyc));
            for (size_t i = 0; i < cycle_from; ++i) cls[path[i]] = PointClass::Preperiodic;
        } else {
            for (size_t v : path) cls[v] = tail_class;
        }
        for (size_t v : path) state[v] = Done;
    }
}

PeriodicReport analyze(const Morphism& f, const BigInt& cap,
                       std::optional<DescentCertificate> cert, const OrbitOptions& opts) {
    PeriodicReport rep;
    rep.certified = cert.has_value();
    rep.certificate = std::move(cert);
    rep.search_bound = cap;
    CandidateSet s = enumerate_bounded(f.dim(), cap, opts.max_candidates);
    rep.candidates = std::move(s.points);

    rep.next = image_table(f, rep.candidates, cap, opts.threads);
    std::vector<std::vector<size_t>> cyc_idx;
    classify(rep.next, rep.classes, cyc_idx);

    for (auto& cyc : cyc_idx) {
        // rotate so the lexicographically smallest point leads
        size_t best = 0;
        for (size_t i = 1; i < cyc.size(); ++i)
            if (rep.candidates[cyc[i]] < rep.candidates[cyc[best]]) best = i;
        std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
        std::vector<ProjPoint> c;
        c.reserve(cyc.size());
        for (size_t i : cyc) c.push_back(rep.candidates[i]);
        rep.cycles.push_back(std::move(c));
    }
    std::sort(rep.cycles.begin(), rep.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& c : rep.cycles) rep.periods.push_back(static_cast<unsigned>(c.size()));
    for (PointClass c : rep.classes) {
        if (c == PointClass::Escaping) ++rep.escape_count;
        if (c == PointClass::Preperiodic) ++rep.preperiodic_count;
    }
    return rep;
}

} // namespace

PeriodicReport periodic_points(const Morphism& f, const OrbitOptions& opts) {
    if (f.dim() != 1)
        throw std::invalid_argument("periodic_points: certified mode is P^1 only; "
                                    "use periodic_points_search with a cap");
    DescentCertificate cert = certify_descent(f);
    BigInt cap = cert.M;
    return analyze(f, cap, std::move(cert), opts);
}

PeriodicReport periodic_points_search(const Morphism& f, const BigInt& cap,
                                      const OrbitOptions& opts) {
    if (cap < 1) throw std::invalid_argument("periodic_points_search: cap must be >= 1");
    return analyze(f, cap, std::nullopt, opts);
}

BackwardTree backward_tree(const Morphism& f, const ProjPoint& root, unsigned depth) {
    BackwardTree t;
    t.root = root;
    t.levels.push_back({BackwardTree::Node{root, 0}});
    for (unsigned lv = 0; lv < depth; ++lv) {
        std::vector<BackwardTree::Node> nxt;
        for (size_t pi = 0; pi < t.levels[lv].size(); ++pi) {
            for (const ProjPoint& pre : preimages_p1(f, t.levels[lv][pi].point)) {
                if (f.evaluate(pre) != t.levels[lv][pi].point)
                    throw std::logic_error("backward_tree: forward verification failed");
                nxt.push_back(BackwardTree::Node{pre, pi});
            }
        }
        t.levels.push_back(std::move(nxt));
    }
    return t;
}

std::vector<InverseLimitPoint> inverse_limit_p1(const Morphism& f, const OrbitOptions& opts) {
    PeriodicReport rep = periodic_points(f, opts);
    std::vector<InverseLimitPoint> out;
    for (const auto& cyc : rep.cycles) {
        const size_t p = cyc.size();
        for (size_t i = 0; i < p; ++i) {
            InverseLimitPoint il;
            il.x0 = cyc[i];
            // chain steps backward through the cycle: f(x_{n+1}) = x_n
            for (size_t k = 0; k < p; ++k) il.chain_period.push_back(cyc[(i + p - k) % p]);
            out.push_back(std::move(il));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const InverseLimitPoint& a, const InverseLimitPoint& b) { return a.x0 < b.x0; });
    return out;
}

ChainVerdict check_chain_lemma(const AbstractChain& chain, const std::vector<int>& s,
                               size_t horizon) {
    if (horizon < 2 * s.size() + 2)
        throw std::invalid_argument("check_chain_lemma: horizon must be >= 2|S| + 2");
    std::vector<int> xs;
    for (size_t n = 0; n <= horizon; ++n) {
        int x = chain.at(n);
        if (x < 0) break;
        if (x >= static_cast<int>(chain.next.size()))
            throw std::invalid_argument("check_chain_lemma: chain element out of range");
        if (n > 0) {
            if (chain.next[x] != xs[n - 1])
                throw std::invalid_argument("check_chain_lemma: chain violates f(x_{n+1}) = x_n");
        }
        xs.push_back(x);
    }
    std::vector<bool> in_s(chain.next.size(), false);
    for (int v : s)
        if (v >= 0 && v < static_cast<int>(chain.next.size())) in_s[v] = true;

    // first double visit of an element of S
    size_t n0 = 0, n1 = 0;
    bool found = false;
    std::map<int, size_t> first_seen;
    for (size_t n = 0; n < xs.size() && !found; ++n) {
        if (!in_s[xs[n]]) continue;
        auto it = first_seen.find(xs[n]);
        if (it == first_seen.end()) {
            first_seen.emplace(xs[n], n);
        } else {
            n0 = it->second;
            n1 = n;
            found = true;
        }
    }
    if (!found) return {};

    const unsigned p = static_cast<unsigned>(n1 - n0);
    for (size_t n = 0; n + p < xs.size(); ++n)
        if (xs[n + p] != xs[n]) return {};
    // reconstruction from x_0 alone: x_n = f^{(p - n mod p)}(x_0)
    for (size_t n = 0; n < xs.size(); ++n) {
        size_t l = n % p;
        int v = xs[0];
        for (size_t k = 0; k < p - l; ++k) {
            if (v < 0 || chain.next[v] < 0) return {};
            v = chain.next[v];
        }
        if (v != xs[n]) return {};
    }
    return ChainVerdict{true, p};
}

PowerEquivalenceReport power_equivalence_check(const Morphism& f, unsigned k,
                                               const OrbitOptions& opts) {
    if (k < 1) throw std::invalid_argument("power_equivalence_check: k must be >= 1");
    PowerEquivalenceReport rep;
    rep.k = k;
    rep.base_set = periodic_points(f, opts).periodic_set();
    if (k == 1) {
        rep.power_set = rep.base_set;
    } else {
        Morphism fk = f.power(k);
        DescentCertificate ck = certify_descent(fk);
        // Chaining H(f(P)) >= H(P)^d / B through k steps gives
        //   H(f^k(P)) >= H(P)^{d^k} / B^{1+d+...+d^{k-1}},
        // so periodic points of f^k have H <= floor(B^{1/(d-1)}) — typically
        // far below the cap derived from the cofactors of f^k itself, whose
        // coefficients explode under composition. Either bound is valid, so
        // enumerate under the tighter of the two.
        DescentCertificate base = certify_descent(f);
        BigInt dk_minus_1 = 0;      // d^k - 1
        unsigned long long s = 0;   // 1 + d + ... + d^{k-1}
        {
            unsigned long long t = 1;
            for (unsigned i = 0; i < k; ++i) {
                s += t;
                t *= base.d;
            }
            dk_minus_1 = BigInt(static_cast<unsigned long>(t)) - 1;
        }
        BigInt chained_B;
        mpz_pow_ui(chained_B.get_mpz_t(), base.B.get_mpz_t(), s);
        BigInt chained_M = iroot_floor(chained_B, dk_minus_1.get_ui());
        BigInt cap = std::min(ck.M, chained_M);
        rep.power_set = analyze(fk, cap, std::move(ck), opts).periodic_set();
    }
    rep.equal = rep.base_set == rep.power_set;
    return rep;
}

} // namespace orbita
