// orbita: exact rational periodic points, backward orbits and torsion
// for self-maps of P^n and elliptic-curve products over Q.

#include "orbita/dsl.hpp"
#include "orbita/orbit.hpp"
#include "orbita/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace orbita;

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open file: " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Morphism load_map(const std::string& path, const std::string& name) {
    ParseResult res = parse(read_file(path));
    if (!res.ok()) {
        std::string msg = "failed to parse " + path;
        for (const auto& d : res.diagnostics) msg += "\n" + d.str();
        throw CliError{1, msg};
    }
    if (!name.empty()) {
        const Morphism* m = res.document->find_map(name);
        if (!m) throw CliError{2, "no map named '" + name + "' in " + path};
        return *m;
    }
    for (const auto& d : res.document->definitions)
        if (d.kind == Definition::Kind::Map) return *d.map;
    throw CliError{2, "no map definition in " + path};
}

ProjPoint parse_proj_point(std::string s) {
    std::erase(s, '[');
    std::erase(s, ']');
    std::replace(s.begin(), s.end(), ',', ':');
    std::vector<BigRat> coords;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) {
        std::erase(part, ' ');
        if (part.empty()) continue;
        BigRat r(part);
        r.canonicalize();
        coords.push_back(r);
    }
    if (coords.size() < 2) throw CliError{2, "bad point syntax: " + s};
    return ProjPoint::from_rationals(coords);
}

EllipticCurve parse_curve(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CliError{2, "curve must be given as \"a,b\""};
    return EllipticCurve::create(BigInt(s.substr(0, comma)), BigInt(s.substr(comma + 1)));
}

ECPoint parse_ec_point(std::string s) {
    std::erase(s, ' ');
    std::erase(s, '(');
    std::erase(s, ')');
    if (s == "O" || s == "o") return ECPoint::infinity();
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CliError{2, "point must be \"x,y\" or \"O\""};
    BigRat x(s.substr(0, comma)), y(s.substr(comma + 1));
    x.canonicalize();
    y.canonicalize();
    return ECPoint(x, y);
}

void print_report_text(const PeriodicReport& r, std::ostream& os) {
    if (r.certified) {
        const auto& c = *r.certificate;
        os << "certificate: d=" << c.d << " B=" << c.B << " M=" << c.M
           << " resultant=" << c.resultant << "\n";
    } else {
        os << "uncertified search up to height " << r.search_bound << " (no descent bound)\n";
    }
    os << "candidates (H <= " << r.search_bound << "): " << r.candidates.size() << "\n";
    os << "periodic points: " << r.periodic_set().size() << " in " << r.cycles.size()
       << " cycle(s)\n";
    for (size_t i = 0; i < r.cycles.size(); ++i) {
        os << "  period " << r.periods[i] << ":";
        for (const auto& p : r.cycles[i]) os << " " << p.str();
        os << "\n";
    }
    os << "preperiodic: " << r.preperiodic_count << ", escaping: " << r.escape_count << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational dynamics on projective spaces and elliptic products"};
    app.require_subcommand(1);

    std::string map_file, map_name, point_str, curve_str, curve2_str, generator_str,
        translate_str, format = "text";
    unsigned depth = 1, iters = 10, threads = 1, count = 10, dplusone = 0, nodes = 20;
    long long mult = 2;
    unsigned long long max_candidates = 10'000'000ULL;
    unsigned long long seed = 1;
    unsigned long long bound = 0;
    double target = 1e-9;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* c_certify = app.add_subcommand("certify", "descent certificate for a P^1 map");
    c_certify->add_option("--map", map_file)->required();
    c_certify->add_option("--name", map_name);
    add_common(c_certify);

    auto* c_periodic = app.add_subcommand("periodic", "certified rational periodic points");
    c_periodic->add_option("--map", map_file)->required();
    c_periodic->add_option("--name", map_name);
    c_periodic->add_option("--bound", bound, "uncertified search cap (required for P^n, n >= 2)");
    c_periodic->add_option("--threads", threads);
    c_periodic->add_option("--max-candidates", max_candidates);
    add_common(c_periodic);

    auto* c_canheight = app.add_subcommand("canheight", "Tate canonical height with error radius");
    c_canheight->add_option("--map", map_file)->required();
    c_canheight->add_option("--name", map_name);
    c_canheight->add_option("--point", point_str)->required();
    c_canheight->add_option("--target", target, "target error radius");
    add_common(c_canheight);

    auto* c_orbit = app.add_subcommand("orbit", "forward orbit of a point");
    c_orbit->add_option("--map", map_file)->required();
    c_orbit->add_option("--name", map_name);
    c_orbit->add_option("--point", point_str)->required();
    c_orbit->add_option("--iters", iters);
    add_common(c_orbit);

    auto* c_preimages = app.add_subcommand("preimages", "rational preimages / backward tree");
    c_preimages->add_option("--map", map_file)->required();
    c_preimages->add_option("--name", map_name);
    c_preimages->add_option("--point", point_str)->required();
    c_preimages->add_option("--depth", depth);
    add_common(c_preimages);

    auto* c_backward = app.add_subcommand("backward", "backward orbit tree");
    c_backward->add_option("--map", map_file)->required();
    c_backward->add_option("--name", map_name);
    c_backward->add_option("--point", point_str)->required();
    c_backward->add_option("--depth", depth);
    add_common(c_backward);

    auto* c_torsion = app.add_subcommand("torsion", "rational torsion subgroup");
    c_torsion->add_option("--curve", curve_str)->required();
    add_common(c_torsion);

    auto* c_product = app.add_subcommand("product-demo",
                                         "periodic points on elliptic products");
    c_product->add_option("--curve", curve_str)->required();
    c_product->add_option("--curve2", curve2_str);
    c_product->add_option("--generator", generator_str)->required();
    c_product->add_option("--count", count);
    c_product->add_option("--m", mult);
    c_product->add_option("--dplusone", dplusone, "use ([d+1]P, Q) instead of (P, [m]Q)");
    add_common(c_product);

    auto* c_chain = app.add_subcommand("chain-verify",
                                       "verify the infinite backward chain (-[n]T, O)");
    c_chain->add_option("--curve", curve_str)->required();
    c_chain->add_option("--curve2", curve2_str);
    c_chain->add_option("--translate", translate_str)->required();
    c_chain->add_option("--m", mult);
    c_chain->add_option("--depth", depth);
    add_common(c_chain);

    auto* c_lemma = app.add_subcommand("lemma-check",
                                       "chain periodicity on a random functional graph");
    c_lemma->add_option("--nodes", nodes);
    c_lemma->add_option("--seed", seed);
    add_common(c_lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_certify) {
            Morphism f = load_map(map_file, map_name);
            DescentCertificate cert = certify_descent(f);
            if (format == "json")
                std::cout << to_json(cert).dump(2) << "\n";
            else
                std::cout << "d=" << cert.d << " B=" << cert.B << " M=" << cert.M
                          << " resultant=" << cert.resultant << " norm_x=" << cert.norm_x
                          << " norm_y=" << cert.norm_y << "\n";
        } else if (*c_periodic) {
            Morphism f = load_map(map_file, map_name);
            OrbitOptions opts{threads, max_candidates};
            PeriodicReport rep;
            if (f.dim() == 1 && bound == 0) {
                rep = periodic_points(f, opts);
            } else {
                if (bound == 0)
                    throw CliError{2, "P^n with n >= 2 needs an explicit --bound cap"};
                rep = periodic_points_search(f, BigInt(static_cast<unsigned long>(bound)), opts);
            }
            if (format == "json")
                std::cout << to_json(rep).dump(2) << "\n";
            else if (format == "dot")
                std::cout << to_dot(rep);
            else
                print_report_text(rep, std::cout);
        } else if (*c_canheight) {
            Morphism f = load_map(map_file, map_name);
            DescentCertificate cert = certify_descent(f);
            CanonicalHeightValue h =
                canonical_height(f, cert, parse_proj_point(point_str), target);
            if (format == "json")
                std::cout << nlohmann::json{{"value", h.value},
                                            {"radius", h.radius},
                                            {"iterations", h.iterations}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "canonical height = " << h.value << " +/- " << h.radius << " ("
                          << h.iterations << " iterations)\n";
        } else if (*c_orbit) {
            Morphism f = load_map(map_file, map_name);
            ProjPoint p = parse_proj_point(point_str);
            for (unsigned i = 0; i <= iters; ++i) {
                std::cout << i << ": " << p.str() << " (H=" << p.height() << ")\n";
                if (i < iters) p = f.evaluate(p);
            }
        } else if (*c_preimages || *c_backward) {
            Morphism f = load_map(map_file, map_name);
            BackwardTree t = backward_tree(f, parse_proj_point(point_str), depth);
            if (format == "json")
                std::cout << to_json(t).dump(2) << "\n";
            else if (format == "dot")
                std::cout << to_dot(t);
            else {
                for (size_t lv = 0; lv < t.levels.size(); ++lv) {
                    std::cout << "depth " << lv << ":";
                    for (const auto& n : t.levels[lv]) std::cout << " " << n.point.str();
                    std::cout << "\n";
                }
            }
        } else if (*c_torsion) {
            EllipticCurve e = parse_curve(curve_str);
            TorsionGroup g = torsion_group(e);
            if (format == "json")
                std::cout << torsion_to_json(e, g).dump(2) << "\n";
            else {
                const char* shape = g.shape == GroupShape::Trivial ? "trivial"
                                    : g.shape == GroupShape::Cyclic
                                        ? "Z/n"
                                        : "Z/2 x Z/2n";
                std::cout << "torsion subgroup: " << g.points.size() << " points, structure "
                          << shape << ", exponent " << g.exponent << "\n";
                for (size_t i = 0; i < g.points.size(); ++i)
                    std::cout << "  " << g.points[i].str() << " (order " << g.orders[i] << ")\n";
            }
        } else if (*c_product) {
            EllipticCurve e1 = parse_curve(curve_str);
            EllipticCurve e2 = curve2_str.empty() ? e1 : parse_curve(curve2_str);
            ECPoint gen = parse_ec_point(generator_str);
            if (dplusone > 0) {
                ProductSystem sys = build_d_plus_one_map(e1, e2, dplusone);
                if (!e2.contains(gen)) throw CliError{1, "generator not on second curve"};
                std::cout << "map ([" << dplusone + 1 << "]P, Q) on E1 x E2; fixed points (O, [k]G):\n";
                for (unsigned k = 1; k <= count; ++k) {
                    ECPoint q = ec_mul(e2, k, gen);
                    auto [p2, q2] = sys.evaluate(ECPoint::infinity(), q);
                    bool fixed = p2.is_infinity() && q2 == q;
                    std::cout << "  k=" << k << ": (O, " << q.str() << ") "
                              << (fixed ? "fixed" : "NOT FIXED") << "\n";
                }
            } else {
                if (!e1.contains(gen)) throw CliError{1, "generator not on curve"};
                ProductSystem sys{e1, e2, 1, mult, ECPoint::infinity(), ECPoint::infinity()};
                std::cout << "map (P, [" << mult << "]Q) on E x E; fixed points ([k]G, O):\n";
                for (unsigned k = 1; k <= count; ++k) {
                    ECPoint p = ec_mul(e1, k, gen);
                    auto [p2, q2] = sys.evaluate(p, ECPoint::infinity());
                    bool fixed = p2 == p && q2.is_infinity();
                    std::cout << "  k=" << k << ": (" << p.str() << ", O) "
                              << (fixed ? "fixed" : "NOT FIXED") << "\n";
                }
            }
        } else if (*c_chain) {
            EllipticCurve e1 = parse_curve(curve_str);
            EllipticCurve e2 = curve2_str.empty() ? e1 : parse_curve(curve2_str);
            ECPoint t = parse_ec_point(translate_str);
            BackwardChainEvidence ev = verify_backward_chain(e1, t, e2, mult, depth);
            std::cout << "backward chain x_n = (-[n]T, O) verified to depth " << ev.depth
                      << "; " << ev.distinct_points << " pairwise distinct points\n";
        } else if (*c_lemma) {
            std::mt19937_64 rng(seed);
            AbstractChain chain;
            chain.next.resize(nodes);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(nodes) - 1);
            for (auto& v : chain.next) v = pick(rng);
            // start somewhere, walk forward far to land on a cycle, then use
            // the cycle itself as the backward chain
            int v = pick(rng);
            for (unsigned i = 0; i < 4 * nodes; ++i) v = chain.next[v];
            std::vector<int> cycle{v};
            for (int u = chain.next[v]; u != v; u = chain.next[u]) cycle.push_back(u);
            auto chain_at = [cycle](size_t n) {
                // backward chain along the cycle
                size_t p = cycle.size();
                return cycle[(p - n % p) % p];
            };
            chain.at = chain_at;
            std::vector<int> s(cycle.begin(), cycle.end());
            ChainVerdict verdict = check_chain_lemma(chain, s, 2 * s.size() + 2 + 10);
            if (verdict.periodic)
                std::cout << "periodic with period " << verdict.period << " (cycle length "
                          << cycle.size() << ")\n";
            else
                std::cout << "inconclusive\n";
        }
    } catch (const CliError& e) {
        std::cerr << "orbita: " << e.message << "\n";
        return e.code;
    } catch (const domain_error& e) {
        std::cerr << "orbita: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "orbita: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
