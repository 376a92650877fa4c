#include "orbita/serialize.hpp"

#include <sstream>

namespace orbita {

using nlohmann::json;

json to_json(const ProjPoint& p) {
    json a = json::array();
    for (const auto& c : p.coords()) a.push_back(c.get_str());
    return a;
}

json to_json(const DescentCertificate& c) {
    return json{{"schema", "certificate.v1"},
                {"d", c.d},
                {"B", c.B.get_str()},
                {"M", c.M.get_str()},
                {"resultant", c.resultant.get_str()},
                {"cofactor_norm_x", c.norm_x.get_str()},
                {"cofactor_norm_y", c.norm_y.get_str()}};
}

static const char* class_name(PointClass c) {
    switch (c) {
    case PointClass::OnCycle: return "on-cycle";
    case PointClass::Preperiodic: return "preperiodic";
    case PointClass::Escaping: return "escaping";
    }
    return "?";
}

json to_json(const PeriodicReport& r) {
    json cycles = json::array();
    for (const auto& c : r.cycles) {
        json cyc = json::array();
        for (const auto& p : c) cyc.push_back(to_json(p));
        cycles.push_back(std::move(cyc));
    }
    json classification = json::array();
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        classification.push_back(json{{"point", to_json(r.candidates[i])},
                                      {"class", class_name(r.classes[i])}});
    }
    json j{{"schema", "periodic-report.v1"},
           {"certified", r.certified},
           {"bound", r.search_bound.get_str()},
           {"cycles", std::move(cycles)},
           {"periods", r.periods},
           {"candidate_count", r.candidates.size()},
           {"escape_count", r.escape_count},
           {"preperiodic_count", r.preperiodic_count},
           {"classification", std::move(classification)}};
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    return j;
}

json to_json(const BackwardTree& t) {
    json levels = json::array();
    for (const auto& lv : t.levels) {
        json l = json::array();
        for (const auto& n : lv)
            l.push_back(json{{"point", to_json(n.point)}, {"parent", n.parent}});
        levels.push_back(std::move(l));
    }
    return json{{"schema", "backward-tree.v1"},
                {"root", to_json(t.root)},
                {"depth", t.levels.size() - 1},
                {"node_count", t.node_count()},
                {"levels", std::move(levels)}};
}

json to_json(const ECPoint& p) {
    if (p.is_infinity()) return json{{"infinity", true}};
    return json{{"infinity", false}, {"x", p.x().get_str()}, {"y", p.y().get_str()}};
}

json torsion_to_json(const EllipticCurve& e, const TorsionGroup& g) {
    json pts = json::array();
    for (size_t i = 0; i < g.points.size(); ++i)
        pts.push_back(json{{"point", to_json(g.points[i])}, {"order", g.orders[i]}});
    const char* shape = g.shape == GroupShape::Trivial ? "trivial"
                        : g.shape == GroupShape::Cyclic ? "cyclic"
                                                        : "2x2n";
    return json{{"schema", "torsion.v1"},
                {"curve", json{{"a", e.a.get_str()}, {"b", e.b.get_str()},
                               {"discriminant", e.disc.get_str()}}},
                {"structure", shape},
                {"cardinality", g.points.size()},
                {"exponent", g.exponent},
                {"points", std::move(pts)}};
}

static std::string dot_id(const ProjPoint& p) {
    std::string s = "\"" + p.str() + "\"";
    return s;
}

std::string to_dot(const PeriodicReport& r) {
    std::ostringstream os;
    os << "digraph periodic {\n";
    for (size_t i = 0; i < r.candidates.size(); ++i)
        os << "  " << dot_id(r.candidates[i]) << " [label=\"" << r.candidates[i].str()
           << "\"];\n";
    bool has_escape = false;
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        if (r.next[i] < 0) {
            has_escape = true;
            continue;
        }
        bool cyc = r.classes[i] == PointClass::OnCycle;
        os << "  " << dot_id(r.candidates[i]) << " -> " << dot_id(r.candidates[r.next[i]]);
        if (cyc) os << " [cycle=true]";
        os << ";\n";
    }
    if (has_escape) {
        os << "  ESCAPE [shape=box];\n";
        for (size_t i = 0; i < r.candidates.size(); ++i)
            if (r.next[i] < 0) os << "  " << dot_id(r.candidates[i]) << " -> ESCAPE;\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const BackwardTree& t) {
    std::ostringstream os;
    os << "digraph backward {\n";
    for (const auto& lv : t.levels)
        for (const auto& n : lv)
            os << "  " << dot_id(n.point) << " [label=\"" << n.point.str() << "\"];\n";
    for (size_t d = 1; d < t.levels.size(); ++d)
        for (const auto& n : t.levels[d])
            os << "  " << dot_id(n.point) << " -> " << dot_id(t.levels[d - 1][n.parent].point)
               << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace orbita
