#ifndef ORBITA_SERIALIZE_HPP
#define ORBITA_SERIALIZE_HPP

#include "orbita/certify.hpp"
#include "orbita/elliptic.hpp"
#include "orbita/orbit.hpp"

#include <json.hpp>

#include <string>

namespace orbita {

// Versioned JSON documents; big integers are serialized as decimal strings,
// projective points as arrays of coordinate strings.
nlohmann::json to_json(const ProjPoint& p);
nlohmann::json to_json(const DescentCertificate& c);         // certificate.v1
nlohmann::json to_json(const PeriodicReport& r);             // periodic-report.v1
nlohmann::json to_json(const BackwardTree& t);               // backward-tree.v1
nlohmann::json to_json(const ECPoint& p);
nlohmann::json torsion_to_json(const EllipticCurve& e, const TorsionGroup& g); // torsion.v1

// DOT graphs: one node per point labeled with its coordinates, one edge per
// application of f; cycle edges carry cycle=true.
std::string to_dot(const PeriodicReport& r);
std::string to_dot(const BackwardTree& t);

} // namespace orbita

#endif
