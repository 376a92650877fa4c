#ifndef ORBITA_DSL_HPP
#define ORBITA_DSL_HPP

#include "orbita/elliptic.hpp"
#include "orbita/projective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbita {

// Positioned parse/validation message. line and column are 1-based and point
// inside the source text; excerpt is the offending source line.
struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
    size_t line = 1;
    size_t column = 1;
    std::string excerpt;

    std::string str() const;
};

struct Definition {
    enum class Kind { Map, Curve, Point };
    Kind kind;
    std::string name;
    std::optional<Morphism> map;
    std::optional<EllipticCurve> curve;
    std::optional<ProjPoint> point;

    bool operator==(const Definition&) const = default;
};

struct DslDocument {
    std::vector<Definition> definitions;

    const Definition* find(const std::string& name) const;
    const Morphism* find_map(const std::string& name) const;
    const EllipticCurve* find_curve(const std::string& name) const;
    const ProjPoint* find_point(const std::string& name) const;

    bool operator==(const DslDocument&) const = default;
};

struct ParseResult {
    std::optional<DslDocument> document;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return document.has_value(); }
};

// Recursive-descent parse of the definition language:
//   map f : P1 -> P1 = [x0^2 - x1^2, x1^2]
//   curve e = [0, 1]
//   point p = [2 : 1]
// '#' starts a comment; integers are unbounded. Maps are validated for
// homogeneity, matching degrees, d >= 2 and (on P^1) a nonzero resultant.
ParseResult parse(const std::string& source);

// Canonical text form; parse(print(doc)) reproduces an equal document.
std::string print(const DslDocument& doc);
std::string print(const Morphism& f);
std::string print(const HomogForm& f);

} // namespace orbita

#endif
