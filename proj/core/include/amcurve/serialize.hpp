#ifndef AMCURVE_SERIALIZE_HPP
#define AMCURVE_SERIALIZE_HPP

#include <optional>
#include <string>

#include "amcurve/curve.hpp"
#include "amcurve/quotient.hpp"

namespace amc {

/// Structured-text (JSON) records; the exact grammar is documented in
/// docs/FORMATS.md and is versioned by the top-level "format" field.
/// Parsing validates invariants (primality, monic irreducible modulus,
/// deterministic regeneration from the recorded seed) and rejects
/// malformed input with ParseError.

std::string to_json(const FiniteField& f);
FieldPtr field_from_json(const std::string& text);

std::string to_json(const LinearizedPoly& l);
LinearizedPoly linpoly_from_json(const std::string& text);

std::string curve_file(const AMCurve& c);
std::string curve_file(const YCurve& y);
std::string curve_file(const ZCurve& z);

struct CurveFile {
    std::string kind; // "am", "ycurve" or "zcurve"
    std::optional<AMCurve> am;
    std::optional<YCurve> ycurve;
    std::optional<ZCurve> zcurve;
};

CurveFile curve_from_json(const std::string& text);

} // namespace amc

#endif
