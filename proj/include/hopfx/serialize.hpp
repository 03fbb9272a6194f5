#pragma once
#include <string>

#include "hopfx/exponent.hpp"

namespace hopfx {

// JSON documents for algebras and computation reports.  All exact scalars
// travel as strings in Scalar::str()/parse() syntax so nothing is ever
// rounded; polynomials are arrays of coefficient strings, constant term
// first.  See docs/algebra_document.md for the full schema.
//
// emit_algebra is canonical: fixed key order, structure-constant entries
// sorted by index, one entry per line, no trailing whitespace.  Hence
// emit(parse(emit(H))) == emit(H) byte for byte.
//
// parse_algebra re-runs the full axiom check and throws std::runtime_error
// naming the failing axiom when the document does not describe a Hopf
// algebra; malformed scalars and structural defects are also errors.  A
// returned algebra is always verified.
std::string emit_algebra(const HopfAlgebra& h);
HopfAlgebra parse_algebra(const std::string& text);

void save_algebra(const HopfAlgebra& h, const std::string& path);
HopfAlgebra load_algebra(const std::string& path);

// Machine-readable reports.  The coefficient field rides along in the
// document so vectors and polynomials parse back exactly; elapsed time is
// deliberately not serialized (reports are deterministic artifacts).
std::string exponent_result_to_json(const ExponentResult& r, const FieldSpec& f);
ExponentResult exponent_result_from_json(const std::string& text);

std::string spectrum_report_to_json(const SpectrumReport& r, const FieldSpec& f);
SpectrumReport spectrum_report_from_json(const std::string& text);

}  // namespace hopfx
