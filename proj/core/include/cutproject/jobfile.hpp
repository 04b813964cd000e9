#ifndef CUTPROJECT_JOBFILE_HPP
#define CUTPROJECT_JOBFILE_HPP

#include <optional>
#include <string>

#include "cutproject/scheme.hpp"
#include "cutproject/window.hpp"

namespace cutproject {

// Scheme definition files are JSON with fields
//   { "name": str, "d": int, "m": int, "N": int,
//     "M": [[row-major matrix]], "c": [ints], "window": {...}? }
// Unknown keys are rejected with a ParseError naming the key; scheme
// invariant violations surface verbatim.

struct SchemeFile {
    CutProjectScheme scheme;
    std::optional<WeightFunction> window;
};

SchemeFile parse_scheme_json(const std::string& text);
SchemeFile parse_scheme_file(const std::string& path);

/// Round-trips bit-exactly through parse_scheme_json.
std::string emit_scheme_json(const CutProjectScheme& scheme);

/// Window object parser, JSON text form:
///   {"kind":"box","intervals":[[a,b],...],"cyclic_subset":[...],"half_open":bool}
///   {"kind":"tent","halfwidths":[w,...],"cyclic_subset":[...]}
///   {"kind":"combination","terms":[{"coefficient":[re,im],"window":{...}},...]}
/// cyclic_subset defaults to all of Z/N.
WeightFunction parse_window_json(const std::string& text, int m, int cyclic_order);

/// Inline window mini-grammar:
///   box:a,b[;a2,b2...]    per-axis closed intervals
///   tent:w[;w2...]        per-axis tents
///   cyclic:{0,1}          cyclic subset
/// A Euclidean part and a cyclic part may be combined with '*', e.g.
/// "box:-0.5,0.5*cyclic:{0}".
WeightFunction parse_window_spec(const std::string& spec, int m, int cyclic_order,
                                 bool half_open = false);

} // namespace cutproject

#endif
