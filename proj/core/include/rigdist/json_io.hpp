#ifndef RIGDIST_JSON_IO_HPP
#define RIGDIST_JSON_IO_HPP

#include <string>

#include "rigdist/dist.hpp"
#include "rigdist/fn.hpp"

namespace rigdist {

// Strict parsing rejects duplicate keys and explicit zero coefficients;
// lenient parsing folds duplicates and prunes zeros instead. Output is
// always canonical either way: sorted keys, no zeros, a trailing newline.
enum class ParseMode { strict, lenient };

// Element forms: "x" | ["pair", a, b] | ["L", e] | ["R", e]
//              | ["fn", [[e, "coeff"], ...]]
std::string element_to_json(const Element& e);
Element element_from_json_text(const std::string& text);

// {"version":1, "rig":"<name>", "weights":[[element, "coeff"], ...]}
std::string dist_to_json(const Dist& p);
Dist dist_from_json_text(const std::string& text,
                         ParseMode mode = ParseMode::strict);

// {"version":1, "rig":"<name>", "fn":[[element, "coeff"], ...],
//  "carrier":[element, ...]}
std::string fn_to_json(const Fn& f);
Fn fn_from_json_text(const std::string& text,
                     ParseMode mode = ParseMode::strict);

// {"version":1, "map":[[element, element], ...]}
std::string map_to_json(const ElementMap& m);
ElementMap map_from_json_text(const std::string& text);

}  // namespace rigdist

#endif
