#ifndef POSETOP_JSON_IO_HPP_
#define POSETOP_JSON_IO_HPP_

// JSON documents for posets and the sums built from them.
//
// A poset is {"elements": [...], "relations": [[u, v], ...]} where the
// relations are generators u <= v. Output is canonical: elements sorted and
// relations listed as the sorted cover pairs.

#include <string>

#include <json.hpp>

#include "posetop/canon.hpp"
#include "posetop/formal_sum.hpp"
#include "posetop/hopf.hpp"
#include "posetop/poset.hpp"
#include "posetop/report.hpp"

namespace posetop {

using Json = nlohmann::json;

Json to_json(const Poset& p);
// Throws ParseError on malformed documents and the build errors otherwise.
Poset poset_from_json(const Json& doc);
Poset read_poset_file(const std::string& path);
// Parses a JSON file; ParseError if unreadable.
Json read_json_file(const std::string& path);

// [{"poset": ..., "coefficient": c}, ...] in term order.
Json to_json(const FormalSum& x);
// Accepts the array form above or a single poset (coefficient 1).
FormalSum sum_from_json(const Json& doc);
// {"key": hex, "size": n, "automorphisms": s, "poset": ...}
Json to_json(const IsoClass& c);
// [{"class": hex, "poset": ..., "coefficient": c}, ...]
Json to_json(const ClassSum& x);
// [{"left": ..., "right": ..., "coefficient": c}, ...]
Json to_json(const TensorSum& x);
Json to_json(const VerificationReport& r);

}  // namespace posetop

#endif  // POSETOP_JSON_IO_HPP_
