#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "latfree/reduction.hpp"
#include "latfree/slopes.hpp"
#include "latfree/verifier.hpp"

namespace latfree {

using Json = nlohmann::json;

/// Malformed input document (distinct from geometric failures).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(IntVec v);
Json to_json(const IntMat2& m);
Json to_json(const Polygon& p);
Json to_json(const Sublattice& l);
Json to_json(const AffineMap& m);
Json to_json(const Slope& q);
Json to_json(const SearchBox& b);
Json to_json(const CheckReport& r);
Json to_json(const Classification& c);
Json to_json(const NormalizationResult& r);
Json to_json(const VerificationReport& r);

IntVec vec_from_json(const Json& j);
IntMat2 mat_from_json(const Json& j);
/// Any order or orientation; canonicalized through the convex hull.
Polygon polygon_from_json(const Json& j);
/// {"matrix": [[a11,a12],[a21,a22]]} (columns generate) or {"delta": d, "n": n}.
Sublattice lattice_from_json(const Json& j);
AffineMap affine_from_json(const Json& j);
/// Validated against the slope conditions.
Slope slope_from_json(const Json& j);

/// Parses `arg` as inline JSON if it starts with '{', else reads it as a file.
Json load_json_argument(const std::string& arg);

/// "a,b,c,..." into exactly `count` integers.
std::vector<Int> parse_int_list(const std::string& s, std::size_t count);

/// Plain outline plus the lattice points of the bounding box.
std::string polygon_svg(const Polygon& p, const std::optional<Sublattice>& l = std::nullopt);

}  // namespace latfree
