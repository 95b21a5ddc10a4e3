#pragma once

// JSON interchange for every object kind, a label registry for spaces, and
// content hashing for reports.
//
// File kinds are sniffed by their distinguishing key:
//   "backend" -> space, "table" -> map, "degree" -> chain,
//   "entries" -> operator, "pairs" -> entourage.
// Parse failures map to the malformed-file error; references to labels or
// point ids that are not registered map to the unresolved-label error.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/entourage.hpp"
#include "coarsekit/homology.hpp"
#include "coarsekit/operators.hpp"
#include "coarsekit/space.hpp"

namespace coarsekit {

using json = nlohmann::json;

enum class FileKind { space, map, chain, entourage, band };

// Registry of spaces by label; later files resolve their references here.
struct Workspace {
    std::map<std::string, SpacePtr> spaces;

    void put(SpacePtr X);
    SpacePtr resolve(const std::string& label) const; // throws unresolved_label
};

json parse_json(const std::string& text);    // malformed_file on bad syntax
json load_json_file(const std::string& path); // also malformed_file when unreadable

FileKind sniff_kind(const json& j);

SpacePtr space_from_json(const json& j);
CoarseMap map_from_json(const json& j, const Workspace& ws);
UFChain chain_from_json(const json& j, const Workspace& ws);
Entourage entourage_from_json(const json& j, const Workspace& ws);
BandOperator operator_from_json(const json& j, const Workspace& ws);

// Degree-0 chain with every coefficient >= 1 and full support, read as a
// height function.
HeightFunction height_from_chain(const UFChain& c);

json space_to_json(const MetricSpace& X); // matrix backend dump
json map_to_json(const CoarseMap& f);
json chain_to_json(const UFChain& c);
json entourage_to_json(const Entourage& E);
json operator_to_json(const BandOperator& A);
json translation_to_json(const PartialTranslation& t);

// Coefficients round-trip as JSON integers when they fit in 64 bits and as
// decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// FNV-1a 64-bit content hash, reported as fixed-width hex.
std::uint64_t fnv1a(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

} // namespace coarsekit
