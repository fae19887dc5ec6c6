#pragma once

// JSON encoders for the reports and parsers for the family / module syntax used by
// the C API and the command line. Exact scalars are encoded as strings.

#include <json.hpp>
#include <string>
#include <vector>

#include "nichols_dm/iso.hpp"
#include "nichols_dm/rack.hpp"
#include "nichols_dm/rewrite.hpp"

namespace ndm::io {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

/// "(1,6)+(5,6)" (spaces ignored; empty string gives an empty list).
std::vector<PairIK> parse_pairs(const std::string& text);
/// "1+3" or "1,3".
std::vector<int> parse_ells(const std::string& text);
/// "lambda[0,1]"
ParamSlot parse_slot(const std::string& text);
/// "0,1,w^2"
std::vector<CycloNumber> parse_grid(const std::string& text, int m);

struct ParsedModule {
  YDModule module;
  std::string kind;  // "I", "L", "K", "irr"
  int summands = 0;
};
/// I:(i,k)+..., L:l+..., K:(i,k)+...|l+..., irr:CLASS/REP+CLASS/REP
ParsedModule parse_module(int m, const std::string& text);

json pairs_json(const std::vector<PairIK>& pairs);
json datum_json(const LiftingDatum& d);
json nichols_json(int m, const std::string& text, const ParsedModule& M, const NicholsResult& r);
json classification_json(const ClassificationReport& r);
json presentation_json(const Presentation& P, char family);
json verify_json(const Presentation& P, char family, const RewriteSystem& R, const DimensionResult& d,
                 std::size_t expected, const HopfReport& h, const SkewPrimitiveReport& sp);
json iso_json(int m, int r_max, const std::vector<CycloNumber>& grid, bool rescale,
              const std::vector<IsoClass>& classes);
json rack_json(int m, const std::string& class_label, int threads);
json reps_json(int m);

/// Canonical text: sorted keys, compact separators.
std::string dump(const json& j);

}  // namespace ndm::io
