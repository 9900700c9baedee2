#pragma once

#include "ctw/verify.hpp"

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace ctw::io {

using nlohmann::json;

/// Raised for any malformed external input (bad JSON shape, bad list syntax).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const IdentityInstance& inst);
/// Accepts {"theorem", "a", "Q"?, "sigma"?, "n"?}. COR_* derive Q from sigma.
IdentityInstance instance_from_json(const json& j);
/// A single object, an array of objects, or one object per line.
std::vector<IdentityInstance> instances_from_text(std::string_view text);

json to_json(const QRat& r);
json to_json(const VerificationReport& r);
json to_json(const SweepSummary& s);

json to_json(const ProductSpec& spec);
ProductSpec product_spec_from_json(const json& j);

/// Array of [exponent vector, QPoly text] in lexicographic exponent order.
json to_json(const LaurentPoly& f);

json to_json(const QSet& q);
json to_json(const Tournament& t);
std::vector<Edge> pairs_from_json(const json& j);

/// "1,2,1" -> {1,2,1}.
std::vector<int> parse_int_list(std::string_view text);
/// "2..3" -> {2,3}; "4" -> {4,4}.
std::pair<int, int> parse_range(std::string_view text);
/// Parses JSON text and rethrows parse failures as InputError.
json parse_json(std::string_view text);

std::string tsv_header();
std::string to_tsv(const VerificationReport& r);
std::string to_pretty(const VerificationReport& r);
std::string to_pretty(const SweepSummary& s);

}  // namespace ctw::io
