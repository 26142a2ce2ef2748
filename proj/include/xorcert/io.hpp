#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "xorcert/avoid.hpp"
#include "xorcert/circuit.hpp"
#include "xorcert/fourier.hpp"
#include "xorcert/reduction.hpp"
#include "xorcert/refuter.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert::io {

using Json = nlohmann::ordered_json;

Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

/// {"k","n","edges","weights","rhs"}; rhs is omitted for a bare scheme.
Json to_json(const XorInstance& inst);
Json to_json(const XorScheme& scheme);
/// Missing weights default to 1 and a missing rhs to all +1. Validates.
XorInstance instance_from_json(const Json& j);

/// {"n","w","t","m","gates"}; trees are nested {"query","children"} / {"leaf"}.
Json to_json(const Circuit& c);
/// Tree nodes come back in preorder. Validates.
Circuit circuit_from_json(const Json& j);

/// {"mode","r","ell","bound","status","breakdown"}, plus "label" on parts.
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// [{"alpha","num","log_den"}] sorted by (|alpha|, colex).
Json to_json(const FourierExpansion& exp);
FourierExpansion expansion_from_json(const Json& j, std::uint32_t n_vars);

Json to_json(const AvoidResult& result);

/// "beta_1-0_slot_3.json" for beta = (1, 0), slot 3.
std::string ensemble_file_name(const EnsembleKey& key);

/// "0110" with 0 for +1; inverse of parse_signs.
std::string format_signs(const SignVector& s);
SignVector parse_signs(const std::string& text);

Json read_json(const std::string& path);
/// Pretty-printed with a trailing newline; "-" is standard output.
void write_json(const std::string& path, const Json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace xorcert::io
