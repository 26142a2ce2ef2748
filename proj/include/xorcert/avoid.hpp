#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xorcert/circuit.hpp"
#include "xorcert/prg.hpp"
#include "xorcert/refuter.hpp"

namespace xorcert {

/// Outputs whose product is the same sign on every input.
struct ParityDependency {
  std::vector<std::size_t> outputs;  // increasing
  Sign forced = 1;
};

/// Per-output parity classification: the output's character when it is
/// XOR/NXOR (constants are parities of the empty set). Word trees with
/// w > 1 are never classified as parities.
std::vector<std::optional<std::pair<Character, Sign>>> parity_outputs(const Circuit& c);

/// GF(2) elimination over the parity outputs in index order; the first output
/// that reduces to zero closes the dependency.
std::optional<ParityDependency> find_parity_dependency(const Circuit& c);

struct CertifyParams {
  RefuteParams refute;
  /// Remote-point target: certify only when the correlation bound is at
  /// most 2 eps. Without it the gate is bound < 1 (non-membership).
  std::optional<double> eps;
};

struct RangeCertificate {
  Certificate certificate;  // bound = upper bound on max_x <C(x), b>/m
  std::string path;         // junta | tree | none
  bool certified = false;
  double min_distance_lb = 0.0;  // (1 - bound)/2 rounded down
};

/// Junta circuits without parity gates take the per-position split; all
/// other circuits go through the layered ensemble. Never certifies a b in
/// the range.
RangeCertificate certify_not_in_range(const Circuit& c, std::span<const Sign> b, const CertifyParams& params = {});

struct AvoidParams {
  CertifyParams certify;
  std::uint64_t budget = 1024;  // seeds tried at most
  unsigned workers = 1;
  /// Replace the generator by a kwise one with k = 2 ceil(r ln n).
  bool subexp = false;
  std::optional<double> max_seconds;
  bool record_time = false;
};

struct AvoidResult {
  enum class Kind { kParity, kRefutation, kFailed };
  Kind kind = Kind::kFailed;
  SignVector y;
  ParityDependency dependency;          // kParity
  std::optional<std::uint64_t> seed;    // kRefutation
  std::vector<Certificate> certificates;
  std::vector<std::size_t> kept_outputs;
  std::string generator;
  std::uint64_t seeds_tried = 0;
  std::string report;                   // kFailed
  std::optional<double> wall_time;
};

const char* to_string(AvoidResult::Kind kind);

/// The generator actually enumerated for m' kept outputs.
GeneratorSpec avoid_generator(const GeneratorSpec& gen, std::size_t kept, std::uint32_t n, const AvoidParams& params);

AvoidResult avoid(const Circuit& c, const GeneratorSpec& gen, const AvoidParams& params = {});

}  // namespace xorcert
