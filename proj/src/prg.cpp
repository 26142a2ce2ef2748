#include "xorcert/prg.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "xorcert/errors.hpp"

namespace xorcert {

namespace {

// Low-weight irreducible polynomials over GF(2), one per degree 1..32.
constexpr std::array<std::uint64_t, 33> kIrreducible = {
    0x0,        0x3,        0x7,        0xb,        0x13,       0x25,       0x43,
    0x83,       0x187,      0x203,      0x409,      0x805,      0x1009,     0x2027,
    0x4021,     0x8003,     0x10047,    0x20009,    0x40009,    0x80027,    0x100009,
    0x200005,   0x400003,   0x800021,   0x1000087,  0x2000009,  0x4000047,  0x8000027,
    0x10000003, 0x20000005, 0x40000003, 0x80000009, 0x100400007};

unsigned ceil_log2(std::uint64_t v) {
  unsigned s = 0;
  while ((std::uint64_t{1} << s) < v) ++s;
  return s;
}

// Smallest f with (len - 1) / 2^f <= eps.
unsigned bias_degree_for(std::size_t len, double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw ValidationError("eps must lie in (0, 1]");
  unsigned f = 1;
  while (f < 32 && std::ldexp(static_cast<double>(len > 0 ? len - 1 : 0), -static_cast<int>(f)) > eps) ++f;
  if (std::ldexp(static_cast<double>(len > 0 ? len - 1 : 0), -static_cast<int>(f)) > eps)
    throw ValidationError("eps too small for fields up to GF(2^32)");
  return f;
}

// Powering construction: bit i = <a^i, s>.
void biased_bits(const BinaryField& field, std::uint64_t a, std::uint64_t s, std::size_t len,
                 std::vector<std::uint8_t>& out) {
  out.resize(len);
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint8_t>(inner_product(power, s));
    power = field.mul(power, a);
  }
}

std::uint64_t read_word(std::span<const std::uint8_t> bits, std::size_t offset, unsigned width) {
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) v |= std::uint64_t{bits[offset + b] & 1u} << b;
  return v;
}

SignVector kwise_output(const BinaryField& field, unsigned k, std::size_t m, std::span<const std::uint8_t> seed) {
  std::vector<std::uint64_t> coeffs(k);
  for (unsigned j = 0; j < k; ++j) coeffs[j] = read_word(seed, std::size_t{j} * field.degree(), field.degree());
  SignVector out(m);
  for (std::size_t i = 0; i < m; ++i) {
    unsigned bit = 0;
    std::uint64_t power = 1;
    for (unsigned j = 0; j < k; ++j) {
      bit ^= inner_product(coeffs[j], power);
      power = field.mul(power, i);
    }
    out[i] = sign_of_bit(bit);
  }
  return out;
}

}  // namespace

BinaryField::BinaryField(unsigned degree) : degree_(degree) {
  if (degree < 1 || degree > 32) throw ValidationError("field degree " + std::to_string(degree) + " outside [1, 32]");
  modulus_ = kIrreducible[degree];
}

std::uint64_t BinaryField::irreducible(unsigned degree) {
  if (degree < 1 || degree > 32) throw ValidationError("field degree outside [1, 32]");
  return kIrreducible[degree];
}

std::uint64_t BinaryField::mul(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t acc = 0;
  const std::uint64_t top = std::uint64_t{1} << degree_;
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return acc;
}

std::uint64_t BinaryField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kUniform: return "uniform";
    case GeneratorKind::kEpsBiased: return "biased";
    case GeneratorKind::kKwise: return "kwise";
    case GeneratorKind::kKwiseEpsBiased: return "kwise-biased";
  }
  return "?";
}

unsigned GeneratorSpec::seed_bits() const {
  switch (kind) {
    case GeneratorKind::kUniform: return static_cast<unsigned>(m);
    case GeneratorKind::kEpsBiased: return 2 * field_degree;
    case GeneratorKind::kKwise: return k * field_degree;
    case GeneratorKind::kKwiseEpsBiased: return 2 * bias_degree;
  }
  return 0;
}

Dyadic GeneratorSpec::bias_bound() const {
  switch (kind) {
    case GeneratorKind::kUniform:
    case GeneratorKind::kKwise: return Dyadic{};
    case GeneratorKind::kEpsBiased:
      return Dyadic(static_cast<std::int64_t>(m > 0 ? m - 1 : 0), field_degree);
    case GeneratorKind::kKwiseEpsBiased: {
      const std::size_t len = std::size_t{k} * field_degree;
      return Dyadic(static_cast<std::int64_t>(len > 0 ? len - 1 : 0), bias_degree);
    }
  }
  return Dyadic{};
}

std::size_t GeneratorSpec::bias_order() const {
  return kind == GeneratorKind::kKwise || kind == GeneratorKind::kKwiseEpsBiased ? std::min<std::size_t>(k, m) : m;
}

void validate_spec(const GeneratorSpec& spec) {
  std::vector<std::string> issues;
  switch (spec.kind) {
    case GeneratorKind::kUniform:
      if (spec.m > 64) issues.push_back("uniform generator limited to m <= 64");
      break;
    case GeneratorKind::kEpsBiased:
      if (spec.field_degree < 1 || spec.field_degree > 32) issues.push_back("field degree outside [1, 32]");
      break;
    case GeneratorKind::kKwise:
    case GeneratorKind::kKwiseEpsBiased:
      if (spec.k < 1) issues.push_back("k must be at least 1");
      if (spec.field_degree < 1 || spec.field_degree > 32) issues.push_back("field degree outside [1, 32]");
      else if ((std::uint64_t{1} << spec.field_degree) < spec.m)
        issues.push_back("field GF(2^" + std::to_string(spec.field_degree) + ") has fewer than m = " +
                         std::to_string(spec.m) + " points");
      if (spec.kind == GeneratorKind::kKwiseEpsBiased && (spec.bias_degree < 1 || spec.bias_degree > 32))
        issues.push_back("bias field degree outside [1, 32]");
      break;
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

GeneratorSpec uniform_spec(std::size_t m) {
  GeneratorSpec spec{GeneratorKind::kUniform, m};
  validate_spec(spec);
  return spec;
}

GeneratorSpec eps_biased_spec_with_degree(std::size_t m, unsigned field_degree) {
  GeneratorSpec spec{GeneratorKind::kEpsBiased, m, 0, field_degree};
  validate_spec(spec);
  return spec;
}

GeneratorSpec eps_biased_spec(std::size_t m, double eps) {
  return eps_biased_spec_with_degree(m, bias_degree_for(m, eps));
}

GeneratorSpec kwise_spec(std::size_t m, unsigned k, unsigned field_degree) {
  if (field_degree == 0) field_degree = std::max(1u, ceil_log2(m));
  GeneratorSpec spec{GeneratorKind::kKwise, m, k, field_degree};
  validate_spec(spec);
  return spec;
}

GeneratorSpec kwise_eps_biased_spec(std::size_t m, unsigned k, double eps) {
  const unsigned s = std::max(1u, ceil_log2(m));
  GeneratorSpec spec{GeneratorKind::kKwiseEpsBiased, m, k, s, bias_degree_for(std::size_t{k} * s, eps)};
  validate_spec(spec);
  return spec;
}

namespace {

double parse_eps(const std::string& v) {
  if (v.rfind("2^", 0) == 0) return std::ldexp(1.0, std::stoi(v.substr(2)));
  return std::stod(v);
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ValidationError("generator parameter '" + item + "' is not key=value");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  const auto take = [&](const std::string& key) -> std::string {
    auto it = params.find(key);
    if (it == params.end()) return {};
    std::string v = it->second;
    params.erase(it);
    return v;
  };
  GeneratorSpec spec;
  try {
    const std::string m = take("m"), k = take("k"), s = take("s"), eps = take("eps");
    if (m.empty()) throw ValidationError("generator spec needs m");
    const std::size_t mv = std::stoull(m);
    if (kind == "uniform") {
      spec = uniform_spec(mv);
    } else if (kind == "biased") {
      if (!s.empty()) spec = eps_biased_spec_with_degree(mv, static_cast<unsigned>(std::stoul(s)));
      else if (!eps.empty()) spec = eps_biased_spec(mv, parse_eps(eps));
      else throw ValidationError("biased generator needs eps or s");
    } else if (kind == "kwise") {
      if (k.empty()) throw ValidationError("kwise generator needs k");
      spec = kwise_spec(mv, static_cast<unsigned>(std::stoul(k)), s.empty() ? 0 : static_cast<unsigned>(std::stoul(s)));
    } else if (kind == "kwise-biased") {
      const std::string f = take("f");
      if (k.empty() || (eps.empty() && f.empty())) throw ValidationError("kwise-biased generator needs k and eps or f");
      const auto kv = static_cast<unsigned>(std::stoul(k));
      if (!f.empty()) {
        spec = GeneratorSpec{GeneratorKind::kKwiseEpsBiased, mv, kv,
                             s.empty() ? std::max(1u, ceil_log2(mv)) : static_cast<unsigned>(std::stoul(s)),
                             static_cast<unsigned>(std::stoul(f))};
        validate_spec(spec);
      } else {
        spec = kwise_eps_biased_spec(mv, kv, parse_eps(eps));
      }
    } else {
      throw ValidationError("unknown generator kind '" + kind + "'");
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ValidationError*>(&e)) throw;
    throw ValidationError("malformed generator spec '" + text + "'");
  }
  if (!params.empty()) throw ValidationError("unknown generator parameter '" + params.begin()->first + "'");
  return spec;
}

std::string format_generator_spec(const GeneratorSpec& spec) {
  std::string out = std::string(to_string(spec.kind)) + ":";
  switch (spec.kind) {
    case GeneratorKind::kUniform: out += "m=" + std::to_string(spec.m); break;
    case GeneratorKind::kEpsBiased:
      out += "m=" + std::to_string(spec.m) + ",s=" + std::to_string(spec.field_degree);
      break;
    case GeneratorKind::kKwise:
      out += "k=" + std::to_string(spec.k) + ",m=" + std::to_string(spec.m) + ",s=" + std::to_string(spec.field_degree);
      break;
    case GeneratorKind::kKwiseEpsBiased:
      out += "k=" + std::to_string(spec.k) + ",m=" + std::to_string(spec.m) + ",s=" +
             std::to_string(spec.field_degree) + ",f=" + std::to_string(spec.bias_degree);
      break;
  }
  return out;
}

SignVector sample(const GeneratorSpec& spec, std::span<const std::uint8_t> seed) {
  if (seed.size() != spec.seed_bits())
    throw ValidationError("seed has " + std::to_string(seed.size()) + " bits, expected " +
                          std::to_string(spec.seed_bits()));
  switch (spec.kind) {
    case GeneratorKind::kUniform: {
      SignVector out(spec.m);
      for (std::size_t i = 0; i < spec.m; ++i) out[i] = sign_of_bit(seed[i] & 1u);
      return out;
    }
    case GeneratorKind::kEpsBiased: {
      const BinaryField field(spec.field_degree);
      std::vector<std::uint8_t> bits;
      biased_bits(field, read_word(seed, 0, spec.field_degree), read_word(seed, spec.field_degree, spec.field_degree),
                  spec.m, bits);
      SignVector out(spec.m);
      for (std::size_t i = 0; i < spec.m; ++i) out[i] = sign_of_bit(bits[i]);
      return out;
    }
    case GeneratorKind::kKwise:
      return kwise_output(BinaryField(spec.field_degree), spec.k, spec.m, seed);
    case GeneratorKind::kKwiseEpsBiased: {
      const BinaryField inner(spec.bias_degree);
      std::vector<std::uint8_t> kwise_seed;
      biased_bits(inner, read_word(seed, 0, spec.bias_degree), read_word(seed, spec.bias_degree, spec.bias_degree),
                  std::size_t{spec.k} * spec.field_degree, kwise_seed);
      return kwise_output(BinaryField(spec.field_degree), spec.k, spec.m, kwise_seed);
    }
  }
  return {};
}

SignVector sample(const GeneratorSpec& spec, std::uint64_t seed) {
  const unsigned bits = spec.seed_bits();
  if (bits > 64) throw ValidationError("numeric seeds need seed_bits <= 64");
  std::vector<std::uint8_t> v(bits);
  for (unsigned j = 0; j < bits; ++j) v[j] = static_cast<std::uint8_t>(seed >> j & 1u);
  return sample(spec, std::span<const std::uint8_t>(v));
}

std::uint64_t seed_count(const GeneratorSpec& spec, unsigned cap) {
  const unsigned bits = spec.seed_bits();
  if (bits > cap || bits > 63)
    throw CapExceeded("seed space 2^" + std::to_string(bits) + " above enumeration cap 2^" + std::to_string(cap));
  return std::uint64_t{1} << bits;
}

}  // namespace xorcert
