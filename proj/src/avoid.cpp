#include "xorcert/avoid.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "xorcert/errors.hpp"
#include "xorcert/fourier.hpp"
#include "xorcert/reduction.hpp"
#include "xorcert/rounding.hpp"

namespace xorcert {

std::vector<std::optional<std::pair<Character, Sign>>> parity_outputs(const Circuit& c) {
  std::vector<std::optional<std::pair<Character, Sign>>> out(c.m());
  for (std::size_t i = 0; i < c.m(); ++i) {
    FourierExpansion exp;
    if (const auto* g = std::get_if<JuntaGate>(&c.gates[i])) {
      exp = expand_junta(*g, c.n);
    } else {
      const auto& tree = std::get<WordDecisionTree>(c.gates[i]);
      if (tree.w != 1) continue;
      exp = expand_decision_tree(tree, c.n, c.t);
    }
    const auto cls = classify_parity(exp);
    if (cls.kind != ParityKind::kOther)
      out[i] = std::make_pair(cls.character, cls.kind == ParityKind::kXor ? Sign{1} : Sign{-1});
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return b[i / 64] >> (i % 64) & 1u; }
void xor_into(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
std::optional<std::size_t> highest_bit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;)
    if (b[w]) return w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(b[w]));
  return std::nullopt;
}

}  // namespace

std::optional<ParityDependency> find_parity_dependency(const Circuit& c) {
  validate_circuit(c);
  const auto parities = parity_outputs(c);
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < parities.size(); ++i)
    if (parities[i]) index.push_back(i);
  const std::size_t words = (c.n + 63) / 64 + 1, combo_words = (index.size() + 63) / 64 + 1;

  struct Row {
    Bits vec, combo;
  };
  std::vector<std::optional<Row>> basis(c.n);
  for (std::size_t p = 0; p < index.size(); ++p) {
    Row row{Bits(words, 0), Bits(combo_words, 0)};
    for (auto v : parities[index[p]]->first) set_bit(row.vec, v);
    set_bit(row.combo, p);
    while (true) {
      const auto pivot = highest_bit(row.vec);
      if (!pivot) {
        ParityDependency dep;
        for (std::size_t q = 0; q <= p; ++q)
          if (test_bit(row.combo, q)) {
            dep.outputs.push_back(index[q]);
            dep.forced = static_cast<Sign>(dep.forced * parities[index[q]]->second);
          }
        return dep;
      }
      if (!basis[*pivot]) {
        basis[*pivot] = std::move(row);
        break;
      }
      xor_into(row.vec, basis[*pivot]->vec);
      xor_into(row.combo, basis[*pivot]->combo);
    }
  }
  return std::nullopt;
}

namespace {

std::string mask_label(std::uint32_t mask, unsigned t) {
  std::string s = "positions {";
  bool first = true;
  for (unsigned p = 0; p < t; ++p)
    if (mask >> p & 1u) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
  return s + "}";
}

std::string key_label(const EnsembleKey& key) {
  std::string s = "beta (";
  for (std::size_t l = 0; l < key.beta.size(); ++l) s += (l ? "," : "") + std::to_string(key.beta[l]);
  return s + ") slot " + std::to_string(key.slot);
}

bool has_weight(const XorScheme& scheme) {
  return std::any_of(scheme.weights.begin(), scheme.weights.end(), [](const Dyadic& w) { return !w.is_zero(); });
}

}  // namespace

RangeCertificate certify_not_in_range(const Circuit& c, std::span<const Sign> b, const CertifyParams& params) {
  validate_circuit(c);
  if (b.size() != c.m())
    throw ValidationError("target has length " + std::to_string(b.size()) + ", expected m = " + std::to_string(c.m()));
  RangeCertificate out;
  out.certificate.certified = false;
  if (c.m() == 0) {
    out.path = "none";
    return out;
  }
  RefuteParams rp = params.refute;
  rp.clamp_trivial = true;

  bool junta_path = c.all_juntas() && c.w == 1;
  if (junta_path) {
    const auto parities = parity_outputs(c);
    junta_path = std::none_of(parities.begin(), parities.end(), [](const auto& p) { return p.has_value(); });
  }

  Certificate& cert = out.certificate;
  cert.certified = true;
  double total = 0.0;
  if (junta_path) {
    out.path = "junta";
    cert.mode = "junta";
    const auto split = nonadaptive_split(c);
    for (const auto& bucket : split.buckets) {
      if (!has_weight(bucket.scheme)) continue;
      auto child = refute(attach_rhs(bucket.scheme, b), rp);
      child.label = mask_label(bucket.mask, split.t);
      total = rounding::add_up(total, child.bound);
      cert.certified = cert.certified && child.certified;
      cert.breakdown.push_back(std::move(child));
    }
    Certificate top;
    top.mode = "direct";
    top.label = "full support";
    top.bound = rounding::rational_up(split.top_mass());
    total = rounding::add_up(total, top.bound);
    cert.breakdown.push_back(std::move(top));
  } else {
    out.path = "tree";
    cert.mode = "ensemble";
    SchemeEnsemble ens;
    try {
      ens = group_characters(to_layered(c));
    } catch (const CapExceeded& e) {
      out.path = "none";
      cert.certified = false;
      cert.label = e.what();
      cert.bound = 1.0;
      return out;
    }
    for (std::size_t key = 0; key < ens.keys.size(); ++key) {
      if (!has_weight(ens.schemes[key])) continue;
      auto child = refute(attach_rhs(ens.schemes[key], b), rp);
      child.label = key_label(ens.keys[key]);
      total = rounding::add_up(total, child.bound);
      cert.certified = cert.certified && child.certified;
      cert.breakdown.push_back(std::move(child));
    }
  }
  cert.bound = total;
  out.min_distance_lb = total < 1.0 ? std::max(0.0, rounding::down((1.0 - total) / 2.0)) : 0.0;
  out.certified = total < 1.0 && (!params.eps || total <= 2.0 * *params.eps);
  cert.certified = out.certified;
  return out;
}

const char* to_string(AvoidResult::Kind kind) {
  switch (kind) {
    case AvoidResult::Kind::kParity: return "parity_dependency";
    case AvoidResult::Kind::kRefutation: return "refutation";
    case AvoidResult::Kind::kFailed: return "failed";
  }
  return "?";
}

GeneratorSpec avoid_generator(const GeneratorSpec& gen, std::size_t kept, std::uint32_t n, const AvoidParams& params) {
  const auto field_for = [&](unsigned s) {
    unsigned need = 1;
    while ((std::uint64_t{1} << need) < kept) ++need;
    return std::max(s, need);
  };
  if (params.subexp) {
    const unsigned r = params.certify.refute.r.value_or(1);
    return kwise_spec(kept, default_power(r, n), field_for(gen.kind == GeneratorKind::kKwise ? gen.field_degree : 0));
  }
  switch (gen.kind) {
    case GeneratorKind::kUniform: return uniform_spec(kept);
    case GeneratorKind::kEpsBiased: return eps_biased_spec_with_degree(kept, gen.field_degree);
    case GeneratorKind::kKwise: return kwise_spec(kept, gen.k, field_for(gen.field_degree));
    case GeneratorKind::kKwiseEpsBiased: {
      GeneratorSpec spec = gen;
      spec.m = kept;
      spec.field_degree = field_for(gen.field_degree);
      validate_spec(spec);
      return spec;
    }
  }
  return gen;
}

namespace {

SignVector sample_numbered(const GeneratorSpec& spec, std::uint64_t seed) {
  std::vector<std::uint8_t> bits(spec.seed_bits(), 0);
  for (std::size_t j = 0; j < bits.size() && j < 64; ++j) bits[j] = static_cast<std::uint8_t>(seed >> j & 1u);
  return sample(spec, std::span<const std::uint8_t>(bits));
}

}  // namespace

AvoidResult avoid(const Circuit& c, const GeneratorSpec& gen, const AvoidParams& params) {
  validate_circuit(c);
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  AvoidResult result;
  const auto finish = [&](AvoidResult& r) -> AvoidResult& {
    if (params.record_time) r.wall_time = elapsed();
    return r;
  };

  if (auto dep = find_parity_dependency(c)) {
    result.kind = AvoidResult::Kind::kParity;
    result.y.assign(c.m(), 1);
    // Make prod_{i in R} y_i = -forced.
    if (dep->forced > 0) result.y[dep->outputs.back()] = -1;
    result.dependency = std::move(*dep);
    return finish(result);
  }

  const auto parities = parity_outputs(c);
  Circuit pruned{c.n, c.w, c.t, {}};
  for (std::size_t i = 0; i < c.m(); ++i)
    if (!parities[i]) {
      result.kept_outputs.push_back(i);
      pruned.gates.push_back(c.gates[i]);
    }
  if (pruned.m() == 0) {
    result.report = "every output is a parity and no dependency exists";
    return finish(result);
  }

  const auto spec = avoid_generator(gen, pruned.m(), c.n, params);
  result.generator = format_generator_spec(spec);
  const unsigned bits = spec.seed_bits();
  const std::uint64_t space = bits >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << bits;
  const std::uint64_t total = std::min(params.budget, space);
  const unsigned workers = std::max(1u, params.workers);
  const std::uint64_t batch_size = std::uint64_t{workers} * 4;

  std::uint64_t next = 0;
  while (next < total) {
    if (params.max_seconds && elapsed() > *params.max_seconds) {
      result.seeds_tried = next;
      result.report = "wall-clock limit reached after " + std::to_string(next) + " seeds";
      return finish(result);
    }
    const std::uint64_t batch = std::min(total - next, batch_size);
    std::vector<std::optional<RangeCertificate>> found(batch);
    std::atomic<std::uint64_t> cursor{0};
    const auto work = [&] {
      for (std::uint64_t i; (i = cursor.fetch_add(1)) < batch;) {
        const auto b = sample_numbered(spec, next + i);
        auto rc = certify_not_in_range(pruned, b, params.certify);
        if (rc.certified) found[i] = std::move(rc);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (std::uint64_t i = 0; i < batch; ++i) {
      if (!found[i]) continue;
      const std::uint64_t seed = next + i;
      const auto b = sample_numbered(spec, seed);
      result.kind = AvoidResult::Kind::kRefutation;
      result.seed = seed;
      result.seeds_tried = seed + 1;
      result.y.assign(c.m(), 1);
      for (std::size_t j = 0; j < result.kept_outputs.size(); ++j) result.y[result.kept_outputs[j]] = b[j];
      result.certificates.push_back(std::move(found[i]->certificate));
      return finish(result);
    }
    next += batch;
  }
  result.seeds_tried = total;
  result.report = "budget exhausted after " + std::to_string(total) + " seeds";
  return finish(result);
}

}  // namespace xorcert
