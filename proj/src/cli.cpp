#include "xorcert/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <iostream>
#include <random>
#include <thread>

#include "xorcert/avoid.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/io.hpp"
#include "xorcert/oracle.hpp"
#include "xorcert/prg.hpp"
#include "xorcert/reduction.hpp"
#include "xorcert/refuter.hpp"

namespace xorcert::cli {

namespace {

void log(const std::string& line) { std::cerr << "xorcert: " << line << "\n"; }

struct RefuteOptions {
  std::optional<unsigned> r, ell;
  std::string mode = "auto";

  void add_to(CLI::App* app) {
    app->add_option("--r", r, "Kikuchi level (default k/2)");
    app->add_option("--ell", ell, "trace power, even (default 2 ceil(r ln n))");
    app->add_option("--mode", mode, "trace | spectral | auto")->capture_default_str();
  }
  RefuteParams params() const {
    RefuteParams p;
    p.r = r;
    p.ell = ell;
    p.mode = parse_refute_mode(mode);
    return p;
  }
};

Dyadic random_weight(std::mt19937_64& rng) {
  // Nonzero multiples of 1/8 in [-1, 1].
  std::uniform_int_distribution<int> num(1, 8), sign(0, 1);
  return Dyadic(sign(rng) ? -num(rng) : num(rng), 3);
}

XorInstance random_instance(unsigned k, std::uint32_t n, std::size_t m, bool weighted, std::mt19937_64& rng) {
  if (k > n) throw ValidationError("k must not exceed n");
  XorScheme scheme;
  scheme.arity = static_cast<int>(k);
  scheme.hypergraph.n = n;
  std::vector<std::uint32_t> universe(n);
  std::iota(universe.begin(), universe.end(), 0u);
  for (std::size_t i = 0; i < m; ++i) {
    Edge edge;
    std::sample(universe.begin(), universe.end(), std::back_inserter(edge), k, rng);
    scheme.hypergraph.edges.push_back(std::move(edge));
    scheme.weights.push_back(weighted ? random_weight(rng) : Dyadic(1));
  }
  return make_instance(std::move(scheme), SignVector(m, 1));
}

SignVector draw_rhs(const std::string& source, std::size_t m, std::mt19937_64& rng) {
  if (source == "uniform") {
    SignVector b(m);
    for (auto& s : b) s = sign_of_bit(static_cast<unsigned>(rng() & 1u));
    return b;
  }
  auto spec = parse_generator_spec(source);
  if (spec.m != m) throw ValidationError("generator length must equal the edge count");
  const unsigned bits = spec.seed_bits();
  std::vector<std::uint8_t> seed(bits);
  for (auto& bit : seed) bit = static_cast<std::uint8_t>(rng() & 1u);
  return sample(spec, std::span<const std::uint8_t>(seed));
}

int cmd_gen_circuit(std::uint32_t n, unsigned w, unsigned t, std::size_t m, const std::string& kind, std::uint64_t seed,
                    const std::string& out) {
  std::mt19937_64 rng(seed);
  Circuit c;
  if (kind == "junta") {
    if (w != 1) throw ValidationError("junta circuits need w = 1");
    c = random_junta_circuit(n, t, m, rng);
  } else if (kind == "tree") {
    c = random_tree_circuit(n, w, t, m, rng);
  } else {
    throw ValidationError("--kind must be junta or tree");
  }
  io::write_json(out, io::to_json(c));
  return kExitOk;
}

int cmd_refute(const std::string& path, const RefuteOptions& opts, const std::string& out) {
  const auto inst = io::instance_from_json(io::read_json(path));
  const auto cert = refute(inst, opts.params());
  log("bound " + std::to_string(cert.bound) + (cert.certified ? " certified" : " uncertain"));
  io::write_json(out, io::to_json(cert));
  return cert.certified ? kExitOk : kExitNegative;
}

int cmd_reduce(const std::string& path, const std::string& dir, const std::string& target, bool junta) {
  const auto c = io::circuit_from_json(io::read_json(path));
  std::optional<SignVector> b;
  if (!target.empty()) b = io::parse_signs(target);
  std::filesystem::create_directories(dir);
  const auto emit = [&](const std::string& name, const XorScheme& scheme) {
    const auto file = (std::filesystem::path(dir) / name).string();
    io::write_json(file, b ? io::to_json(attach_rhs(scheme, *b)) : io::to_json(scheme));
  };
  if (junta) {
    const auto split = nonadaptive_split(c);
    for (const auto& bucket : split.buckets) emit("mask_" + std::to_string(bucket.mask) + ".json", bucket.scheme);
    log("wrote " + std::to_string(split.buckets.size()) + " bucket files");
    return kExitOk;
  }
  const auto ens = group_characters(to_layered(c));
  for (std::size_t key = 0; key < ens.keys.size(); ++key) emit(io::ensemble_file_name(ens.keys[key]), ens.schemes[key]);
  log("wrote " + std::to_string(ens.keys.size()) + " key files over " + std::to_string(ens.num_variables()) +
      " variables");
  return kExitOk;
}

int cmd_fourier(const std::string& path, const std::string& out) {
  const auto c = io::circuit_from_json(io::read_json(path));
  io::Json all = io::Json::array();
  for (const auto& g : c.gates) {
    if (const auto* junta = std::get_if<JuntaGate>(&g)) {
      all.push_back(io::to_json(expand_junta(*junta, c.n)));
    } else {
      const auto& tree = std::get<WordDecisionTree>(g);
      if (tree.w != 1) throw ValidationError("expansion of word trees needs w = 1; use reduce");
      all.push_back(io::to_json(expand_decision_tree(tree, c.n, c.t)));
    }
  }
  io::write_json(out, all);
  return kExitOk;
}

int cmd_certify(const std::string& path, const std::string& target, std::optional<double> eps,
                const RefuteOptions& opts, const std::string& out) {
  const auto c = io::circuit_from_json(io::read_json(path));
  CertifyParams params{opts.params(), eps};
  const auto rc = certify_not_in_range(c, io::parse_signs(target), params);
  auto j = io::to_json(rc.certificate);
  j["path"] = rc.path;
  j["min_distance_lb"] = rc.min_distance_lb;
  io::write_json(out, j);
  log(std::string(rc.certified ? "certified" : "uncertain") + " on the " + rc.path + " path");
  return rc.certified ? kExitOk : kExitNegative;
}

int cmd_avoid(const std::string& path, const std::string& gen, const RefuteOptions& opts, std::uint64_t budget,
              bool subexp, unsigned workers, bool timing, std::optional<double> max_seconds, const std::string& out) {
  const auto c = io::circuit_from_json(io::read_json(path));
  AvoidParams params;
  params.certify.refute = opts.params();
  params.budget = budget;
  params.subexp = subexp;
  params.workers = workers;
  params.record_time = timing;
  params.max_seconds = max_seconds;
  const auto spec = parse_generator_spec(gen);
  const auto result = avoid(c, spec, params);
  log(std::string(to_string(result.kind)) + " after " + std::to_string(result.seeds_tried) + " seeds");
  io::write_json(out, io::to_json(result));
  return result.kind == AvoidResult::Kind::kFailed ? kExitNegative : kExitOk;
}

int cmd_gen_prg(const std::string& gen, std::optional<std::uint64_t> count, std::uint64_t first, const std::string& out) {
  const auto spec = parse_generator_spec(gen);
  const std::uint64_t seeds = count ? *count : seed_count(spec);
  std::string text;
  for (std::uint64_t s = first; s < first + seeds; ++s) text += io::format_signs(sample(spec, s)) + "\n";
  io::write_text(out, text);
  return kExitOk;
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
}

void print_line(const std::string& out, const io::Json& j) { io::write_text(out, j.dump() + "\n"); }

int cmd_oracle_decomp(const std::string& path, const std::string& target, const std::string& out) {
  const auto c = io::circuit_from_json(io::read_json(path));
  const auto ens = group_characters(to_layered(c));
  std::vector<SignVector> targets;
  if (!target.empty()) {
    targets.push_back(io::parse_signs(target));
  } else {
    if (c.m() > 12) throw CapExceeded("decomp over all targets needs m <= 12; pass --b");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.m()); ++mask) {
      SignVector b(c.m());
      for (std::size_t i = 0; i < c.m(); ++i) b[i] = sign_of_bit(static_cast<unsigned>(mask >> i & 1u));
      targets.push_back(std::move(b));
    }
  }
  std::uint64_t checked = 0, nonzero = 0;
  for_each_input(c, oracle::kMaxInputBits, [&](const Symbols& x) {
    for (const auto& b : targets) {
      ++checked;
      if (!oracle::check_decomposition(c, ens, x, b).is_zero()) ++nonzero;
    }
  });
  print_line(out, io::Json{{"checked", checked}, {"nonzero", nonzero}});
  return nonzero == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Fourier, XOR-refutation and range-avoidance toolkit for low-depth circuits", "xorcert"};
  app.require_subcommand(1);
  std::function<int()> action;
  std::string out = "-";

  // gen circuit | gen instance
  auto* gen = app.add_subcommand("gen", "generate random circuits or instances");
  gen->require_subcommand(1);
  std::uint32_t n = 8;
  unsigned w = 1, t = 3, k = 2;
  std::size_t m = 16;
  std::uint64_t seed = 1;
  std::string kind = "junta";
  auto* gen_circuit = gen->add_subcommand("circuit", "random junta or decision-tree circuit");
  gen_circuit->add_option("--n", n, "input symbols")->capture_default_str();
  gen_circuit->add_option("--w", w, "bits per symbol")->capture_default_str();
  gen_circuit->add_option("--t", t, "arity / query bound")->capture_default_str();
  gen_circuit->add_option("--m", m, "outputs")->capture_default_str();
  gen_circuit->add_option("--kind", kind, "junta | tree")->capture_default_str();
  gen_circuit->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen_circuit->add_option("--out", out, "output file, - for stdout")->capture_default_str();
  gen_circuit->callback([&] { action = [&] { return cmd_gen_circuit(n, w, t, m, kind, seed, out); }; });

  bool weighted = false;
  std::string rhs = "uniform";
  auto* gen_instance = gen->add_subcommand("instance", "random k-XOR instance");
  gen_instance->add_option("--k", k, "arity")->capture_default_str();
  gen_instance->add_option("--n", n, "variables")->capture_default_str();
  gen_instance->add_option("--m", m, "constraints")->capture_default_str();
  gen_instance->add_flag("--weighted", weighted, "random weights in multiples of 1/8");
  gen_instance->add_option("--rhs", rhs, "uniform, or a generator spec with m outputs")->capture_default_str();
  gen_instance->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen_instance->add_option("--out", out, "output file, - for stdout")->capture_default_str();
  gen_instance->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      auto inst = random_instance(k, n, m, weighted, rng);
      inst.rhs = draw_rhs(rhs, m, rng);
      io::write_json(out, io::to_json(inst));
      return kExitOk;
    };
  });

  std::string circuit_path, instance_path, target, dir;
  bool junta = false;
  auto* reduce = app.add_subcommand("reduce", "write the XOR scheme ensemble of a circuit, one file per key");
  reduce->add_option("--circuit", circuit_path, "circuit JSON")->required();
  reduce->add_option("--out-dir", dir, "directory for the key files")->required();
  reduce->add_option("--b", target, "attach this 0/1 target as right-hand side");
  reduce->add_flag("--junta", junta, "per-position split of a junta circuit instead of the layered ensemble");
  reduce->callback([&] { action = [&] { return cmd_reduce(circuit_path, dir, target, junta); }; });

  auto* fourier = app.add_subcommand("fourier", "exact Fourier expansion of every output");
  fourier->add_option("--circuit", circuit_path, "circuit JSON")->required();
  fourier->add_option("--out", out, "output file, - for stdout")->capture_default_str();
  fourier->callback([&] { action = [&] { return cmd_fourier(circuit_path, out); }; });

  RefuteOptions ref;
  auto* refute_cmd = app.add_subcommand("refute", "certify an upper bound on the value of an XOR instance");
  refute_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  ref.add_to(refute_cmd);
  refute_cmd->add_option("--out", out, "certificate file, - for stdout")->capture_default_str();
  refute_cmd->callback([&] { action = [&] { return cmd_refute(instance_path, ref, out); }; });

  std::optional<double> eps;
  auto* certify = app.add_subcommand("certify", "certify that a target is outside the range of a circuit");
  certify->add_option("--circuit", circuit_path, "circuit JSON")->required();
  certify->add_option("--b", target, "0/1 target string")->required();
  certify->add_option("--eps", eps, "require correlation bound <= 2 eps");
  ref.add_to(certify);
  certify->add_option("--out", out, "certificate file, - for stdout")->capture_default_str();
  certify->callback([&] { action = [&] { return cmd_certify(circuit_path, target, eps, ref, out); }; });

  std::string spec;
  std::uint64_t budget = 1024;
  bool subexp = false, timing = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::optional<double> max_seconds;
  auto* avoid_cmd = app.add_subcommand("avoid", "find a string outside the range of a circuit");
  avoid_cmd->add_option("--circuit", circuit_path, "circuit JSON")->required();
  avoid_cmd->add_option("--gen", spec, "generator spec, e.g. biased:m=300,s=12")->required();
  ref.add_to(avoid_cmd);
  avoid_cmd->add_option("--budget", budget, "seeds tried at most")->capture_default_str();
  avoid_cmd->add_flag("--subexp", subexp, "kwise generator with k = 2 ceil(r ln n)");
  avoid_cmd->add_option("--workers", workers, "parallel seed trials")->capture_default_str();
  avoid_cmd->add_flag("--timing", timing, "record wall_time (makes output nondeterministic)");
  avoid_cmd->add_option("--max-seconds", max_seconds, "wall-clock limit");
  avoid_cmd->add_option("--out", out, "result file, - for stdout")->capture_default_str();
  avoid_cmd->callback([&] {
    action = [&] { return cmd_avoid(circuit_path, spec, ref, budget, subexp, workers, timing, max_seconds, out); };
  });

  std::optional<std::uint64_t> count;
  std::uint64_t first = 0;
  auto* gen_prg = app.add_subcommand("gen-prg", "print generator outputs as 0/1 lines, one per seed");
  gen_prg->add_option("--gen", spec, "generator spec")->required();
  gen_prg->add_option("--count", count, "number of seeds (default all)");
  gen_prg->add_option("--first", first, "first seed")->capture_default_str();
  gen_prg->add_option("--out", out, "output file, - for stdout")->capture_default_str();
  gen_prg->callback([&] { action = [&] { return cmd_gen_prg(spec, count, first, out); }; });

  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  orc->require_subcommand(1);
  auto* val = orc->add_subcommand("val", "exact max |psi(x)|");
  val->add_option("--instance", instance_path, "instance JSON")->required();
  val->add_option("--out", out)->capture_default_str();
  val->callback([&] {
    action = [&] {
      const auto v = oracle::brute_val(io::instance_from_json(io::read_json(instance_path)));
      print_line(out, io::Json{{"val", rational_text(v)}});
      return kExitOk;
    };
  });
  auto* member = orc->add_subcommand("member", "is y in the range");
  member->add_option("--circuit", circuit_path, "circuit JSON")->required();
  member->add_option("--y", target, "0/1 string")->required();
  member->add_option("--out", out)->capture_default_str();
  member->callback([&] {
    action = [&] {
      const bool in = oracle::brute_range_member(io::circuit_from_json(io::read_json(circuit_path)),
                                                 io::parse_signs(target));
      print_line(out, io::Json{{"member", in}});
      return kExitOk;
    };
  });
  auto* distance = orc->add_subcommand("distance", "min fractional Hamming distance to the range");
  distance->add_option("--circuit", circuit_path, "circuit JSON")->required();
  distance->add_option("--b", target, "0/1 string")->required();
  distance->add_option("--out", out)->capture_default_str();
  distance->callback([&] {
    action = [&] {
      const auto d = oracle::brute_min_distance(io::circuit_from_json(io::read_json(circuit_path)),
                                                io::parse_signs(target));
      print_line(out, io::Json{{"distance", rational_text(d)}});
      return kExitOk;
    };
  });
  std::optional<std::size_t> order;
  auto* bias = orc->add_subcommand("bias", "largest parity bias over all seeds");
  bias->add_option("--gen", spec, "generator spec")->required();
  bias->add_option("--order", order, "largest parity size (default m)");
  bias->add_option("--out", out)->capture_default_str();
  bias->callback([&] {
    action = [&] {
      const auto g = parse_generator_spec(spec);
      const auto b = oracle::brute_bias(g, order.value_or(g.m));
      print_line(out, io::Json{{"bias", b.to_string()}, {"claimed", g.bias_bound().to_string()}});
      return b <= g.bias_bound() ? kExitOk : kExitNegative;
    };
  });
  unsigned indep_k = 2;
  auto* indep = orc->add_subcommand("independence", "largest k-marginal deviation from uniform");
  indep->add_option("--gen", spec, "generator spec")->required();
  indep->add_option("--k", indep_k, "marginal size")->capture_default_str();
  indep->add_option("--out", out)->capture_default_str();
  indep->callback([&] {
    action = [&] {
      const auto d = oracle::brute_independence(parse_generator_spec(spec), indep_k);
      print_line(out, io::Json{{"deviation", d.to_string()}});
      return kExitOk;
    };
  });
  auto* decomp = orc->add_subcommand("decomp", "check the ensemble identity on every input");
  decomp->add_option("--circuit", circuit_path, "circuit JSON")->required();
  decomp->add_option("--b", target, "single target (default all targets, m <= 12)");
  decomp->add_option("--out", out)->capture_default_str();
  decomp->callback([&] { action = [&] { return cmd_oracle_decomp(circuit_path, target, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return action ? action() : kExitError;
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues()) log("invalid input: " + issue);
    return kExitError;
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return kExitError;
  }
}

}  // namespace xorcert::cli
