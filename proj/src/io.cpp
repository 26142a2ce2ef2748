#include "xorcert/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "xorcert/errors.hpp"

namespace xorcert::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json to_json(const Dyadic& d) { return Json{{"num", d.numerator()}, {"log_den", d.log_denominator()}}; }

Dyadic dyadic_from_json(const Json& j) {
  if (j.is_number_integer()) return Dyadic(j.get<std::int64_t>());
  const auto log_den = field(j, "log_den").get<std::int64_t>();
  if (log_den < 0 || log_den > Dyadic::kMaxLogDenominator) throw ValidationError("log_den out of range");
  return Dyadic(field(j, "num").get<std::int64_t>(), static_cast<unsigned>(log_den));
}

namespace {

Json scheme_json(const XorScheme& scheme) {
  Json j;
  j["k"] = scheme.arity;
  j["n"] = scheme.hypergraph.n;
  j["edges"] = scheme.hypergraph.edges;
  Json weights = Json::array();
  for (const auto& w : scheme.weights) weights.push_back(to_json(w));
  j["weights"] = std::move(weights);
  return j;
}

}  // namespace

Json to_json(const XorScheme& scheme) {
  Json j = scheme_json(scheme);
  if (scheme.mixed_arity) j["mixed_arity"] = true;
  return j;
}

Json to_json(const XorInstance& inst) {
  Json j = scheme_json(inst.scheme);
  Json rhs = Json::array();
  for (auto s : inst.rhs) rhs.push_back(static_cast<int>(s));
  j["rhs"] = std::move(rhs);
  if (inst.scheme.mixed_arity) j["mixed_arity"] = true;
  return j;
}

XorInstance instance_from_json(const Json& j) {
  const auto k = field(j, "k").get<std::int64_t>();
  const auto n = field(j, "n").get<std::int64_t>();
  if (k < 0 || n < 0 || n > std::numeric_limits<std::uint32_t>::max())
    throw ValidationError("k and n must be nonnegative");
  XorScheme scheme;
  scheme.arity = static_cast<int>(k);
  scheme.hypergraph.n = static_cast<std::uint32_t>(n);
  for (const auto& e : field(j, "edges")) {
    Edge edge;
    for (const auto& v : e) {
      const auto x = v.get<std::int64_t>();
      if (x < 0 || x > std::numeric_limits<std::uint32_t>::max()) throw ValidationError("vertex out of range");
      edge.push_back(static_cast<std::uint32_t>(x));
    }
    scheme.hypergraph.edges.push_back(std::move(edge));
  }
  const std::size_t m = scheme.hypergraph.edges.size();
  if (j.contains("weights")) {
    for (const auto& w : j.at("weights")) scheme.weights.push_back(dyadic_from_json(w));
  } else {
    scheme.weights.assign(m, Dyadic(1));
  }
  if (j.contains("mixed_arity")) scheme.mixed_arity = j.at("mixed_arity").get<bool>();
  SignVector rhs(m, 1);
  if (j.contains("rhs")) {
    rhs.clear();
    for (const auto& s : j.at("rhs")) {
      const auto v = s.get<std::int64_t>();
      if (v != 1 && v != -1) throw ValidationError("rhs entries must be +1 or -1");
      rhs.push_back(static_cast<Sign>(v));
    }
  }
  XorInstance inst{std::move(scheme), std::move(rhs)};
  validate_instance(inst);
  return inst;
}

namespace {

Json tree_node_json(const WordDecisionTree& tree, std::uint32_t id) {
  const auto& node = tree.nodes.at(id);
  if (node.is_leaf()) return Json{{"leaf", node.leaf}};
  Json children = Json::array();
  for (auto c : node.children) children.push_back(tree_node_json(tree, c));
  return Json{{"query", node.query}, {"children", std::move(children)}};
}

std::uint32_t tree_node_from_json(const Json& j, WordDecisionTree& tree, unsigned depth) {
  if (depth > 64) throw ValidationError("decision tree too deep");
  const auto id = static_cast<std::uint32_t>(tree.nodes.size());
  tree.nodes.emplace_back();
  if (j.contains("leaf")) {
    const auto bit = j.at("leaf").get<std::int64_t>();
    if (bit != 0 && bit != 1) throw ValidationError("leaf must be 0 or 1");
    tree.nodes[id].leaf = static_cast<std::uint8_t>(bit);
    return id;
  }
  const auto query = field(j, "query").get<std::int64_t>();
  if (query < 0) throw ValidationError("query must be nonnegative");
  tree.nodes[id].query = query;
  std::vector<std::uint32_t> children;
  for (const auto& c : field(j, "children")) children.push_back(tree_node_from_json(c, tree, depth + 1));
  tree.nodes[id].children = std::move(children);
  return id;
}

}  // namespace

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    if (const auto* junta = std::get_if<JuntaGate>(&g)) {
      std::string table;
      for (auto bit : junta->table) table.push_back(bit ? '1' : '0');
      gates.push_back(Json{{"kind", "junta"}, {"inputs", junta->inputs}, {"table", table}});
    } else {
      gates.push_back(Json{{"kind", "tree"}, {"root", tree_node_json(std::get<WordDecisionTree>(g), 0)}});
    }
  }
  return Json{{"n", c.n}, {"w", c.w}, {"t", c.t}, {"m", c.m()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c;
  const auto n = field(j, "n").get<std::int64_t>();
  const auto w = j.contains("w") ? j.at("w").get<std::int64_t>() : 1;
  const auto t = field(j, "t").get<std::int64_t>();
  if (n < 0 || w < 1 || w > 16 || t < 0 || t > 64 || n > std::numeric_limits<std::uint32_t>::max())
    throw ValidationError("n, w or t out of range");
  c.n = static_cast<std::uint32_t>(n);
  c.w = static_cast<unsigned>(w);
  c.t = static_cast<unsigned>(t);
  for (const auto& g : field(j, "gates")) {
    const auto kind = field(g, "kind").get<std::string>();
    if (kind == "junta") {
      JuntaGate gate;
      for (const auto& v : field(g, "inputs")) {
        const auto x = v.get<std::int64_t>();
        if (x < 0 || x > std::numeric_limits<std::uint32_t>::max()) throw ValidationError("input index out of range");
        gate.inputs.push_back(static_cast<std::uint32_t>(x));
      }
      for (char ch : field(g, "table").get<std::string>()) {
        if (ch != '0' && ch != '1') throw ValidationError("truth table must be a 0/1 string");
        gate.table.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      c.gates.emplace_back(std::move(gate));
    } else if (kind == "tree") {
      WordDecisionTree tree;
      tree.w = c.w;
      tree_node_from_json(field(g, "root"), tree, 0);
      c.gates.emplace_back(std::move(tree));
    } else {
      throw ValidationError("unknown gate kind \"" + kind + "\"");
    }
  }
  if (j.contains("m") && j.at("m").get<std::int64_t>() != static_cast<std::int64_t>(c.m()))
    throw ValidationError("m does not match the number of gates");
  validate_circuit(c);
  return c;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["mode"] = cert.mode;
  j["r"] = cert.r;
  j["ell"] = cert.ell;
  j["bound"] = cert.bound;
  j["status"] = cert.certified ? "certified" : "uncertain";
  Json parts = Json::array();
  for (const auto& part : cert.breakdown) parts.push_back(to_json(part));
  j["breakdown"] = std::move(parts);
  if (!cert.label.empty()) j["label"] = cert.label;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.mode = field(j, "mode").get<std::string>();
  cert.r = field(j, "r").get<unsigned>();
  cert.ell = field(j, "ell").get<unsigned>();
  cert.bound = field(j, "bound").get<double>();
  const auto status = field(j, "status").get<std::string>();
  if (status != "certified" && status != "uncertain") throw ValidationError("unknown status \"" + status + "\"");
  cert.certified = status == "certified";
  for (const auto& part : field(j, "breakdown")) cert.breakdown.push_back(certificate_from_json(part));
  if (j.contains("label")) cert.label = j.at("label").get<std::string>();
  return cert;
}

Json to_json(const FourierExpansion& exp) {
  Json out = Json::array();
  for (const auto& [alpha, coeff] : exp.coefficients)
    out.push_back(Json{{"alpha", alpha}, {"num", coeff.numerator()}, {"log_den", coeff.log_denominator()}});
  return out;
}

FourierExpansion expansion_from_json(const Json& j, std::uint32_t n_vars) {
  FourierExpansion exp;
  exp.n_vars = n_vars;
  for (const auto& entry : j) exp.add(field(entry, "alpha").get<Character>(), dyadic_from_json(entry));
  return exp;
}

Json to_json(const AvoidResult& result) {
  Json j;
  j["y"] = format_signs(result.y);
  Json why;
  why["kind"] = to_string(result.kind);
  switch (result.kind) {
    case AvoidResult::Kind::kParity:
      why["outputs"] = result.dependency.outputs;
      why["forced_sign"] = static_cast<int>(result.dependency.forced);
      break;
    case AvoidResult::Kind::kRefutation:
      why["seed"] = *result.seed;
      why["generator"] = result.generator;
      why["kept_outputs"] = result.kept_outputs.size();
      break;
    case AvoidResult::Kind::kFailed:
      why["report"] = result.report;
      if (!result.generator.empty()) why["generator"] = result.generator;
      break;
  }
  j["justification"] = std::move(why);
  Json certs = Json::array();
  for (const auto& c : result.certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  j["seeds_tried"] = result.seeds_tried;
  j["wall_time"] = result.wall_time ? Json(*result.wall_time) : Json(nullptr);
  return j;
}

std::string ensemble_file_name(const EnsembleKey& key) {
  std::string name = "beta_";
  for (std::size_t l = 0; l < key.beta.size(); ++l) name += (l ? "-" : "") + std::to_string(key.beta[l]);
  return name + "_slot_" + std::to_string(key.slot) + ".json";
}

std::string format_signs(const SignVector& s) {
  std::string out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(v < 0 ? '1' : '0');
  return out;
}

SignVector parse_signs(const std::string& text) {
  SignVector out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ValidationError("expected a 0/1 string, got \"" + text + "\"");
    out.push_back(sign_of_bit(static_cast<unsigned>(ch - '0')));
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace xorcert::io
