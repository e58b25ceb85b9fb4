#include <stdexcept>

#include "grm/json_io.hpp"

namespace grm {

using nlohmann::json;

json field_to_json(const FieldTable& f) {
  json j;
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

namespace {

std::shared_ptr<const FieldTable> field_from_json(const json& j) {
  int p = j.at("p").get<int>();
  std::vector<int> modulus = j.at("modulus").get<std::vector<int>>();
  return FieldTable::make_with_modulus(p, modulus);
}

}  // namespace

json code_to_json(const CyclicCode& c) {
  json j;
  j["family"] = c.family;
  if (!c.parent_family.empty()) j["parent_family"] = c.parent_family;
  if (c.flagged_trivial) j["flagged_trivial"] = true;
  j["q"] = c.q;
  j["m"] = c.m;
  j["n"] = c.n;
  j["k"] = c.dimension();
  j["params"] = json::object();
  for (const auto& [key, val] : c.params) j["params"][key] = val;
  j["defining_set"] = c.defining_set.members();
  j["generator"] = c.generator.serialize();
  j["base_field"] = field_to_json(*c.base);
  j["extension_field"] = field_to_json(*c.ext);
  return j;
}

json code_to_json(const ExtendedCode& ec) {
  json j;
  j["extended"] = true;
  j["length"] = ec.length();
  j["k"] = ec.dimension();
  j["defining_set"] = ec.defining_set.members();
  j["parent"] = code_to_json(ec.parent);
  return j;
}

CyclicCode code_from_json(const json& j) {
  if (j.value("extended", false))
    throw std::invalid_argument("descriptor is for an extended code; use the extended loader");
  int q = j.at("q").get<int>();
  int m = j.at("m").get<int>();
  long n = j.at("n").get<long>();

  std::shared_ptr<const FieldTable> base, ext;
  if (j.contains("base_field") && j.contains("extension_field")) {
    base = field_from_json(j.at("base_field"));
    ext = field_from_json(j.at("extension_field"));
  } else {
    auto pair = make_field_pair(q, m);
    base = pair.first;
    ext = pair.second;
  }

  std::vector<long> members = j.at("defining_set").get<std::vector<long>>();
  std::map<std::string, long> params;
  if (j.contains("params"))
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
      params[it.key()] = it.value().get<long>();

  CyclicCode c = cyclic_code_from_defining_set(
      base, ext, n, IndexSet(n, q, m, std::move(members)),
      j.value("family", std::string("custom")), params);
  c.parent_family = j.value("parent_family", std::string());
  c.flagged_trivial = j.value("flagged_trivial", false);

  if (j.contains("generator")) {
    std::vector<int> want = j.at("generator").get<std::vector<int>>();
    if (want != c.generator.serialize())
      throw std::invalid_argument("descriptor generator disagrees with the defining set");
  }
  if (j.contains("k") && j.at("k").get<long>() != c.dimension())
    throw std::invalid_argument("descriptor dimension disagrees with the defining set");
  return c;
}

ExtendedCode extended_code_from_json(const json& j) {
  if (!j.value("extended", false))
    throw std::invalid_argument("descriptor is not for an extended code");
  CyclicCode parent = code_from_json(j.at("parent"));
  ExtendedCode ec = extend_code(parent);
  if (j.contains("defining_set")) {
    std::vector<long> want = j.at("defining_set").get<std::vector<long>>();
    if (want != ec.defining_set.members())
      throw std::invalid_argument("descriptor extended defining set disagrees with the parent");
  }
  return ec;
}

namespace {

const char* status_name(DistanceStatus s) {
  return s == DistanceStatus::exact ? "exact" : "lower_bound_only";
}

const char* method_name(DistanceMethod m) {
  return m == DistanceMethod::exhaustive ? "exhaustive" : "information_set";
}

json design_to_json(const DesignCertificate& d) {
  json j;
  j["v"] = d.points;
  j["k"] = d.block_size;
  j["t"] = d.strength;
  j["uniform"] = d.uniform;
  j["lambda"] = d.lambda;
  j["b"] = d.block_count;
  json hist = json::object();
  for (const auto& [cov, pairs] : d.coverage_histogram)
    hist[std::to_string(cov)] = pairs;
  j["coverage_histogram"] = hist;
  return j;
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
  json j;
  if (r.extended) {
    ExtendedCode ec;
    ec.parent = r.code;
    ec.defining_set = *r.extended_set;
    j["code"] = code_to_json(ec);
  } else {
    j["code"] = code_to_json(r.code);
  }
  j["length"] = r.length;
  j["k"] = r.dimension;
  if (r.distance) {
    json d;
    d["value"] = r.distance->value;
    d["status"] = status_name(r.distance->status);
    d["method"] = method_name(r.distance->method);
    if (r.distance->status == DistanceStatus::lower_bound_only)
      d["best_found"] = r.distance->best_found;
    j["d"] = d;
  }
  json bounds;
  bounds["bch"] = r.bch;
  bounds["hartmann_tzeng"] = r.hartmann_tzeng;
  if (r.family_lower) bounds["family_lower"] = *r.family_lower;
  if (r.family_upper) bounds["family_upper"] = *r.family_upper;
  j["bounds"] = bounds;
  if (r.weights) {
    json w = json::object();
    for (long i = 0; i <= r.weights->length; ++i)
      if (r.weights->counts[i]) w[std::to_string(i)] = r.weights->counts[i];
    j["weights"] = w;
  }
  if (!r.designs.empty()) {
    json ds = json::array();
    for (const auto& d : r.designs) ds.push_back(design_to_json(d));
    j["designs"] = ds;
  }
  if (r.affine) {
    j["affine_invariant"] = r.affine->invariant;
    if (!r.affine->invariant) {
      j["affine_witness"] = {{"r", r.affine->witness_r}, {"s", r.affine->witness_s}};
    }
  }
  return j;
}

std::string dump_deterministic(const json& j) { return j.dump(2) + "\n"; }

}  // namespace grm
