#include "fos/io.hpp"

#include "fos/errors.hpp"

#include <fstream>
#include <sstream>

namespace fos {

namespace {

long long as_int(const Json& j, const std::string& where) {
  if (j.is_number_float()) throw InputError(where + ": decimal value " + j.dump() + " is not allowed, use an integer");
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const std::string& where, std::size_t exact = 0) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (exact != 0 && j.size() != exact) {
    throw InputError(where + ": expected " + std::to_string(exact) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

int node_id(const Json& j, const std::string& where) {
  const long long v = as_int(j, where);
  if (v < 0 || v > kMaxNodes) throw InputError(where + ": node id out of range");
  return static_cast<int>(v);
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

Json arcs_to_json(const std::vector<Arc>& arcs) {
  Json a = Json::array();
  for (const Arc& e : arcs) a.push_back({e.tail, e.head});
  return a;
}

Json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw InputError(where + ": not an integer: \"" + s + "\"");
    return z;
  }
  return mpz_class(static_cast<long>(as_int(j, where)));
}

std::vector<std::size_t> index_list(const Json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array_of(j, where).size(); ++i) {
    const long long v = as_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v < 0) throw InputError(where + ": negative index");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& r) { return Json::array({mpz_to_json(r.get_num()), mpz_to_json(r.get_den())}); }

Rat rat_from_json(const Json& j, const std::string& where) {
  array_of(j, where, 2);
  const mpz_class num = mpz_from_json(j[0], where + "[0]");
  const mpz_class den = mpz_from_json(j[1], where + "[1]");
  if (den <= 0) throw InputError(where + ": denominator must be positive");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["version"] = kFormatVersion;
  j["nodes"] = inst.n;
  j["free_edges"] = edges_to_json(inst.free_edges);
  Json p = Json::array();
  for (std::size_t i = 0; i < inst.purchasable.size(); ++i) {
    const Rat& c = inst.cost[i];
    p.push_back({inst.purchasable[i].u, inst.purchasable[i].v, mpz_to_json(c.get_num()), mpz_to_json(c.get_den())});
  }
  j["purchasable_edges"] = p;
  Json d;
  if (inst.demand.is_kl()) {
    const KLParams& kl = inst.demand.kl_params();
    d["kl"] = {{"k", kl.k}, {"l", kl.l}, {"r0", kl.r0}};
  } else {
    Json t = Json::array();
    for (const auto& [s, value] : inst.demand.entries()) t.push_back({s.members(), value});
    d["table"] = t;
  }
  j["demand"] = d;
  j["root"] = inst.root;
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance: expected a JSON object");
  if (auto it = j.find("version"); it != j.end()) {
    const long long v = as_int(*it, "version");
    if (v != kFormatVersion) throw InputError("version: unsupported format version " + std::to_string(v));
  }
  Instance inst;
  const long long n = as_int(field(j, "nodes", "instance"), "nodes");
  if (n < 2 || n > kMaxNodes) throw InputError("nodes: must lie in [2, " + std::to_string(kMaxNodes) + "]");
  inst.n = static_cast<int>(n);

  const Json& fe = array_of(field(j, "free_edges", "instance"), "free_edges");
  for (std::size_t i = 0; i < fe.size(); ++i) {
    const std::string w = "free_edges[" + std::to_string(i) + "]";
    array_of(fe[i], w, 2);
    inst.free_edges.push_back({node_id(fe[i][0], w + "[0]"), node_id(fe[i][1], w + "[1]")});
  }
  const Json& pe = array_of(field(j, "purchasable_edges", "instance"), "purchasable_edges");
  for (std::size_t i = 0; i < pe.size(); ++i) {
    const std::string w = "purchasable_edges[" + std::to_string(i) + "]";
    array_of(pe[i], w, 4);
    inst.purchasable.push_back({node_id(pe[i][0], w + "[0]"), node_id(pe[i][1], w + "[1]")});
    inst.cost.push_back(rat_from_json(Json::array({pe[i][2], pe[i][3]}), w + " cost"));
  }

  const Json& d = field(j, "demand", "instance");
  if (!d.is_object() || d.size() != 1) throw InputError("demand: expected exactly one of \"kl\" or \"table\"");
  if (auto it = d.find("kl"); it != d.end()) {
    const int k = static_cast<int>(as_int(field(*it, "k", "demand.kl"), "demand.kl.k"));
    const int l = static_cast<int>(as_int(field(*it, "l", "demand.kl"), "demand.kl.l"));
    const int r0 = node_id(field(*it, "r0", "demand.kl"), "demand.kl.r0");
    inst.demand = Demand::kl(inst.n, k, l, r0);
  } else if (auto tt = d.find("table"); tt != d.end()) {
    std::vector<std::pair<NodeSet, int>> entries;
    const Json& t = array_of(*tt, "demand.table");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string w = "demand.table[" + std::to_string(i) + "]";
      array_of(t[i], w, 2);
      NodeSet s;
      const Json& nodes = array_of(t[i][0], w + "[0]");
      for (std::size_t m = 0; m < nodes.size(); ++m) {
        const int v = node_id(nodes[m], w + "[0][" + std::to_string(m) + "]");
        if (v >= inst.n) throw InputError(w + ": node " + std::to_string(v) + " out of range");
        s.insert(v);
      }
      const long long value = as_int(t[i][1], w + "[1]");
      if (value < 0 || value > table_value_cap(inst.n)) {
        throw InputError(w + ": value must lie in [0, " + std::to_string(table_value_cap(inst.n)) + "]");
      }
      entries.emplace_back(s, static_cast<int>(value));
    }
    inst.demand = Demand::table(inst.n, entries);
  } else {
    throw InputError("demand: expected \"kl\" or \"table\"");
  }
  if (auto it = j.find("root"); it != j.end()) {
    inst.root = node_id(*it, "root");
  } else {
    inst.root = inst.demand.is_kl() ? inst.demand.kl_params().r0 : 0;
  }
  inst.validate();
  return inst;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Instance read_instance(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return instance_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json result_to_json(const AugResult& res, bool decimals) {
  Json j;
  j["version"] = kFormatVersion;
  j["chosen"] = res.chosen;
  j["total_cost"] = rat_to_json(res.total_cost);
  j["lp_lower_bound"] = rat_to_json(res.lp_lower_bound);
  if (decimals) {
    j["total_cost_decimal"] = to_decimal(res.total_cost);
    j["lp_lower_bound_decimal"] = to_decimal(res.lp_lower_bound);
  }
  Json rounds = Json::array();
  for (const RoundRecord& r : res.rounds) {
    Json rj;
    rj["variables"] = r.variables;
    Json xs = Json::array();
    for (const Rat& v : r.x) xs.push_back(rat_to_json(v));
    rj["x"] = xs;
    rj["objective"] = rat_to_json(r.objective);
    rj["dropped"] = r.dropped;
    rj["fixed"] = r.fixed;
    rj["separation_rounds"] = r.separation_rounds;
    rj["rows_added"] = r.rows_added;
    rounds.push_back(rj);
  }
  j["rounds"] = rounds;
  j["orientation"] = arcs_to_json(res.orientation);
  return j;
}

AugResult result_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("result: expected a JSON object");
  AugResult res;
  res.chosen = index_list(field(j, "chosen", "result"), "chosen");
  res.total_cost = rat_from_json(field(j, "total_cost", "result"), "total_cost");
  res.lp_lower_bound = rat_from_json(field(j, "lp_lower_bound", "result"), "lp_lower_bound");
  if (auto it = j.find("rounds"); it != j.end()) {
    for (std::size_t i = 0; i < array_of(*it, "rounds").size(); ++i) {
      const Json& rj = (*it)[i];
      const std::string w = "rounds[" + std::to_string(i) + "]";
      RoundRecord r;
      r.variables = index_list(field(rj, "variables", w), w + ".variables");
      const Json& xs = array_of(field(rj, "x", w), w + ".x");
      for (std::size_t m = 0; m < xs.size(); ++m) r.x.push_back(rat_from_json(xs[m], w + ".x[" + std::to_string(m) + "]"));
      r.objective = rat_from_json(field(rj, "objective", w), w + ".objective");
      r.dropped = index_list(field(rj, "dropped", w), w + ".dropped");
      r.fixed = index_list(field(rj, "fixed", w), w + ".fixed");
      res.rounds.push_back(std::move(r));
    }
  }
  const Json& o = array_of(field(j, "orientation", "result"), "orientation");
  for (std::size_t i = 0; i < o.size(); ++i) {
    const std::string w = "orientation[" + std::to_string(i) + "]";
    array_of(o[i], w, 2);
    res.orientation.push_back({node_id(o[i][0], w + "[0]"), node_id(o[i][1], w + "[1]")});
  }
  return res;
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["passed"] = cert.passed();
  Json checks = Json::array();
  for (const CertificateCheck& c : cert.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

Json gap_rows_to_json(const std::vector<GapRow>& rows) {
  Json a = Json::array();
  for (const GapRow& r : rows) {
    a.push_back({{"n", r.n},
                 {"k", r.k},
                 {"lp_value", rat_to_json(r.lp_value)},
                 {"integral_value", rat_to_json(r.integral_value)},
                 {"ratio", rat_to_json(r.ratio)}});
  }
  return a;
}

Json basis_to_json(const BasisFamily& basis, const DominationForest& forest) {
  Json j;
  j["fractional_variables"] = basis.var_origin;
  Json xs = Json::array();
  for (const Rat& v : basis.x) xs.push_back(rat_to_json(v));
  j["x"] = xs;
  Json members = Json::array();
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    Json m;
    m["family"] = basis.members[i].encode();
    m["parent"] = forest.parent[i] ? Json(*forest.parent[i]) : Json(nullptr);
    members.push_back(m);
  }
  j["members"] = members;
  j["tight_rows"] = basis.stats.tight_rows;
  return j;
}

}  // namespace fos
