#include "opetope/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace opetope {

using nlohmann::json;

namespace {

struct Reader {
  std::vector<std::string> warnings;

  [[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
  }

  const json& field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
  }

  const json& object(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    return j;
  }

  const json& array(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
  }

  std::string str(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
  }

  int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
  }

  std::vector<CellId> ids(const json& j, const std::string& where) {
    array(j, where);
    std::vector<CellId> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], where + "/" + std::to_string(i)));
    return out;
  }

  std::map<CellId, CellId> id_map(const json& j, const std::string& where) {
    object(j, where);
    std::map<CellId, CellId> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = str(it.value(), where + "/" + it.key());
    return out;
  }

  // Unknown members of obj, as compact JSON; each one is reported.
  std::string extras(const json& obj, const std::string& where, std::initializer_list<const char*> known) {
    json rest = json::object();
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool k = false;
      for (const char* name : known) k = k || it.key() == name;
      if (!k) {
        rest[it.key()] = it.value();
        warnings.push_back("unknown field " + where + "/" + it.key() + " kept as is");
      }
    }
    return rest.empty() ? std::string() : rest.dump();
  }
};

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

void merge_extras(json& obj, const std::string& extra) {
  if (extra.empty()) return;
  json rest = json::parse(extra);
  for (auto it = rest.begin(); it != rest.end(); ++it) obj[it.key()] = it.value();
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

json tree_json(const RootedTree& t) {
  json j = {{"nodes", t.nodes},
            {"edges", t.edges},
            {"node_target", t.node_target},
            {"edge_target", t.edge_target},
            {"root", t.root}};
  merge_extras(j, t.extra_json);
  return j;
}

}  // namespace

Parsed<RawDfc> parse_dfc(const std::string& text) {
  json doc = parse_text(text);
  Reader r;
  Parsed<RawDfc> out;
  r.object(doc, "");
  const json& cells = r.array(r.field(doc, "", "cells"), "/cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string at = "/cells/" + std::to_string(i);
    const json& c = r.object(cells[i], at);
    RawCell cell;
    cell.id = r.str(r.field(c, at, "id"), at + "/id");
    cell.dim = r.integer(r.field(c, at, "dim"), at + "/dim");
    cell.delta = c.contains("delta") ? r.ids(c["delta"], at + "/delta") : std::vector<CellId>{};
    cell.gamma = c.contains("gamma") ? r.ids(c["gamma"], at + "/gamma") : std::vector<CellId>{};
    cell.extra_json = r.extras(c, at, {"id", "dim", "delta", "gamma"});
    out.value.cells.push_back(std::move(cell));
  }
  if (doc.contains("local_orders")) {
    const json& los = r.array(doc["local_orders"], "/local_orders");
    for (std::size_t i = 0; i < los.size(); ++i) {
      const std::string at = "/local_orders/" + std::to_string(i);
      const json& l = r.object(los[i], at);
      RawLocalOrder lo;
      lo.x = r.str(r.field(l, at, "x"), at + "/x");
      lo.z = r.str(r.field(l, at, "z"), at + "/z");
      lo.order = r.ids(r.field(l, at, "order"), at + "/order");
      lo.extra_json = r.extras(l, at, {"x", "z", "order"});
      out.value.local_orders.push_back(std::move(lo));
    }
  }
  out.value.extra_json = r.extras(doc, "", {"cells", "local_orders"});
  out.warnings = std::move(r.warnings);
  return out;
}

std::string serialize_dfc(const RawDfc& raw) {
  json cells = json::array();
  for (const auto& c : raw.cells) {
    json j = {{"id", c.id}, {"dim", c.dim}, {"delta", c.delta}, {"gamma", c.gamma}};
    merge_extras(j, c.extra_json);
    cells.push_back(std::move(j));
  }
  json los = json::array();
  for (const auto& lo : raw.local_orders) {
    json j = {{"x", lo.x}, {"z", lo.z}, {"order", lo.order}};
    merge_extras(j, lo.extra_json);
    los.push_back(std::move(j));
  }
  json doc = {{"cells", cells}, {"local_orders", los}};
  merge_extras(doc, raw.extra_json);
  return finish(doc);
}

Parsed<RawOpetope> parse_opetope(const std::string& text) {
  json doc = parse_text(text);
  Reader r;
  Parsed<RawOpetope> out;
  r.object(doc, "");
  out.value.dim = r.integer(r.field(doc, "", "dim"), "/dim");
  const json& trees = r.array(r.field(doc, "", "trees"), "/trees");
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string at = "/trees/" + std::to_string(i);
    const json& t = r.object(trees[i], at);
    RootedTree tree;
    tree.nodes = t.contains("nodes") ? r.ids(t["nodes"], at + "/nodes") : std::vector<CellId>{};
    tree.edges = r.ids(r.field(t, at, "edges"), at + "/edges");
    tree.node_target = t.contains("node_target") ? r.id_map(t["node_target"], at + "/node_target")
                                                 : std::map<CellId, CellId>{};
    tree.edge_target = t.contains("edge_target") ? r.id_map(t["edge_target"], at + "/edge_target")
                                                 : std::map<CellId, CellId>{};
    tree.root = r.str(r.field(t, at, "root"), at + "/root");
    tree.extra_json = r.extras(t, at, {"nodes", "edges", "node_target", "edge_target", "root"});
    out.value.trees.push_back(std::move(tree));
  }
  if (doc.contains("constellations")) {
    const json& cs = r.array(doc["constellations"], "/constellations");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string at = "/constellations/" + std::to_string(i);
      const json& c = r.object(cs[i], at);
      RawConstellation con;
      if (c.contains("subdivision")) {
        const json& s = r.object(c["subdivision"], at + "/subdivision");
        for (auto it = s.begin(); it != s.end(); ++it)
          con.subdivision[it.key()] = r.ids(it.value(), at + "/subdivision/" + it.key());
      }
      if (c.contains("sigma_black")) con.sigma_black = r.id_map(c["sigma_black"], at + "/sigma_black");
      if (c.contains("sigma_white")) con.sigma_white = r.id_map(c["sigma_white"], at + "/sigma_white");
      con.extra_json = r.extras(c, at, {"subdivision", "sigma_black", "sigma_white"});
      out.value.constellations.push_back(std::move(con));
    }
  }
  out.value.extra_json = r.extras(doc, "", {"dim", "trees", "constellations"});
  out.warnings = std::move(r.warnings);
  return out;
}

std::string serialize_opetope(const RawOpetope& raw) {
  json trees = json::array();
  for (const auto& t : raw.trees) trees.push_back(tree_json(t));
  json cs = json::array();
  for (const auto& c : raw.constellations) {
    json j = {{"subdivision", json::object()}};
    for (const auto& [e, ws] : c.subdivision) j["subdivision"][e] = ws;
    if (c.sigma_black) j["sigma_black"] = *c.sigma_black;
    if (c.sigma_white) j["sigma_white"] = *c.sigma_white;
    merge_extras(j, c.extra_json);
    cs.push_back(std::move(j));
  }
  json doc = {{"dim", raw.dim}, {"trees", trees}, {"constellations", cs}};
  merge_extras(doc, raw.extra_json);
  return finish(doc);
}

DocKind sniff(const std::string& text) {
  json doc = parse_text(text);
  if (!doc.is_object()) return DocKind::unknown;
  if (doc.contains("cells")) return DocKind::dfc;
  if (doc.contains("trees")) return DocKind::opetope;
  return DocKind::unknown;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string iso_json(const DfcIso& f) { return json{{"forward", f.forward}}.dump(); }

std::string iso_json(const OpetopeIso& f) {
  return json{{"nodes", f.nodes}, {"edges", f.edges}, {"whites", f.whites}}.dump();
}

}  // namespace opetope
