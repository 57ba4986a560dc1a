#include "ogw/json_io.hpp"

#include <algorithm>
#include <limits>

namespace ogw {

namespace {

std::int64_t int_field(const json& j, const std::string& field) {
  require(j.contains(field), "missing field '" + field + "'");
  const json& v = j.at(field);
  require(v.is_number_integer(), "field '" + field + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Label> label_array(const json& j, const std::string& field) {
  require(j.contains(field), "missing field '" + field + "'");
  const json& v = j.at(field);
  require(v.is_array(), "field '" + field + "' must be an array of labels");
  std::vector<Label> out;
  for (const json& item : v) out.push_back(label_from_json(item));
  return out;
}

}  // namespace

json to_json(const Label& x) {
  switch (x.kind) {
    case label_kind::plain:
      return json{{"plain", x.index}};
    case label_kind::node_in:
      return json{{"node_in", x.index}};
    case label_kind::node_out:
      return json{{"node_out", x.index}};
  }
  return json();
}

Label label_from_json(const json& j) {
  require(j.is_object() && j.size() == 1,
          "label must be an object with exactly one of 'plain', 'node_in', 'node_out'");
  const auto it = j.begin();
  require(it.value().is_number_integer(), "label index must be an integer");
  const std::int64_t idx = it.value().get<std::int64_t>();
  require(idx >= 1 && idx <= std::numeric_limits<std::int32_t>::max(),
          "label index out of range");
  if (it.key() == "plain") return Label::plain(static_cast<std::int32_t>(idx));
  if (it.key() == "node_in") return Label::node_in(static_cast<std::int32_t>(idx));
  if (it.key() == "node_out") return Label::node_out(static_cast<std::int32_t>(idx));
  throw validation_error("unknown label kind '" + it.key() + "'");
}

json to_json(const ModuliSpec& spec) {
  json j;
  j["k"] = json::array();
  for (const Label& x : spec.pre.k) j["k"].push_back(to_json(x));
  j["l"] = json::array();
  for (const Label& x : spec.pre.l) j["l"].push_back(to_json(x));
  j["beta"] = spec.pre.beta;
  j["sigma"] = json::array();
  for (const Label& x : spec.sigma) j["sigma"].push_back(to_json(x));
  return j;
}

ModuliSpec spec_from_json(const json& j) {
  require(j.is_object(), "specification must be a JSON object");
  ModuliSpec spec;
  spec.pre.k = label_array(j, "k");
  spec.pre.l = label_array(j, "l");
  spec.pre.beta = int_field(j, "beta");
  spec.sigma = label_array(j, "sigma");
  validate(spec, false);
  return spec;
}

json to_json(const LabeledTree& tree) {
  json j;
  j["edges"] = tree.edges;
  j["vertices"] = json::array();
  for (const ModuliSpec& s : tree.vertices) j["vertices"].push_back(to_json(s));
  json head = json::object(), tail = json::object();
  for (const auto& [e, v] : tree.head) head[std::to_string(e)] = v;
  for (const auto& [e, v] : tree.tail) tail[std::to_string(e)] = v;
  j["head"] = std::move(head);
  j["tail"] = std::move(tail);
  return j;
}

LabeledTree tree_from_json(const json& j) {
  require(j.is_object(), "tree must be a JSON object");
  require(j.contains("vertices") && j.at("vertices").is_array(),
          "field 'vertices' must be an array of specifications");
  std::vector<ModuliSpec> vertices;
  for (const json& item : j.at("vertices")) vertices.push_back(spec_from_json(item));

  require(j.contains("edges") && j.at("edges").is_array(),
          "field 'edges' must be an array of integers");
  std::vector<std::int32_t> edges;
  for (const json& item : j.at("edges")) {
    require(item.is_number_integer() && item.get<std::int64_t>() >= 1,
            "field 'edges' must hold positive integers");
    edges.push_back(item.get<std::int32_t>());
  }

  // Declared head/tail maps must match the maps derived from the labels in
  // the declared vertex order.
  auto read_map = [&j](const std::string& field, std::size_t n_vertices) {
    std::map<std::int32_t, int> out;
    require(j.contains(field) && j.at(field).is_object(),
            "field '" + field + "' must be an object mapping edges to vertex indices");
    for (const auto& [key, value] : j.at(field).items()) {
      std::int32_t edge = 0;
      try {
        edge = std::stoi(key);
      } catch (const std::exception&) {
        throw validation_error("field '" + field + "' has non-integer edge key '" + key + "'");
      }
      require(value.is_number_integer(), "field '" + field + "' must map to integers");
      const std::int64_t v = value.get<std::int64_t>();
      require(v >= 0 && v < static_cast<std::int64_t>(n_vertices),
              "field '" + field + "' has vertex index out of range");
      out[edge] = static_cast<int>(v);
    }
    return out;
  };
  const std::map<std::int32_t, int> head = read_map("head", vertices.size());
  const std::map<std::int32_t, int> tail = read_map("tail", vertices.size());

  std::map<std::int32_t, int> derived_head, derived_tail;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (const Label& x : vertices[v].pre.k)
      if (x.kind == label_kind::node_in) derived_head[x.index] = static_cast<int>(v);
    for (const Label& x : vertices[v].sigma) derived_tail[x.index] = static_cast<int>(v);
  }
  for (std::int32_t e : edges) {
    require(derived_head.count(e) && head.count(e) && head.at(e) == derived_head.at(e),
            "field 'head' disagrees with the vertex labels for edge " + std::to_string(e));
    require(derived_tail.count(e) && tail.count(e) && tail.at(e) == derived_tail.at(e),
            "field 'tail' disagrees with the vertex labels for edge " + std::to_string(e));
  }

  LabeledTree tree = make_labeled_tree(std::move(vertices));
  std::vector<std::int32_t> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  require(tree.edges == sorted_edges, "field 'edges' does not match the vertex node labels");
  return tree;
}

json to_json(const BoundaryComponent& c) {
  json j;
  j["parent"] = to_json(c.parent);
  j["vertex"] = c.vertex;
  j["left"] = to_json(c.left);
  j["right"] = to_json(c.right);
  j["tag"] = c.tag == BoundaryTag::sturdy ? "Sturdy" : "Wobbly";
  return j;
}

json to_json(const InvariantDescriptor& d) {
  json j;
  j["k"] = d.k;
  j["l_vec"] = d.constraints.l_vec;
  j["beta"] = d.beta;
  j["m"] = d.m.m;
  j["deg_direct"] = d.degree_direct;
  j["deg_closed"] = d.degree_closed;
  j["zero"] = json{{"flag", d.zero.zero}, {"reason", to_string(d.zero.reason)}};
  if (d.m.m == 1) {
    j["note"] =
        "for m=1, degree-0 invariants equal twice the Welschinger signed count "
        "of real rational planar curves";
  }
  return j;
}

json to_json(const std::vector<LedgerLevel>& ledger) {
  json arr = json::array();
  for (const LedgerLevel& level : ledger) {
    json j;
    j["r"] = level.r;
    j["weight"] = "1/" + level.weight_denominator.str();
    j["trees"] = json::array();
    for (const LedgerEntry& e : level.entries) {
      j["trees"].push_back(json{{"tree", to_json(e.tree)},
                                {"theta", e.theta.value()},
                                {"zeta", e.zeta.value()}});
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), "malformed JSON in " + what);
  return j;
}

}  // namespace ogw
