#ifndef OGW_JSON_IO_HPP
#define OGW_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "ogw/boundary.hpp"
#include "ogw/invariants.hpp"
#include "ogw/tree.hpp"

namespace ogw {

// Wire format. Labels encode as {"plain": n} | {"node_in": i} | {"node_out": i},
// specifications as {"k": [...], "l": [...], "beta": n, "sigma": [...]}, trees
// as {"edges": [...], "vertices": [...], "head": {"j": v}, "tail": {"j": v}}
// with vertex indices referring to the canonical order. Decoders validate and
// raise validation_error naming the offending field.
using json = nlohmann::ordered_json;

json to_json(const Label& x);
json to_json(const ModuliSpec& spec);
json to_json(const LabeledTree& tree);
json to_json(const BoundaryComponent& c);

Label label_from_json(const json& j);
ModuliSpec spec_from_json(const json& j);
LabeledTree tree_from_json(const json& j);

json to_json(const InvariantDescriptor& d);
json to_json(const std::vector<LedgerLevel>& ledger);

// Helper shared by the CLI: parse text into json with a validation_error on
// malformed input.
json parse_json(const std::string& text, const std::string& what);

}  // namespace ogw

#endif
