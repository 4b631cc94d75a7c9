#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "attackmc/attack_tree.hpp"
#include "attackmc/efficient.hpp"

namespace attackmc {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

struct DataItem {
  DlmLabel label;
  DataValue value;
  LocationId at;

  auto operator<=>(const DataItem&) const = default;
};

/// Parsed model file, held in canonical order so that
/// parse . pretty-print . parse is the identity.
struct ModelFile {
  std::string name;
  std::vector<LocationId> locations;
  std::vector<std::pair<LocationId, LocationId>> edges;
  std::map<ActorId, LocationId> actors;
  std::vector<DataItem> data;
  LocalPolicy policy;
  std::vector<DataValue> data_universe;
  std::vector<DlmLabel> label_universe;

  bool operator==(const ModelFile&) const = default;
};

/// Parse and cross-validate a JSON model document. Throws ParseError with
/// line/column on syntax errors and diagnostics naming the offending
/// identifier on reference errors.
ModelFile parse_model(const std::string& text);

ModelFile load_model(const std::string& path);

std::string dump_model(const ModelFile& m);

/// Initial efficient state of the model.
EInfrastructure to_einfrastructure(const ModelFile& m);

/// Short deterministic one-line description of a state, used in attack-tree
/// serializations and DOT labels.
std::string summarize(const EGraph& g);

std::string digest_hex(const EGraph& g);

/// Attack-tree JSON: {"states": [{"digest", "summary"}...],
/// "tree": {"kind", "pre", "post", "children"}} with pre/post as arrays of
/// indices into the state table.
std::string attack_tree_to_json(const AttackTree& t, const std::vector<EGraph>& states);

struct LoadedTree {
  AttackTreePtr tree;
  std::vector<std::string> state_digests;  // hex, by state index
};

/// Accepts either a bare tree document or a full `check --json` result
/// containing an "attack_tree" member.
LoadedTree attack_tree_from_json(const std::string& text);

}  // namespace attackmc
