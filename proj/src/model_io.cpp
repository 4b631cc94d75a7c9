#include "attackmc/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace attackmc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg, int line = 0, int col = 0) {
  throw ParseError(msg, line, col);
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::ostringstream os;
    os << "syntax error at " << line << ":" << col;
    fail(os.str(), line, col);
  }
}

Action parse_action(const std::string& s) {
  if (s == "move") return Action::Move;
  if (s == "get") return Action::Get;
  if (s == "put") return Action::Put;
  fail("unknown action \"" + s + "\"");
}

DlmLabel parse_label(const json& j) {
  DlmLabel lb;
  lb.owner = j.at("owner").get<std::string>();
  for (const auto& r : j.value("readers", json::array()))
    lb.readers.insert(r.get<std::string>());
  if (lb.readers.contains(lb.owner))
    fail("label owner \"" + lb.owner + "\" listed among its readers");
  return lb;
}

json label_json(const DlmLabel& lb) {
  return {{"owner", lb.owner}, {"readers", json(lb.readers)}};
}

template <typename T>
void sort_dedup(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("model document must be a JSON object", 1, 1);

  ModelFile m;
  m.name = j.value("name", "");

  for (const auto& l : j.value("locations", json::array()))
    m.locations.push_back(l.get<std::string>());
  sort_dedup(m.locations);
  auto known_loc = [&](const LocationId& l) {
    return std::binary_search(m.locations.begin(), m.locations.end(), l);
  };

  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) fail("edge must be a two-element array");
    LocationId a = e[0].get<std::string>(), b = e[1].get<std::string>();
    for (const auto& l : {a, b})
      if (!known_loc(l)) fail("undeclared location \"" + l + "\" in edges");
    m.edges.push_back(norm_edge(a, b));
  }
  sort_dedup(m.edges);

  const json actors = j.value("actors", json::object());
  for (const auto& [actor, loc] : actors.items()) {
    if (!known_loc(loc.get<std::string>()))
      fail("undeclared location \"" + loc.get<std::string>() +
           "\" for actor \"" + actor + "\"");
    m.actors[actor] = loc.get<std::string>();
  }
  auto known_actor = [&](const ActorId& a) { return m.actors.contains(a); };

  for (const auto& d : j.value("data", json::array())) {
    DataItem item;
    item.label = parse_label(d);
    item.value = d.at("value").get<std::string>();
    item.at = d.at("at").get<std::string>();
    if (!known_loc(item.at)) fail("undeclared location \"" + item.at + "\" in data");
    if (!known_actor(item.label.owner))
      fail("undeclared actor \"" + item.label.owner + "\" owns data");
    for (const auto& r : item.label.readers)
      if (!known_actor(r)) fail("undeclared actor \"" + r + "\" reads data");
    m.data.push_back(std::move(item));
  }
  sort_dedup(m.data);

  const json policy = j.value("policy", json::object());
  for (const auto& [loc, entries] : policy.items()) {
    if (!known_loc(loc)) fail("policy for undeclared location \"" + loc + "\"");
    for (const auto& e : entries) {
      PolicyEntry pe;
      const json& who = e.at("who");
      if (who.is_string() && who == "any") {
        pe.who.kind = ActorCondition::Kind::Any;
      } else if (who.is_object() && who.contains("id")) {
        pe.who.kind = ActorCondition::Kind::Id;
        pe.who.actors = {who["id"].get<std::string>()};
      } else if (who.is_object() && who.contains("in")) {
        pe.who.kind = ActorCondition::Kind::In;
        for (const auto& a : who["in"]) pe.who.actors.insert(a.get<std::string>());
        if (pe.who.actors.empty()) fail("empty \"in\" set in policy for \"" + loc + "\"");
      } else {
        fail("policy \"who\" must be \"any\", {\"id\": ...} or {\"in\": [...]}");
      }
      for (const ActorId& a : pe.who.actors)
        if (!known_actor(a)) fail("undeclared actor \"" + a + "\" in policy");
      for (const auto& act : e.at("actions"))
        pe.actions.insert(parse_action(act.get<std::string>()));
      m.policy[loc].push_back(std::move(pe));
    }
  }

  for (const auto& v : j.value("data_universe", json::array()))
    m.data_universe.push_back(v.get<std::string>());
  sort_dedup(m.data_universe);
  if (m.data_universe.empty()) fail("data_universe must be nonempty");

  for (const auto& lb : j.value("label_universe", json::array())) {
    DlmLabel label = parse_label(lb);
    if (!known_actor(label.owner))
      fail("undeclared actor \"" + label.owner + "\" in label_universe");
    m.label_universe.push_back(std::move(label));
  }
  sort_dedup(m.label_universe);
  if (m.label_universe.empty()) fail("label_universe must be nonempty");

  return m;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string dump_model(const ModelFile& m) {
  json j;
  j["name"] = m.name;
  j["locations"] = m.locations;
  json edges = json::array();
  for (const auto& [a, b] : m.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["actors"] = m.actors;
  json data = json::array();
  for (const auto& d : m.data)
    data.push_back({{"owner", d.label.owner},
                    {"readers", json(d.label.readers)},
                    {"value", d.value},
                    {"at", d.at}});
  j["data"] = std::move(data);
  json policy = json::object();
  for (const auto& [loc, entries] : m.policy) {
    json list = json::array();
    for (const PolicyEntry& e : entries) {
      json who;
      switch (e.who.kind) {
        case ActorCondition::Kind::Any: who = "any"; break;
        case ActorCondition::Kind::Id: who = {{"id", *e.who.actors.begin()}}; break;
        case ActorCondition::Kind::In: who = {{"in", json(e.who.actors)}}; break;
      }
      json acts = json::array();
      for (Action a : e.actions) acts.push_back(to_string(a));
      list.push_back({{"who", std::move(who)}, {"actions", std::move(acts)}});
    }
    policy[loc] = std::move(list);
  }
  j["policy"] = std::move(policy);
  j["data_universe"] = m.data_universe;
  json labels = json::array();
  for (const auto& lb : m.label_universe) labels.push_back(label_json(lb));
  j["label_universe"] = std::move(labels);
  return j.dump(2) + "\n";
}

EInfrastructure to_einfrastructure(const ModelFile& m) {
  EGraph g;
  g.nodes = m.locations;
  g.edges = m.edges;
  for (const auto& [actor, loc] : m.actors)
    g.actor_at.emplace_back(loc, std::vector<ActorId>{actor});
  for (const auto& d : m.data)
    g.store.emplace_back(d.at, std::vector<LabeledDatum>{{d.label, d.value}});

  EInfrastructure e;
  e.graph = canon(std::move(g));
  e.policy = m.policy;
  e.data_universe = m.data_universe;
  e.label_universe = m.label_universe;
  return e;
}

std::string summarize(const EGraph& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [loc, actors] : g.actor_at)
    for (const auto& a : actors) {
      if (!first) os << " ";
      os << a << "@" << loc;
      first = false;
    }
  if (!g.store.empty()) {
    os << " |";
    for (const auto& [loc, items] : g.store) {
      os << " " << loc << ":[";
      bool f2 = true;
      for (const auto& d : items) {
        if (!f2) os << " ";
        os << d.label.owner << "{";
        bool f3 = true;
        for (const auto& r : d.label.readers) {
          if (!f3) os << ",";
          os << r;
          f3 = false;
        }
        os << "}:" << d.value;
        f2 = false;
      }
      os << "]";
    }
  }
  return os.str();
}

std::string digest_hex(const EGraph& g) {
  std::ostringstream os;
  os << std::hex << digest(g);
  return os.str();
}

namespace {

json goal_sets_json(const AttackGoal& goal) {
  return {{"pre", json(goal.pre)}, {"post", json(goal.post)}};
}

json tree_json(const AttackTree& t) {
  json j;
  switch (t.kind) {
    case NodeKind::Base: j["kind"] = "base"; break;
    case NodeKind::And: j["kind"] = "and"; break;
    case NodeKind::Or: j["kind"] = "or"; break;
  }
  j["pre"] = json(t.goal.pre);
  j["post"] = json(t.goal.post);
  json children = json::array();
  for (const auto& c : t.children) children.push_back(tree_json(*c));
  j["children"] = std::move(children);
  return j;
}

AttackTreePtr tree_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  AttackGoal goal;
  for (const auto& s : j.at("pre")) goal.pre.insert(s.get<StateId>());
  for (const auto& s : j.at("post")) goal.post.insert(s.get<StateId>());
  std::vector<AttackTreePtr> children;
  for (const auto& c : j.value("children", json::array()))
    children.push_back(tree_from_json(c));
  if (kind == "base") {
    if (!children.empty()) fail("base attack node cannot have children");
    return base_attack(std::move(goal));
  }
  if (kind == "and") return and_attack(std::move(children), std::move(goal));
  if (kind == "or") return or_attack(std::move(children), std::move(goal));
  fail("unknown attack tree node kind \"" + kind + "\"");
}

}  // namespace

std::string attack_tree_to_json(const AttackTree& t, const std::vector<EGraph>& states) {
  json doc;
  json table = json::array();
  for (const EGraph& g : states)
    table.push_back({{"digest", digest_hex(g)}, {"summary", summarize(g)}});
  doc["states"] = std::move(table);
  doc["tree"] = tree_json(t);
  return doc.dump(2) + "\n";
}

LoadedTree attack_tree_from_json(const std::string& text) {
  json j = parse_json(text);
  if (j.contains("attack_tree")) j = j["attack_tree"];
  if (!j.is_object() || !j.contains("tree"))
    fail("document does not contain an attack tree");
  LoadedTree out;
  for (const auto& s : j.value("states", json::array()))
    out.state_digests.push_back(s.at("digest").get<std::string>());
  out.tree = tree_from_json(j["tree"]);
  return out;
}

}  // namespace attackmc
