#include "attackmc/efficient.hpp"

#include <algorithm>
#include <sstream>

namespace attackmc {

namespace {

template <typename T>
void sort_dedup(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// merge duplicate keys, canon inner sequences, drop empty entries
template <typename V>
std::vector<std::pair<LocationId, std::vector<V>>> canon_table(
    std::vector<std::pair<LocationId, std::vector<V>>> t) {
  std::map<LocationId, std::vector<V>> merged;
  for (auto& [k, vs] : t) {
    auto& slot = merged[k];
    slot.insert(slot.end(), vs.begin(), vs.end());
  }
  std::vector<std::pair<LocationId, std::vector<V>>> out;
  for (auto& [k, vs] : merged) {
    sort_dedup(vs);
    if (!vs.empty()) out.emplace_back(k, std::move(vs));
  }
  return out;
}

template <typename V>
const std::vector<V>* table_find(
    const std::vector<std::pair<LocationId, std::vector<V>>>& t,
    const LocationId& key) {
  auto it = std::lower_bound(t.begin(), t.end(), key,
                             [](const auto& e, const LocationId& k) { return e.first < k; });
  if (it == t.end() || it->first != key) return nullptr;
  return &it->second;
}

template <typename V>
void table_insert(std::vector<std::pair<LocationId, std::vector<V>>>& t,
                  const LocationId& key, const V& val) {
  auto it = std::lower_bound(t.begin(), t.end(), key,
                             [](const auto& e, const LocationId& k) { return e.first < k; });
  if (it == t.end() || it->first != key)
    it = t.insert(it, {key, {}});
  auto& vs = it->second;
  auto pos = std::lower_bound(vs.begin(), vs.end(), val);
  if (pos == vs.end() || *pos != val) vs.insert(pos, val);
}

template <typename V>
void table_erase(std::vector<std::pair<LocationId, std::vector<V>>>& t,
                 const LocationId& key, const V& val) {
  auto it = std::lower_bound(t.begin(), t.end(), key,
                             [](const auto& e, const LocationId& k) { return e.first < k; });
  if (it == t.end() || it->first != key) return;
  auto& vs = it->second;
  auto pos = std::lower_bound(vs.begin(), vs.end(), val);
  if (pos != vs.end() && *pos == val) vs.erase(pos);
  if (vs.empty()) t.erase(it);
}

template <typename T>
bool sorted_contains(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

EGraph canon(EGraph g) {
  sort_dedup(g.nodes);
  for (auto& e : g.edges) e = norm_edge(e.first, e.second);
  sort_dedup(g.edges);
  g.actor_at = canon_table(std::move(g.actor_at));
  g.store = canon_table(std::move(g.store));
  return g;
}

bool is_canonical(const EGraph& g) { return canon(g) == g; }

namespace {

struct Fnv1a {
  std::uint64_t h = 1469598103934665603ull;
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    feed_byte(0xff);  // field separator
  }
  void feed_byte(unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  }
};

void feed_label(Fnv1a& f, const DlmLabel& lb) {
  f.feed(lb.owner);
  for (const auto& r : lb.readers) f.feed(r);
  f.feed_byte(0xfe);
}

}  // namespace

std::uint64_t digest(const EGraph& g) {
  Fnv1a f;
  for (const auto& n : g.nodes) f.feed(n);
  f.feed_byte(0xfd);
  for (const auto& [a, b] : g.edges) {
    f.feed(a);
    f.feed(b);
  }
  f.feed_byte(0xfd);
  for (const auto& [l, as] : g.actor_at) {
    f.feed(l);
    for (const auto& a : as) f.feed(a);
    f.feed_byte(0xfe);
  }
  f.feed_byte(0xfd);
  for (const auto& [l, ds] : g.store) {
    f.feed(l);
    for (const auto& d : ds) {
      feed_label(f, d.label);
      f.feed(d.value);
    }
    f.feed_byte(0xfe);
  }
  return f.h;
}

EInfrastructure EInfrastructure::with_graph(EGraph g) const {
  EInfrastructure e = *this;
  e.graph = std::move(g);
  return e;
}

Infrastructure eset_i(const EInfrastructure& e) {
  Infrastructure inf;
  inf.graph.nodes = {e.graph.nodes.begin(), e.graph.nodes.end()};
  inf.graph.edges = {e.graph.edges.begin(), e.graph.edges.end()};
  for (const auto& [l, as] : e.graph.actor_at)
    inf.graph.actor_at[l] = {as.begin(), as.end()};
  for (const auto& [l, ds] : e.graph.store)
    inf.graph.store[l] = {ds.begin(), ds.end()};
  inf.policy = e.policy;
  return inf;
}

EInfrastructure repr(const Infrastructure& inf,
                     const std::set<DataValue>& data_universe,
                     const std::set<DlmLabel>& label_universe) {
  EInfrastructure e;
  e.graph.nodes = {inf.graph.nodes.begin(), inf.graph.nodes.end()};
  e.graph.edges = {inf.graph.edges.begin(), inf.graph.edges.end()};
  for (const auto& [l, as] : inf.graph.actor_at)
    if (!as.empty()) e.graph.actor_at.emplace_back(l, std::vector<ActorId>{as.begin(), as.end()});
  for (const auto& [l, ds] : inf.graph.store)
    if (!ds.empty()) e.graph.store.emplace_back(l, std::vector<LabeledDatum>{ds.begin(), ds.end()});
  e.graph = canon(std::move(e.graph));
  e.policy = inf.policy;
  e.data_universe = {data_universe.begin(), data_universe.end()};
  e.label_universe = {label_universe.begin(), label_universe.end()};
  return e;
}

std::string to_string(const Event& h) {
  std::ostringstream os;
  if (const auto* m = std::get_if<MoveEvent>(&h)) {
    os << "move(" << m->actor << ", " << m->from << " -> " << m->to << ")";
  } else if (const auto* g = std::get_if<GetEvent>(&h)) {
    os << "get(" << g->actor << " at " << g->at << ", " << g->item.value
       << " from " << g->from << ")";
  } else if (const auto* p = std::get_if<PutEvent>(&h)) {
    os << "put(" << p->actor << " at " << p->at << ", " << p->value
       << " as " << p->label.owner << "-owned)";
  }
  return os.str();
}

std::vector<Event> enum_events(const EInfrastructure& e) {
  const EGraph& g = e.graph;
  std::vector<Event> out;
  for (const auto& [loc, actors] : g.actor_at) {
    for (const ActorId& a : actors) {
      for (const auto& [x, y] : g.edges) {
        if (x == loc) out.push_back(MoveEvent{a, loc, y});
        if (y == loc && x != y) out.push_back(MoveEvent{a, loc, x});
      }
      for (const LocationId& src : g.nodes) {
        if (src != loc && !sorted_contains(g.edges, norm_edge(loc, src)))
          continue;
        if (const auto* items = table_find(g.store, src))
          for (const LabeledDatum& d : *items)
            if (d.label.may_access(a)) out.push_back(GetEvent{a, loc, src, d});
      }
      for (const DlmLabel& lb : e.label_universe) {
        if (lb.owner != a) continue;
        for (const DataValue& v : e.data_universe)
          out.push_back(PutEvent{a, loc, lb, v});
      }
    }
  }
  sort_dedup(out);
  return out;
}

std::optional<EGraph> st_e(const EInfrastructure& e, const Event& h) {
  const EGraph& g = e.graph;
  auto actor_here = [&](const ActorId& a, const LocationId& l) {
    const auto* as = table_find(g.actor_at, l);
    return as && sorted_contains(*as, a);
  };

  if (const auto* m = std::get_if<MoveEvent>(&h)) {
    if (m->from == m->to) return std::nullopt;
    if (!actor_here(m->actor, m->from)) return std::nullopt;
    if (!sorted_contains(g.edges, norm_edge(m->from, m->to))) return std::nullopt;
    if (!policy_allows(e.policy, m->to, m->actor, Action::Move)) return std::nullopt;
    EGraph next = g;
    table_erase(next.actor_at, m->from, m->actor);
    table_insert(next.actor_at, m->to, m->actor);
    return next;
  }
  if (const auto* ge = std::get_if<GetEvent>(&h)) {
    if (!actor_here(ge->actor, ge->at)) return std::nullopt;
    if (ge->from != ge->at && !sorted_contains(g.edges, norm_edge(ge->at, ge->from)))
      return std::nullopt;
    const auto* items = table_find(g.store, ge->from);
    if (!items || !sorted_contains(*items, ge->item)) return std::nullopt;
    if (!ge->item.label.may_access(ge->actor)) return std::nullopt;
    if (!policy_allows(e.policy, ge->at, ge->actor, Action::Get)) return std::nullopt;
    const auto* here = table_find(g.store, ge->at);
    if (here && sorted_contains(*here, ge->item)) return std::nullopt;  // no change
    EGraph next = g;
    table_insert(next.store, ge->at, ge->item);
    return next;
  }
  const auto& p = std::get<PutEvent>(h);
  if (!actor_here(p.actor, p.at)) return std::nullopt;
  if (p.label.owner != p.actor) return std::nullopt;
  if (!sorted_contains(e.label_universe, p.label)) return std::nullopt;
  if (!sorted_contains(e.data_universe, p.value)) return std::nullopt;
  if (!policy_allows(e.policy, p.at, p.actor, Action::Put)) return std::nullopt;
  LabeledDatum d{p.label, p.value};
  const auto* here = table_find(g.store, p.at);
  if (here && sorted_contains(*here, d)) return std::nullopt;  // no change
  EGraph next = g;
  table_insert(next.store, p.at, d);
  return next;
}

std::optional<EInfrastructure> fold_o(EInfrastructure e, std::span<const Event> hs) {
  for (const Event& h : hs) {
    auto next = st_e(e, h);
    if (!next) return std::nullopt;
    e.graph = std::move(*next);
  }
  return e;
}

}  // namespace attackmc
