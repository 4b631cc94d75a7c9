#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "attackmc/infra.hpp"

namespace attackmc {

/// Sequence-based encoding of InfraGraph: every set becomes a strictly
/// ascending duplicate-free sequence, so structural equality of canonical
/// values coincides with set equality and states hash cheaply. Keys with
/// empty value sequences are dropped.
struct EGraph {
  std::vector<LocationId> nodes;
  std::vector<std::pair<LocationId, LocationId>> edges;  // normalized pairs
  std::vector<std::pair<LocationId, std::vector<ActorId>>> actor_at;
  std::vector<std::pair<LocationId, std::vector<LabeledDatum>>> store;

  auto operator<=>(const EGraph&) const = default;
};

/// Sorts, deduplicates and prunes empty entries; idempotent.
EGraph canon(EGraph g);

bool is_canonical(const EGraph& g);

/// Stable 64-bit digest of a canonical graph (FNV-1a over a flat
/// serialization). Used as the visited-set key during exploration.
std::uint64_t digest(const EGraph& g);

/// Canonical infrastructure state plus the fixed model parameters: local
/// policies and the finite data and label universes. Only the graph varies
/// under transitions.
struct EInfrastructure {
  EGraph graph;
  LocalPolicy policy;
  std::vector<DataValue> data_universe;   // canonical
  std::vector<DlmLabel> label_universe;   // canonical

  auto operator<=>(const EInfrastructure&) const = default;
  EInfrastructure with_graph(EGraph g) const;
};

/// Decode the sequence representation back into the set-based model.
Infrastructure eset_i(const EInfrastructure& e);

/// Encode a (finite by construction) infrastructure; eset_i(repr(I)) = I.
EInfrastructure repr(const Infrastructure& inf,
                     const std::set<DataValue>& data_universe,
                     const std::set<DlmLabel>& label_universe);

/// Concrete action instances fed to the step function.
struct MoveEvent {
  ActorId actor;
  LocationId from, to;
  auto operator<=>(const MoveEvent&) const = default;
};
struct GetEvent {
  ActorId actor;
  LocationId at, from;
  LabeledDatum item;
  auto operator<=>(const GetEvent&) const = default;
};
struct PutEvent {
  ActorId actor;
  LocationId at;
  DlmLabel label;
  DataValue value;
  auto operator<=>(const PutEvent&) const = default;
};
using Event = std::variant<MoveEvent, GetEvent, PutEvent>;

std::string to_string(const Event& h);

/// All events whose structural side conditions hold (actor present, edge
/// exists, item present, label owned, value in the universe), in a fixed
/// lexicographic order. Policy enabledness is left to st_e.
std::vector<Event> enum_events(const EInfrastructure& e);

/// Executable single step: canonical successor graph if the event's full
/// guard (structural conditions plus policy) holds and the state actually
/// changes; absent otherwise.
std::optional<EGraph> st_e(const EInfrastructure& e, const Event& h);

/// Left fold of st_e over an event sequence; absent as soon as a step fails.
std::optional<EInfrastructure> fold_o(EInfrastructure e, std::span<const Event> hs);

}  // namespace attackmc
