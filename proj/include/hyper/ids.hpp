#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace hyper {

/// Vertex identifier as it appears in input files. Raw values must stay below
/// 2^63 so a vertex and a hyperedge id can share one tagged 64-bit space.
struct VertexId {
  uint64_t raw = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// Hyperedge identifier. Same 2^63 bound as VertexId.
struct HyperedgeId {
  uint64_t raw = 0;
  auto operator<=>(const HyperedgeId&) const = default;
};

inline constexpr uint64_t kMaxRawId = (uint64_t{1} << 63) - 1;

/// One id space covering both sides of the bipartite structure. The top bit
/// tags hyperedges, so messages and destination selectors can carry a single
/// node type. Ordering is vertices first, then hyperedges, each by raw id.
class NodeId {
 public:
  static constexpr uint64_t kHyperedgeBit = uint64_t{1} << 63;

  constexpr NodeId() = default;
  constexpr NodeId(VertexId v) : bits_(v.raw) {}
  constexpr NodeId(HyperedgeId e) : bits_(e.raw | kHyperedgeBit) {}

  constexpr bool is_vertex() const { return (bits_ & kHyperedgeBit) == 0; }
  constexpr bool is_hyperedge() const { return !is_vertex(); }

  /// Valid only when is_vertex().
  constexpr VertexId vertex() const { return VertexId{bits_}; }
  /// Valid only when is_hyperedge().
  constexpr HyperedgeId hyperedge() const { return HyperedgeId{bits_ & ~kHyperedgeBit}; }

  constexpr uint64_t bits() const { return bits_; }

  auto operator<=>(const NodeId&) const = default;

 private:
  uint64_t bits_ = 0;
};

}  // namespace hyper

template <>
struct std::hash<hyper::VertexId> {
  size_t operator()(hyper::VertexId v) const noexcept { return std::hash<uint64_t>{}(v.raw); }
};

template <>
struct std::hash<hyper::HyperedgeId> {
  size_t operator()(hyper::HyperedgeId e) const noexcept { return std::hash<uint64_t>{}(e.raw); }
};

template <>
struct std::hash<hyper::NodeId> {
  size_t operator()(hyper::NodeId n) const noexcept { return std::hash<uint64_t>{}(n.bits()); }
};
