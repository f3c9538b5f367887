#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagtri/complex.hpp"

namespace flagtri {

enum class MoveKind { SubdivideEdge, ContractEdge };

struct Move {
  MoveKind kind = MoveKind::SubdivideEdge;
  Edge edge;
  /// Id given to the inserted vertex (subdivisions only).
  std::optional<Vertex> new_vertex;

  bool operator==(const Move&) const = default;
};

/// Replayable record of one walk: applying `moves` in order to the seed
/// complex reproduces the final complex exactly.
struct MoveTrace {
  std::string seed_complex_id;
  std::uint64_t rng_seed = 0;
  std::vector<Move> moves;
};

/// Stellar subdivision at `face`: faces not containing `face` are kept and
/// the star is replaced by v * (boundary of face) * link(face) for a new
/// vertex v = vertex_count().
SimplicialComplex stellar_subdivide(const SimplicialComplex& c,
                                    const Simplex& face);

/// contr(e): the larger endpoint is identified with the smaller one.
SimplicialComplex contract_simplicial(const SimplicialComplex& c, Edge e);

/// Edge subdivision of a flag complex. The new vertex gets id
/// vertex_count() and is joined to both endpoints and to lk(e).
FlagComplex subdivide_edge(const FlagComplex& c, Edge e);

struct Admissibility {
  bool admissible = true;
  /// Induced 4-cycle (u, v, y, x): edges uv, vy, yx, xu; no chords uy, vx.
  std::optional<std::array<Vertex, 4>> witness;
  explicit operator bool() const { return admissible; }
};

/// An edge {u,v} is admissible when it is not an edge of any induced
/// 4-cycle u-v-y-x, i.e. no x ~ u, y ~ v with x !~ v, y !~ u and x ~ y.
Admissibility is_admissible(const FlagComplex& c, Edge e);

/// All admissible edges in lexicographic order.
std::vector<Edge> admissible_edges(const FlagComplex& c);

/// Admissible contraction onto the smaller endpoint. The larger endpoint is
/// deleted and every id above it shifts down by one.
FlagComplex contract_edge(const FlagComplex& c, Edge e);

bool satisfies_link_condition(const SimplicialComplex& c, Edge e);

/// Applies one recorded move; used by trace replay.
FlagComplex apply_move(const FlagComplex& c, const Move& m);
FlagComplex replay(const FlagComplex& seed, const MoveTrace& trace);

std::string to_string(const Move& m);

}  // namespace flagtri
