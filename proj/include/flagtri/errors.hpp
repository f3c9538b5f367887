#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "flagtri/types.hpp"

namespace flagtri {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class FaceNotFound : public Error {
 public:
  explicit FaceNotFound(const Simplex& face)
      : Error("face " + format_simplex(face) + " is not in the complex") {}
};

class EdgeNotFound : public Error {
 public:
  explicit EdgeNotFound(Edge e)
      : Error("edge " + format_simplex(e.simplex()) + " is not in the complex") {}
};

/// Contracting the edge would create a missing triangle. `cycle` is an induced
/// 4-cycle (u, v, y, x) through the edge.
class InadmissibleContraction : public Error {
 public:
  InadmissibleContraction(Edge e, std::array<Vertex, 4> cycle)
      : Error("edge " + format_simplex(e.simplex()) +
              " lies in the induced 4-cycle " +
              format_simplex(std::span<const Vertex>(cycle))),
        edge(e),
        cycle(cycle) {}
  Edge edge;
  std::array<Vertex, 4> cycle;
};

class NotPure : public Error {
 public:
  using Error::Error;
};

class NotManifold : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ConnectedSumInvalid : public Error {
 public:
  using Error::Error;
};

class HandleTooClose : public Error {
 public:
  HandleTooClose(Vertex u, Vertex v, int dist)
      : Error("handle stars too close: dist(" + std::to_string(u) + "," +
              std::to_string(v) + ") = " + std::to_string(dist) + " < 4"),
        u(u),
        v(v),
        dist(dist) {}
  Vertex u;
  Vertex v;
  int dist;
};

class HandleInvalid : public Error {
 public:
  using Error::Error;
};

class ConstructionInvariantViolated : public Error {
 public:
  using Error::Error;
};

/// A search round exceeded its move budget.
class RoundAborted : public Error {
 public:
  explicit RoundAborted(long long moves)
      : Error("round exceeded " + std::to_string(moves) + " moves"), moves(moves) {}
  long long moves;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace flagtri
