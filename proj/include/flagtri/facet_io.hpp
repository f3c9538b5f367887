#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "flagtri/complex.hpp"

namespace flagtri {

enum class FileFormat { Plain, Json };

/// Invariants a JSON facet file may declare under "expected".
struct ExpectedInvariants {
  std::optional<std::vector<long long>> f_vector;
  std::optional<std::vector<long long>> betti_q;
  std::optional<std::vector<long long>> betti_gf2;
  std::optional<bool> flag;
  std::optional<bool> manifold;
  std::optional<bool> orientable;
  std::optional<std::string> classification;
  std::optional<bool> local_minimum;
  std::optional<long long> gamma2;
};

/// Facet list with 1-based labels plus optional metadata.
struct FacetFile {
  std::string name;
  std::vector<std::vector<Label>> facets;
  ExpectedInvariants expected;
};

/// Plain format: one facet per line, whitespace-separated positive labels,
/// '#' starts a comment, "# name: X" sets the name. Throws ParseError.
FacetFile parse_plain(std::istream& in);
/// {"name": str, "facets": [[int]], "expected": {...}}. Throws ParseError.
FacetFile parse_json(std::istream& in);
FacetFile parse_facet_file(std::istream& in, FileFormat format);
/// Format from the extension (".json" or plain).
FacetFile read_facet_file(const std::string& path);
FileFormat format_for_path(const std::string& path);

SimplicialComplex to_complex(const FacetFile& file);

/// Writes vertex v as label v + 1.
std::string write_plain(const SimplicialComplex& c, const std::string& name = "");
std::string write_json(const SimplicialComplex& c, const std::string& name = "");
void write_file(const std::string& path, const std::string& contents);

}  // namespace flagtri
