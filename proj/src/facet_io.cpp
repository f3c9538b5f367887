#include "flagtri/facet_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "flagtri/errors.hpp"

namespace flagtri {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::string> facet_problem(const std::vector<Label>& f) {
  if (f.empty()) return "empty facet";
  std::set<Label> seen;
  for (Label l : f) {
    if (l < 1) return "label " + std::to_string(l) + " is not positive";
    if (!seen.insert(l).second)
      return "duplicate vertex: facet lists " + std::to_string(l) + " twice";
  }
  return std::nullopt;
}

int line_of(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

template <typename T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

FacetFile parse_plain(std::istream& in) {
  FacetFile out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      const std::string comment = trim(raw.substr(hash + 1));
      if (comment.rfind("name:", 0) == 0) out.name = trim(comment.substr(5));
      body = raw.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    std::vector<Label> facet;
    std::istringstream words(body);
    std::string w;
    while (words >> w) {
      Label v = 0;
      const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || ptr != w.data() + w.size())
        throw ParseError(line, "'" + w + "' is not an integer label");
      facet.push_back(v);
    }
    if (auto why = facet_problem(facet)) throw ParseError(line, *why);
    out.facets.push_back(std::move(facet));
  }
  if (out.facets.empty()) throw ParseError(line, "no facets");
  return out;
}

FacetFile parse_json(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), e.what());
  }
  FacetFile out;
  try {
    if (!j.is_object()) throw ParseError(1, "top level is not an object");
    if (j.contains("name")) out.name = j.at("name").get<std::string>();
    if (!j.contains("facets") || !j.at("facets").is_array())
      throw ParseError(1, "missing \"facets\" array");
    int index = 0;
    for (const auto& f : j.at("facets")) {
      ++index;
      auto facet = f.get<std::vector<Label>>();
      if (auto why = facet_problem(facet))
        throw ParseError(1, "facet " + std::to_string(index) + ": " + *why);
      out.facets.push_back(std::move(facet));
    }
    if (out.facets.empty()) throw ParseError(1, "no facets");
    if (j.contains("expected")) {
      const auto& x = j.at("expected");
      auto& e = out.expected;
      e.f_vector = get_opt<std::vector<long long>>(x, "f_vector");
      e.betti_q = get_opt<std::vector<long long>>(x, "betti_q");
      e.betti_gf2 = get_opt<std::vector<long long>>(x, "betti_gf2");
      e.flag = get_opt<bool>(x, "flag");
      e.manifold = get_opt<bool>(x, "manifold");
      e.orientable = get_opt<bool>(x, "orientable");
      e.classification = get_opt<std::string>(x, "classification");
      e.local_minimum = get_opt<bool>(x, "local_minimum");
      e.gamma2 = get_opt<long long>(x, "gamma2");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, e.what());
  }
  return out;
}

FacetFile parse_facet_file(std::istream& in, FileFormat format) {
  return format == FileFormat::Json ? parse_json(in) : parse_plain(in);
}

FileFormat format_for_path(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() >= ext.size() &&
      path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return FileFormat::Json;
  return FileFormat::Plain;
}

FacetFile read_facet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return parse_facet_file(in, format_for_path(path));
}

SimplicialComplex to_complex(const FacetFile& file) {
  return SimplicialComplex::from_facets(file.facets);
}

std::string write_plain(const SimplicialComplex& c, const std::string& name) {
  std::ostringstream out;
  if (!name.empty()) out << "# name: " << name << "\n";
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i] + 1;
    out << "\n";
  }
  return out.str();
}

std::string write_json(const SimplicialComplex& c, const std::string& name) {
  nlohmann::json j;
  j["name"] = name;
  auto facets = nlohmann::json::array();
  for (const auto& f : c.facets()) {
    auto row = nlohmann::json::array();
    for (Vertex v : f) row.push_back(v + 1);
    facets.push_back(row);
  }
  j["facets"] = facets;
  return j.dump() + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace flagtri
