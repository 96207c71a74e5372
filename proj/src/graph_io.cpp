#include "powercolor/graph_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "powercolor/errors.hpp"

namespace powercolor {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63)
    throw ParseError(std::string("graph6: byte '") + c + "' out of range 63..126");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&')
    throw ParseError("graph6: sparse6/digraph6 records are not supported");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    std::size_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated vertex count");
      value = (value << 6) | static_cast<std::size_t>(sixbits(text[pos++]));
    }
    return value;
  };
  if (text[0] != '~') {
    n = take(1);
  } else {
    pos = 1;
    if (pos < text.size() && text[pos] == '~') {
      pos = 2;
      n = take(6);
    } else {
      n = take(3);
    }
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) +
                     " adjacency bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int chunk = sixbits(text[pos + bit / 6]);
      if (chunk & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const int last = sixbits(text.back());
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
      throw ParseError("graph JSON needs fields \"n\" and \"edges\"");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw ParseError("graph JSON: negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("graph JSON: each edge must be a pair [u, v]");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0) throw ParseError("graph JSON: negative vertex id");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(static_cast<std::size_t>(n), edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

nlohmann::json product_to_json(const ProductSpace& ps) {
  nlohmann::json j = graph_to_json(ps.product());
  auto factors = nlohmann::json::array();
  for (const auto& f : ps.factors()) factors.push_back(graph_to_json(f));
  j["factors"] = std::move(factors);
  j["factor_orders"] = std::vector<std::size_t>(ps.radices().begin(), ps.radices().end());
  j["encoding"] = "mixed-radix, row-major, factor 0 most significant";
  return j;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    auto t = trim(text);
    format = (!t.empty() && t.front() == '{') ? GraphFormat::json : GraphFormat::graph6;
  }
  if (format == GraphFormat::json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  // Only the first record of a multi-line graph6 file is read.
  auto t = trim(text);
  if (auto nl = t.find('\n'); nl != std::string_view::npos) t = t.substr(0, nl);
  return parse_graph6(t);
}

Graph load_graph(const std::string& source, GraphFormat format) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("cannot open " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
  }
  return parse_graph(source, format);
}

}  // namespace powercolor
