#include "distlap/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "distlap/graph6.hpp"

namespace distlap {

namespace {

Error line_error(int line, const std::string& why) {
  return Error(Errc::ParseError, "edge list line " + std::to_string(line) + ": " + why);
}

// Splits on ASCII whitespace and parses every token as a non-negative int.
std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    const auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw line_error(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

std::vector<int> parse_csv_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(Errc::ParseError, std::string(what) + ": bad integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream os;
  if (path == "-") {
    os << stdin_stream.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    os << f.rdbuf();
  }
  return os.str();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && parse_ints(lines.back(), static_cast<int>(lines.size())).empty()) lines.pop_back();
  if (lines.empty()) throw line_error(1, "missing header 'n m'");
  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 2) throw line_error(1, "header must be 'n m'");
  const long long n = header[0], m = header[1];
  if (n < 1 || n > 1000000) throw line_error(1, "vertex count out of range");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw line_error(static_cast<int>(std::min<long long>(lines.size(), m + 1)),
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = parse_ints(lines[i], static_cast<int>(i + 1));
    if (uv.size() != 2) throw line_error(static_cast<int>(i + 1), "edge lines must be 'u v'");
    if (uv[0] >= n || uv[1] >= n) throw line_error(static_cast<int>(i + 1), "vertex out of range");
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph_text(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto first = text.substr(0, text.find('\n'));
    format = first.find_first_of(" \t") != std::string_view::npos ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos) {
    throw Error(Errc::ParseError, "graph6 input must hold exactly one graph");
  }
  return graph6_decode(text);
}

Graph read_graph(const std::string& path, GraphFormat format, std::istream& stdin_stream) {
  return parse_graph_text(slurp(path, stdin_stream), format);
}

FamilySpec parse_family_spec(std::string_view spec, std::istream& stdin_stream) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::ParseError, "family spec needs 'name:args'");
  const auto name = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  if (name == "attach") {
    // The file name may itself contain commas, so take the last three fields.
    std::vector<std::size_t> commas;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == ',') commas.push_back(i);
    if (commas.size() < 3) throw Error(Errc::ParseError, "attach:FILE,u,p,q");
    const std::size_t cut = commas[commas.size() - 3];
    const auto nums = parse_csv_ints(args.substr(cut + 1), "attach");
    Graph base = read_graph(std::string(args.substr(0, cut)), GraphFormat::Auto, stdin_stream);
    return {attach_pendant_paths(base, nums[0], nums[1], nums[2]), std::nullopt};
  }
  const auto nums = parse_csv_ints(args, name);
  auto expect = [&](std::size_t count) {
    if (nums.size() != count) {
      throw Error(Errc::ParseError, std::string(name) + " takes " + std::to_string(count) + " integers");
    }
  };
  if (name == "path") {
    expect(1);
    return {path(nums[0]), std::nullopt};
  }
  if (name == "star") {
    expect(1);
    return {star(nums[0]), std::nullopt};
  }
  if (name == "broom") {
    expect(4);
    return {double_broom(DoubleBroomParams::make(nums[0], nums[1], nums[2], nums[3])), std::nullopt};
  }
  if (name == "triplestar") {
    expect(5);
    TripleStarPathParams p{nums[0], nums[1], nums[2], nums[3], nums[4]};
    return {triple_star_path(p), p};
  }
  throw Error(Errc::ParseError, "unknown family '" + std::string(name) + "'");
}

}  // namespace distlap
