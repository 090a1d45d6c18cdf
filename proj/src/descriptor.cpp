#include "cutideal/descriptor.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <vector>

#include "cutideal/errors.hpp"

namespace cutideal {

namespace {

int parse_count(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || value < 1) {
    throw ParseError("bad number '" + std::string(text) + "' in descriptor '" + std::string(whole) + "'");
  }
  return value;
}

Graph parse_simple(std::string_view text, std::string_view whole) {
  if (text == "K4-e") return k4_minus_edge();
  if (text.size() < 2) throw ParseError("unknown descriptor '" + std::string(whole) + "'");
  const char head = text.front();
  const std::string_view rest = text.substr(1);
  try {
    if (head == 'C') return cycle_graph(parse_count(rest, whole));
    if (head == 'P') return path_graph(parse_count(rest, whole));
    if (head == 'K') {
      std::vector<int> parts;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = rest.find(',', start);
        parts.push_back(parse_count(rest.substr(start, comma - start), whole));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (parts.size() == 1) return complete_graph(parts[0]);
      return complete_multipartite(parts);
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in descriptor '" + std::string(whole) + "'");
  }
  throw ParseError("unknown descriptor '" + std::string(whole) + "'");
}

Graph parse_clique_sum(std::string_view text, std::string_view whole) {
  const std::size_t plus = text.find('+');
  const std::size_t at = text.find('@');
  if (plus == std::string_view::npos || at == std::string_view::npos || at < plus) {
    throw ParseError("clique-sum needs the form <A>+<B>@<glue>: '" + std::string(whole) + "'");
  }
  const Graph a = parse_simple(text.substr(0, plus), whole);
  const Graph b = parse_simple(text.substr(plus + 1, at - plus - 1), whole);
  const std::string_view glue = text.substr(at + 1);

  std::vector<std::pair<int, int>> pairs;
  if (glue == "vertex") {
    pairs = {{a.order(), 1}};
  } else if (glue == "edge") {
    if (a.size() == 0 || b.size() == 0 || !b.adjacent(1, 2)) {
      throw ParseError("edge sum needs an edge in A and the edge 1-2 in B: '" + std::string(whole) + "'");
    }
    const Edge last = a.edges().back();
    pairs = {{last.u, 1}, {last.v, 2}};
  } else if (const std::size_t dash = glue.find('-'); dash != std::string_view::npos) {
    pairs = {{parse_count(glue.substr(0, dash), whole), 1}, {parse_count(glue.substr(dash + 1), whole), 2}};
  } else {
    pairs = {{parse_count(glue, whole), 1}};
  }
  try {
    return clique_sum(a, b, pairs).graph;
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in descriptor '" + std::string(whole) + "'");
  }
}

}  // namespace

Graph parse_descriptor(const std::string& text) {
  constexpr std::string_view prefix = "clique-sum:";
  const std::string_view view(text);
  if (view.starts_with(prefix)) return parse_clique_sum(view.substr(prefix.size()), view);
  return parse_simple(view, view);
}

Graph load_graph(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open " + input);
    return read_graph(in);
  }
  return parse_descriptor(input);
}

}  // namespace cutideal
