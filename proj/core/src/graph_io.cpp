#include "dihedrant/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dihedrant {

namespace {

std::string next_data_line(std::istream& in, int& line_no)
{
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    return line;
  }
  throw std::invalid_argument("edgelist: unexpected end of file at line " +
                              std::to_string(line_no));
}

} // namespace

Graph read_edgelist(std::istream& in)
{
  int line_no = 0;
  std::istringstream header(next_data_line(in, line_no));
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edgelist: bad header at line " + std::to_string(line_no));

  Graph g((int)n);
  for (long long k = 0; k < m; ++k) {
    std::istringstream row(next_data_line(in, line_no));
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v <= u || v >= n)
      throw std::invalid_argument("edgelist: bad edge at line " + std::to_string(line_no));
    g.add_edge((int)u, (int)v);
  }
  return g;
}

void write_edgelist(std::ostream& out, const Graph& g)
{
  auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    out << u << ' ' << v << '\n';
}

Graph parse_graph6(const std::string& input)
{
  std::string line = input;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0)
    line = line.substr(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  if (line.empty())
    throw std::invalid_argument("graph6: empty line");

  std::size_t pos = 0;
  long long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw std::invalid_argument("graph6: graphs beyond 258047 vertices unsupported");
    if (line.size() < 4)
      throw std::invalid_argument("graph6: truncated size field");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int c = (unsigned char)line[k] - 63;
      if (c < 0 || c > 63)
        throw std::invalid_argument("graph6: invalid size byte");
      n = (n << 6) | c;
    }
    pos = 4;
  } else {
    n = (unsigned char)line[0] - 63;
    if (n < 0 || n > 62)
      throw std::invalid_argument("graph6: invalid size byte");
    pos = 1;
  }

  long long bits = n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if ((long long)line.size() - (long long)pos != need)
    throw std::invalid_argument("graph6: body length mismatch");

  Graph g((int)n);
  long long bit = 0;
  int i = 0, j = 1;  // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
  for (long long k = 0; k < need; ++k) {
    int word = (unsigned char)line[pos + k] - 63;
    if (word < 0 || word > 63)
      throw std::invalid_argument("graph6: invalid body byte");
    for (int s = 5; s >= 0 && bit < bits; --s, ++bit) {
      if ((word >> s) & 1)
        g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g)
{
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += (char)(n + 63);
  } else if (n <= 258047) {
    out += '~';
    out += (char)(((n >> 12) & 63) + 63);
    out += (char)(((n >> 6) & 63) + 63);
    out += (char)((n & 63) + 63);
  } else {
    throw std::invalid_argument("graph6: graphs beyond 258047 vertices unsupported");
  }

  int word = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += (char)(word + 63);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out += (char)((word << (6 - filled)) + 63);
  return out;
}

Graph read_graph6(std::istream& in)
{
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line != ">>graph6<<")
      return parse_graph6(line);
  }
  throw std::invalid_argument("graph6: no graph line found");
}

void write_graph6(std::ostream& out, const Graph& g)
{
  out << to_graph6(g) << '\n';
}

Graph read_graph_auto(std::istream& in)
{
  std::stringstream buffered;
  buffered << in.rdbuf();
  std::string content = buffered.str();

  // an edgelist starts with a comment or an integer header line
  std::size_t start = content.find_first_not_of(" \t\r\n");
  if (start != std::string::npos &&
      (content[start] == '#' || (content[start] >= '0' && content[start] <= '9'))) {
    std::istringstream el(content);
    return read_edgelist(el);
  }
  std::istringstream g6(content);
  return read_graph6(g6);
}

} // namespace dihedrant
