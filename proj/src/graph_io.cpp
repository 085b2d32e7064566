#include "circk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "circk/errors.hpp"

namespace circk {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long number(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

class Parser {
 public:
  GraphFile run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line(tokens(text.substr(pos, end - pos)), line_no);
      pos = end + 1;
    }
    if (!header_seen_) throw ParseError(line_no, "missing 'p' header");
    if (file_.graph.edge_count() != declared_edges_)
      throw ParseError(header_line_, "header declares " + std::to_string(declared_edges_) + " edges, found " +
                                         std::to_string(file_.graph.edge_count()));
    return std::move(file_);
  }

 private:
  Vertex vertex(std::string_view token, int line) const {
    const long long v = number(token, line);
    if (v < 1 || v > file_.graph.vertex_count())
      throw ParseError(line, "vertex " + std::string(token) + " out of range 1.." +
                                 std::to_string(file_.graph.vertex_count()));
    return static_cast<Vertex>(v - 1);
  }

  void line(const std::vector<std::string_view>& t, int no) {
    if (t.empty() || t[0] == "c") return;
    const std::string_view kind = t[0];
    if (kind != "p" && !header_seen_) throw ParseError(no, "'" + std::string(kind) + "' line before 'p' header");
    if (kind == "p") {
      if (header_seen_) throw ParseError(no, "second 'p' header");
      if (t.size() != 3) throw ParseError(no, "'p' needs <n> <m>");
      const long long n = number(t[1], no), m = number(t[2], no);
      if (n < 0 || m < 0) throw ParseError(no, "negative size in header");
      file_.graph = Graph(static_cast<int>(n));
      declared_edges_ = static_cast<int>(m);
      header_seen_ = true;
      header_line_ = no;
    } else if (kind == "e") {
      if (t.size() != 3) throw ParseError(no, "'e' needs two endpoints");
      if (!file_.roots.empty()) throw ParseError(no, "'e' after 'r'");
      const Vertex u = vertex(t[1], no), v = vertex(t[2], no);
      if (u == v) throw ParseError(no, "self-loop");
      if (!file_.graph.add_edge(u, v)) throw ParseError(no, "duplicate edge");
    } else if (kind == "r") {
      if (!file_.roots.empty()) throw ParseError(no, "second 'r' line");
      if (t.size() < 2) throw ParseError(no, "'r' needs at least one vertex");
      for (std::size_t i = 1; i < t.size(); ++i) {
        const Vertex v = vertex(t[i], no);
        for (Vertex r : file_.roots)
          if (r == v) throw ParseError(no, "repeated root");
        file_.roots.push_back(v);
      }
    } else if (kind == "b") {
      if (file_.roots.empty()) throw ParseError(no, "'b' before 'r'");
      const std::size_t k = file_.roots.size() - 1;
      if (t.size() != k + 2) throw ParseError(no, "'b' needs a vertex and " + std::to_string(k) + " attachments");
      BuildStep step{vertex(t[1], no), {}};
      for (std::size_t i = 2; i < t.size(); ++i) step.attachment.push_back(vertex(t[i], no));
      file_.certificate.push_back(std::move(step));
    } else {
      throw ParseError(no, "unknown line type '" + std::string(kind) + "'");
    }
  }

  GraphFile file_;
  bool header_seen_ = false;
  int header_line_ = 0;
  int declared_edges_ = 0;
};

}  // namespace

RootedPartialKTree GraphFile::to_rooted() const {
  if (roots.empty()) throw PreconditionFailed("graph file has no 'r' line");
  return RootedPartialKTree{graph, static_cast<int>(roots.size()) - 1, roots, certificate};
}

GraphFile parse_graph_text(std::string_view text) { return Parser().run(text); }

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

std::string format_graph_text(const GraphFile& file) {
  std::ostringstream out;
  out << "p " << file.graph.vertex_count() << ' ' << file.graph.edge_count() << '\n';
  for (const Edge& e : file.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  if (!file.roots.empty()) {
    out << 'r';
    for (Vertex r : file.roots) out << ' ' << r + 1;
    out << '\n';
  }
  for (const BuildStep& step : file.certificate) {
    out << "b " << step.vertex + 1;
    for (Vertex a : step.attachment) out << ' ' << a + 1;
    out << '\n';
  }
  return out.str();
}

std::string format_graph_text(const Graph& g) { return format_graph_text(GraphFile{g, {}, {}}); }

std::string format_graph_text(const RootedPartialKTree& t) {
  return format_graph_text(GraphFile{t.graph, t.roots, t.certificate});
}

}  // namespace circk
