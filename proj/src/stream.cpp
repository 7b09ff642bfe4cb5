#include "pstream/stream.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace pstream {

EdgeUpdate make_update(Vertex a, Vertex b, UpdateOp op) {
  if (a == b) throw StreamError("self-loop " + std::to_string(a), 0);
  if (a > b) std::swap(a, b);
  return EdgeUpdate{a, b, op};
}

std::string to_string(StreamModel model) {
  return model == StreamModel::InsertOnly ? "insert-only" : "insert-delete";
}

StreamError::StreamError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (update " + std::to_string(position) + ")"),
      position_(position) {}

ReplayableStream ReplayableStream::open(Vertex n, StreamModel model,
                                        std::vector<EdgeUpdate> updates) {
  if (n < 0) throw StreamError("negative vertex count", 0);
  std::map<std::pair<Vertex, Vertex>, int> net;
  for (std::size_t i = 0; i < updates.size(); ++i) {
    const std::size_t pos = i + 1;
    EdgeUpdate& e = updates[i];
    if (e.u == e.v)
      throw StreamError("self-loop on vertex " + std::to_string(e.u), pos);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw StreamError("vertex id out of range [0," + std::to_string(n) + ")", pos);
    int& count = net[{e.u, e.v}];
    if (e.op == UpdateOp::Insert) {
      ++count;
    } else {
      if (model == StreamModel::InsertOnly)
        throw StreamError("delete in insert-only stream", pos);
      if (count <= 0)
        throw StreamError("delete of edge with non-positive multiplicity", pos);
      --count;
    }
  }
  for (const auto& [edge, count] : net) {
    if (count > 1)
      throw StreamError("edge (" + std::to_string(edge.first) + "," +
                            std::to_string(edge.second) +
                            ") has net multiplicity " + std::to_string(count) +
                            " at end of stream",
                        updates.size());
  }
  return ReplayableStream(n, model, std::move(updates));
}

ReplayableStream read_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw StreamError("missing header line", 0);
  std::istringstream header(line);
  std::string tag, model_word;
  long long n = -1;
  header >> tag >> n >> model_word;
  if (tag != "n" || n < 0)
    throw StreamError("bad header, want \"n <count> <model>\"", 0);
  StreamModel model;
  if (model_word == "insert-only")
    model = StreamModel::InsertOnly;
  else if (model_word == "insert-delete")
    model = StreamModel::InsertDelete;
  else
    throw StreamError("unknown stream model \"" + model_word + "\"", 0);

  std::vector<EdgeUpdate> updates;
  std::size_t pos = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++pos;
    std::istringstream row(line);
    std::string first;
    row >> first;
    UpdateOp op = UpdateOp::Insert;
    long long a = -1, b = -1;
    if (first == "+" || first == "-") {
      op = first == "+" ? UpdateOp::Insert : UpdateOp::Delete;
      row >> a >> b;
    } else {
      // insert-only shorthand: "u v"
      try {
        a = std::stoll(first);
      } catch (const std::exception&) {
        throw StreamError("unparseable update \"" + line + "\"", pos);
      }
      row >> b;
    }
    if (row.fail() || a < 0 || b < 0)
      throw StreamError("unparseable update \"" + line + "\"", pos);
    updates.push_back(EdgeUpdate{static_cast<Vertex>(a), static_cast<Vertex>(b), op});
  }
  return ReplayableStream::open(static_cast<Vertex>(n), model, std::move(updates));
}

ReplayableStream read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open " + path, 0);
  return read_stream(in);
}

void write_stream(std::ostream& out, const ReplayableStream& s) {
  out << "n " << s.vertex_count() << ' ' << to_string(s.model()) << '\n';
  for (const EdgeUpdate& e : s.updates()) {
    if (s.model() == StreamModel::InsertDelete)
      out << (e.op == UpdateOp::Insert ? "+ " : "- ");
    out << e.u << ' ' << e.v << '\n';
  }
}

void write_stream_file(const std::string& path, const ReplayableStream& s) {
  std::ofstream out(path);
  if (!out) throw StreamError("cannot open " + path + " for writing", 0);
  write_stream(out, s);
}

}  // namespace pstream
