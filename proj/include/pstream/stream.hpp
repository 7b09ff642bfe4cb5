#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pstream/ledger.hpp"

namespace pstream {

using Vertex = std::int32_t;

enum class UpdateOp : std::uint8_t { Insert, Delete };

struct EdgeUpdate {
  Vertex u = 0;  // canonical storage: u < v
  Vertex v = 0;
  UpdateOp op = UpdateOp::Insert;

  bool operator==(const EdgeUpdate&) const = default;
};

// Canonicalizes endpoint order; throws on self-loops.
EdgeUpdate make_update(Vertex a, Vertex b, UpdateOp op = UpdateOp::Insert);

enum class StreamModel : std::uint8_t { InsertOnly, InsertDelete };

std::string to_string(StreamModel model);

// Raised for malformed streams. position() is the 1-based index of the
// offending update; 0 means the header.
class StreamError : public std::runtime_error {
 public:
  StreamError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ModelMismatchError : public std::runtime_error {
 public:
  explicit ModelMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// An ordered sequence of edge updates over vertex set [0, n). Immutable after
// construction; every pass sees the updates in identical order.
class ReplayableStream {
 public:
  // Validates and adopts the update sequence. Rejects self-loops, out-of-range
  // ids, deletes of absent edges, inserts in a delete stream's tail state that
  // would leave net multiplicity > 1 at end of stream, and any Delete in an
  // insert-only stream.
  static ReplayableStream open(Vertex n, StreamModel model, std::vector<EdgeUpdate> updates);

  Vertex vertex_count() const { return n_; }
  StreamModel model() const { return model_; }
  const std::vector<EdgeUpdate>& updates() const { return updates_; }
  std::size_t size() const { return updates_.size(); }

  // One pass over the stream. The counter is bumped when the pass starts, so
  // an aborted pass still costs one. Body returns false to stop early.
  template <class Body>
  void pass(PassCounter& pc, Body&& body) const {
    ++pc.passes;
    for (const EdgeUpdate& e : updates_)
      if (!body(e)) break;
  }

 private:
  ReplayableStream(Vertex n, StreamModel model, std::vector<EdgeUpdate> updates)
      : n_(n), model_(model), updates_(std::move(updates)) {}

  Vertex n_;
  StreamModel model_;
  std::vector<EdgeUpdate> updates_;
};

// Text format: header "n <count> <insert-only|insert-delete>", then one update
// per line, "+ u v" or "- u v", 0-indexed. Insert-only files may omit the "+".
ReplayableStream read_stream(std::istream& in);
ReplayableStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const ReplayableStream& s);
void write_stream_file(const std::string& path, const ReplayableStream& s);

}  // namespace pstream
