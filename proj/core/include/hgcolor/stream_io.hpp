#ifndef HGCOLOR_STREAM_IO_HPP
#define HGCOLOR_STREAM_IO_HPP

#include <hgcolor/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hgcolor {

// HGS1: text edge-stream format.
//   header line:  HGS1 n=<n> [v=<v>] [q=<q>]
//   edge lines:   <id> <id> ... <id>     (n decimal ids, space separated)
// Vertex ids are positive; with v declared they must lie in [1, v].

struct EdgeStreamHeader {
    std::uint32_t uniformity = 0;
    std::optional<std::uint64_t> universe;
    std::optional<std::uint64_t> edge_count;
};

enum class StreamErrorKind {
    MalformedHeader,
    WrongArity,
    DuplicateVertex,
    OutOfUniverse,
};

class StreamFormatError : public std::runtime_error {
public:
    StreamFormatError(StreamErrorKind kind, std::uint64_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          kind_(kind),
          line_(line) {}

    StreamErrorKind kind() const { return kind_; }
    std::uint64_t line() const { return line_; }

private:
    StreamErrorKind kind_;
    std::uint64_t line_;
};

class StreamReplayError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Single-pass reader. Parses the header eagerly, then yields edges one at
 * a time in file order; the stream is never materialized.
 */
class EdgeStreamReader {
public:
    explicit EdgeStreamReader(std::istream& in);

    const EdgeStreamHeader& header() const { return header_; }

    /// Next edge, or nullopt at end of stream. Throws StreamFormatError.
    std::optional<Hyperedge> next();

private:
    std::istream& in_;
    EdgeStreamHeader header_;
    std::uint64_t line_ = 1;  // header consumed line 1
};

void write_stream(std::ostream& out, const EdgeStreamHeader& header,
                  const std::vector<Hyperedge>& edges);

std::string format_header(const EdgeStreamHeader& header);
std::string format_edge(const Hyperedge& edge);

/// Pull-based edge supply for the streaming colorers.
class EdgeSource {
public:
    virtual ~EdgeSource() = default;

    virtual std::optional<Hyperedge> next() = 0;

    /// Restart from the first edge. Throws StreamReplayError if unsupported.
    virtual void rewind() = 0;
};

class VectorEdgeSource final : public EdgeSource {
public:
    explicit VectorEdgeSource(std::vector<Hyperedge> edges) : edges_(std::move(edges)) {}

    std::optional<Hyperedge> next() override {
        if (pos_ >= edges_.size()) return std::nullopt;
        return edges_[pos_++];
    }

    void rewind() override { pos_ = 0; }

private:
    std::vector<Hyperedge> edges_;
    std::size_t pos_ = 0;
};

/// Streams an HGS1 file; rewind re-opens it, so multi-pass algorithms work.
class FileEdgeSource final : public EdgeSource {
public:
    explicit FileEdgeSource(std::string path);
    ~FileEdgeSource() override;

    const EdgeStreamHeader& header() const;
    std::optional<Hyperedge> next() override;
    void rewind() override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot reader adapter for already-open istreams; rewind is unsupported.
class IstreamEdgeSource final : public EdgeSource {
public:
    explicit IstreamEdgeSource(std::istream& in) : reader_(in) {}

    const EdgeStreamHeader& header() const { return reader_.header(); }
    std::optional<Hyperedge> next() override { return reader_.next(); }
    void rewind() override {
        throw StreamReplayError("input stream does not support rewinding");
    }

private:
    EdgeStreamReader reader_;
};

}  // namespace hgcolor

#endif  // HGCOLOR_STREAM_IO_HPP
