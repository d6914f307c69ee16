#include <hgcolor/stream_io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hgcolor {

namespace {

bool parse_u64(std::string_view token, std::uint64_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::string trim_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

EdgeStreamHeader parse_header_line(const std::string& raw) {
    auto fail = [&](const std::string& what) -> EdgeStreamHeader {
        throw StreamFormatError(StreamErrorKind::MalformedHeader, 1, what);
    };

    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0] != "HGS1") return fail("expected HGS1 magic tag");

    EdgeStreamHeader header;
    bool have_n = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string_view t = tokens[i];
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) return fail("malformed header field");
        const std::string_view key = t.substr(0, eq);
        std::uint64_t value = 0;
        if (!parse_u64(t.substr(eq + 1), value)) return fail("malformed header value");
        if (key == "n") {
            header.uniformity = static_cast<std::uint32_t>(value);
            have_n = true;
        } else if (key == "v") {
            header.universe = value;
        } else if (key == "q") {
            header.edge_count = value;
        } else {
            return fail("unknown header field");
        }
    }
    if (!have_n || header.uniformity < 3) return fail("header must declare n >= 3");
    if (header.universe && *header.universe < header.uniformity) {
        return fail("declared universe smaller than n");
    }
    return header;
}

}  // namespace

EdgeStreamReader::EdgeStreamReader(std::istream& in) : in_(in) {
    std::string raw;
    if (!std::getline(in_, raw)) {
        throw StreamFormatError(StreamErrorKind::MalformedHeader, 1, "missing header line");
    }
    header_ = parse_header_line(trim_cr(std::move(raw)));
}

std::optional<Hyperedge> EdgeStreamReader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        const std::string line = trim_cr(std::move(raw));
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;  // blank line

        if (tokens.size() != header_.uniformity) {
            throw StreamFormatError(StreamErrorKind::WrongArity, line_,
                                    "expected " + std::to_string(header_.uniformity) +
                                        " vertex ids, got " + std::to_string(tokens.size()));
        }
        std::vector<VertexId> vertices;
        vertices.reserve(tokens.size());
        std::unordered_set<VertexId> seen;
        for (const auto& t : tokens) {
            std::uint64_t id = 0;
            if (!parse_u64(t, id)) {
                throw StreamFormatError(StreamErrorKind::WrongArity, line_,
                                        "vertex id is not a decimal integer");
            }
            if (header_.universe && (id < 1 || id > *header_.universe)) {
                throw StreamFormatError(StreamErrorKind::OutOfUniverse, line_,
                                        "vertex " + std::to_string(id) +
                                            " outside declared universe");
            }
            if (!seen.insert(id).second) {
                throw StreamFormatError(StreamErrorKind::DuplicateVertex, line_,
                                        "vertex " + std::to_string(id) +
                                            " repeated within an edge");
            }
            vertices.push_back(id);
        }
        return Hyperedge(std::move(vertices));
    }
    return std::nullopt;
}

std::string format_header(const EdgeStreamHeader& header) {
    std::string line = "HGS1 n=" + std::to_string(header.uniformity);
    if (header.universe) line += " v=" + std::to_string(*header.universe);
    if (header.edge_count) line += " q=" + std::to_string(*header.edge_count);
    return line;
}

std::string format_edge(const Hyperedge& edge) {
    std::string line;
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(edge.vertices()[i]);
    }
    return line;
}

void write_stream(std::ostream& out, const EdgeStreamHeader& header,
                  const std::vector<Hyperedge>& edges) {
    for (const auto& e : edges) {
        if (e.size() != header.uniformity) {
            throw std::invalid_argument("edge arity does not match header uniformity");
        }
    }
    out << format_header(header) << '\n';
    for (const auto& e : edges) out << format_edge(e) << '\n';
}

struct FileEdgeSource::Impl {
    std::string path;
    std::ifstream file;
    std::optional<EdgeStreamReader> reader;

    void open() {
        file.close();
        file.clear();
        file.open(path);
        if (!file) throw StreamReplayError("cannot open stream file: " + path);
        reader.emplace(file);
    }
};

FileEdgeSource::FileEdgeSource(std::string path) : impl_(std::make_unique<Impl>()) {
    impl_->path = std::move(path);
    impl_->open();
}

FileEdgeSource::~FileEdgeSource() = default;

const EdgeStreamHeader& FileEdgeSource::header() const { return impl_->reader->header(); }

std::optional<Hyperedge> FileEdgeSource::next() { return impl_->reader->next(); }

void FileEdgeSource::rewind() { impl_->open(); }

}  // namespace hgcolor
