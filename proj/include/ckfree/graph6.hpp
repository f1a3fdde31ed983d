#pragma once

// graph6 encoding: a size header followed by the upper triangle of the
// adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed six bits per byte, most significant bit first, each byte offset
// by 63.  Headers: one byte for n <= 62, '~' plus three bytes for
// n <= 258047, "~~" plus six bytes otherwise.
//
// Encoding and decoding both stream, so graphs whose encoding does not fit
// in memory can still be written or round-tripped.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <streambuf>
#include <string>
#include <string_view>
#include <vector>

#include "ckfree/errors.hpp"
#include "ckfree/graph.hpp"

namespace ckfree {

inline constexpr std::uint64_t kGraph6MaxOrder = 68'719'476'735ULL;

inline std::size_t graph6_header_length(std::uint64_t n) {
    return n <= 62 ? 1 : n <= 258'047 ? 4 : 8;
}

// Bytes in the encoding of an n-vertex graph, without a trailing newline.
inline std::uint64_t graph6_length(std::uint64_t n) {
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    return graph6_header_length(n) + (bits + 5) / 6;
}

// Pull-based producer of a graph's graph6 bytes.
class Graph6Source {
public:
    explicit Graph6Source(const Graph& g) : n_(g.order()) {
        if (n_ > kGraph6MaxOrder) throw ResourceError("graph too large for graph6");
        if (n_ <= 62) {
            header_.push_back(static_cast<char>(63 + n_));
        } else {
            const int groups = n_ <= 258'047 ? 3 : 6;
            header_.append(groups == 3 ? 1 : 2, '~');
            for (int gi = groups - 1; gi >= 0; --gi)
                header_.push_back(static_cast<char>(63 + ((n_ >> (6 * gi)) & 63)));
        }
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v : g.neighbors(u))
                if (u < v) ones_.push_back(std::uint64_t{v} * (v - 1) / 2 + u);
        std::sort(ones_.begin(), ones_.end());
        data_bytes_ = graph6_length(n_) - header_.size();
    }

    std::uint64_t total() const { return header_.size() + data_bytes_; }

    // Copies up to cap bytes; returns 0 once the encoding is exhausted.
    std::size_t read(char* buf, std::size_t cap) {
        std::size_t written = 0;
        while (pos_ < header_.size() && written < cap) buf[written++] = header_[pos_++];
        if (written == cap) return written;
        const std::uint64_t data_pos = pos_ - header_.size();
        const std::uint64_t len = std::min<std::uint64_t>(cap - written, data_bytes_ - data_pos);
        if (len == 0) return written;
        char* out = buf + written;
        std::memset(out, 63, len);
        const std::uint64_t bit_begin = data_pos * 6, bit_end = (data_pos + len) * 6;
        while (next_one_ < ones_.size() && ones_[next_one_] < bit_end) {
            const std::uint64_t b = ones_[next_one_++];
            if (b < bit_begin) continue;
            out[b / 6 - data_pos] = static_cast<char>(out[b / 6 - data_pos] + (1 << (5 - b % 6)));
        }
        pos_ += len;
        return written + len;
    }

private:
    std::uint64_t n_;
    std::string header_;
    std::vector<std::uint64_t> ones_;
    std::uint64_t data_bytes_ = 0;
    std::uint64_t pos_ = 0;
    std::size_t next_one_ = 0;
};

// std::streambuf view of a Graph6Source.
class Graph6StreamBuf : public std::streambuf {
public:
    explicit Graph6StreamBuf(const Graph& g, std::size_t chunk = 1 << 16) : src_(g), buf_(chunk) {}

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        const std::size_t got = src_.read(buf_.data(), buf_.size());
        if (got == 0) return traits_type::eof();
        setg(buf_.data(), buf_.data(), buf_.data() + got);
        return traits_type::to_int_type(*gptr());
    }

private:
    Graph6Source src_;
    std::vector<char> buf_;
};

inline void write_graph6(const Graph& g, std::ostream& out) {
    Graph6Source src(g);
    std::vector<char> buf(1 << 16);
    while (std::size_t got = src.read(buf.data(), buf.size())) out.write(buf.data(), static_cast<std::streamsize>(got));
    out.put('\n');
}

inline std::string encode_graph6(const Graph& g) {
    Graph6Source src(g);
    std::string s(src.total(), '\0');
    std::size_t off = 0;
    while (std::size_t got = src.read(s.data() + off, s.size() - off)) off += got;
    return s;
}

// Reads one graph6 record.  A single trailing newline is accepted; any
// other deviation is a ParseError carrying the byte offset.
inline Graph read_graph6(std::istream& in) {
    std::uint64_t offset = 0;
    auto next = [&](bool required) -> int {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) {
            if (required) throw ParseError("unexpected end of graph6 input", offset);
            return -1;
        }
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range", offset);
        ++offset;
        return c - 63;
    };

    std::uint64_t n = static_cast<std::uint64_t>(next(true));
    if (n == 63) {
        if (in.peek() == '~') {
            next(true);
            n = 0;
            for (int t = 0; t < 6; ++t) n = (n << 6) | static_cast<std::uint64_t>(next(true));
            if (n <= 258'047) throw ParseError("non-canonical graph6 size header", offset);
        } else {
            n = 0;
            for (int t = 0; t < 3; ++t) n = (n << 6) | static_cast<std::uint64_t>(next(true));
            if (n <= 62) throw ParseError("non-canonical graph6 size header", offset);
        }
    }
    if (n > std::numeric_limits<VertexId>::max()) throw ResourceError("graph6 order too large");

    const std::uint64_t data = graph6_length(n) - graph6_header_length(n);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<Edge> edges;
    std::vector<char> buf(1 << 16);
    std::uint64_t done = 0;
    // Column of the current position: bit b lies in column j with
    // j(j-1)/2 <= b < j(j+1)/2.
    auto column_of = [](std::uint64_t b) {
        auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(b))) / 2.0);
        while (j * (j - 1) / 2 > b) --j;
        while ((j + 1) * j / 2 <= b) ++j;
        return j;
    };
    while (done < data) {
        const auto want = static_cast<std::streamsize>(std::min<std::uint64_t>(buf.size(), data - done));
        in.read(buf.data(), want);
        const std::streamsize got = in.gcount();
        for (std::streamsize t = 0; t < got; ++t) {
            const int c = static_cast<unsigned char>(buf[t]);
            if (c == 63) continue;
            if (c < 63 || c > 126)
                throw ParseError("byte outside the graph6 range", offset + static_cast<std::uint64_t>(t));
            const std::uint64_t byte = done + static_cast<std::uint64_t>(t);
            const int v = c - 63;
            for (int bit = 0; bit < 6; ++bit) {
                if (!(v & (1 << (5 - bit)))) continue;
                const std::uint64_t b = byte * 6 + static_cast<std::uint64_t>(bit);
                if (b >= bits)
                    throw ParseError("nonzero graph6 padding bits", offset + static_cast<std::uint64_t>(t));
                const std::uint64_t j = column_of(b);
                edges.emplace_back(static_cast<VertexId>(b - j * (j - 1) / 2), static_cast<VertexId>(j));
            }
        }
        offset += static_cast<std::uint64_t>(got);
        done += static_cast<std::uint64_t>(got);
        if (got < want) throw ParseError("graph6 data shorter than the header implies", offset);
    }
    const int tail = in.peek();
    if (tail == '\n') {
        in.get();
    } else if (tail != std::char_traits<char>::eof()) {
        throw ParseError("trailing bytes after graph6 data", offset);
    }
    return Graph::from_edges(n, edges);
}

inline Graph decode_graph6(std::string_view text) {
    struct ViewBuf : std::streambuf {
        explicit ViewBuf(std::string_view s) {
            char* p = const_cast<char*>(s.data());
            setg(p, p, p + s.size());
        }
    } vb(text);
    std::istream in(&vb);
    return read_graph6(in);
}

// Round-trips g through its graph6 encoding without materialising it.
inline bool graph6_round_trip(const Graph& g) {
    Graph6StreamBuf sb(g);
    std::istream in(&sb);
    return read_graph6(in) == g;
}

}  // namespace ckfree
