#include "ham/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ham {

namespace {

// ---- tokenizing helpers (offsets are byte positions into the input) ----

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }

    void skip_ws()
    {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' ||
                          s[pos] == '\n'))
            ++pos;
    }

    long long read_int(const char* what)
    {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (!eof() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        long long val = 0;
        bool any = false;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            val = val * 10 + (s[pos] - '0');
            if (val > (1LL << 40))
                throw ParseError(std::string("integer too large for ") + what, start);
            ++pos;
            any = true;
        }
        if (!any)
            throw ParseError(std::string("expected ") + what, start);
        return neg ? -val : val;
    }
};

void add_checked_edge(Graph& g, long long u, long long v, size_t offset,
                      std::set<std::pair<int, int>>& seen)
{
    int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("vertex id out of range", offset);
    if (u == v)
        throw ParseError("loop edge rejected", offset);
    std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                            static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second)
        throw ParseError("duplicate edge rejected", offset);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
}

// ---- edge list: "n" then one "u v" (0-based) per line ----

Graph parse_edge_list(std::string_view bytes)
{
    Cursor c{bytes};
    long long n = c.read_int("vertex count");
    if (n < 0)
        throw ParseError("negative vertex count", 0);
    Graph g(static_cast<int>(n));
    std::set<std::pair<int, int>> seen;
    while (true) {
        c.skip_ws();
        if (c.eof())
            break;
        size_t off = c.pos;
        long long u = c.read_int("edge endpoint");
        long long v = c.read_int("edge endpoint");
        add_checked_edge(g, u, v, off, seen);
    }
    return g;
}

std::string serialize_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.vertex_count());
    out += '\n';
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

// ---- DIMACS edge format: "c" comments, "p edge n m", "e u v" (1-based) ----

Graph parse_dimacs(std::string_view bytes)
{
    Cursor c{bytes};
    Graph g;
    bool have_header = false;
    long long declared_edges = 0;
    long long edge_lines = 0;
    std::set<std::pair<int, int>> seen;
    while (true) {
        c.skip_ws();
        if (c.eof())
            break;
        size_t off = c.pos;
        char tag = c.s[c.pos++];
        switch (tag) {
        case 'c': // comment through end of line
            while (!c.eof() && c.s[c.pos] != '\n')
                ++c.pos;
            break;
        case 'p': {
            if (have_header)
                throw ParseError("duplicate problem line", off);
            c.skip_ws();
            size_t kw = c.pos;
            while (!c.eof() && std::isalpha(static_cast<unsigned char>(c.s[c.pos])))
                ++c.pos;
            std::string_view word = c.s.substr(kw, c.pos - kw);
            if (word != "edge" && word != "edges" && word != "col")
                throw ParseError("malformed header: expected 'p edge'", kw);
            long long n = c.read_int("vertex count");
            declared_edges = c.read_int("edge count");
            if (n < 0)
                throw ParseError("negative vertex count", off);
            g = Graph(static_cast<int>(n));
            have_header = true;
            break;
        }
        case 'e': {
            if (!have_header)
                throw ParseError("edge line before header", off);
            long long u = c.read_int("edge endpoint");
            long long v = c.read_int("edge endpoint");
            // 1-based ids on disk, 0-based in memory
            add_checked_edge(g, u - 1, v - 1, off, seen);
            ++edge_lines;
            break;
        }
        default:
            throw ParseError(std::string("unknown line tag '") + tag + "'", off);
        }
    }
    if (!have_header)
        throw ParseError("malformed header: missing 'p edge' line", 0);
    if (edge_lines != declared_edges)
        throw ParseError("edge count mismatch: header declares " +
                             std::to_string(declared_edges) + ", found " +
                             std::to_string(edge_lines),
                         bytes.size());
    return g;
}

std::string serialize_dimacs(const Graph& g)
{
    auto es = g.edges();
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(es.size()) + "\n";
    for (auto [u, v] : es) {
        out += "e ";
        out += std::to_string(u + 1);
        out += ' ';
        out += std::to_string(v + 1);
        out += '\n';
    }
    return out;
}

// ---- graph6 (canonical bit-packed format) ----
//
// N(n): one byte n+63 for n <= 62; '~' plus three 6-bit bytes for
// n <= 258047; '~~' plus six 6-bit bytes beyond. R(x): the upper triangle
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte, MSB first,
// zero-padded, each byte offset by 63.

Graph parse_graph6(std::string_view bytes)
{
    // optional format header
    constexpr std::string_view header = ">>graph6<<";
    size_t pos = 0;
    if (bytes.substr(0, header.size()) == header)
        pos = header.size();
    // trim trailing whitespace/newline
    size_t end = bytes.size();
    while (end > pos && (bytes[end - 1] == '\n' || bytes[end - 1] == '\r' ||
                         bytes[end - 1] == ' '))
        --end;
    auto byte_at = [&](size_t i) -> int {
        if (i >= end)
            throw ParseError("truncated graph6 data", i);
        unsigned char ch = bytes[i];
        if (ch < 63 || ch > 126)
            throw ParseError("invalid graph6 byte", i);
        return ch - 63;
    };

    long long n;
    if (bytes.size() > pos && bytes[pos] == '~') {
        if (bytes.size() > pos + 1 && bytes[pos + 1] == '~') {
            n = 0;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | byte_at(pos + 2 + i);
            pos += 8;
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | byte_at(pos + 1 + i);
            pos += 4;
        }
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > 1'000'000)
        throw ParseError("graph6 vertex count too large", pos);

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(end - pos) != nbytes)
        throw ParseError("graph6 data length mismatch", end);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte_at(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g)
{
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        out += '~';
        out += '~';
        for (int s = 30; s >= 0; s -= 6)
            out += static_cast<char>(((n >> s) & 63) + 63);
    }
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if (nacc > 0)
        out += static_cast<char>((acc << (6 - nacc)) + 63);
    return out;
}

} // namespace

Graph parse_graph(std::string_view bytes, GraphFormat format)
{
    switch (format) {
    case GraphFormat::graph6:
        return parse_graph6(bytes);
    case GraphFormat::dimacs_edge:
        return parse_dimacs(bytes);
    case GraphFormat::edge_list:
        return parse_edge_list(bytes);
    }
    throw std::invalid_argument("unknown format");
}

std::string serialize_graph(const Graph& g, GraphFormat format)
{
    switch (format) {
    case GraphFormat::graph6:
        return serialize_graph6(g);
    case GraphFormat::dimacs_edge:
        return serialize_dimacs(g);
    case GraphFormat::edge_list:
        return serialize_edge_list(g);
    }
    throw std::invalid_argument("unknown format");
}

GraphFormat format_from_name(std::string_view name)
{
    if (name == "graph6" || name == "g6")
        return GraphFormat::graph6;
    if (name == "dimacs" || name == "dimacs-edge")
        return GraphFormat::dimacs_edge;
    if (name == "edge-list" || name == "edgelist")
        return GraphFormat::edge_list;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

std::string_view format_name(GraphFormat f)
{
    switch (f) {
    case GraphFormat::graph6:
        return "graph6";
    case GraphFormat::dimacs_edge:
        return "dimacs-edge";
    case GraphFormat::edge_list:
        return "edge-list";
    }
    return "?";
}

GraphFormat sniff_format(std::string_view bytes)
{
    size_t i = 0;
    while (i < bytes.size() &&
           std::isspace(static_cast<unsigned char>(bytes[i])))
        ++i;
    if (i >= bytes.size())
        return GraphFormat::graph6;
    // "p edge"/"c ..." lines; a graph6 payload never holds a space after its
    // first byte, so requiring one disambiguates
    if ((bytes[i] == 'p' || bytes[i] == 'c') && i + 1 < bytes.size() &&
        (bytes[i + 1] == ' ' || bytes[i + 1] == '\t'))
        return GraphFormat::dimacs_edge;
    if (bytes.substr(i, 10) == ">>graph6<<")
        return GraphFormat::graph6;
    // a bare decimal count followed by line end -> edge list (digits are
    // not valid leading graph6 bytes)
    size_t j = i;
    while (j < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[j])))
        ++j;
    if (j > i && (j == bytes.size() || bytes[j] == '\n' || bytes[j] == '\r' ||
                  bytes[j] == ' '))
        return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

} // namespace ham
