#include "dicritix/io.hpp"

#include <algorithm>
#include <sstream>

namespace dicritix {

std::string write_digraph6(const Digraph& G) {
    const int n = G.order();
    if (n > 62) throw FormatError("digraph6: orders above 62 are not supported");
    std::string s = "&";
    s.push_back(char(n + 63));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            acc = (acc << 1) | (i != j && G.arc(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) s.push_back(char((acc << (6 - nbits)) + 63));
    return s;
}

Digraph parse_digraph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty() || s[0] != '&') throw FormatError("digraph6: malformed header (expected '&')");
    if (s.size() < 2) throw FormatError("digraph6: missing order character");
    int n = int(static_cast<unsigned char>(s[1])) - 63;
    if (n < 0 || n > 62) throw FormatError("digraph6: order character out of range");
    size_t need = size_t((n * n + 5) / 6);
    if (s.size() != 2 + need)
        throw FormatError(s.size() > 2 + need ? "digraph6: trailing garbage" : "digraph6: truncated body");

    Digraph G(n);
    int bit = 0;
    for (size_t ci = 2; ci < s.size(); ++ci) {
        int v = int(static_cast<unsigned char>(s[ci])) - 63;
        if (v < 0 || v > 63) throw FormatError("digraph6: body character out of range");
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (v >> b) & 1;
            if (bit >= n * n) {
                if (on) throw FormatError("digraph6: nonzero padding bits");
                continue;
            }
            int i = bit / n, j = bit % n;
            if (on) {
                if (i == j) throw FormatError("digraph6: loop arc on the diagonal");
                G.add_arc(i, j);
            }
        }
    }
    return G;
}

std::string write_edgelist(const Digraph& G) {
    std::ostringstream out;
    auto arcs = G.arcs();  // already lexicographic
    out << G.order() << ' ' << arcs.size() << '\n';
    for (auto [u, v] : arcs) out << u << ' ' << v << '\n';
    return out.str();
}

Digraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw FormatError("edge list: malformed header line (expected 'n m')");
    if (n < 0 || m < 0 || m > n * (n - 1)) throw FormatError("edge list: impossible n/m header");
    Digraph G(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v)) throw FormatError("edge list: truncated arc list");
        if (u < 0 || u >= n || v < 0 || v >= n) throw FormatError("edge list: vertex out of range");
        if (u == v) throw FormatError("edge list: loop arc");
        if (G.arc(int(u), int(v))) throw FormatError("edge list: duplicate arc");
        G.add_arc(int(u), int(v));
    }
    std::string rest;
    if (in >> rest) throw FormatError("edge list: trailing garbage");
    return G;
}

Digraph parse_digraph(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw FormatError("empty digraph input");
    if (text[i] == '&') {
        std::string line = text.substr(i);
        size_t end = line.find_first_of("\r\n");
        if (end != std::string::npos) {
            std::string tail = line.substr(end);
            if (tail.find_first_not_of(" \t\r\n") != std::string::npos)
                throw FormatError("digraph6: trailing garbage after the encoded line");
            line = line.substr(0, end);
        }
        return parse_digraph6(line);
    }
    return parse_edgelist(text);
}

}  // namespace dicritix
