#include "incdom/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "incdom/errors.hpp"

namespace incdom::io {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next line, or nullopt at end of input. Trailing '\r' is dropped.
    std::optional<std::string> next() {
        std::string line;
        if (!std::getline(is_, line)) return std::nullopt;
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    }
    int line_no() const { return line_no_; }

private:
    std::istream& is_;
    int line_no_ = 0;
};

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'", line_no);
        }
        if (pos != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line_no);
        out.push_back(v);
    }
    return out;
}

long long header_value(const std::string& tok, const std::string& key, int line_no) {
    if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected '" + key + "=<value>' in header", line_no);
    const auto vals = parse_ints(tok.substr(key.size() + 1), line_no);
    if (vals.size() != 1) throw ParseError("bad value for '" + key + "'", line_no);
    return vals[0];
}

SetFamily read_family_section(LineReader& in, bool stop_at_separator, bool& saw_separator) {
    saw_separator = false;
    std::optional<std::string> line;
    do {
        line = in.next();
        if (!line) throw ParseError("missing 'n=<n> k=<k> count=<m>' header", in.line_no() + 1);
    } while (blank(*line) || (*line)[0] == '#');

    std::istringstream hs(*line);
    std::string tn, tk, tc, extra;
    hs >> tn >> tk >> tc;
    if (hs >> extra) throw ParseError("unexpected text after header", in.line_no());
    const int hdr_line = in.line_no();
    const long long n = header_value(tn, "n", hdr_line);
    const long long k = header_value(tk, "k", hdr_line);
    const long long count = header_value(tc, "count", hdr_line);
    if (n < 0 || n > kMaxGround) throw ParseError("n must lie in [0, 64]", hdr_line);
    if (k < 0 || k > n) throw ParseError("k must lie in [0, n]", hdr_line);
    if (count < 0 || static_cast<unsigned long long>(count) > binomial(static_cast<int>(n), static_cast<int>(k)))
        throw ParseError("count out of range", hdr_line);

    std::vector<Mask> members;
    Mask prev = 0;
    for (long long i = 0; i < count; ++i) {
        line = in.next();
        if (!line || (stop_at_separator && *line == "---")) throw ParseError("expected " + std::to_string(count) + " sets, found " + std::to_string(i), in.line_no());
        const auto vals = parse_ints(*line, in.line_no());
        if (static_cast<long long>(vals.size()) != k)
            throw ParseError("set has " + std::to_string(vals.size()) + " elements, expected " + std::to_string(k), in.line_no());
        Mask m = 0;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (vals[j] < 1 || vals[j] > n) throw ParseError("element " + std::to_string(vals[j]) + " outside [1,n]", in.line_no());
            if (j > 0 && vals[j] <= vals[j - 1]) throw ParseError("elements must be strictly increasing", in.line_no());
            m |= element_bit(static_cast<int>(vals[j]));
        }
        if (i > 0 && m == prev) throw ParseError("duplicate set", in.line_no());
        if (i > 0 && m < prev) throw ParseError("sets are not in colex order", in.line_no());
        members.push_back(m);
        prev = m;
    }
    // trailing blank lines only (or the separator)
    while ((line = in.next())) {
        if (stop_at_separator && *line == "---") {
            saw_separator = true;
            break;
        }
        if (!blank(*line)) throw ParseError(stop_at_separator ? "expected '---' after the lower section" : "more sets than count", in.line_no());
    }
    return SetFamily(static_cast<int>(n), static_cast<int>(k), std::move(members));
}

template <class T, class Reader>
T from_file(const std::string& path, Reader&& read) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'", 0);
    return read(f);
}

}  // namespace

void write_set_family(std::ostream& os, const SetFamily& f) {
    os << "n=" << f.ground() << " k=" << f.uniformity() << " count=" << f.size() << '\n';
    for (Mask m : f.masks()) {
        bool first = true;
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            if (!first) os << ' ';
            os << std::countr_zero(rest) + 1;
            first = false;
        }
        os << '\n';
    }
}

SetFamily read_set_family(std::istream& is) {
    LineReader in(is);
    bool sep = false;
    return read_family_section(in, false, sep);
}

void write_graph(std::ostream& os, const Graph& g) {
    os << "n=" << g.order() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& is) {
    LineReader in(is);
    std::optional<std::string> line;
    do {
        line = in.next();
        if (!line) throw ParseError("missing 'n=<n>' header", in.line_no() + 1);
    } while (blank(*line) || (*line)[0] == '#');
    std::istringstream hs(*line);
    std::string tn, extra;
    hs >> tn;
    if (hs >> extra) throw ParseError("unexpected text after header", in.line_no());
    const long long n = header_value(tn, "n", in.line_no());
    if (n < 0 || n > kMaxGround) throw ParseError("n must lie in [0, 64]", in.line_no());
    std::vector<Edge> edges;
    while ((line = in.next())) {
        if (blank(*line)) continue;
        const auto vals = parse_ints(*line, in.line_no());
        if (vals.size() != 2) throw ParseError("expected 'u v'", in.line_no());
        if (vals[0] < 1 || vals[1] > n || vals[0] >= vals[1]) throw ParseError("edge must satisfy 1 <= u < v <= n", in.line_no());
        const Edge e{static_cast<int>(vals[0]), static_cast<int>(vals[1])};
        if (!edges.empty() && !(edges.back() < e)) throw ParseError(edges.back() == e ? "duplicate edge" : "edges are not sorted", in.line_no());
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), edges);
}

void write_dompair(std::ostream& os, const DomPair& d) {
    write_set_family(os, d.lower());
    os << "---\n";
    write_set_family(os, d.upper());
}

DomPair read_dompair(std::istream& is) {
    LineReader in(is);
    bool sep = false;
    SetFamily lower = read_family_section(in, true, sep);
    if (!sep) throw ParseError("missing '---' separator", in.line_no());
    bool unused = false;
    SetFamily upper = read_family_section(in, false, unused);
    if (lower.ground() != upper.ground()) throw ParseError("sections use different n", in.line_no());
    if (!(1 <= lower.uniformity() && lower.uniformity() < upper.uniformity()))
        throw ParseError("need 1 <= k (lower) < l (upper)", in.line_no());
    return DomPair(std::move(lower), std::move(upper));
}

std::string to_text(const SetFamily& f) {
    std::ostringstream os;
    write_set_family(os, f);
    return os.str();
}

std::string to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string to_text(const DomPair& d) {
    std::ostringstream os;
    write_dompair(os, d);
    return os.str();
}

SetFamily set_family_from_file(const std::string& path) {
    return from_file<SetFamily>(path, [](std::istream& is) { return read_set_family(is); });
}

Graph graph_from_file(const std::string& path) {
    return from_file<Graph>(path, [](std::istream& is) { return read_graph(is); });
}

DomPair dompair_from_file(const std::string& path) {
    return from_file<DomPair>(path, [](std::istream& is) { return read_dompair(is); });
}

}  // namespace incdom::io
