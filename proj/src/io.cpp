#include "xyz/io.hpp"

#include <fstream>
#include <sstream>

#include "xyz/errors.hpp"

namespace xyz {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    for (std::size_t no = 1; std::getline(is, raw); ++no) {
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        out.push_back({no, t});
    }
    return out;
}

long parse_long(const std::string& tok, const std::string& source, std::size_t line) {
    std::string t = trim(tok);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw ParseError(source, line, "expected an integer, got '" + t + "'");
    }
    if (used != t.size()) throw ParseError(source, line, "expected an integer, got '" + t + "'");
    return v;
}

std::size_t parse_size(const std::string& tok, const std::string& source, std::size_t line) {
    long v = parse_long(tok, source, line);
    if (v <= 0) throw ParseError(source, line, "expected a positive size, got '" + trim(tok) + "'");
    return static_cast<std::size_t>(v);
}

std::vector<long> parse_exponents(const std::string& list, const std::string& source, std::size_t line) {
    std::vector<long> out;
    if (trim(list).empty()) return out;
    std::istringstream is(list);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_long(tok, source, line));
    return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

BitMatrix parse_matrix(const std::string& text, const std::string& source) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(source, 0, "empty matrix description");
    const Line& head = lines[0];
    if (head.text.rfind("circ", 0) == 0) {
        auto colon = head.text.find(':');
        if (colon == std::string::npos) throw ParseError(source, head.number, "expected 'circ n: e1,e2,...'");
        std::size_t n = parse_size(head.text.substr(4, colon - 4), source, head.number);
        auto exps = parse_exponents(head.text.substr(colon + 1), source, head.number);
        if (lines.size() > 1) throw ParseError(source, lines[1].number, "unexpected content after circulant line");
        return circulant_of(exps, n);
    }
    std::istringstream hs(head.text);
    std::string a, b, extra;
    if (!(hs >> a >> b) || (hs >> extra)) throw ParseError(source, head.number, "expected header 'm n'");
    std::size_t m = parse_size(a, source, head.number), n = parse_size(b, source, head.number);
    if (lines.size() - 1 != m)
        throw ParseError(source, lines.size() > m + 1 ? lines[m + 1].number : lines.back().number,
                         "expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
    BitMatrix h(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& l = lines[i + 1];
        std::size_t col = 0;
        for (char ch : l.text) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch != '0' && ch != '1')
                throw ParseError(source, l.number, std::string("unexpected character '") + ch + "' in matrix row");
            if (col >= n) throw ParseError(source, l.number, "row longer than " + std::to_string(n) + " columns");
            if (ch == '1') h.set(i, col);
            ++col;
        }
        if (col != n)
            throw ParseError(source, l.number, "row has " + std::to_string(col) + " columns, expected " + std::to_string(n));
    }
    return h;
}

BitMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path), path); }

std::string format_matrix(const BitMatrix& h) {
    std::string out = std::to_string(h.rows()) + " " + std::to_string(h.cols()) + "\n";
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) out += h.get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

CyclicSpec parse_cyclic(const std::string& text, const std::string& source) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(source, 0, "empty cyclic description");
    CyclicSpec spec;
    {
        std::istringstream hs(lines[0].text);
        std::string t[3], extra;
        if (!(hs >> t[0] >> t[1] >> t[2]) || (hs >> extra))
            throw ParseError(source, lines[0].number, "expected header 'n1 n2 n3'");
        for (int l = 0; l < 3; ++l) spec.n[l] = parse_size(t[l], source, lines[0].number);
    }
    bool seen[3] = {false, false, false};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        auto colon = l.text.find(':');
        std::string key = colon == std::string::npos ? "" : trim(l.text.substr(0, colon));
        if (key != "P1" && key != "P2" && key != "P3")
            throw ParseError(source, l.number, "expected 'P1:', 'P2:' or 'P3:'");
        int axis = key[1] - '1';
        if (seen[axis]) throw ParseError(source, l.number, key + " given twice");
        seen[axis] = true;
        spec.p[axis] = parse_exponents(l.text.substr(colon + 1), source, l.number);
    }
    for (int l = 0; l < 3; ++l)
        if (!seen[l]) throw ParseError(source, 0, "missing P" + std::to_string(l + 1));
    return spec;
}

CyclicSpec read_cyclic_file(const std::string& path) { return parse_cyclic(read_text_file(path), path); }

}  // namespace xyz
