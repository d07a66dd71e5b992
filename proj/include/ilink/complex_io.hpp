#pragma once

// Line-oriented complex files:
//
//   complex <name> dim=<d>
//   a0
//   a1 a2 a3
//
// One line per maximal simplex, labels separated by spaces, '#' starts a
// comment. Vertices are indexed in canonical label order on read, so a
// complex produced by the standard constructors reads back equal to itself.

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ilink/complex.hpp"

namespace ilink {

/// Sort key: plain "a<i>" labels first by i, then "a<j>^<i>" by (i, j), then anything else.
struct LabelKey {
    int kind = 2;
    long major = 0;
    long minor = 0;
    std::string text;

    friend bool operator<(const LabelKey& x, const LabelKey& y) {
        return std::tie(x.kind, x.major, x.minor, x.text) < std::tie(y.kind, y.major, y.minor, y.text);
    }
};

namespace detail {

inline bool parse_digits(std::string_view s, long& out) {
    if (s.empty() || s.size() > 9) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace detail

inline LabelKey label_key(std::string_view label) {
    LabelKey key;
    key.text = std::string(label);
    if (label.size() < 2 || label[0] != 'a') return key;
    auto body = label.substr(1);
    auto caret = body.find('^');
    long sub = 0, sup = 0;
    if (caret == std::string_view::npos) {
        if (detail::parse_digits(body, sub)) {
            key.kind = 0;
            key.major = sub;
        }
    } else if (detail::parse_digits(body.substr(0, caret), sub) &&
               detail::parse_digits(body.substr(caret + 1), sup)) {
        key.kind = 1;
        key.major = sup;
        key.minor = sub;
    }
    return key;
}

inline std::string write_complex(const SimplicialComplex& k) {
    std::vector<std::vector<LabelKey>> rows;
    for (const auto& s : k.maximal_simplices()) {
        std::vector<LabelKey> row;
        for (auto v : s) row.push_back(label_key(k.label(v)));
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    std::ostringstream out;
    out << "complex " << (k.name().empty() ? std::string("unnamed") : k.name()) << " dim=" << k.dim() << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].text;
        out << '\n';
    }
    return out.str();
}

inline SimplicialComplex read_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string name;
    long declared_dim = -2;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 3 || tokens[0] != "complex" || tokens[2].rfind("dim=", 0) != 0)
                throw ParseError("expected 'complex <name> dim=<d>'", lineno);
            name = tokens[1];
            auto d = std::string_view(tokens[2]).substr(4);
            bool neg = !d.empty() && d[0] == '-';
            long value = 0;
            if (!detail::parse_digits(neg ? d.substr(1) : d, value)) throw ParseError("bad dim field", lineno);
            declared_dim = neg ? -value : value;
            have_header = true;
            continue;
        }
        std::vector<std::string> sorted = tokens;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("repeated vertex in simplex", lineno);
        rows.push_back(std::move(tokens));
    }
    if (!have_header) throw ParseError("missing 'complex' header", 0);

    std::vector<std::string> labels;
    for (const auto& r : rows) labels.insert(labels.end(), r.begin(), r.end());
    std::sort(labels.begin(), labels.end(),
              [](const auto& x, const auto& y) { return label_key(x) < label_key(y); });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto host = SimplicialComplex::from_generators(name, labels, {});
    std::vector<Simplex> gens;
    for (const auto& r : rows) {
        std::vector<VertexIndex> v;
        for (const auto& l : r) v.push_back(host.index_of(l));
        gens.emplace_back(std::move(v));
    }
    auto k = SimplicialComplex::from_generators(name, std::move(labels), gens);
    if (k.dim() != declared_dim)
        throw ParseError("header declares dim=" + std::to_string(declared_dim) + " but simplices have dim " +
                             std::to_string(k.dim()),
                         1);
    return k;
}

inline SimplicialComplex read_complex(const std::string& text) {
    std::istringstream in(text);
    return read_complex(in);
}

}  // namespace ilink
