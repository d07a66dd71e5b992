#pragma once

// Vertex coordinates for a vertex-linear map into R^d.
//
// File format:
//
//   config d=<d> seed=<seed|manual>
//   <label> <num>/<den> ... <num>/<den>
//
// Labels beginning with '@' are reserved for auxiliary points such as cone apexes.

#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ilink/complex.hpp"
#include "ilink/rational.hpp"

namespace ilink {

class PointConfig {
public:
    PointConfig() = default;
    explicit PointConfig(int d, std::optional<std::uint64_t> seed = std::nullopt) : d_(d), seed_(seed) {
        if (d < 1) throw InvalidArgument("PointConfig: dimension must be positive");
    }

    int dimension() const noexcept { return d_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Point>& points() const noexcept { return points_; }

    void set(const std::string& label, Point p) {
        if (static_cast<int>(p.size()) != d_)
            throw InvalidArgument("point for '" + label + "' has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(d_));
        if (label.empty()) throw InvalidArgument("empty label");
        if (auto it = index_.find(label); it != index_.end()) {
            points_[it->second] = std::move(p);
            return;
        }
        index_.emplace(label, labels_.size());
        labels_.push_back(label);
        points_.push_back(std::move(p));
    }

    const Point* find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        return it == index_.end() ? nullptr : &points_[it->second];
    }

    const Point& at(std::string_view label) const {
        if (const Point* p = find(label)) return *p;
        throw NotFound("no coordinates for '" + std::string(label) + "'");
    }

    /// Only the entries whose label is not reserved.
    PointConfig vertices_only() const {
        PointConfig out(d_, seed_);
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i][0] != '@') out.set(labels_[i], points_[i]);
        return out;
    }

    friend bool operator==(const PointConfig& a, const PointConfig& b) {
        return a.d_ == b.d_ && a.seed_ == b.seed_ && a.labels_ == b.labels_ && a.points_ == b.points_;
    }

private:
    int d_ = 0;
    std::optional<std::uint64_t> seed_;
    std::vector<std::string> labels_;
    std::vector<Point> points_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Vertex coordinates of one complex, indexed by vertex index.
struct Realization {
    int d = 0;
    std::vector<Point> points;

    const Point& operator[](VertexIndex v) const { return points[static_cast<std::size_t>(v)]; }

    std::vector<Point> of(const Simplex& s) const {
        std::vector<Point> out;
        out.reserve(s.size());
        for (auto v : s) out.push_back((*this)[v]);
        return out;
    }
};

inline Realization realize(const SimplicialComplex& k, const PointConfig& cfg) {
    Realization r{cfg.dimension(), {}};
    r.points.reserve(k.vertex_count());
    for (const auto& label : k.labels()) {
        const Point* p = cfg.find(label);
        if (!p) throw PreconditionError("vertex '" + label + "' has no coordinates");
        r.points.push_back(*p);
    }
    return r;
}

inline std::string write_config(const PointConfig& cfg) {
    std::ostringstream out;
    out << "config d=" << cfg.dimension() << " seed=";
    if (cfg.seed())
        out << *cfg.seed();
    else
        out << "manual";
    out << '\n';
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        out << cfg.labels()[i];
        for (const auto& x : cfg.points()[i]) out << ' ' << format_rat(x);
        out << '\n';
    }
    return out.str();
}

inline PointConfig read_config(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<PointConfig> cfg;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (!cfg) {
            if (tokens.size() != 3 || tokens[0] != "config" || tokens[1].rfind("d=", 0) != 0 ||
                tokens[2].rfind("seed=", 0) != 0)
                throw ParseError("expected 'config d=<d> seed=<seed|manual>'", lineno);
            int d = 0;
            std::optional<std::uint64_t> seed;
            try {
                std::size_t used = 0;
                d = std::stoi(tokens[1].substr(2), &used);
                if (used != tokens[1].size() - 2 || d < 1) throw std::invalid_argument("d");
                auto s = tokens[2].substr(5);
                if (s != "manual") {
                    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("seed");
                    seed = std::stoull(s, &used);
                }
            } catch (const std::exception&) {
                throw ParseError("bad config header", lineno);
            }
            cfg.emplace(d, seed);
            continue;
        }
        if (static_cast<int>(tokens.size()) != cfg->dimension() + 1)
            throw ParseError("expected a label and " + std::to_string(cfg->dimension()) + " coordinates", lineno);
        if (cfg->find(tokens[0])) throw ParseError("duplicate label '" + tokens[0] + "'", lineno);
        Point p;
        try {
            for (std::size_t i = 1; i < tokens.size(); ++i) p.push_back(parse_rat(tokens[i]));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), lineno);
        }
        cfg->set(tokens[0], std::move(p));
    }
    if (!cfg) throw ParseError("missing 'config' header", 0);
    return *cfg;
}

inline PointConfig read_config(const std::string& text) {
    std::istringstream in(text);
    return read_config(in);
}

/// FNV-1a 64-bit, as 16 hex digits. Used to fingerprint inputs in reports.
inline std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string config_fingerprint(const PointConfig& cfg) { return content_hash(write_config(cfg)); }

/// Stream-splitting mix for deriving per-task seeds from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(seed ^ mix(index));
}

/// Uniform integers in [-bound, bound] from mt19937_64. The range reduction is
/// done here (rejection sampling) so that streams are identical on every platform.
class BoxSampler {
public:
    BoxSampler(std::uint64_t seed, std::int64_t bound) : gen_(seed), bound_(bound) {
        if (bound < 1) throw InvalidArgument("coordinate bound must be >= 1");
    }

    std::int64_t next() {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound_) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t x;
        do x = gen_();
        while (x >= limit);
        return static_cast<std::int64_t>(x % span) - bound_;
    }

    Point point(int d) {
        Point p;
        p.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) p.emplace_back(static_cast<long>(next()));
        return p;
    }

private:
    std::mt19937_64 gen_;
    std::int64_t bound_;
};

}  // namespace ilink
