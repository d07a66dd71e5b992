#pragma once

// Command-line front end. `run` is the whole program minus process plumbing
// so that tests can drive it with in-memory streams.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ilink/ilink.hpp"

namespace ilink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
    std::string command;
    std::string target;
    int n = 1;
    std::uint64_t seed = 1;
    std::uint64_t restarts = 1000;
    std::int64_t bound = 1000;
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    int apexes = 1;
    bool full = false;
    std::vector<std::string> minus;
    std::string family;
    std::string fixtures_dir;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Write via a temporary sibling and rename, so readers never see a partial file.
inline void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + path + "'");
        out << bytes;
        if (!out) throw Error("write failed for '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

inline std::string format_fvector(const std::vector<std::size_t>& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
    return s + ")";
}

/// A standard name ("N1", "SIGMA", ...) or a path to a complex file.
inline SimplicialComplex load_target(const RunConfig& rc) {
    if (auto name = parse_standard_name(rc.target)) return standard_complex(*name, rc.n);
    if (rc.target.empty()) throw InvalidArgument("missing complex name or file");
    return read_complex(read_file(rc.target));
}

inline std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::string render(const ParityReport& rep, const std::string& format) {
    if (format == "text") return to_text(rep);
    return to_json(rep).dump(2) + "\n";
}

inline int status_exit(Status s) {
    switch (s) {
        case Status::Pass: return kExitOk;
        case Status::Fail: return kExitFail;
        default: return kExitError;
    }
}

inline StandardName require_name(const RunConfig& rc, std::initializer_list<StandardName> allowed) {
    auto name = parse_standard_name(rc.target);
    if (name)
        for (auto a : allowed)
            if (a == *name) return *name;
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + to_string(a);
    throw InvalidArgument(rc.command + ": complex must be one of " + list);
}

/// The config from --config, or else the first seeded sample that embeds `k`
/// (when `need_embedding`) or is merely in general position.
inline PointConfig obtain_config(const RunConfig& rc, const SimplicialComplex& k, bool need_embedding) {
    if (!rc.config_path.empty()) return read_config(read_file(rc.config_path));
    const int d = 2 * rc.n;
    if (!need_embedding) return sample_config(rc.seed, d, k, rc.bound);
    for (std::uint64_t i = 0; i < rc.restarts; ++i) {
        auto cfg = sample_config(derive_seed(rc.seed, i), d, k, rc.bound);
        try {
            if (is_linear_embedding(k, cfg)) return cfg;
        } catch (const DegeneracyError&) {
        }
    }
    throw SamplingError("no embedding of " + k.name() + " found in " + std::to_string(rc.restarts) + " samples");
}

inline int cmd_build(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    if (!rc.minus.empty()) {
        std::vector<Simplex> doomed;
        for (const auto& m : rc.minus) {
            std::vector<VertexIndex> v;
            for (const auto& l : split_labels(m)) v.push_back(k.index_of(l));
            doomed.emplace_back(std::move(v));
        }
        std::string name = k.name() + "-minus";
        for (const auto& s : doomed) {
            name += "-";
            for (auto v : s) name += k.label(v);
        }
        k = remove_top_simplices(k, doomed).renamed(name);
    }
    const auto text = write_complex(k);
    if (!rc.out_path.empty()) {
        write_file_atomic(rc.out_path, text);
        out << "f-vector: " << format_fvector(f_vector(k)) << "\n";
    } else {
        out << text << "# f-vector: " << format_fvector(f_vector(k)) << "\n";
    }
    return kExitOk;
}

inline int cmd_pairs(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    auto name = parse_standard_name(rc.target);
    std::vector<LinkPair> pairs;
    if (name && !rc.full && (*name == StandardName::N1 || *name == StandardName::N2 || *name == StandardName::N3))
        pairs = canonical_pairs(*name, rc.n);
    else
        pairs = enumerate_sphere_pairs(k, rc.n - 1, rc.n);
    if (rc.format == "text") {
        out << format_pair_list(k, pairs);
        return kExitOk;
    }
    ordered_json j;
    j["subject"] = k.name();
    j["n"] = rc.n;
    j["mode"] = (name && !rc.full && *name != StandardName::Sigma && *name != StandardName::Join3) ? "canonical" : "full";
    j["pairs"] = ordered_json::array();
    for (const auto& p : pairs)
        j["pairs"].push_back({{"gamma", format_sphere(k, p.gamma)},
                              {"gamma_prime", format_sphere(k, p.gamma_prime)},
                              {"shape", shape_tag(p.gamma.shape) + "/" + shape_tag(p.gamma_prime.shape)}});
    out << j.dump(2) << "\n";
    return kExitOk;
}

inline int cmd_sample(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    auto cfg = sample_config(rc.seed, 2 * rc.n, k, rc.bound);
    const auto text = write_config(cfg);
    if (!rc.out_path.empty()) {
        write_file_atomic(rc.out_path, text);
        out << "config_hash: " << config_fingerprint(cfg) << "\n";
    } else {
        out << text;
    }
    return kExitOk;
}

inline int cmd_check_embedding(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    auto cfg = obtain_config(rc, k, false);
    auto r = realize(k, cfg);
    auto gp = in_general_position(r);
    ordered_json j;
    j["subject"] = k.name();
    j["config_hash"] = config_fingerprint(cfg);
    j["general_position"] = gp.ok;
    if (!gp.ok) {
        std::vector<std::string> which;
        for (auto i : gp.violating) which.push_back(k.label(static_cast<VertexIndex>(i)));
        j["violating"] = which;
        out << (rc.format == "text" ? "general_position: false\n" : j.dump(2) + "\n");
        return kExitError;
    }
    auto crossings = double_point_set(k, r);
    j["double_points"] = ordered_json::array();
    for (const auto& p : crossings) {
        std::vector<std::string> pt;
        for (const auto& x : p.hit.point) pt.push_back(format_rat(x));
        j["double_points"].push_back({{"s", k.format(p.s)}, {"t", k.format(p.t)}, {"point", pt}});
    }
    j["embedding"] = crossings.empty();
    if (rc.format == "text") {
        out << "subject: " << k.name() << "\nconfig_hash: " << config_fingerprint(cfg) << "\n";
        for (const auto& p : crossings) out << "double point: {" << k.format(p.s) << "} x {" << k.format(p.t) << "}\n";
        out << "embedding: " << (crossings.empty() ? "true" : "false") << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return crossings.empty() ? kExitOk : kExitFail;
}

inline int cmd_lk(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    auto cfg = obtain_config(rc, k, true);
    auto r = realize(k, cfg);
    auto name = parse_standard_name(rc.target);
    auto pairs = (name && !rc.full && *name != StandardName::Sigma && *name != StandardName::Join3)
                     ? canonical_pairs(*name, rc.n)
                     : enumerate_sphere_pairs(k, rc.n - 1, rc.n);
    ParityReport rep;
    rep.subject = k.name();
    rep.n = rc.n;
    rep.d = r.d;
    rep.config_hash = config_fingerprint(cfg);
    const Point* fixed = cfg.find("@apex");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        int bit;
        if (fixed) {
            ApexOptions ao;
            ao.point = *fixed;
            bit = lk2(pairs[i], r, ao);
        } else {
            bit = detail::agreed_lk2(pairs[i], r, derive_seed(rc.seed, i), rc.apexes);
        }
        rep.pairs.push_back({format_sphere(k, pairs[i].gamma), format_sphere(k, pairs[i].gamma_prime), bit});
    }
    rep.close();
    out << render(rep, rc.format);
    return kExitOk;
}

inline int cmd_vkf(const RunConfig& rc, std::ostream& out) {
    auto name = require_name(rc, {StandardName::Sigma, StandardName::Join3});
    auto k = standard_complex(name, rc.n);
    auto cfg = obtain_config(rc, k, false);
    auto rep = vkf_parity(name, rc.n, cfg);
    out << render(rep, rc.format);
    return status_exit(rep.status);
}

inline AuditOptions audit_options(const RunConfig& rc) {
    AuditOptions ao;
    ao.seed = rc.seed;
    ao.apexes = rc.apexes;
    return ao;
}

inline int cmd_audit(const RunConfig& rc, std::ostream& out) {
    auto name = require_name(rc, {StandardName::N1, StandardName::N2, StandardName::N3});
    auto k = standard_complex(name, rc.n);
    auto cfg = obtain_config(rc, k, true);
    auto rep = theorem1_audit(name, rc.n, cfg, audit_options(rc));
    out << render(rep, rc.format);
    return status_exit(rep.status);
}

inline int cmd_crosscheck(const RunConfig& rc, std::ostream& out) {
    auto name = require_name(rc, {StandardName::N1, StandardName::N2, StandardName::N3});
    auto k = standard_complex(name, rc.n);
    auto cfg = obtain_config(rc, k, true);
    auto res = eq1_crosscheck_detail(name, rc.n, cfg, audit_options(rc));
    if (rc.format == "text") {
        out << "subject: " << k.name() << "\nconfig_hash: " << config_fingerprint(cfg) << "\n";
        for (std::size_t i = 0; i < res.pairs.size(); ++i) {
            const auto& p = res.pairs[i];
            out << "pair " << i << ": gamma=" << p.gamma << " gamma'=" << p.gamma_prime << " straight=" << p.straight
                << " sampled=";
            for (auto b : p.sampled) out << b;
            out << "\n";
        }
        out << "lambda_total: " << res.lambda_total << "\n"
            << "parent: " << res.parent << " crossings=" << res.parent_crossings << " parity=" << res.parent_parity
            << "\n"
            << "ok: " << (res.ok ? "true" : "false") << "\n";
    } else {
        ordered_json j;
        j["subject"] = k.name();
        j["n"] = rc.n;
        j["config_hash"] = config_fingerprint(cfg);
        j["pairs"] = ordered_json::array();
        for (const auto& p : res.pairs)
            j["pairs"].push_back(
                {{"gamma", p.gamma}, {"gamma_prime", p.gamma_prime}, {"straight", p.straight}, {"sampled", p.sampled}});
        j["lambda_total"] = res.lambda_total;
        j["parent"] = res.parent;
        j["parent_crossings"] = res.parent_crossings;
        j["parent_parity"] = res.parent_parity;
        j["ok"] = res.ok;
        out << j.dump(2) << "\n";
    }
    return res.ok ? kExitOk : kExitFail;
}

inline std::optional<StandardName> family_of(const RunConfig& rc) {
    if (rc.family.empty()) return parse_standard_name(rc.target);
    auto f = parse_standard_name(rc.family);
    if (!f) throw InvalidArgument("unknown --family '" + rc.family + "'");
    return f;
}

inline int cmd_linkless_verify(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    if (rc.config_path.empty()) throw InvalidArgument("linkless-verify needs --config");
    auto cfg = read_config(read_file(rc.config_path));
    LinklessChecker checker(k, rc.n, rc.n >= 3 ? family_of(rc) : std::nullopt);
    auto res = checker.check(cfg, rc.seed);
    ordered_json j;
    j["subject"] = k.name();
    j["n"] = rc.n;
    j["config_hash"] = config_fingerprint(cfg);
    j["embedding"] = res.embedding;
    j["pairs_checked"] = res.pairs_checked;
    j["linked"] = ordered_json::array();
    for (auto i : res.linked)
        j["linked"].push_back({{"gamma", format_sphere(k, checker.pairs()[i].gamma)},
                               {"gamma_prime", format_sphere(k, checker.pairs()[i].gamma_prime)}});
    j["linkless"] = res.ok;
    if (rc.format == "text") {
        out << "subject: " << k.name() << "\nembedding: " << (res.embedding ? "true" : "false")
            << "\npairs_checked: " << res.pairs_checked << "\nlinked: " << res.linked.size()
            << "\nlinkless: " << (res.ok ? "true" : "false") << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return res.ok ? kExitOk : kExitFail;
}

inline int cmd_linkless_search(const RunConfig& rc, std::ostream& out) {
    auto k = load_target(rc);
    LinklessChecker checker(k, rc.n, rc.n >= 3 ? family_of(rc) : std::nullopt);
    auto res = linkless_search(checker, rc.seed, rc.restarts, rc.bound);
    ordered_json j;
    j["subject"] = k.name();
    j["n"] = rc.n;
    j["seed"] = rc.seed;
    j["restarts"] = rc.restarts;
    j["bound"] = rc.bound;
    j["found"] = res.config.has_value();
    j["stats"] = {{"attempts", res.stats.attempts},
                  {"sampling_failures", res.stats.sampling_failures},
                  {"embedding_failures", res.stats.embedding_failures},
                  {"linking_failures", res.stats.linking_failures},
                  {"degenerate", res.stats.degenerate}};
    if (res.config) {
        j["config_hash"] = config_fingerprint(*res.config);
        if (!rc.out_path.empty()) write_file_atomic(rc.out_path, write_config(*res.config));
    }
    if (rc.format == "text") {
        out << "subject: " << k.name() << "\nfound: " << (res.config ? "true" : "false")
            << "\nattempts: " << res.stats.attempts << "\nembedding_failures: " << res.stats.embedding_failures
            << "\nlinking_failures: " << res.stats.linking_failures << "\n";
        if (res.config && rc.out_path.empty()) out << write_config(*res.config);
    } else {
        if (res.config && rc.out_path.empty()) j["config"] = write_config(*res.config);
        out << j.dump(2) << "\n";
    }
    return res.config ? kExitOk : kExitFail;
}

/// Re-verify every line of <dir>/MANIFEST. Lines:
///   audit <N1|N2|N3> <n> <config> <status> <witnesses>
///   crosscheck <N1|N2|N3> <n> <config> <true|false>
///   crossings <complex> <n> <config> <count>
///   linkless <complex> <n> <config> <true|false>
///   complex <file> <N1|N2|N3|SIGMA|JOIN3> <n>       (file equals the constructor's output)
/// where <complex> is a standard name or a .cx file in the directory.
inline int fixtures_selftest(const std::string& dir, std::ostream& out) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    std::istringstream manifest(read_file((root / "MANIFEST").string()));
    std::string line;
    int failures = 0, checked = 0;
    auto complex_arg = [&](const std::string& s, int n) {
        if (auto name = parse_standard_name(s)) return standard_complex(*name, n);
        return read_complex(read_file((root / s).string()));
    };
    auto config_arg = [&](const std::string& s) { return read_config(read_file((root / s).string())); };
    while (std::getline(manifest, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> t;
        for (std::string x; ls >> x;) t.push_back(x);
        if (t.empty()) continue;
        ++checked;
        std::string got, want;
        try {
            if (t[0] == "audit" && t.size() == 6) {
                auto rep = theorem1_audit(*parse_standard_name(t[1]), std::stoi(t[2]), config_arg(t[3]));
                got = std::string(to_string(rep.status)) + " " + std::to_string(rep.witnesses.size());
                want = t[4] + " " + t[5];
            } else if (t[0] == "crosscheck" && t.size() == 5) {
                got = eq1_crosscheck(*parse_standard_name(t[1]), std::stoi(t[2]), config_arg(t[3])) ? "true" : "false";
                want = t[4];
            } else if (t[0] == "crossings" && t.size() == 5) {
                auto k = complex_arg(t[1], std::stoi(t[2]));
                got = std::to_string(double_point_set(k, config_arg(t[3])).size());
                want = t[4];
            } else if (t[0] == "linkless" && t.size() == 5) {
                auto k = complex_arg(t[1], std::stoi(t[2]));
                got = linkless_verify(k, std::stoi(t[2]), config_arg(t[3])).ok ? "true" : "false";
                want = t[4];
            } else if (t[0] == "complex" && t.size() == 4) {
                auto file = read_complex(read_file((root / t[1]).string()));
                auto built = standard_complex(*parse_standard_name(t[2]), std::stoi(t[3]));
                got = file == built ? "equal" : "different";
                want = "equal";
            } else {
                got = "malformed manifest line";
                want = "a known check";
            }
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
            want = "no error";
        }
        const bool ok = got == want;
        failures += ok ? 0 : 1;
        out << (ok ? "ok    " : "FAIL  ") << line;
        if (!ok) out << "  (got " << got << ", want " << want << ")";
        out << "\n";
    }
    out << checked << " checks, " << failures << " failures\n";
    return failures == 0 && checked > 0 ? kExitOk : kExitFail;
}

#ifndef ILINK_FIXTURES_DIR
#define ILINK_FIXTURES_DIR "fixtures"
#endif

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intrinsic linking of simplicial n-complexes in R^2n: constructions and exact parity checks"};
    app.require_subcommand(1);
    RunConfig rc;

    auto common = [&](CLI::App* sub, bool target) {
        if (target) sub->add_option("complex", rc.target, "N1, N2, N3, SIGMA, JOIN3 or a complex file")->required();
        sub->add_option("--n", rc.n, "complex parameter n (ambient dimension 2n)")->check(CLI::PositiveNumber);
    };
    auto seeded = [&](CLI::App* sub) {
        sub->add_option("--seed", rc.seed, "sampling seed");
        sub->add_option("--bound", rc.bound, "integer coordinate bound B")->check(CLI::PositiveNumber);
    };
    auto formatted = [&](CLI::App* sub) {
        sub->add_option("--format", rc.format, "report format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* build = app.add_subcommand("build", "write a complex file");
    common(build, true);
    build->add_option("--minus", rc.minus, "remove a maximal simplex, given as space- or comma-separated labels");
    build->add_option("--out", rc.out_path, "output path");

    auto* pairs = app.add_subcommand("pairs", "list sphere pairs (canonical family, or --full enumeration)");
    common(pairs, true);
    pairs->add_flag("--full", rc.full, "enumerate all of Lambda^{n-1,n}");
    formatted(pairs);

    auto* sample = app.add_subcommand("sample", "sample a general-position configuration in R^2n");
    common(sample, true);
    seeded(sample);
    sample->add_option("--out", rc.out_path, "output path");

    auto* check = app.add_subcommand("check-embedding", "list double points of a vertex-linear map");
    common(check, true);
    seeded(check);
    check->add_option("--config", rc.config_path, "coordinate file");
    formatted(check);

    auto* lk = app.add_subcommand("lk", "Z2-linking numbers of sphere pairs");
    common(lk, true);
    seeded(lk);
    lk->add_option("--config", rc.config_path, "coordinate file (an '@apex' entry fixes the cone apex)");
    lk->add_option("--restarts", rc.restarts, "samples to try when searching for an embedding");
    lk->add_option("--apexes", rc.apexes, "independent apexes per pair")->check(CLI::PositiveNumber);
    lk->add_flag("--full", rc.full, "use all of Lambda^{n-1,n} instead of the canonical family");
    formatted(lk);

    auto* vkf = app.add_subcommand("vkf", "crossing parity of SIGMA or JOIN3");
    common(vkf, true);
    seeded(vkf);
    vkf->add_option("--config", rc.config_path, "coordinate file");
    formatted(vkf);

    for (auto [name, help] : {std::pair{"audit", "lk2 parity over the canonical pairs of N1/N2/N3"},
                              std::pair{"crosscheck", "straight-extension, coned and parent-crossing parities agree"}}) {
        auto* sub = app.add_subcommand(name, help);
        common(sub, true);
        seeded(sub);
        sub->add_option("--config", rc.config_path, "coordinate file");
        sub->add_option("--restarts", rc.restarts, "samples to try when searching for an embedding");
        sub->add_option("--apexes", rc.apexes, "independent apexes per pair")->check(CLI::PositiveNumber);
        formatted(sub);
    }

    auto* lv = app.add_subcommand("linkless-verify", "embedding with every (n-1,n) sphere pair unlinked");
    common(lv, true);
    lv->add_option("--config", rc.config_path, "coordinate file")->required();
    lv->add_option("--seed", rc.seed, "apex seed");
    lv->add_option("--family", rc.family, "parent family for n >= 3");
    formatted(lv);

    auto* ls = app.add_subcommand("linkless-search", "randomized search for a linkless embedding");
    common(ls, true);
    seeded(ls);
    ls->add_option("--restarts", rc.restarts, "number of samples")->check(CLI::PositiveNumber);
    ls->add_option("--out", rc.out_path, "write the found configuration here");
    ls->add_option("--family", rc.family, "parent family for n >= 3");
    formatted(ls);

    rc.fixtures_dir = ILINK_FIXTURES_DIR;
    auto* self = app.add_subcommand("fixtures-selftest", "re-verify every shipped fixture");
    self->add_option("--fixtures", rc.fixtures_dir, "fixture directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    rc.command = app.get_subcommands().front()->get_name();

    std::ostringstream buffer;
    int code = kExitError;
    try {
        if (rc.command == "build") code = cmd_build(rc, buffer);
        else if (rc.command == "pairs") code = cmd_pairs(rc, buffer);
        else if (rc.command == "sample") code = cmd_sample(rc, buffer);
        else if (rc.command == "check-embedding") code = cmd_check_embedding(rc, buffer);
        else if (rc.command == "lk") code = cmd_lk(rc, buffer);
        else if (rc.command == "vkf") code = cmd_vkf(rc, buffer);
        else if (rc.command == "audit") code = cmd_audit(rc, buffer);
        else if (rc.command == "crosscheck") code = cmd_crosscheck(rc, buffer);
        else if (rc.command == "linkless-verify") code = cmd_linkless_verify(rc, buffer);
        else if (rc.command == "linkless-search") code = cmd_linkless_search(rc, buffer);
        else if (rc.command == "fixtures-selftest") code = fixtures_selftest(rc.fixtures_dir, buffer);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    out << buffer.str();
    return code;
}

}  // namespace ilink::cli
