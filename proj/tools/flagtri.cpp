// Command line front end: construction of the reference graph families,
// topological and extremality certificates, face-vector statistics, the
// local-search maximizer, conjecture verification, pseudomanifold search and
// the clique-growth probe.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "flagtri/constructions.hpp"
#include "flagtri/edit_distance.hpp"
#include "flagtri/errors.hpp"
#include "flagtri/extremal.hpp"
#include "flagtri/face_vectors.hpp"
#include "flagtri/graph_io.hpp"
#include "flagtri/harness.hpp"
#include "flagtri/homology.hpp"
#include "flagtri/search.hpp"
#include "flagtri/simplicial_complex.hpp"

namespace {

using nlohmann::json;
using namespace flagtri;

/// Loads either a graph file (header "n m" or JSON) as its clique complex,
/// or a complex file (header "n" followed by facet lines).
SimplicialComplex load_any_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    std::string first;
    while (std::getline(in, first)) {
        std::istringstream ls(first);
        std::string tok;
        if (ls >> tok) break;
    }
    std::istringstream probe(first);
    long a, b;
    bool two = static_cast<bool>(probe >> a >> b);
    in.clear();
    in.seekg(0);
    if (!first.empty() && first.find('{') != std::string::npos) return SimplicialComplex::clique_complex(read_graph(in));
    if (two) return SimplicialComplex::clique_complex(read_graph_text(in));
    return read_complex_text(in);
}

json certificate_to_json(const PartitionCertificate& cert) {
    json j;
    j["eta"] = cert.eta.get_str();
    j["r"] = cert.r;
    j["passes"] = cert.passes();
    json parts = json::array();
    for (const auto& p : cert.parts) parts.push_back(p);
    j["parts"] = parts;
    json conds;
    for (const auto& [name, res] : cert.condition_report) {
        json c;
        c["pass"] = res.pass;
        if (!res.pass) c["witness"] = res.witness;
        conds[std::string(1, name)] = c;
    }
    j["conditions"] = conds;
    json types = json::object();
    for (const auto& [v, t] : cert.vertex_types) {
        json tj;
        tj["type"] = t.type == VertexType::Type1 ? "Type1"
                   : t.type == VertexType::Type2 ? "Type2" : "Untyped";
        if (t.type != VertexType::Untyped) {
            tj["g"] = t.g;
            tj["h"] = t.h;
        }
        types[std::to_string(v)] = tj;
    }
    j["vertex_types"] = types;
    return j;
}

json move_log_to_json(const MoveLog& log) {
    json arr = json::array();
    for (const auto& mv : log) {
        json m;
        m["kind"] = move_kind_name(mv.kind);
        m["gain"] = mv.gain.get_str();
        m["detail"] = mv.detail;
        json pre = json::array(), post = json::array();
        for (const auto& x : mv.pre.counts) pre.push_back(x.get_str());
        for (const auto& x : mv.post.counts) post.push_back(x.get_str());
        m["pre"] = pre;
        m["post"] = post;
        arr.push_back(m);
    }
    return arr;
}

std::vector<Rat> parse_coeffs(const std::string& s) {
    std::vector<Rat> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"flag triangulation toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit a reference graph family");
    std::string family, out_path;
    int n = 0, r = 0, len_a = 0, len_b = 0;
    construct->add_option("--family", family)->required()
        ->check(CLI::IsMember({"turan", "jr", "jr-star", "k3r", "cycle", "join"}));
    construct->add_option("--n", n);
    construct->add_option("--r", r);
    construct->add_option("--a", len_a, "first cycle length (family join)");
    construct->add_option("--b", len_b, "second cycle length (family join)");
    construct->add_option("--out", out_path)->required();

    // check
    auto* check = app.add_subcommand("check", "certify a property, exit 0 iff it holds");
    std::string check_input, what, partition_path, eta_str;
    check->add_option("--input", check_input)->required();
    check->add_option("--what", what)->required()
        ->check(CLI::IsMember({"flag-manifold", "sphere", "eulerian", "pseudomanifold", "extremal"}));
    check->add_option("--partition", partition_path);
    check->add_option("--eta", eta_str, "exact rational A/B");
    check->add_option("--r", r);

    // stats
    auto* stats = app.add_subcommand("stats", "face statistics of a complex or graph");
    std::string stats_input, vectors = "f,h,g,gamma";
    stats->add_option("--input", stats_input)->required();
    stats->add_option("--vectors", vectors);

    // maximize
    auto* maximize = app.add_subcommand("maximize", "local-search clique function maximization");
    std::string coeffs_str, start_path;
    maximize->add_option("--n", n)->required();
    maximize->add_option("--r", r)->required();
    maximize->add_option("--coeffs", coeffs_str, "c_k,...,c_0 high to low")->required();
    maximize->add_option("--start", start_path);
    maximize->add_option("--partition", partition_path);
    maximize->add_option("--eta", eta_str, "override the default 1/(14 r^r)");

    // verify
    auto* verify = app.add_subcommand("verify", "conjecture verification report");
    std::string conjecture, verify_input, kind = "f";
    verify->add_option("--conjecture", conjecture)->required()
        ->check(CLI::IsMember({"upper-bounds", "ratio-chain", "even-dim"}));
    verify->add_option("--input", verify_input)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--kind", kind)->check(CLI::IsMember({"f", "h", "g", "gamma"}));

    // search
    auto* search = app.add_subcommand("search", "pseudomanifold search");
    bool pseudo = false;
    int d = 2, n_max = 6;
    std::string mode = "exhaustive", search_out;
    std::uint64_t seed = 0;
    long budget = -1;
    search->add_flag("--pseudo", pseudo);
    search->add_option("--d", d)->required();
    search->add_option("--n-max", n_max)->required();
    search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--seed", seed);
    search->add_option("--budget", budget);
    search->add_option("--out", search_out)->required();

    // probe
    auto* probe = app.add_subcommand("probe", "clique count growth probe");
    bool growth = false;
    int n_min = 0;
    probe->add_flag("--growth", growth);
    probe->add_option("--r", r)->required();
    probe->add_option("--n-min", n_min)->required();
    probe->add_option("--n-max", n_max)->required();

    CLI11_PARSE(app, argc, argv);

    if (*construct) {
        Graph g(0, {});
        if (family == "turan") g = turan(n, r).graph;
        else if (family == "jr") g = j_graph(n, r).graph;
        else if (family == "jr-star") g = j_star(n, r).graph;
        else if (family == "k3r") g = k3r(r);
        else if (family == "cycle") g = cycle(n);
        else g = graph_join(cycle(len_a), cycle(len_b));
        save_graph(out_path, g);
        return 0;
    }

    if (*check) {
        if (what == "extremal") {
            if (partition_path.empty() || eta_str.empty() || r <= 0)
                throw BadInput("check --what extremal needs --partition, --eta and --r");
            Graph g = load_graph(check_input);
            auto parts = load_partition(partition_path);
            auto cert = check_extremal(g, parts, parse_rat(eta_str), r);
            std::cout << certificate_to_json(cert).dump(2) << "\n";
            return cert.passes() ? 0 : 1;
        }
        SimplicialComplex k = load_any_complex(check_input);
        json j;
        bool ok = false;
        if (what == "flag-manifold") {
            bool flag = k.is_flag();
            auto cert = is_homology_manifold(k);
            ok = flag && cert.is_manifold;
            j["flag"] = flag;
            j["manifold"] = cert.is_manifold;
            j["connected"] = cert.connected;
            j["dimension"] = cert.dimension;
            if (cert.failing_face) j["failing_face"] = *cert.failing_face;
        } else if (what == "sphere") {
            ok = is_homology_sphere(k);
            j["sphere"] = ok;
            j["dimension"] = k.dim();
        } else if (what == "eulerian") {
            ok = is_eulerian(k);
            j["eulerian"] = ok;
        } else {
            ok = is_weak_pseudomanifold(k);
            j["pseudomanifold"] = ok;
            j["dimension"] = k.dim();
        }
        j["input_hash"] = fnv1a64(k.serialize());
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    if (*stats) {
        SimplicialComplex k = load_any_complex(stats_input);
        auto f = k.f_vector();
        int dd = static_cast<int>(f.size()) - 1;
        auto h = f_to_h(f, dd);
        json j;
        j["d"] = dd;
        auto emit = [&](const std::string& name, const std::vector<Int>& v) {
            json arr = json::array();
            for (const auto& x : v) arr.push_back(x.get_str());
            j[name] = arr;
        };
        std::istringstream vs(vectors);
        std::string want;
        while (std::getline(vs, want, ',')) {
            if (want == "f") emit("f", f);
            else if (want == "h") emit("h", h);
            else if (want == "g") emit("g", h_to_g(h));
            else if (want == "gamma") {
                if (dehn_sommerville_holds(h)) emit("gamma", h_to_gamma(h));
                else j["warning"] = "gamma omitted: h-vector is not palindromic";
            } else throw BadInput("unknown vector kind: " + want);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*maximize) {
        auto f = CliqueFunction::from_high_to_low(parse_coeffs(coeffs_str));
        Graph start(0, {});
        std::vector<std::vector<int>> parts;
        if (start_path.empty()) {
            auto jr = j_graph(n, r);
            start = jr.graph;
            parts.push_back({});
            for (auto& p : jr.parts) parts.push_back(p);
        } else {
            start = load_graph(start_path);
            if (partition_path.empty()) throw BadInput("--start needs --partition");
            parts = load_partition(partition_path);
        }
        std::optional<Rat> eta;
        if (!eta_str.empty()) eta = parse_rat(eta_str);
        auto res = maximize_clique_fn(n, r, f, start, parts, eta);
        json j;
        j["n"] = res.graph.vertex_count();
        json es = json::array();
        for (auto [u, v] : res.graph.edges()) es.push_back({u, v});
        j["edges"] = es;
        json pj = json::array();
        for (const auto& p : res.parts) pj.push_back(p);
        j["parts"] = pj;
        j["moves"] = move_log_to_json(res.log);
        j["value"] = f.eval(res.graph).get_str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*verify) {
        SimplicialComplex m = load_any_complex(verify_input);
        VerificationReport rep;
        if (conjecture == "upper-bounds") rep = verify_upper_bounds(m, r, verify_input);
        else if (conjecture == "ratio-chain") rep = verify_ratio_chain(m, r, kind, verify_input);
        else rep = verify_even_dim(m, r, verify_input);
        std::cout << to_json(rep).dump(2) << "\n";
        return rep.verdict == Verdict::ViolationAt ? 2 : 0;
    }

    if (*search) {
        if (!pseudo) throw BadInput("only --pseudo search is available");
        SearchOptions opt;
        opt.d = d;
        opt.n_max = n_max;
        opt.random = mode == "random";
        opt.seed = seed;
        opt.budget = budget;
        auto outcome = search_pseudomanifolds(opt);
        std::ofstream out(search_out);
        if (!out) throw BadInput("cannot open " + search_out + " for writing");
        bool violation = false;
        for (const auto& fd : outcome.findings) {
            out << to_json(fd).dump() << "\n";
            violation = violation || fd.violation;
        }
        json summary;
        summary["findings"] = outcome.findings.size();
        summary["examined"] = outcome.examined;
        summary["budget_exceeded"] = outcome.budget_exceeded;
        std::cout << summary.dump(2) << "\n";
        return violation ? 2 : 0;
    }

    if (*probe) {
        if (!growth) throw BadInput("only --growth probe is available");
        for (const auto& row : growth_probe(r, n_min, n_max)) {
            json j;
            j["n"] = row.n;
            j["count"] = row.count.get_str();
            j["ratio"] = row.ratio.get_str();
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
