#include "fva/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "fva/corpus.hpp"
#include "fva/generators.hpp"
#include "fva/graph6.hpp"
#include "fva/serialize.hpp"

namespace fva::cli {
namespace {

const char* exit_code_help =
    "Exit codes:\n"
    "  0  success\n"
    "  1  violation, counterexample or failed check\n"
    "  2  usage error (unknown command or flag)\n"
    "  3  input parse failure (graph6, rational, JSON, unknown graph name)\n"
    "  4  guard violation (size or enumeration limit, epsilon out of range)\n"
    "  5  internal error\n";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph6;
    std::string file;
    std::string named;
    std::string epsilon = "1/324";
    std::uint64_t seed = 1;
    int limit = 12;

    std::string arborization;
    std::string lists;
    std::string k = "2";
    int colors = 5;
    int vertex = -1;

    std::string suite;
    int max_n = 8;
    std::size_t random = 0;
    int random_max_n = 14;
    unsigned threads = 0;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const Options& o) {
    const int given = !o.graph6.empty() + !o.file.empty() + !o.named.empty();
    if (given != 1) throw CLI::ValidationError("exactly one of --graph6, --file, --named is required");
    try {
        if (!o.graph6.empty()) return decode_graph6(o.graph6);
        if (!o.named.empty()) return named_graph_spec(o.named);
        std::istringstream in(read_file(o.file));
        auto graphs = read_graph6_stream(in);
        if (graphs.empty()) throw InputError("no graph in '" + o.file + "'");
        return graphs.front();
    } catch (const ParseError& e) {
        throw InputError(e.what());
    } catch (const GraphError& e) {
        throw InputError(e.what());
    }
}

Rational load_rational(const std::string& s, const char* what) {
    try {
        return parse_rational(s);
    } catch (const ParseError& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Json graph_json(const Graph& g) {
    return Json{{"graph6", encode_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
}

int cmd_fva(const Options& o, bool chromatic, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    auto r = chromatic ? fractional_chromatic_number(g, o.limit) : fractional_vertex_arboricity(g, o.limit);
    std::vector<VertexSet> cols;
    LpResult lp;
    for (const auto& c : r.cover) {
        cols.push_back(c.set);
        lp.primal.push_back(c.weight);
    }
    lp.dual = r.dual;
    lp.value = r.value;
    const bool certified = check_certificate(CoverLp{g.order(), cols}, lp).empty() && r.pricing_bound <= 1;
    Json j = graph_json(g);
    j["invariant"] = chromatic ? "fractional-chromatic-number" : "fractional-vertex-arboricity";
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    j["certified"] = certified;
    out << j.dump(2) << '\n';
    err << (chromatic ? "chi_f = " : "fva = ") << to_string(r.value) << (certified ? " (certified)" : " (NOT certified)") << '\n';
    return certified ? ok : violation;
}

int cmd_va(const Options& o, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    auto r = vertex_arboricity(g);
    Json j = graph_json(g);
    j["value"] = r.colors;
    j["coloring"] = r.color;
    out << j.dump(2) << '\n';
    err << "va = " << r.colors << '\n';
    return ok;
}

int cmd_mif(const Options& o, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    std::vector<Rational> ones(static_cast<std::size_t>(g.order()), Rational(1));
    auto best = max_weight_induced_forest(g, ones);
    Json j = graph_json(g);
    j["value"] = to_json(best.weight);
    j["forest"] = vertex_list(best.set);
    out << j.dump(2) << '\n';
    err << "a = " << to_string(best.weight) << '\n';
    return ok;
}

int cmd_acyclic(const Options& o, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    if (o.colors < 1) throw CLI::ValidationError("--colors must be positive");
    auto c = acyclic_coloring(g, o.colors);
    Json j = graph_json(g);
    j["colors"] = o.colors;
    j["found"] = c.has_value();
    int code = ok;
    if (c) {
        j["coloring"] = *c;
        if (o.colors == 5) {
            auto phi = arborization_from_acyclic5(g, *c);
            auto report = verify(g, phi, VerifyMode::arborization(Rational(5, 2)));
            j["arborization"] = to_json(phi);
            j["verification"] = to_json(report);
            if (!report.ok()) code = violation;
        }
    }
    out << j.dump(2) << '\n';
    err << "acyclic " << o.colors << "-colouring " << (c ? "found" : "not found") << '\n';
    return code;
}

int cmd_discharge(const Options& o, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    auto ledger = discharge(g);
    auto r = check_lemma4(g);
    Json j = graph_json(g);
    j["ledger"] = to_json(ledger);
    j["lemma4"] = to_json(r);
    out << j.dump(2) << '\n';
    err << "discharging: " << to_string(r.status) << " (" << r.witnesses.size() << " configurations)\n";
    return r.status == Lemma4Result::Status::counterexample ? violation : ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    if (o.arborization.empty()) throw CLI::ValidationError("--arborization is required");
    FractionalArborization phi;
    VerifyMode mode;
    try {
        phi = arborization_from_json(load_json(o.arborization));
        if (!o.lists.empty()) {
            auto lj = load_json(o.lists);
            if (!lj.is_object() || !lj.contains("lists")) throw ParseError("list file needs a \"lists\" object");
            auto lists = arborization_from_json(lj["lists"]).sets;
            if (lj.contains("offshoots")) mode = VerifyMode::offshoot(lists, arborization_from_json(lj["offshoots"]).sets);
            else mode = VerifyMode::list(lists);
        } else {
            mode = VerifyMode::arborization(load_rational(o.k, "--k"));
        }
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
    VerifyReport report;
    try {
        report = verify(g, phi, mode);
    } catch (const ArborizationError& e) {
        throw InputError(e.what());
    }
    Json j = graph_json(g);
    j["report"] = to_json(report);
    out << j.dump(2) << '\n';
    err << (report.ok() ? "valid" : "INVALID") << " (" << report.atoms_checked << " atoms)\n";
    return report.ok() ? ok : violation;
}

int cmd_extend(const Options& o, bool config_a, std::ostream& out, std::ostream& err) {
    auto g = load_graph(o);
    const Rational eps = load_rational(o.epsilon, "--epsilon");
    const Rational bound = config_a ? config_a_epsilon_bound() : config_b_epsilon_bound();
    if (eps < 0 || eps > bound) throw GuardError("epsilon must lie in [0, " + to_string(bound) + "]");

    std::optional<ConfigurationWitness> witness;
    for (const auto& w : detect_configurations(g)) {
        if (w.kind != (config_a ? ConfigurationKind::effective_degree_two : ConfigurationKind::degree_three_two_light)) continue;
        if (o.vertex >= 0 && w.at("v") != o.vertex) continue;
        if (config_a && (!w.find("u1") || w.find("l1"))) continue;
        if (!config_a && (w.find("e1_1") || w.find("e2_1"))) continue;
        witness = w;
        break;
    }
    Json j = graph_json(g);
    if (!witness) {
        j["error"] = "no matching configuration";
        out << j.dump(2) << '\n';
        err << "no matching configuration\n";
        return violation;
    }
    std::vector<Vertex> removed;
    if (config_a) {
        for (int i = 1;; ++i) {
            auto u = witness->find("u" + std::to_string(i));
            if (!u) break;
            removed.push_back(*u);
        }
    } else {
        removed.push_back(witness->at("v"));
    }
    FractionalArborization phi;
    if (!o.arborization.empty()) {
        try {
            phi = arborization_from_json(load_json(o.arborization));
        } catch (const ParseError& e) {
            throw InputError(e.what());
        }
    } else {
        auto rest = delete_vertices(g, removed);
        auto f = fractional_vertex_arboricity(rest.graph, o.limit);
        j["input_fva"] = to_json(f.value);
        if (f.value > 2 - eps) {
            j["error"] = "fva of the reduced graph exceeds 2 - epsilon";
            out << j.dump(2) << '\n';
            err << "reduced graph has fva " << to_string(f.value) << '\n';
            return violation;
        }
        for (const auto& [v, s] : arborization_from_cover(rest.graph, f.cover).sets) phi.sets[rest.original[v]] = s;
    }
    j["witness"] = to_json(*witness);
    j["epsilon"] = to_json(eps);
    try {
        auto report = config_a ? extend_config_A(g, *witness, phi, eps) : extend_config_B(g, *witness, phi, eps);
        auto check = verify(g, report.result, VerifyMode::arborization(2 - eps));
        j["extension"] = to_json(report);
        j["verification"] = to_json(check);
        out << j.dump(2) << '\n';
        err << "extension " << (check.ok() ? "verified" : "FAILED") << '\n';
        return check.ok() ? ok : violation;
    } catch (const ExtensionError& e) {
        j["error"] = e.what();
        out << j.dump(2) << '\n';
        err << "extension failed: " << e.what() << '\n';
        return violation;
    }
}

std::vector<CorpusItem> corpus_items(const Options& o) {
    std::vector<CorpusItem> items;
    if (o.suite == "combiner") return items;
    if (!o.file.empty()) {
        std::istringstream in(read_file(o.file));
        try {
            for (auto& g : read_graph6_stream(in)) items.push_back({encode_graph6(g), std::move(g)});
        } catch (const ParseError& e) {
            throw InputError(e.what());
        }
    } else if (o.suite == "theorem1") {
        for (auto& [name, g] : theorem_fixtures()) items.push_back({name, std::move(g)});
    } else {
        if (o.max_n < 1 || o.max_n > 9) throw GuardError("--max-n must lie in 1..9");
        for (auto& g : connected_graphs_up_to(o.max_n)) items.push_back({encode_graph6(g), std::move(g)});
    }
    if (o.random > 0) {
        if (o.random_max_n < 4 || o.random_max_n > 64) throw GuardError("--random-max-n must lie in 4..64");
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> order(4, o.random_max_n);
        for (std::size_t i = 0; i < o.random; ++i) {
            const int n = order(rng);
            Graph g = o.suite == "lemma4" ? random_sparse_graph(n, rng)
                                          : random_connected_graph(n, std::uniform_int_distribution<int>(0, 2 * n)(rng), rng);
            items.push_back({"random-" + std::to_string(i) + ":" + encode_graph6(g), std::move(g)});
        }
    }
    return items;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> suites{"chain", "chif", "lemma4", "acyclic5", "combiner", "theorem1"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw CLI::ValidationError("--suite must be one of chain, chif, lemma4, acyclic5, combiner, theorem1");
    CorpusOptions opts{o.suite, o.seed, o.random, o.random_max_n, o.threads};
    auto report = run_corpus(opts, corpus_items(o));
    out << report.json.dump(2) << '\n';
    err << o.suite << ": " << report.passed << " passed, " << report.failed << " failed, " << report.skipped
        << " skipped\n";
    return report.failed ? violation : ok;
}

void add_graph_options(CLI::App* sub, Options& o) {
    sub->add_option("--graph6", o.graph6, "graph in graph6 format");
    sub->add_option("--file", o.file, "file holding graph6 lines ('-' for stdin)");
    sub->add_option("--named", o.named, "named graph: k4, cube, dodecahedron, petersen, gadget-a, gadget-b, cycle:n, path:n, complete:n");
    sub->add_option("--limit", o.limit, "cross-check LPs over all maximal sets up to this many vertices")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact fractional vertex-arboricity toolkit", "fvatool"};
    app.footer(exit_code_help);
    app.require_subcommand(1);

    auto* fva = app.add_subcommand("fva", "fractional vertex arboricity with duality certificate");
    auto* va = app.add_subcommand("va", "vertex arboricity with a forest partition");
    auto* mif = app.add_subcommand("mif", "largest induced forest");
    auto* chif = app.add_subcommand("chif", "fractional chromatic number with duality certificate");
    auto* acyclic = app.add_subcommand("acyclic", "acyclic colouring and the 5/2 arborization");
    auto* dis = app.add_subcommand("discharge", "discharging ledger and configuration check");
    auto* ver = app.add_subcommand("verify", "verify a fractional arborization given as JSON");
    auto* exa = app.add_subcommand("extend-a", "extend across a degree-two star configuration");
    auto* exb = app.add_subcommand("extend-b", "extend across a degree-three configuration");
    auto* cor = app.add_subcommand("corpus", "run a corpus suite");

    for (auto* sub : {fva, va, mif, chif, acyclic, dis, ver, exa, exb}) add_graph_options(sub, o);
    acyclic->add_option("--colors", o.colors, "number of colours")->capture_default_str();
    ver->add_option("--arborization", o.arborization, "JSON file {vertex: [[lo, hi], ...]}");
    ver->add_option("--k", o.k, "ambient length for arborization mode")->capture_default_str();
    ver->add_option("--lists", o.lists, "JSON file {\"lists\": {...}, \"offshoots\": {...}}");
    for (auto* sub : {exa, exb}) {
        sub->add_option("--epsilon", o.epsilon, "exact rational epsilon")->capture_default_str();
        sub->add_option("--vertex", o.vertex, "centre vertex of the configuration");
        sub->add_option("--arborization", o.arborization, "JSON arborization of the reduced graph");
    }
    cor->add_option("--suite", o.suite, "chain, chif, lemma4, acyclic5, combiner or theorem1")->required();
    cor->add_option("--file", o.file, "graph6 stream ('-' for stdin); default is the built-in generator");
    cor->add_option("--max-n", o.max_n, "largest order for the built-in generator")->capture_default_str();
    cor->add_option("--random", o.random, "number of seeded random graphs (or combiner instances)");
    cor->add_option("--random-max-n", o.random_max_n, "largest order of random graphs")->capture_default_str();
    cor->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cor->add_option("--threads", o.threads, "worker threads (0: all cores)");
    for (auto* sub : {fva, va, mif, chif, acyclic, dis, ver, exa, exb})
        sub->add_option("--seed", o.seed, "random seed (unused by deterministic commands)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (*fva) return cmd_fva(o, false, out, err);
        if (*chif) return cmd_fva(o, true, out, err);
        if (*va) return cmd_va(o, out, err);
        if (*mif) return cmd_mif(o, out, err);
        if (*acyclic) return cmd_acyclic(o, out, err);
        if (*dis) return cmd_discharge(o, out, err);
        if (*ver) return cmd_verify(o, out, err);
        if (*exa) return cmd_extend(o, true, out, err);
        if (*exb) return cmd_extend(o, false, out, err);
        if (*cor) return cmd_corpus(o, out, err);
        return usage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return usage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return parse_failure;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return guard;
    } catch (const GraphError& e) {
        err << "guard: " << e.what() << '\n';
        return guard;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
}

} // namespace fva::cli
