#include <degencount/acyclicity.hpp>
#include <degencount/errors.hpp>
#include <degencount/gadgets.hpp>
#include <degencount/generators.hpp>
#include <degencount/hom_engine.hpp>
#include <degencount/oracle.hpp>
#include <degencount/pattern.hpp>
#include <degencount/pipelines.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

using namespace degencount;
using nlohmann::json;

namespace {

enum class Exit { ok = 0, verification = 1, input = 2 };

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool force = false;
    bool check = false;
    std::size_t max_pattern = PatternLimits{}.max_vertices;
    int log_level = 0;
};

void log(const Globals & g, int level, const std::string & msg)
{
    if (g.log_level >= level)
        std::cerr << "[degencount] " << msg << '\n';
}

int parse_log_level()
{
    const char * env = std::getenv("DEGENCOUNT_LOG");
    if (! env)
        return 0;
    std::string v = env;
    if (v == "debug" || v == "2")
        return 2;
    if (v == "info" || v == "1")
        return 1;
    return 0;
}

// FNV-1a over the raw bytes of an input file.
std::string digest_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

HomOptions hom_options(const Globals & g)
{
    HomOptions o;
    o.limits.max_vertices = g.max_pattern;
    if (g.force)
        o.oracle.max_steps = std::numeric_limits<std::uint64_t>::max();
    return o;
}

// Flattens a JSON result into "key: value" lines for --format plain.
void print_plain(const json & j, const std::string & prefix, std::ostream & out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_plain(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    else if (j.is_array() && ! j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            print_plain(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const Globals & g, const json & result, std::ostream & out = std::cout)
{
    if (g.format == "plain")
        print_plain(result, "", out);
    else
        out << result.dump(2) << '\n';
}

json run_result(const std::string & command)
{
    json r;
    r["command"] = command;
    r["inputs"] = json::object();
    r["outputs"] = json::object();
    r["warnings"] = json::array();
    return r;
}

Exit cmd_classify(const Globals & g, const std::string & spec)
{
    auto np = parse_pattern(spec);
    check_pattern_size(np.pattern, g.max_pattern);
    PatternLimits limits;
    limits.max_vertices = g.max_pattern;
    auto c = classify(np.pattern, limits);
    json r = run_result("classify");
    r["inputs"]["pattern"] = spec;
    r["inputs"]["canonical"] = describe(canonical_pattern(np.pattern));
    r["outputs"] = to_json(c, np.labels);
    emit(g, r);
    return Exit::ok;
}

BigInt oracle_count(const std::string & mode, const Pattern & h, const Graph & host, const OracleLimits & limits)
{
    if (mode == "hom")
        return brute_hom(h, host, limits);
    if (mode == "inj")
        return brute_inj(h, host, limits);
    if (mode == "ind")
        return brute_ind(h, host, limits);
    BigInt aut = count_automorphisms(h);
    return brute_inj(h, host, limits) / aut;
}

Exit cmd_count(const Globals & g, const std::string & mode, const std::string & spec, const std::string & host_path,
               bool use_oracle)
{
    auto np = parse_pattern(spec);
    check_pattern_size(np.pattern, g.max_pattern);
    Graph host = load_graph_file(host_path);
    auto options = hom_options(g);
    json r = run_result("count " + mode);
    r["inputs"] = {{"pattern", spec}, {"host", host_path}, {"host_digest", digest_file(host_path)},
                   {"host_vertices", host.num_vertices()}, {"host_edges", host.num_edges()}};

    auto start = std::chrono::steady_clock::now();
    BigInt value;
    if (use_oracle) {
        value = oracle_count(mode, np.pattern, host, options.oracle);
        r["outputs"]["path"] = "oracle";
    }
    else {
        CountSession session(host, options);
        if (mode == "hom") {
            auto res = hom_count(np.pattern, session.host(), options);
            value = res.value;
            r["outputs"]["path"] = to_string(res.path);
            if (res.warning)
                r["warnings"].push_back(*res.warning);
        }
        else {
            if (mode == "inj")
                value = session.inj(np.pattern);
            else if (mode == "ind")
                value = session.ind(np.pattern);
            else
                value = session.copies(np.pattern, false);
            r["outputs"]["hom_evaluations"] = session.hom_evaluations();
            for (const auto & f : session.fallbacks())
                r["warnings"].push_back("exponential fallback: pattern " + f + " is not alpha-acyclic");
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log(g, 1, "count " + mode + " took " + std::to_string(seconds) + " s");
    r["outputs"]["count"] = to_string(value);

    Exit code = Exit::ok;
    if (g.check && ! use_oracle) {
        BigInt expected = oracle_count(mode, np.pattern, host, options.oracle);
        r["outputs"]["oracle"] = to_string(expected);
        r["outputs"]["check"] = expected == value ? "pass" : "fail";
        if (expected != value)
            code = Exit::verification;
    }
    emit(g, r);
    return code;
}

Exit cmd_oracle(const Globals & g, const std::string & mode, const std::string & spec, const std::string & host_path)
{
    auto np = parse_pattern(spec);
    Graph host = load_graph_file(host_path);
    json r = run_result("oracle " + mode);
    r["inputs"] = {{"pattern", spec}, {"host", host_path}, {"host_digest", digest_file(host_path)}};
    r["outputs"]["count"] = to_string(oracle_count(mode, np.pattern, host, hom_options(g).oracle));
    emit(g, r);
    return Exit::ok;
}

void write_graph(const Graph & out, const std::string & path)
{
    if (path.empty()) {
        write_edge_list(out, std::cout);
        return;
    }
    std::ofstream f(path);
    if (! f)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    write_edge_list(out, f);
}

GadgetReport construction_report(const std::string & name, const Graph & f, const Graph & out, std::size_t per_edge)
{
    GadgetReport rep;
    rep.construction = name;
    rep.graphs.push_back({"F", f.num_vertices(), f.num_edges()});
    rep.graphs.push_back({"G", out.num_vertices(), out.num_edges()});
    BigInt expected = BigInt(f.num_vertices()) + BigInt(per_edge) * f.num_edges();
    rep.identities.push_back({"v(G) = v(F) + added e(F)", out.num_vertices(), expected, expected == out.num_vertices()});
    auto kappa = degeneracy_order(out).kappa;
    rep.identities.push_back({"degeneracy(G) <= 2", kappa <= 2 ? 1 : 0, 1, kappa <= 2});
    return rep;
}

Exit emit_construction(const Globals & g, const GadgetReport & rep, const Graph & out, const std::string & input,
                       const std::string & output)
{
    write_graph(out, output);
    json r = run_result("gadget " + rep.construction);
    r["inputs"] = {{"graph", input}, {"digest", digest_file(input)}};
    r["outputs"] = rep.to_json();
    r["outputs"]["girth"] = girth(out);
    if (! output.empty())
        r["outputs"]["written"] = output;
    emit(g, r, output.empty() ? std::cerr : std::cout);
    return rep.all_pass() ? Exit::ok : Exit::verification;
}

std::vector<std::size_t> parse_sizes(const std::string & text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size() || v < 1)
            throw std::invalid_argument("bad size '" + item + "'");
        out.push_back(static_cast<std::size_t>(v + 0.5));
    }
    if (out.empty())
        throw std::invalid_argument("no sizes given");
    return out;
}

Graph generate_host(const std::string & generator, std::size_t n, std::uint64_t seed)
{
    if (generator == "degen2")
        return degen2_host(n, seed);
    if (generator.rfind("rdeg", 0) == 0) {
        std::size_t k = std::stoul(generator.substr(4));
        Rng rng(seed);
        return random_degenerate(n, k, rng);
    }
    throw std::invalid_argument("unknown generator '" + generator + "' (use degen2 or rdeg<k>)");
}

Exit cmd_bench(const Globals & g, const std::string & spec, const std::string & generator, const std::string & sizes_text,
               std::size_t repeats)
{
    auto np = parse_pattern(spec);
    check_pattern_size(np.pattern, g.max_pattern);
    auto options = hom_options(g);
    auto path = plan_hom(np.pattern, options.limits);
    if (path == DispatchPath::oracle_fallback && ! g.force)
        throw GuardExceeded("pattern " + spec + " is not alpha-acyclic and would use the exponential oracle; pass --force");
    auto sizes = parse_sizes(sizes_text);

    json r = run_result("bench");
    r["inputs"] = {{"pattern", spec}, {"generator", generator}, {"seed", g.seed}, {"repeats", repeats}};
    r["outputs"]["path"] = to_string(path);
    r["outputs"]["runs"] = json::array();
    double prev = 0;
    for (std::size_t n : sizes) {
        Graph host = generate_host(generator, n, g.seed);
        double best = std::numeric_limits<double>::infinity();
        HomResult res;
        for (std::size_t i = 0; i < std::max<std::size_t>(repeats, 1); ++i) {
            auto start = std::chrono::steady_clock::now();
            res = hom_count(np.pattern, host, options);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        log(g, 1, "n=" + std::to_string(n) + " took " + std::to_string(best) + " s");
        json run = {{"n", host.num_vertices()},
                    {"m", host.num_edges()},
                    {"kappa", degeneracy_order(host).kappa},
                    {"count", to_string(res.value)},
                    {"seconds", best}};
        if (prev > 0)
            run["ratio"] = best / prev;
        prev = best;
        r["outputs"]["runs"].push_back(run);
    }
    emit(g, r);
    return Exit::ok;
}

} // namespace

int main(int argc, char ** argv)
{
    Globals g;
    g.log_level = parse_log_level();

    CLI::App app{"Pattern classification and exact subgraph counting on bounded-degeneracy graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--seed", g.seed, "Seed for generated hosts and helper graphs");
    app.add_option("--threads", g.threads, "Worker cap (computation currently runs on one thread)");
    app.add_flag("--force", g.force, "Lift the oracle step guard and allow fallback patterns in bench");
    app.add_flag("--check", g.check, "Compare the pipeline result against the brute-force oracle");
    app.add_option("--max-pattern", g.max_pattern, "Largest pattern accepted")->check(CLI::Range(1, 32));

    std::string pattern, host, mode, input, output, suite, generator, sizes;
    std::size_t ell = 2, p = 2, q = 3, repeats = 3, k = 5;
    bool use_oracle = false;

    auto * classify_cmd = app.add_subcommand("classify", "Classify a pattern as hom/inj/ind easy");
    classify_cmd->add_option("pattern", pattern, "Pattern spec")->required();

    auto * count_cmd = app.add_subcommand("count", "Count hom, inj, ind or unlabelled copies");
    count_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"hom", "inj", "ind", "copies"}));
    count_cmd->add_option("pattern", pattern)->required();
    count_cmd->add_option("host", host, "Edge-list file")->required();
    count_cmd->add_flag("--oracle", use_oracle, "Use brute force only");

    auto * oracle_cmd = app.add_subcommand("oracle", "Brute-force count");
    oracle_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"hom", "inj", "ind", "copies"}));
    oracle_cmd->add_option("pattern", pattern)->required();
    oracle_cmd->add_option("host", host)->required();

    auto * gadget_cmd = app.add_subcommand("gadget", "Reduction gadgets and identity checks");
    gadget_cmd->require_subcommand(1);
    auto * sub_cmd = gadget_cmd->add_subcommand("subdivide", "Replace each edge by a path of length ell");
    sub_cmd->add_option("--ell", ell)->check(CLI::Range(2, 1000));
    sub_cmd->add_option("input", input)->required();
    sub_cmd->add_option("-o,--output", output);
    auto * par_cmd = gadget_cmd->add_subcommand("parallel", "Replace each edge by two paths of lengths p and q");
    par_cmd->add_option("--p", p)->check(CLI::Range(1, 1000));
    par_cmd->add_option("--q", q)->check(CLI::Range(1, 1000));
    par_cmd->add_option("input", input)->required();
    par_cmd->add_option("-o,--output", output);
    auto * verify_cmd = gadget_cmd->add_subcommand("verify", "Check a suite of counting identities");
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("input", input)->required();
    auto * census_cmd = gadget_cmd->add_subcommand("census", "Quotient census of C_k");
    census_cmd->add_option("--k", k)->check(CLI::Range(4, 9));

    auto * bench_cmd = app.add_subcommand("bench", "Time hom_count on generated hosts");
    bench_cmd->add_option("pattern", pattern)->required();
    bench_cmd->add_option("generator", generator, "degen2 or rdeg<k>")->required();
    bench_cmd->add_option("sizes", sizes, "Comma-separated sizes, e.g. 1e5,2e5")->required();
    bench_cmd->add_option("--repeat", repeats, "Runs per size; the fastest is reported");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(Exit::input);
    }
    if (g.threads > 1)
        log(g, 1, "--threads is accepted but counting runs on one thread");

    try {
        Exit code = Exit::ok;
        if (*classify_cmd)
            code = cmd_classify(g, pattern);
        else if (*count_cmd)
            code = cmd_count(g, mode, pattern, host, use_oracle);
        else if (*oracle_cmd)
            code = cmd_oracle(g, mode, pattern, host);
        else if (*bench_cmd)
            code = cmd_bench(g, pattern, generator, sizes, repeats);
        else if (*sub_cmd) {
            Graph f = load_graph_file(input);
            Graph out = subdivide_edges(f, ell);
            code = emit_construction(g, construction_report("subdivide", f, out, ell - 1), out, input, output);
        }
        else if (*par_cmd) {
            Graph f = load_graph_file(input);
            Graph out = parallel_paths(f, p, q);
            auto rep = construction_report("parallel", f, out, p + q - 2);
            if (p == 1 || q == 1)
                rep.identities.pop_back();
            code = emit_construction(g, rep, out, input, output);
        }
        else if (*verify_cmd) {
            Graph f = load_graph_file(input);
            GadgetOptions options;
            options.oracle = hom_options(g).oracle;
            auto rep = verify_gadget_identities(f, parse_suite(suite), options);
            json r = run_result("gadget verify");
            r["inputs"] = {{"graph", input}, {"digest", digest_file(input)}, {"suite", suite}};
            r["outputs"] = rep.to_json();
            emit(g, r);
            code = rep.all_pass() ? Exit::ok : Exit::verification;
        }
        else if (*census_cmd) {
            auto c = quotient_census(k);
            json r = run_result("gadget census");
            r["inputs"]["k"] = k;
            r["outputs"] = c.to_json();
            emit(g, r);
            code = c.lemmas_hold() ? Exit::ok : Exit::verification;
        }
        return static_cast<int>(code);
    }
    catch (const ContractViolation & e) {
        std::cerr << "error: internal check failed: " << e.what() << '\n';
        return static_cast<int>(Exit::verification);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(Exit::input);
    }
}
