// labelab: adjacency labeling scheme laboratory.
//
// Exit codes: 0 success / positive verdict, 1 verified negative,
// 2 usage or input error, 3 budget exhausted (unknown).

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "labelab/enumerate.hpp"
#include "labelab/io.hpp"
#include "labelab/props.hpp"
#include "labelab/reductions.hpp"
#include "labelab/search.hpp"

namespace {

using namespace labelab;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

// ------------------------------------------------------------- run report

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    std::string outcome;
    std::vector<std::string> witnesses;
    std::optional<std::uint64_t> nodes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void print(std::ostream& out) const {
        out << "command:" << command << '\n';
        for (const auto& [path, digest] : inputs)
            out << "input " << path << ": fnv1a=" << digest << '\n';
        out << "outcome: " << outcome << '\n';
        for (const std::string& w : witnesses)
            out << "witness: " << w << '\n';
        if (nodes)
            out << "nodes: " << *nodes << '\n';
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        // excluded from the determinism contract
        out << "time-ms: " << ms << '\n';
    }
};

Report g_report;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    std::string bytes = os.str();
    g_report.inputs.push_back({path, fnv1a_hex(bytes)});
    return bytes;
}

template <class Fn>
auto parse_file(const std::string& path, Fn fn) {
    std::istringstream in(slurp(path));
    return fn(in);
}

Graph load_graph(const std::string& path) {
    return parse_file(path, [](std::istream& in) { return read_graph(in); });
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    fn(out);
    g_report.witnesses.push_back(path);
}

// ---------------------------------------------------------- scheme parsing

struct SchemeSpec {
    enum class Kind { bits, fo, pbs, pointer } kind = Kind::bits;
    LabelingScheme bit_scheme;                       // kind bits
    FoScheme fo;                                     // kind fo
    std::optional<Pbs> pbs;                          // kind pbs
    PointerLabeling::Mode pointer_mode{};            // kind pointer
    int pointer_k = 1;
};

SchemeSpec parse_scheme(const std::string& spec, int c_flag) {
    SchemeSpec out;
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "interval") {
        out.bit_scheme = {interval_decoder(), 4};
        return out;
    }
    if (head == "lexless") {
        out.bit_scheme = {lex_less_decoder(), c_flag > 0 ? c_flag : 1};
        return out;
    }
    if (head == "cw") {
        int k = arg.empty() ? 2 : std::stoi(arg);
        out.bit_scheme = {cliquewidth_block_decoder(k), c_flag > 0 ? c_flag : 1};
        return out;
    }
    if (head == "eq") {
        out.kind = SchemeSpec::Kind::fo;
        out.fo = fo_scheme(parse_formula("x1 = y2"), c_flag > 0 ? c_flag : 1);
        return out;
    }
    if (head == "lt") {
        out.kind = SchemeSpec::Kind::fo;
        out.fo = fo_scheme(parse_formula("x1 < y2"), c_flag > 0 ? c_flag : 1);
        return out;
    }
    if (head == "or-pointer" || head == "and-pointer") {
        out.kind = SchemeSpec::Kind::pointer;
        out.pointer_mode = head == "or-pointer" ? PointerLabeling::Mode::or_mode
                                                : PointerLabeling::Mode::and_mode;
        out.pointer_k = arg.empty() ? 1 : std::stoi(arg);
        return out;
    }
    // otherwise a file: sniff the header keyword
    std::string bytes = slurp(spec);
    std::istringstream sniff(bytes);
    std::string first;
    sniff >> first;
    std::istringstream in(bytes);
    if (first == "fo") {
        FoFile fo = read_fo(in);
        out.kind = SchemeSpec::Kind::fo;
        out.fo = fo_scheme(fo.phi, fo.c, fo.bounded);
        return out;
    }
    if (first == "dfa") {
        out.bit_scheme = {std::make_shared<DfaDecoder>(read_dfa(in)),
                          c_flag > 0 ? c_flag : 1};
        return out;
    }
    if (first == "pbs") {
        out.kind = SchemeSpec::Kind::pbs;
        out.pbs = read_pbs(in);
        return out;
    }
    throw std::invalid_argument("unrecognized scheme '" + spec + "'");
}

std::vector<std::vector<BigInt>> to_int_labels(const std::vector<std::vector<BigRat>>& in) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : in) {
        std::vector<BigInt> vals;
        for (const BigRat& v : row) {
            if (boost::multiprecision::denominator(v) != 1)
                throw std::invalid_argument("integer labels required");
            vals.push_back(boost::multiprecision::numerator(v));
        }
        out.push_back(std::move(vals));
    }
    return out;
}

PointerLabeling pointer_from_labels(const SchemeSpec& spec,
                                    const std::vector<std::vector<BigInt>>& rows) {
    PointerLabeling pl;
    pl.mode = spec.pointer_mode;
    pl.bijective = false;
    pl.k = spec.pointer_k;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != spec.pointer_k + 1)
            throw std::invalid_argument("pointer labels carry id plus k slots");
        pl.id.push_back(static_cast<int>(row[0]));
        std::vector<int> slots;
        for (std::size_t i = 1; i < row.size(); ++i)
            slots.push_back(static_cast<int>(row[i]));
        pl.slots.push_back(std::move(slots));
    }
    return pl;
}

std::vector<std::vector<BigRat>> pointer_to_labels(const PointerLabeling& pl) {
    std::vector<std::vector<BigRat>> rows;
    for (std::size_t v = 0; v < pl.id.size(); ++v) {
        std::vector<BigRat> row{BigRat(pl.id[v])};
        for (int s : pl.slots[v])
            row.push_back(BigRat(s));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<BigRat>> numpairs_to_labels(const std::vector<NumPair>& pairs) {
    std::vector<std::vector<BigRat>> rows;
    for (const auto& [a, b] : pairs)
        rows.push_back({BigRat(a), BigRat(b)});
    return rows;
}

// ------------------------------------------------------------- verification

bool verify_spec(const SchemeSpec& spec, const LabelsFile& labels, const Graph& g,
                 PairSemantics semantics) {
    switch (spec.kind) {
    case SchemeSpec::Kind::bits:
        if (labels.kind == LabelsFile::Kind::io)
            return io_decode(spec.bit_scheme, labels.out_labels, labels.in_labels, g);
        if (labels.kind != LabelsFile::Kind::bits)
            throw std::invalid_argument("bit-label scheme needs bit or io labels");
        return verify_labeling(spec.bit_scheme, labels.labels, g, semantics);
    case SchemeSpec::Kind::fo: {
        if (labels.kind != LabelsFile::Kind::num)
            throw std::invalid_argument("formula schemes verify numeric labels");
        auto rows = to_int_labels(labels.num_labels);
        long long bound = spec.fo.universe(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                if (u == v && semantics == PairSemantics::proper_only)
                    continue;
                NumLabel lu, lv;
                for (const BigInt& x : rows[u])
                    lu.push_back(static_cast<long long>(x));
                for (const BigInt& x : rows[v])
                    lv.push_back(static_cast<long long>(x));
                for (long long x : lu)
                    if (x < 0 || x > bound)
                        throw std::invalid_argument("label value outside the universe");
                if (spec.fo.accepts(g.order(), lu, lv) != g.edge(u, v))
                    return false;
            }
        return true;
    }
    case SchemeSpec::Kind::pbs:
        if (labels.kind != LabelsFile::Kind::num)
            throw std::invalid_argument("pbs schemes verify numeric labels");
        return verify_pbs_labeling(*spec.pbs, labels.num_labels, g,
                                   semantics == PairSemantics::proper_only);
    case SchemeSpec::Kind::pointer: {
        if (labels.kind != LabelsFile::Kind::num)
            throw std::invalid_argument("pointer schemes verify numeric labels");
        PointerLabeling pl = pointer_from_labels(spec, to_int_labels(labels.num_labels));
        return pointer_verify(pl, g);
    }
    }
    return false;
}

// ----------------------------------------------------------------- helpers

std::vector<BigRat> parse_values(const std::string& csv) {
    std::vector<BigRat> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto slash = tok.find('/');
        if (slash == std::string::npos)
            out.push_back(BigRat(BigInt(tok)));
        else
            out.push_back(BigRat(BigInt(tok.substr(0, slash)),
                                 BigInt(tok.substr(slash + 1))));
    }
    return out;
}

SearchBudget budget_from(std::uint64_t nodes, long long time_ms, int max_n) {
    SearchBudget b;
    if (nodes)
        b.max_nodes = nodes;
    if (time_ms)
        b.time_limit_ms = time_ms;
    if (max_n)
        b.max_n = max_n;
    return b;
}

int status_exit(SearchStatus status) {
    switch (status) {
    case SearchStatus::found: return kExitPositive;
    case SearchStatus::none: return kExitNegative;
    case SearchStatus::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i)
        g_report.command += std::string(" ") + argv[i];

    CLI::App app{"labelab: adjacency labeling scheme laboratory"};
    app.require_subcommand(1);

    std::string scheme_arg, graph_path, labels_path, model_path, tree_path, out_path;
    std::string formula_path, pbs_path, decoders_path, bf_path, host_path, rep_path;
    std::string oracle_name, assign_csv, values_csv, semantics_arg = "strict";
    std::vector<std::string> witness_paths;
    std::string mode_arg = "or", kind_arg, reduce_action, fo_action, pbs_action;
    std::string encode_scheme, class_name, make_name;
    bool io_flag = false, bijective = false, directed = false, loops = false;
    bool canonical = false, report_flag = false;
    std::string graph_out_path;
    int c_flag = 0, k_flag = 0, n_flag = 0, slots_flag = 0, workers = 1;
    long long prefix = 8, value_bound = -1, limit = 0, time_ms = 0;
    std::uint64_t budget_nodes = 0;
    unsigned seed = 0;
    std::vector<int> criteria;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "node budget");
        cmd->add_option("--budget-ms", time_ms, "time budget in ms");
    };

    auto* encode = app.add_subcommand("encode", "run a constructive encoder");
    encode->add_option("--scheme", encode_scheme,
                       "interval|or-pointer|and-forest|twin|dichotomic|lng|cw")
        ->required();
    encode->add_option("--model", model_path, "interval model file");
    encode->add_option("--graph", graph_path, "graph file");
    encode->add_option("--tree", tree_path, "module tree file");
    encode->add_option("--slots", slots_flag, "slot count for or-pointer");
    encode->add_option("--k", k_flag, "slot count / part bound");
    encode->add_option("--out", out_path, "labels output file");
    encode->add_option("--graph-out", graph_out_path, "decoded graph output file");

    auto* decode = app.add_subcommand("decode", "decode labels into a graph");
    decode->add_option("--scheme", scheme_arg)->required();
    decode->add_option("--labels", labels_path)->required();
    decode->add_option("--c", c_flag, "label length multiplier");
    decode->add_option("--out", out_path, "graph output file");

    auto* verify = app.add_subcommand("verify", "check labels against a graph");
    verify->add_option("--scheme", scheme_arg)->required();
    verify->add_option("--labels", labels_path)->required();
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--c", c_flag);
    verify->add_option("--semantics", semantics_arg, "strict|mod-loops");

    auto* search = app.add_subcommand("search", "search for a labeling");
    search->add_option("--scheme", scheme_arg)->required();
    search->add_option("--graph", graph_path)->required();
    search->add_flag("--io", io_flag, "separate out/in labels");
    search->add_option("--c", c_flag);
    search->add_option("--value-bound", value_bound, "label value bound for pbs");
    search->add_option("--out", out_path, "witness labels file");
    add_budget(search);

    auto* pointer = app.add_subcommand("pointer-number", "least pointer number");
    pointer->add_option("--graph", graph_path)->required();
    pointer->add_option("--mode", mode_arg, "or|and")->required();
    pointer->add_flag("--bijective", bijective);
    add_budget(pointer);

    auto* recognize = app.add_subcommand("recognize", "graph class predicates");
    recognize->add_option("--graph", graph_path)->required();
    recognize->add_option("--class", class_name,
                          "dichotomic|linear-neighborhood|forest|interval|cograph|connected");
    recognize->add_flag("--report", report_flag, "print graph parameters");

    auto* reduce = app.add_subcommand("reduce", "reductions between graph classes");
    reduce->add_option("action", reduce_action, "verify|search|make")->required();
    reduce->add_option("--kind", kind_arg, "algebraic|subgraph");
    reduce->add_option("--graph", graph_path);
    reduce->add_option("--bf", bf_path, "boolean function file");
    reduce->add_option("--witness", witness_paths, "witness graph files");
    reduce->add_option("--rep", rep_path, "sgrep representation file");
    reduce->add_option("--host", host_path, "host graph file");
    reduce->add_option("--k", k_flag);
    reduce->add_option("--n", n_flag);
    reduce->add_option("--oracle", oracle_name, "interval|forest|complete|edgeless");
    reduce->add_option("--name", make_name,
                       "dichotomic-paths|lng-tcpaths|tcpaths-interval");
    reduce->add_option("--out", out_path);
    add_budget(reduce);

    auto* fo = app.add_subcommand("fo", "first-order label decoders");
    fo->add_option("action", fo_action, "eval|guard|qe|atoms")->required();
    fo->add_option("--formula", formula_path)->required();
    fo->add_option("--n", n_flag, "universe bound");
    fo->add_option("--assign", assign_csv, "comma-separated assignment");
    fo->add_option("--out", out_path);

    auto* pbs = app.add_subcommand("pbs", "polynomial-boolean systems");
    pbs->add_option("action", pbs_action, "eval|probe|clear|split")->required();
    pbs->add_option("--pbs", pbs_path)->required();
    pbs->add_option("--values", values_csv, "comma-separated values (a/b allowed)");
    pbs->add_option("--n", n_flag);
    pbs->add_option("--bound", value_bound);
    pbs->add_option("--out", out_path);

    auto* diag = app.add_subcommand("diag", "diagonalization graph class");
    diag->add_option("--decoders", decoders_path)->required();
    diag->add_option("--prefix", prefix);
    diag->add_flag("--directed", directed);
    diag->add_flag("--loops", loops);
    diag->add_option("--out", out_path, "directory for emitted graphs");
    add_budget(diag);

    auto* enumerate = app.add_subcommand("enumerate", "stream labeled graphs");
    enumerate->add_option("--n", n_flag)->required();
    enumerate->add_flag("--directed", directed);
    enumerate->add_flag("--loops", loops);
    enumerate->add_flag("--canonical", canonical, "one graph per isomorphism class");
    enumerate->add_option("--limit", limit, "stop after this many graphs");

    auto* props = app.add_subcommand("props", "run the acceptance suite");
    props->add_option("--criteria", criteria, "criterion numbers (default all)");
    props->add_option("--workers", workers, "searcher parallelism");
    props->add_option("--seed", seed, "seed for randomized corpora");

    CLI11_PARSE(app, argc, argv);

    try {
        SearchBudget budget = budget_from(budget_nodes, time_ms, 0);

        if (*encode) {
            LabelingScheme bit_scheme;
            std::vector<std::vector<BigRat>> num_rows;
            BitLabeling bit_labels;
            if (encode_scheme == "interval") {
                if (model_path.empty())
                    throw std::invalid_argument("encode interval needs --model");
                IntervalModel model =
                    parse_file(model_path, [](std::istream& in) { return read_intervals(in); });
                IntervalEncoding enc = interval_encode(model);
                for (const auto& [lo, hi] : enc.rank_labels)
                    std::cout << "(" << lo << "," << hi << ") ";
                std::cout << '\n';
                bit_labels = enc.labels;
                LabelingScheme scheme{interval_decoder(), 4};
                if (!verify_labeling(scheme, enc.labels, enc.decoded,
                                     PairSemantics::proper_only))
                    throw std::runtime_error("internal: encoding failed verification");
                if (!out_path.empty())
                    write_file(out_path,
                               [&](std::ostream& o) { write_bit_labels(o, enc.labels); });
                if (!graph_out_path.empty())
                    write_file(graph_out_path,
                               [&](std::ostream& o) { write_graph(o, enc.decoded); });
                g_report.outcome = "encoded";
            } else if (encode_scheme == "or-pointer" || encode_scheme == "and-forest" ||
                       encode_scheme == "twin") {
                Graph g = load_graph(graph_path);
                PointerLabeling pl;
                if (encode_scheme == "or-pointer")
                    pl = or_pointer_encode(g, slots_flag > 0 ? slots_flag
                                                             : degeneracy(g).degeneracy);
                else if (encode_scheme == "and-forest")
                    pl = and_pointer_forest_encode(g);
                else
                    pl = twin_encode(g,
                                     k_flag > 0 ? k_flag
                                                : static_cast<int>(twin_classes(g).size()),
                                     PointerLabeling::Mode::or_mode);
                if (!pointer_verify(pl, g))
                    throw std::runtime_error("internal: encoding failed verification");
                if (!out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        write_num_labels(o, pointer_to_labels(pl));
                    });
                g_report.outcome = "encoded";
            } else if (encode_scheme == "dichotomic" || encode_scheme == "lng") {
                Graph g = load_graph(graph_path);
                auto pairs = encode_scheme == "dichotomic"
                                 ? dichotomic_encode(g)
                                 : linear_neighborhood_encode(g);
                if (!verify_numpair_labels(pairs, g, encode_scheme == "dichotomic",
                                           g.order()))
                    throw std::runtime_error("internal: encoding failed verification");
                if (!out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        write_num_labels(o, numpairs_to_labels(pairs));
                    });
                g_report.outcome = "encoded";
            } else if (encode_scheme == "cw") {
                Graph g = load_graph(graph_path);
                int k = k_flag > 0 ? k_flag : 2;
                ModuleTreePtr tree;
                if (!tree_path.empty())
                    tree = parse_file(tree_path,
                                      [](std::istream& in) { return read_module_tree(in); });
                else {
                    auto built = build_module_tree(g, k);
                    if (!built) {
                        g_report.outcome = "no balanced k-module tree";
                        g_report.print(std::cout);
                        return kExitNegative;
                    }
                    tree = *built;
                }
                CwEncoding enc = cliquewidth_encode(g, tree, k);
                DecoderPtr dec = cliquewidth_block_decoder(k);
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v)
                        if (u != v &&
                            dec->accepts(enc.labels[u], enc.labels[v]) != g.edge(u, v))
                            throw std::runtime_error("internal: encoding failed verification");
                if (!out_path.empty())
                    write_file(out_path,
                               [&](std::ostream& o) { write_bit_labels(o, enc.labels); });
                g_report.outcome = "encoded";
            } else {
                throw std::invalid_argument("unknown encoder '" + encode_scheme + "'");
            }
            g_report.print(std::cout);
            return kExitPositive;
        }

        if (*decode) {
            SchemeSpec spec = parse_scheme(scheme_arg, c_flag);
            LabelsFile labels =
                parse_file(labels_path, [](std::istream& in) { return read_labels(in); });
            int n = labels.n;
            Graph g(n, true);
            auto pair_verdict = [&](int u, int v) {
                switch (spec.kind) {
                case SchemeSpec::Kind::bits:
                    if (labels.kind == LabelsFile::Kind::io)
                        return spec.bit_scheme.decoder->accepts(labels.out_labels[u],
                                                                labels.in_labels[v]);
                    return spec.bit_scheme.decoder->accepts(labels.labels[u],
                                                            labels.labels[v]);
                case SchemeSpec::Kind::fo: {
                    NumLabel lu, lv;
                    for (const BigRat& x : labels.num_labels[u])
                        lu.push_back(static_cast<long long>(
                            boost::multiprecision::numerator(x)));
                    for (const BigRat& x : labels.num_labels[v])
                        lv.push_back(static_cast<long long>(
                            boost::multiprecision::numerator(x)));
                    return spec.fo.accepts(n, lu, lv);
                }
                case SchemeSpec::Kind::pbs: {
                    std::vector<BigRat> values(labels.num_labels[u]);
                    values.insert(values.end(), labels.num_labels[v].begin(),
                                  labels.num_labels[v].end());
                    return pbs_eval(*spec.pbs, values);
                }
                case SchemeSpec::Kind::pointer: {
                    PointerLabeling pl =
                        pointer_from_labels(spec, to_int_labels(labels.num_labels));
                    return pointer_adjacent(pl, u, v);
                }
                }
                return false;
            };
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if ((u != v || labels.kind != LabelsFile::Kind::io) &&
                        pair_verdict(u, v))
                        g.set_edge(u, v, true);
            if (!out_path.empty())
                write_file(out_path, [&](std::ostream& o) { write_graph(o, g); });
            else
                write_graph(std::cout, g);
            g_report.outcome = "decoded";
            g_report.print(std::cout);
            return kExitPositive;
        }

        if (*verify) {
            SchemeSpec spec = parse_scheme(scheme_arg, c_flag);
            LabelsFile labels =
                parse_file(labels_path, [](std::istream& in) { return read_labels(in); });
            Graph g = load_graph(graph_path);
            PairSemantics semantics = semantics_arg == "mod-loops"
                                          ? PairSemantics::proper_only
                                          : PairSemantics::all_pairs;
            bool ok = verify_spec(spec, labels, g, semantics);
            g_report.outcome = ok ? "verified" : "labeling does not decode the graph";
            g_report.print(std::cout);
            return ok ? kExitPositive : kExitNegative;
        }

        if (*search) {
            SchemeSpec spec = parse_scheme(scheme_arg, c_flag);
            Graph g = load_graph(graph_path);
            budget.max_n = std::max(budget.max_n, g.order());
            SearchStatus status;
            if (spec.kind == SchemeSpec::Kind::bits) {
                auto result = find_labeling(spec.bit_scheme, g, io_flag, budget);
                status = result.status;
                g_report.nodes = result.nodes;
                if (status == SearchStatus::found && !out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        if (io_flag)
                            write_io_labels(o, result.out_labels, result.in_labels);
                        else
                            write_bit_labels(o, result.labels);
                    });
            } else if (spec.kind == SchemeSpec::Kind::fo) {
                auto result = find_fo_labeling(spec.fo, g, io_flag, budget);
                status = result.status;
                g_report.nodes = result.nodes;
                if (status == SearchStatus::found && !out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        std::vector<std::vector<BigRat>> rows;
                        for (const NumLabel& l : (io_flag ? result.out_labels
                                                          : result.labels)) {
                            std::vector<BigRat> row;
                            for (long long v : l)
                                row.push_back(BigRat(v));
                            rows.push_back(row);
                        }
                        write_num_labels(o, rows);
                    });
            } else if (spec.kind == SchemeSpec::Kind::pbs) {
                if (value_bound < 0)
                    throw std::invalid_argument("pbs search needs --value-bound");
                const Pbs& r = *spec.pbs;
                auto accepts = [&r](const NumLabel& x, const NumLabel& y) {
                    std::vector<BigInt> values;
                    for (long long v : x)
                        values.push_back(v);
                    for (long long v : y)
                        values.push_back(v);
                    return pbs_eval(r, values);
                };
                auto result =
                    find_numeric_labeling(accepts, r.k(), value_bound, g, io_flag, budget);
                status = result.status;
                g_report.nodes = result.nodes;
                if (status == SearchStatus::found && !out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        std::vector<std::vector<BigRat>> rows;
                        for (const NumLabel& l : result.labels) {
                            std::vector<BigRat> row;
                            for (long long v : l)
                                row.push_back(BigRat(v));
                            rows.push_back(row);
                        }
                        write_num_labels(o, rows);
                    });
            } else {
                throw std::invalid_argument("search does not apply to pointer schemes");
            }
            g_report.outcome = status == SearchStatus::found  ? "labeling found"
                               : status == SearchStatus::none ? "no labeling exists"
                                                              : "unknown (budget)";
            g_report.print(std::cout);
            return status_exit(status);
        }

        if (*pointer) {
            Graph g = load_graph(graph_path);
            auto mode = mode_arg == "and" ? PointerLabeling::Mode::and_mode
                                          : PointerLabeling::Mode::or_mode;
            auto k = pointer_number(g, mode, bijective, budget);
            if (!k) {
                g_report.outcome = "unknown (budget)";
                g_report.print(std::cout);
                return kExitUnknown;
            }
            std::cout << *k << '\n';
            g_report.outcome = "pointer number " + std::to_string(*k);
            g_report.print(std::cout);
            return kExitPositive;
        }

        if (*recognize) {
            Graph g = load_graph(graph_path);
            if (report_flag) {
                std::cout << "n: " << g.order() << '\n'
                          << "directed: " << (g.directed() ? "yes" : "no") << '\n'
                          << "edges: " << g.edge_count() << '\n';
                if (!g.directed()) {
                    std::cout << "max-degree: " << max_degree(g) << '\n';
                    if (!g.has_self_loops())
                        std::cout << "degeneracy: " << degeneracy(g).degeneracy << '\n'
                                  << "twin-index: " << twin_classes(g).size() << '\n';
                }
                std::cout << "dichotomic: " << (is_dichotomic(g) ? "yes" : "no") << '\n'
                          << "linear-neighborhood: "
                          << (is_linear_neighborhood(g) ? "yes" : "no") << '\n';
                g_report.outcome = "report";
                g_report.print(std::cout);
                return kExitPositive;
            }
            bool verdict;
            if (class_name == "dichotomic")
                verdict = is_dichotomic(g);
            else if (class_name == "linear-neighborhood" || class_name == "lng")
                verdict = is_linear_neighborhood(g);
            else if (class_name == "forest")
                verdict = !g.directed() && is_forest(g);
            else if (class_name == "interval")
                verdict = is_interval_graph(g);
            else if (class_name == "connected")
                verdict = is_connected(g);
            else if (class_name == "cograph") {
                verdict = true;
                for (int a = 0; a < g.order() && verdict; ++a)
                    for (int b = a + 1; b < g.order() && verdict; ++b)
                        for (int c = b + 1; c < g.order() && verdict; ++c)
                            for (int d = c + 1; d < g.order() && verdict; ++d)
                                if (canonical_min(induced_subgraph(g, {a, b, c, d})) ==
                                    canonical_min(Graph::path(4)))
                                    verdict = false;
            } else
                throw std::invalid_argument("unknown class '" + class_name + "'");
            g_report.outcome = verdict ? "member" : "not a member";
            g_report.print(std::cout);
            return verdict ? kExitPositive : kExitNegative;
        }

        if (*reduce) {
            if (reduce_action == "verify") {
                Graph g = load_graph(graph_path);
                if (kind_arg == "algebraic") {
                    BooleanFunctionTable f =
                        parse_file(bf_path, [](std::istream& in) { return read_bf(in); });
                    std::vector<Graph> witnesses;
                    for (const std::string& path : witness_paths)
                        witnesses.push_back(load_graph(path));
                    bool ok = verify_algebraic(g, f, witnesses);
                    g_report.outcome = ok ? "verified" : "reduction does not hold";
                    g_report.print(std::cout);
                    return ok ? kExitPositive : kExitNegative;
                }
                if (kind_arg == "subgraph") {
                    std::string dir =
                        std::filesystem::path(rep_path).parent_path().string();
                    SubgraphRepresentation rep = parse_file(
                        rep_path, [&dir](std::istream& in) { return read_sgrep(in, dir); });
                    bool ok = verify_subgraph(g, rep);
                    g_report.outcome = ok ? "verified" : "representation does not hold";
                    g_report.print(std::cout);
                    return ok ? kExitPositive : kExitNegative;
                }
                throw std::invalid_argument("reduce verify needs --kind");
            }
            if (reduce_action == "search") {
                Graph g = load_graph(graph_path);
                budget.max_n = std::max(budget.max_n, g.order());
                if (kind_arg == "algebraic") {
                    BooleanFunctionTable f =
                        parse_file(bf_path, [](std::istream& in) { return read_bf(in); });
                    GraphClassOracle oracle;
                    if (oracle_name == "interval")
                        oracle = interval_oracle();
                    else if (oracle_name == "forest")
                        oracle = forest_oracle();
                    else if (oracle_name == "complete")
                        oracle = complete_oracle();
                    else if (oracle_name == "edgeless")
                        oracle = edgeless_oracle();
                    else
                        throw std::invalid_argument("unknown oracle '" + oracle_name + "'");
                    auto result = search_algebraic(g, f, oracle, budget);
                    g_report.nodes = result.nodes;
                    if (result.status == SearchStatus::found && !out_path.empty())
                        for (std::size_t i = 0; i < result.witnesses.size(); ++i)
                            write_file(out_path + "." + std::to_string(i),
                                       [&](std::ostream& o) {
                                           write_graph(o, result.witnesses[i]);
                                       });
                    g_report.outcome = result.status == SearchStatus::found
                                           ? "witnesses found"
                                       : result.status == SearchStatus::none
                                           ? "no witnesses exist"
                                           : "unknown (budget)";
                    g_report.print(std::cout);
                    return status_exit(result.status);
                }
                if (kind_arg == "subgraph") {
                    Graph host = load_graph(host_path);
                    BooleanFunctionTable f =
                        parse_file(bf_path, [](std::istream& in) { return read_bf(in); });
                    auto result = search_subgraph(g, host, k_flag, f, budget);
                    g_report.nodes = result.nodes;
                    if (result.status == SearchStatus::found && !out_path.empty()) {
                        SubgraphRepresentation rep{host, f, k_flag, result.map};
                        write_file(out_path, [&](std::ostream& o) {
                            write_sgrep(o, rep, host_path);
                        });
                    }
                    g_report.outcome = result.status == SearchStatus::found
                                           ? "representation found"
                                       : result.status == SearchStatus::none
                                           ? "no representation exists"
                                           : "unknown (budget)";
                    g_report.print(std::cout);
                    return status_exit(result.status);
                }
                throw std::invalid_argument("reduce search needs --kind");
            }
            if (reduce_action == "make") {
                SubgraphRepresentation rep{Graph(1, false),
                                           BooleanFunctionTable::identity(), 1, {}};
                Graph subject(1, false);
                if (make_name == "dichotomic-paths") {
                    subject = load_graph(graph_path);
                    rep = dichotomic_to_paths(subject);
                } else if (make_name == "lng-tcpaths") {
                    subject = load_graph(graph_path);
                    rep = lng_to_tcpaths(subject);
                } else if (make_name == "tcpaths-interval") {
                    if (n_flag < 1)
                        throw std::invalid_argument("tcpaths-interval needs --n");
                    subject = Graph::transitive_path(n_flag);
                    rep = tcpaths_to_interval(n_flag);
                } else {
                    throw std::invalid_argument("unknown generator '" + make_name + "'");
                }
                if (!verify_subgraph(subject, rep))
                    throw std::runtime_error("internal: generator failed verification");
                if (!out_path.empty()) {
                    write_file(out_path + ".host", [&](std::ostream& o) {
                        write_graph(o, rep.host);
                    });
                    write_file(out_path, [&](std::ostream& o) {
                        write_sgrep(o, rep,
                                    std::filesystem::path(out_path + ".host")
                                        .filename()
                                        .string());
                    });
                }
                g_report.outcome = "representation built and verified";
                g_report.print(std::cout);
                return kExitPositive;
            }
            throw std::invalid_argument("unknown reduce action '" + reduce_action + "'");
        }

        if (*fo) {
            std::string bytes = slurp(formula_path);
            FormulaPtr phi;
            int file_c = 1;
            {
                std::istringstream sniff(bytes);
                std::string first;
                sniff >> first;
                std::istringstream in(bytes);
                if (first == "fo") {
                    FoFile f = read_fo(in);
                    phi = f.phi;
                    file_c = f.c;
                } else {
                    phi = parse_formula(bytes);
                }
            }
            (void)file_c;
            if (fo_action == "eval") {
                if (n_flag < 1)
                    throw std::invalid_argument("fo eval needs --n");
                Assignment a;
                for (const BigRat& v : parse_values(assign_csv))
                    a.push_back(static_cast<long long>(boost::multiprecision::numerator(v)));
                bool verdict = eval_bounded(*phi, a, n_flag);
                std::cout << (verdict ? "true" : "false") << '\n';
                g_report.outcome = verdict ? "true" : "false";
                g_report.print(std::cout);
                return verdict ? kExitPositive : kExitNegative;
            }
            if (fo_action == "guard" || fo_action == "qe") {
                FormulaPtr result =
                    fo_action == "guard" ? guard_transform(*phi) : qe_order(*phi);
                std::cout << to_text(*result) << '\n';
                if (!out_path.empty())
                    write_file(out_path, [&](std::ostream& o) {
                        o << "fo c=" << file_c << '\n' << to_text(*result) << '\n';
                    });
                g_report.outcome = "transformed";
                g_report.print(std::cout);
                return kExitPositive;
            }
            if (fo_action == "atoms") {
                AtomsDecomposition d = atoms_decompose(*phi);
                for (const auto& atom : d.atoms)
                    std::cout << to_text(*atom) << '\n';
                std::cout << "bf " << d.f.arity() << ' ' << d.f.to_hex() << '\n';
                g_report.outcome = std::to_string(d.atoms.size()) + " atoms";
                g_report.print(std::cout);
                return kExitPositive;
            }
            throw std::invalid_argument("unknown fo action '" + fo_action + "'");
        }

        if (*pbs) {
            Pbs system = parse_file(pbs_path, [](std::istream& in) { return read_pbs(in); });
            if (pbs_action == "eval") {
                auto values = parse_values(values_csv);
                bool verdict = pbs_eval(system, values);
                std::cout << (verdict ? "true" : "false") << '\n';
                g_report.outcome = verdict ? "true" : "false";
                g_report.print(std::cout);
                return verdict ? kExitPositive : kExitNegative;
            }
            if (pbs_action == "probe") {
                if (n_flag < 1 || value_bound < 0)
                    throw std::invalid_argument("pbs probe needs --n and --bound");
                ProbeResult probe = sign_pattern_probe(system, n_flag, value_bound);
                std::cout << probe.count << '\n';
                std::cout << "# labelings " << probe.labelings << ", warren-shaped log2 "
                          << probe.warren_log2_bound(4.0, system, n_flag) << '\n';
                g_report.outcome = std::to_string(probe.count) + " distinct graphs";
                g_report.print(std::cout);
                return kExitPositive;
            }
            if (pbs_action == "clear") {
                Pbs cleared = clear_denominators(system);
                if (!out_path.empty())
                    write_file(out_path,
                               [&](std::ostream& o) { write_pbs(o, cleared); });
                else
                    write_pbs(std::cout, cleared);
                g_report.outcome = "denominators cleared";
                g_report.print(std::cout);
                return kExitPositive;
            }
            if (pbs_action == "split") {
                SignSplit split = sign_split(system);
                std::cout << "# sign-split system: " << split.system.l()
                          << " polynomials over " << split.system.vars << " variables\n";
                if (!values_csv.empty()) {
                    auto values = parse_values(values_csv);
                    bool direct = pbs_eval(system, values);
                    bool via = pbs_eval(split.system, split.encode(values));
                    std::cout << "direct " << (direct ? "true" : "false") << ", split "
                              << (via ? "true" : "false") << '\n';
                    g_report.outcome = direct == via ? "verdicts agree" : "DISAGREE";
                    g_report.print(std::cout);
                    return direct == via ? kExitPositive : kExitNegative;
                }
                g_report.outcome = "split built";
                g_report.print(std::cout);
                return kExitPositive;
            }
            throw std::invalid_argument("unknown pbs action '" + pbs_action + "'");
        }

        if (*diag) {
            std::vector<DecoderPtr> decoders;
            std::istringstream list(slurp(decoders_path));
            std::string line;
            while (std::getline(list, line)) {
                std::istringstream is(line);
                std::string kind, arg;
                is >> kind >> arg;
                if (kind.empty() || kind[0] == '#')
                    continue;
                if (kind == "builtin") {
                    if (arg == "constant-false")
                        decoders.push_back(std::make_shared<ConstantDecoder>(false));
                    else if (arg == "constant-true")
                        decoders.push_back(std::make_shared<ConstantDecoder>(true));
                    else if (arg == "lexless")
                        decoders.push_back(lex_less_decoder());
                    else if (arg == "interval")
                        decoders.push_back(interval_decoder());
                    else
                        throw std::invalid_argument("unknown builtin '" + arg + "'");
                } else if (kind == "dfa") {
                    decoders.push_back(std::make_shared<DfaDecoder>(
                        parse_file(arg, [](std::istream& in) { return read_dfa(in); })));
                } else {
                    throw std::invalid_argument("unknown decoder kind '" + kind + "'");
                }
            }
            auto entries = diagonal_class(decoders, prefix, directed, loops, budget);
            bool gap = false;
            for (const auto& entry : entries) {
                std::cout << "n=" << entry.n << " decoder=" << entry.decoder_index
                          << " c=" << entry.label_multiplier << ": ";
                if (entry.status == SearchStatus::found) {
                    std::cout << "diagonal graph found\n";
                    if (!out_path.empty()) {
                        std::filesystem::create_directories(out_path);
                        write_file(out_path + "/diag_" + std::to_string(entry.n) + ".graph",
                                   [&](std::ostream& o) { write_graph(o, *entry.graph); });
                    } else {
                        write_graph(std::cout, *entry.graph);
                    }
                } else if (entry.status == SearchStatus::none) {
                    std::cout << "every graph represented, nothing to emit\n";
                } else {
                    std::cout << "unknown (budget gap)\n";
                    gap = true;
                }
            }
            g_report.outcome = gap ? "partial (budget gaps)" : "complete";
            g_report.print(std::cout);
            return gap ? kExitUnknown : kExitPositive;
        }

        if (*enumerate) {
            GraphEnumerator en(n_flag, directed, loops);
            long long count = 0;
            while (auto g = en.next()) {
                if (canonical && !(*g == canonical_min(*g)))
                    continue;
                write_graph(std::cout, *g);
                std::cout << '\n';
                if (limit > 0 && ++count >= limit)
                    break;
            }
            g_report.outcome = "enumerated";
            g_report.print(std::cout);
            return kExitPositive;
        }

        if (*props) {
            auto results = run_acceptance(criteria, workers, seed);
            bool ok = print_acceptance(std::cout, results);
            g_report.outcome = ok ? "all criteria passed" : "criteria failed";
            g_report.print(std::cout);
            return ok ? kExitPositive : kExitNegative;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
