#include "labelab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace labelab {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

// Lines with comments stripped; blank lines skipped.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw.erase(hash);
            std::size_t begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                continue;
            std::size_t end = raw.find_last_not_of(" \t\r");
            out = raw.substr(begin, end - begin + 1);
            return true;
        }
        return false;
    }

    std::string expect(const std::string& what) {
        std::string out;
        if (!next(out))
            fail(line_, "unexpected end of input, expected " + what);
        return out;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

long long to_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail(line, "bad integer '" + s + "'");
    } catch (const std::out_of_range&) {
        fail(line, "integer out of range '" + s + "'");
    }
}

// "v:" prefix of per-vertex lines
int vertex_prefix(const std::string& tok, int line) {
    if (tok.empty() || tok.back() != ':')
        fail(line, "expected 'vertex:' prefix, got '" + tok + "'");
    return static_cast<int>(to_int(tok.substr(0, tok.size() - 1), line));
}

} // namespace

Graph read_graph(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("graph header"));
    if (header.size() < 3 || header[0] != "graph")
        fail(r.line(), "expected 'graph <directed|undirected> <n> [loops]'");
    bool directed;
    if (header[1] == "directed")
        directed = true;
    else if (header[1] == "undirected")
        directed = false;
    else
        fail(r.line(), "expected 'directed' or 'undirected'");
    int n = static_cast<int>(to_int(header[2], r.line()));
    bool loops = header.size() > 3 && header[3] == "loops";
    Graph g(n, directed);
    std::string line;
    while (r.next(line)) {
        auto toks = tokens(line);
        if (toks.size() != 2)
            fail(r.line(), "expected 'u v'");
        int u = static_cast<int>(to_int(toks[0], r.line()));
        int v = static_cast<int>(to_int(toks[1], r.line()));
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(r.line(), "vertex index out of range");
        if (u == v && !loops)
            fail(r.line(), "self-loop in a file not declaring loops");
        g.set_edge(u, v, true);
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << (g.directed() ? "directed" : "undirected") << ' ' << g.order();
    if (g.has_self_loops())
        out << " loops";
    out << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.directed() ? 0 : u; v < g.order(); ++v)
            if (g.edge(u, v))
                out << u << ' ' << v << '\n';
}

LabelsFile read_labels(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("labels header"));
    if (header.size() != 4 || header[0] != "labels")
        fail(r.line(), "expected 'labels <bits|io|num> <n> <len>'");
    LabelsFile out;
    if (header[1] == "bits")
        out.kind = LabelsFile::Kind::bits;
    else if (header[1] == "io")
        out.kind = LabelsFile::Kind::io;
    else if (header[1] == "num")
        out.kind = LabelsFile::Kind::num;
    else
        fail(r.line(), "label kind must be bits, io or num");
    out.n = static_cast<int>(to_int(header[2], r.line()));
    out.width = static_cast<int>(to_int(header[3], r.line()));
    out.labels.resize(out.kind == LabelsFile::Kind::bits ? out.n : 0);
    if (out.kind == LabelsFile::Kind::io) {
        out.out_labels.resize(out.n);
        out.in_labels.resize(out.n);
    }
    if (out.kind == LabelsFile::Kind::num)
        out.num_labels.resize(out.n);
    std::vector<bool> seen(out.n, false);
    std::string line;
    while (r.next(line)) {
        auto toks = tokens(line);
        if (toks.empty())
            continue;
        int v = vertex_prefix(toks[0], r.line());
        if (v < 0 || v >= out.n)
            fail(r.line(), "vertex index out of range");
        if (seen[v])
            fail(r.line(), "duplicate label for vertex " + std::to_string(v));
        seen[v] = true;
        auto parse_bits = [&](const std::string& s) {
            if (static_cast<int>(s.size()) != out.width)
                fail(r.line(), "label width mismatch");
            return BitLabel::from_string(s);
        };
        switch (out.kind) {
        case LabelsFile::Kind::bits:
            if (toks.size() != 2 && !(out.width == 0 && toks.size() == 1))
                fail(r.line(), "expected 'v: <bits>'");
            out.labels[v] = toks.size() == 2 ? parse_bits(toks[1]) : BitLabel{};
            break;
        case LabelsFile::Kind::io:
            if (toks.size() != 3 && !(out.width == 0 && toks.size() == 1))
                fail(r.line(), "expected 'v: <out-bits> <in-bits>'");
            if (toks.size() == 3) {
                out.out_labels[v] = parse_bits(toks[1]);
                out.in_labels[v] = parse_bits(toks[2]);
            }
            break;
        case LabelsFile::Kind::num: {
            if (static_cast<int>(toks.size()) != out.width + 1)
                fail(r.line(), "expected k values per vertex");
            std::vector<BigRat> values;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                auto slash = t.find('/');
                try {
                    if (slash == std::string::npos)
                        values.push_back(BigRat(BigInt(t)));
                    else
                        values.push_back(BigRat(BigInt(t.substr(0, slash)),
                                                BigInt(t.substr(slash + 1))));
                } catch (const std::exception&) {
                    fail(r.line(), "bad numeric value '" + t + "'");
                }
            }
            out.num_labels[v] = std::move(values);
            break;
        }
        }
    }
    for (int v = 0; v < out.n; ++v)
        if (!seen[v])
            fail(r.line(), "missing label for vertex " + std::to_string(v));
    return out;
}

void write_bit_labels(std::ostream& out, const BitLabeling& labels) {
    std::size_t width = labels.empty() ? 0 : labels.front().size();
    out << "labels bits " << labels.size() << ' ' << width << '\n';
    for (std::size_t v = 0; v < labels.size(); ++v)
        out << v << ": " << labels[v].to_string() << '\n';
}

void write_io_labels(std::ostream& out, const BitLabeling& out_labels,
                     const BitLabeling& in_labels) {
    std::size_t width = out_labels.empty() ? 0 : out_labels.front().size();
    out << "labels io " << out_labels.size() << ' ' << width << '\n';
    for (std::size_t v = 0; v < out_labels.size(); ++v)
        out << v << ": " << out_labels[v].to_string() << ' ' << in_labels[v].to_string()
            << '\n';
}

void write_num_labels(std::ostream& out, const std::vector<std::vector<BigRat>>& labels) {
    std::size_t k = labels.empty() ? 0 : labels.front().size();
    out << "labels num " << labels.size() << ' ' << k << '\n';
    for (std::size_t v = 0; v < labels.size(); ++v) {
        out << v << ':';
        for (const BigRat& value : labels[v]) {
            BigInt num = boost::multiprecision::numerator(value);
            BigInt den = boost::multiprecision::denominator(value);
            out << ' ' << num;
            if (den != 1)
                out << '/' << den;
        }
        out << '\n';
    }
}

Dfa read_dfa(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("dfa header"));
    if (header.size() != 3 || header[0] != "dfa")
        fail(r.line(), "expected 'dfa <states> <alphabet>'");
    Dfa d;
    d.states = static_cast<int>(to_int(header[1], r.line()));
    d.alphabet = static_cast<int>(to_int(header[2], r.line()));
    d.transitions.assign(d.states, std::vector<int>(d.alphabet, -1));
    std::string line;
    while (r.next(line)) {
        auto toks = tokens(line);
        if (toks[0] == "start") {
            if (toks.size() != 2)
                fail(r.line(), "expected 'start <s>'");
            d.start = static_cast<int>(to_int(toks[1], r.line()));
        } else if (toks[0] == "accept") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                d.accepting.insert(static_cast<int>(to_int(toks[i], r.line())));
        } else {
            if (toks.size() != 3)
                fail(r.line(), "expected 'from symbol to'");
            int from = static_cast<int>(to_int(toks[0], r.line()));
            int symbol = static_cast<int>(to_int(toks[1], r.line()));
            int to = static_cast<int>(to_int(toks[2], r.line()));
            if (from < 0 || from >= d.states || symbol < 0 || symbol >= d.alphabet)
                fail(r.line(), "transition outside declared state or alphabet range");
            d.transitions[from][symbol] = to;
        }
    }
    for (const auto& row : d.transitions)
        for (int t : row)
            if (t < 0)
                fail(r.line(), "transition table is not total");
    d.validate();
    return d;
}

void write_dfa(std::ostream& out, const Dfa& d) {
    out << "dfa " << d.states << ' ' << d.alphabet << '\n';
    out << "start " << d.start << '\n';
    if (!d.accepting.empty()) {
        out << "accept";
        for (int s : d.accepting)
            out << ' ' << s;
        out << '\n';
    }
    for (int s = 0; s < d.states; ++s)
        for (int a = 0; a < d.alphabet; ++a)
            out << s << ' ' << a << ' ' << d.transitions[s][a] << '\n';
}

BooleanFunctionTable read_bf(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("bf header"));
    if (header.size() != 3 || header[0] != "bf")
        fail(r.line(), "expected 'bf <arity> <hex>'");
    int arity = static_cast<int>(to_int(header[1], r.line()));
    try {
        return BooleanFunctionTable::from_hex(arity, header[2]);
    } catch (const std::invalid_argument& e) {
        fail(r.line(), e.what());
    }
}

void write_bf(std::ostream& out, const BooleanFunctionTable& f) {
    out << "bf " << f.arity() << ' ' << f.to_hex() << '\n';
}

Pbs read_pbs(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("pbs header"));
    if (header.size() != 3 || header[0] != "pbs")
        fail(r.line(), "expected 'pbs <2k> <l>'");
    int vars = static_cast<int>(to_int(header[1], r.line()));
    int l = static_cast<int>(to_int(header[2], r.line()));
    std::vector<Polynomial> polys;
    for (int i = 0; i < l; ++i) {
        std::string line = r.expect("polynomial line");
        if (line.rfind("poly:", 0) != 0)
            fail(r.line(), "expected 'poly: coeff e1 ... e2k; ...'");
        Polynomial p(vars);
        std::string body = line.substr(5);
        std::istringstream terms(body);
        std::string term;
        while (std::getline(terms, term, ';')) {
            auto toks = tokens(term);
            if (toks.empty())
                continue;
            if (static_cast<int>(toks.size()) != vars + 1)
                fail(r.line(), "each term needs a coefficient and 2k exponents");
            BigInt coeff;
            try {
                coeff = BigInt(toks[0]);
            } catch (const std::exception&) {
                fail(r.line(), "bad coefficient '" + toks[0] + "'");
            }
            std::vector<unsigned> exps(vars);
            for (int e = 0; e < vars; ++e)
                exps[e] = static_cast<unsigned>(to_int(toks[e + 1], r.line()));
            try {
                p.add_term(exps, coeff);
            } catch (const std::invalid_argument& e) {
                fail(r.line(), e.what());
            }
        }
        polys.push_back(std::move(p));
    }
    auto bfline = tokens(r.expect("bf line"));
    if (bfline.size() != 3 || bfline[0] != "bf")
        fail(r.line(), "expected 'bf <l^2> <hex>'");
    int arity = static_cast<int>(to_int(bfline[1], r.line()));
    if (arity != l * l)
        fail(r.line(), "boolean function arity must be l^2");
    Pbs result{vars, std::move(polys),
               PbsBoolFn(BooleanFunctionTable::from_hex(arity, bfline[2]))};
    result.validate();
    return result;
}

void write_pbs(std::ostream& out, const Pbs& r) {
    if (!r.f.table())
        throw std::invalid_argument(
            "write_pbs: only explicit-table boolean functions serialize");
    out << "pbs " << r.vars << ' ' << r.l() << '\n';
    for (const auto& p : r.polys)
        out << "poly: " << p.to_text() << '\n';
    write_bf(out, *r.f.table());
}

IntervalModel read_intervals(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("intervals header"));
    if (header.size() != 2 || header[0] != "intervals")
        fail(r.line(), "expected 'intervals <n>'");
    int n = static_cast<int>(to_int(header[1], r.line()));
    IntervalModel model;
    model.intervals.assign(n, {0, 0});
    std::vector<bool> seen(n, false);
    std::string line;
    while (r.next(line)) {
        auto toks = tokens(line);
        if (toks.size() != 3)
            fail(r.line(), "expected 'v: lo hi'");
        int v = vertex_prefix(toks[0], r.line());
        if (v < 0 || v >= n || seen[v])
            fail(r.line(), "bad or duplicate vertex index");
        seen[v] = true;
        model.intervals[v] = {to_int(toks[1], r.line()), to_int(toks[2], r.line())};
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            fail(r.line(), "missing interval for vertex " + std::to_string(v));
    model.validate();
    return model;
}

void write_intervals(std::ostream& out, const IntervalModel& model) {
    out << "intervals " << model.size() << '\n';
    for (int v = 0; v < model.size(); ++v)
        out << v << ": " << model.intervals[v].first << ' ' << model.intervals[v].second
            << '\n';
}

// ---------------------------------------------------------- module trees

namespace {

struct SExprParser {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= text.size())
            throw std::invalid_argument("module tree: unexpected end of input");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("module tree: expected '") + c + "'");
        ++pos;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')' && text[pos] != ':' && text[pos] != ',')
            ++pos;
        if (pos == start)
            throw std::invalid_argument("module tree: expected a token");
        return text.substr(start, pos - start);
    }

    int number() {
        std::string w = word();
        try {
            return std::stoi(w);
        } catch (const std::exception&) {
            throw std::invalid_argument("module tree: bad number '" + w + "'");
        }
    }

    std::vector<int> number_list_until(char stop) {
        std::vector<int> out;
        while (peek() != stop)
            out.push_back(number());
        return out;
    }

    ModuleTreePtr node() {
        expect('(');
        std::string kind = word();
        auto result = std::make_shared<ModuleTreeNode>();
        if (kind == "leaf") {
            result->vertices = {number()};
            expect(')');
            return result;
        }
        if (kind != "node")
            throw std::invalid_argument("module tree: expected 'leaf' or 'node'");
        expect('(');
        if (word() != "parts")
            throw std::invalid_argument("module tree: expected '(parts ...)'");
        while (peek() == '(') {
            expect('(');
            result->parts.push_back(number_list_until(')'));
            expect(')');
        }
        expect(')');
        expect('(');
        if (word() != "attach")
            throw std::invalid_argument("module tree: expected '(attach ...)'");
        while (peek() != ')') {
            int v = number();
            expect(':');
            std::vector<int> indices;
            while (peek() != ',' && peek() != ')')
                indices.push_back(number());
            result->attach[v] = std::move(indices);
            if (peek() == ',')
                ++pos;
        }
        expect(')');
        result->left = node();
        result->right = node();
        expect(')');
        auto collect = [](const ModuleTreePtr& child) { return child->vertices; };
        result->vertices = collect(result->left);
        auto right_vertices = collect(result->right);
        result->vertices.insert(result->vertices.end(), right_vertices.begin(),
                                right_vertices.end());
        std::sort(result->vertices.begin(), result->vertices.end());
        return result;
    }
};

void write_tree_rec(std::ostream& out, const ModuleTreePtr& node) {
    if (node->leaf()) {
        out << "(leaf " << node->vertices.front() << ")";
        return;
    }
    out << "(node (parts";
    for (const auto& part : node->parts) {
        out << " (";
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << ")";
    }
    out << ") (attach";
    bool first = true;
    for (const auto& [v, indices] : node->attach) {
        out << (first ? " " : " , ") << v << ":";
        first = false;
        for (int j : indices)
            out << ' ' << j;
    }
    out << ") ";
    write_tree_rec(out, node->left);
    out << ' ';
    write_tree_rec(out, node->right);
    out << ')';
}

} // namespace

ModuleTreePtr read_module_tree(std::istream& in) {
    std::ostringstream all;
    all << in.rdbuf();
    SExprParser parser{all.str()};
    ModuleTreePtr tree = parser.node();
    parser.skip_ws();
    if (parser.pos != parser.text.size())
        throw std::invalid_argument("module tree: trailing input");
    return tree;
}

void write_module_tree(std::ostream& out, const ModuleTreePtr& tree) {
    write_tree_rec(out, tree);
    out << '\n';
}

SubgraphRepresentation read_sgrep(std::istream& in, const std::string& base_dir) {
    LineReader r(in);
    auto header = tokens(r.expect("sgrep header"));
    if (header.size() != 4 || header[0] != "sgrep")
        fail(r.line(), "expected 'sgrep k=<k> host=<file> bf=<hex>'");
    auto value_of = [&](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0)
            fail(r.line(), "expected '" + key + "=...'");
        return tok.substr(key.size() + 1);
    };
    int k = static_cast<int>(to_int(value_of(header[1], "k"), r.line()));
    std::string host_path = value_of(header[2], "host");
    std::string hex = value_of(header[3], "bf");
    if (!base_dir.empty() && host_path.front() != '/')
        host_path = base_dir + "/" + host_path;
    std::ifstream host_in(host_path);
    if (!host_in)
        fail(r.line(), "cannot open host graph '" + host_path + "'");
    Graph host = read_graph(host_in);
    BooleanFunctionTable f = BooleanFunctionTable::from_hex(k * k, hex);
    SubgraphRepresentation rep{std::move(host), std::move(f), k, {}};
    std::string line;
    std::vector<std::pair<int, std::vector<int>>> rows;
    int max_vertex = -1;
    while (r.next(line)) {
        auto toks = tokens(line);
        if (static_cast<int>(toks.size()) != k + 1)
            fail(r.line(), "expected 'v: h1 ... hk'");
        int v = vertex_prefix(toks[0], r.line());
        std::vector<int> tuple;
        for (int i = 1; i <= k; ++i)
            tuple.push_back(static_cast<int>(to_int(toks[i], r.line())));
        rows.push_back({v, std::move(tuple)});
        max_vertex = std::max(max_vertex, v);
    }
    rep.map.assign(max_vertex + 1, {});
    for (auto& [v, tuple] : rows)
        rep.map[v] = std::move(tuple);
    for (const auto& tuple : rep.map)
        if (static_cast<int>(tuple.size()) != k)
            throw std::invalid_argument("sgrep: missing tuple for some vertex");
    return rep;
}

void write_sgrep(std::ostream& out, const SubgraphRepresentation& rep,
                 const std::string& host_path) {
    out << "sgrep k=" << rep.k << " host=" << host_path << " bf=" << rep.f.to_hex()
        << '\n';
    for (std::size_t v = 0; v < rep.map.size(); ++v) {
        out << v << ':';
        for (int h : rep.map[v])
            out << ' ' << h;
        out << '\n';
    }
}

FoFile read_fo(std::istream& in) {
    LineReader r(in);
    auto header = tokens(r.expect("fo header"));
    if (header.empty() || header[0] != "fo")
        fail(r.line(), "expected 'fo c=<c> [semantics=bounded|infinite]'");
    FoFile out;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string& tok = header[i];
        if (tok.rfind("c=", 0) == 0)
            out.c = static_cast<int>(to_int(tok.substr(2), r.line()));
        else if (tok == "semantics=bounded")
            out.bounded = true;
        else if (tok == "semantics=infinite")
            out.bounded = false;
        else
            fail(r.line(), "unknown fo attribute '" + tok + "'");
    }
    std::string text = r.expect("formula text");
    try {
        out.phi = parse_formula(text);
    } catch (const std::invalid_argument& e) {
        fail(r.line(), e.what());
    }
    return out;
}

void write_fo(std::ostream& out, const FoFile& fo) {
    out << "fo c=" << fo.c;
    if (!fo.bounded)
        out << " semantics=infinite";
    out << '\n' << to_text(*fo.phi) << '\n';
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

} // namespace labelab
