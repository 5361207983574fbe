#include "labelab/decoder.hpp"

#include <stdexcept>

namespace labelab {

BitLabel BitLabel::from_value(std::uint64_t value, int width) {
    if (width < 0 || width > 63)
        throw std::invalid_argument("bit label width out of range");
    if (width < 64 && value >= (std::uint64_t{1} << width))
        throw std::invalid_argument("value does not fit in label width");
    std::vector<bool> bits(width);
    for (int i = 0; i < width; ++i)
        bits[i] = (value >> (width - 1 - i)) & 1;
    return BitLabel(std::move(bits));
}

BitLabel BitLabel::from_string(const std::string& s) {
    std::vector<bool> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit label string must be over {0,1}");
        bits.push_back(c == '1');
    }
    return BitLabel(std::move(bits));
}

std::uint64_t BitLabel::value() const {
    if (bits.size() > 63)
        throw std::invalid_argument("bit label too wide for numeric reading");
    std::uint64_t v = 0;
    for (bool b : bits)
        v = (v << 1) | (b ? 1u : 0u);
    return v;
}

std::string BitLabel::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

int label_width(int c, int n) {
    if (c < 0 || n < 1)
        throw std::invalid_argument("label_width: bad arguments");
    int log = 0;
    while ((1 << log) < n)
        ++log;
    return c * log;
}

std::shared_ptr<TableDecoder> TableDecoder::from_language(const std::set<std::string>& words) {
    std::set<std::pair<BitLabel, BitLabel>> pairs;
    for (const std::string& w : words) {
        if (w.size() % 2 != 0)
            continue;
        std::size_t m = w.size() / 2;
        pairs.emplace(BitLabel::from_string(w.substr(0, m)),
                      BitLabel::from_string(w.substr(m)));
    }
    return std::make_shared<TableDecoder>(std::move(pairs));
}

bool TableDecoder::accepts(const BitLabel& x, const BitLabel& y) const {
    if (x.size() != y.size())
        throw std::invalid_argument("decoder queried with unequal label lengths");
    return pairs_.count({x, y}) > 0;
}

bool IntervalDecoder::accepts(const BitLabel& x, const BitLabel& y) const {
    if (x.size() != y.size())
        throw std::invalid_argument("decoder queried with unequal label lengths");
    if (x.size() % 2 != 0)
        throw std::invalid_argument("interval decoder requires even label length");
    std::size_t m = x.size() / 2;
    auto half = [m](const BitLabel& l, bool second) {
        std::vector<bool> part(l.bits.begin() + (second ? m : 0),
                               l.bits.begin() + (second ? 2 * m : m));
        return part;
    };
    // Lexicographic comparison of equal-width big-endian numbers is numeric.
    auto x2 = half(x, true), y1 = half(y, false);
    auto y2 = half(y, true), x1 = half(x, false);
    return !(x2 < y1) && !(y2 < x1);
}

DecoderPtr interval_decoder() {
    return std::make_shared<IntervalDecoder>();
}

CombinationDecoder::CombinationDecoder(std::vector<LabelingScheme> parts,
                                       BooleanFunctionTable f)
    : parts_(std::move(parts)), f_(std::move(f)), total_c_(0) {
    if (static_cast<int>(parts_.size()) != f_.arity())
        throw std::invalid_argument("combination: part count must match arity");
    for (const auto& p : parts_)
        total_c_ += p.c;
}

bool CombinationDecoder::accepts(const BitLabel& x, const BitLabel& y) const {
    if (x.size() != y.size())
        throw std::invalid_argument("decoder queried with unequal label lengths");
    if (total_c_ == 0) {
        if (!x.bits.empty())
            throw std::invalid_argument("combination with c=0 queried with nonempty labels");
        std::vector<bool> args;
        for (const auto& p : parts_)
            args.push_back(p.decoder->accepts(BitLabel{}, BitLabel{}));
        return f_.eval(args);
    }
    if (x.size() % total_c_ != 0)
        throw std::invalid_argument("label length not divisible by total multiplier");
    std::size_t unit = x.size() / total_c_;
    std::vector<bool> args;
    args.reserve(parts_.size());
    std::size_t offset = 0;
    for (const auto& p : parts_) {
        std::size_t len = unit * p.c;
        BitLabel xi(std::vector<bool>(x.bits.begin() + offset, x.bits.begin() + offset + len));
        BitLabel yi(std::vector<bool>(y.bits.begin() + offset, y.bits.begin() + offset + len));
        args.push_back(p.decoder->accepts(xi, yi));
        offset += len;
    }
    return f_.eval(args);
}

bool decode(const LabelingScheme& s, const BitLabel& x, const BitLabel& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("decode: label length mismatch");
    return s.decoder->accepts(x, y);
}

LabelingScheme conjunction_decoder(const LabelingScheme& s1, const LabelingScheme& s2) {
    return combination_decoder({s1, s2}, BooleanFunctionTable::conjunction());
}

LabelingScheme negation_decoder(const LabelingScheme& s) {
    return combination_decoder({s}, BooleanFunctionTable::negation());
}

LabelingScheme combination_decoder(const std::vector<LabelingScheme>& parts,
                                   const BooleanFunctionTable& f) {
    auto dec = std::make_shared<CombinationDecoder>(parts, f);
    int c = dec->total_c();
    return LabelingScheme{dec, c};
}

bool verify_labeling(const LabelingScheme& s, const BitLabeling& labels, const Graph& g,
                     PairSemantics semantics) {
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("verify: one label per vertex required");
    std::size_t want = static_cast<std::size_t>(label_width(s.c, g.order()));
    for (const auto& l : labels)
        if (l.size() != want)
            throw std::invalid_argument("verify: label width violates scheme contract");
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v && semantics == PairSemantics::proper_only)
                continue;
            if (s.decoder->accepts(labels[u], labels[v]) != g.edge(u, v))
                return false;
        }
    return true;
}

bool io_decode(const LabelingScheme& s, const BitLabeling& out_labels,
               const BitLabeling& in_labels, const Graph& g) {
    if (static_cast<int>(out_labels.size()) != g.order() ||
        static_cast<int>(in_labels.size()) != g.order())
        throw std::invalid_argument("io_decode: one out/in label per vertex required");
    std::size_t want = static_cast<std::size_t>(label_width(s.c, g.order()));
    for (int u = 0; u < g.order(); ++u)
        if (out_labels[u].size() != want || in_labels[u].size() != want)
            throw std::invalid_argument("io_decode: label width violates scheme contract");
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v)
                continue;
            if (s.decoder->accepts(out_labels[u], in_labels[v]) != g.edge(u, v))
                return false;
        }
    return true;
}

} // namespace labelab
