#ifndef LABELAB_DECODER_HPP
#define LABELAB_DECODER_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "labelab/boolean_table.hpp"
#include "labelab/graph.hpp"

namespace labelab {

/// Label bits; possibly empty (n = 1 gives 0-bit labels).
struct BitLabel {
    std::vector<bool> bits;

    BitLabel() = default;
    explicit BitLabel(std::vector<bool> b) : bits(std::move(b)) {}

    static BitLabel from_value(std::uint64_t value, int width);
    static BitLabel from_string(const std::string& s); // '0'/'1' characters

    std::size_t size() const { return bits.size(); }
    std::uint64_t value() const; // big-endian numeric reading
    std::string to_string() const;

    bool operator==(const BitLabel& other) const { return bits == other.bits; }
    bool operator<(const BitLabel& other) const { return bits < other.bits; }
};

/// Number of bits per label that a scheme with multiplier c assigns to
/// graphs on n vertices: c * ceil(log2 n).
int label_width(int c, int n);

class Decoder {
public:
    enum class Kind { table, interval, dfa, formula, pbs, combination };

    virtual ~Decoder() = default;
    virtual Kind kind() const = 0;
    virtual bool accepts(const BitLabel& x, const BitLabel& y) const = 0;
};

using DecoderPtr = std::shared_ptr<const Decoder>;

struct LabelingScheme {
    DecoderPtr decoder;
    int c = 0;
};

/// Finite relation; pairs not listed are rejected.
class TableDecoder : public Decoder {
public:
    explicit TableDecoder(std::set<std::pair<BitLabel, BitLabel>> pairs)
        : pairs_(std::move(pairs)) {}

    /// Language-induced decoder: (x,y) accepted iff xy is in the language
    /// and |x| = |y|. Odd-length words contribute nothing.
    static std::shared_ptr<TableDecoder> from_language(const std::set<std::string>& words);

    Kind kind() const override { return Kind::table; }
    bool accepts(const BitLabel& x, const BitLabel& y) const override;

private:
    std::set<std::pair<BitLabel, BitLabel>> pairs_;
};

/// Accepts everything / nothing at any label length.
class ConstantDecoder : public Decoder {
public:
    explicit ConstantDecoder(bool value) : value_(value) {}
    Kind kind() const override { return Kind::table; }
    bool accepts(const BitLabel&, const BitLabel&) const override { return value_; }

private:
    bool value_;
};

/// The interval decoder: labels parsed as two equal-width big-endian numbers
/// (x1,x2); accepts iff neither x2 < y1 nor y2 < x1.
class IntervalDecoder : public Decoder {
public:
    Kind kind() const override { return Kind::interval; }
    bool accepts(const BitLabel& x, const BitLabel& y) const override;
};

DecoderPtr interval_decoder();

/// Boolean combination of sub-schemes. Each label splits into consecutive
/// blocks proportional to the parts' multipliers; the verdicts feed f.
class CombinationDecoder : public Decoder {
public:
    CombinationDecoder(std::vector<LabelingScheme> parts, BooleanFunctionTable f);

    Kind kind() const override { return Kind::combination; }
    bool accepts(const BitLabel& x, const BitLabel& y) const override;

    int total_c() const { return total_c_; }

private:
    std::vector<LabelingScheme> parts_;
    BooleanFunctionTable f_;
    int total_c_;
};

bool decode(const LabelingScheme& s, const BitLabel& x, const BitLabel& y);

LabelingScheme conjunction_decoder(const LabelingScheme& s1, const LabelingScheme& s2);
LabelingScheme negation_decoder(const LabelingScheme& s);
LabelingScheme combination_decoder(const std::vector<LabelingScheme>& parts,
                                   const BooleanFunctionTable& f);

enum class PairSemantics {
    all_pairs,   // Definition-1 strictness: self-pairs must decode loops
    proper_only, // self-loops ignored
};

using BitLabeling = std::vector<BitLabel>;

/// True iff the labeling reproduces g's edges under the scheme's decoder.
/// Labels must all have width c * ceil(log2 n).
bool verify_labeling(const LabelingScheme& s, const BitLabeling& labels, const Graph& g,
                     PairSemantics semantics = PairSemantics::all_pairs);

/// io-labeling verification: edge (u,v) decided from (out(u), in(v)).
/// Self-pairs are not consulted.
bool io_decode(const LabelingScheme& s, const BitLabeling& out_labels,
               const BitLabeling& in_labels, const Graph& g);

} // namespace labelab

#endif
