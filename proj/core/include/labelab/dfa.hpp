#ifndef LABELAB_DFA_HPP
#define LABELAB_DFA_HPP

#include <set>
#include <string>
#include <vector>

#include "labelab/decoder.hpp"

namespace labelab {

/// Total deterministic finite automaton, states indexed from 0.
struct Dfa {
    int states = 0;
    int alphabet = 2;
    int start = 0;
    std::set<int> accepting;
    std::vector<std::vector<int>> transitions; // [state][symbol]

    bool run(const std::vector<int>& word) const;
    void validate() const;
};

/// Runs d on the interleaved string x1 y1 x2 y2 ... ; labels must have equal
/// length. Accepts iff the final state is accepting.
bool dfa_decode(const Dfa& d, const BitLabel& x, const BitLabel& y);

/// Interleaved lexicographic comparison: accepts iff x < y as bit strings
/// (equivalently as big-endian numbers). Three logical phases -- undecided,
/// less, not-less -- expanded over single bits.
Dfa lex_less_dfa();

class DfaDecoder : public Decoder {
public:
    explicit DfaDecoder(Dfa d) : dfa_(std::move(d)) { dfa_.validate(); }

    Kind kind() const override { return Kind::dfa; }
    bool accepts(const BitLabel& x, const BitLabel& y) const override {
        return dfa_decode(dfa_, x, y);
    }

    const Dfa& dfa() const { return dfa_; }

private:
    Dfa dfa_;
};

DecoderPtr lex_less_decoder();

// --- clique-width block labels -------------------------------------------
//
// Labels are sequences of blocks over the alphabet {0,1,#}: a side bit, k
// payload bits, then the delimiter '#'. The whole string is re-encoded over
// bits, two per symbol: 00 -> '0', 01 -> '1', 10 -> '#', 11 -> pad.

constexpr int kCwSymbolZero = 0;
constexpr int kCwSymbolOne = 1;
constexpr int kCwSymbolDelim = 2;
constexpr int kCwSymbolPad = 3;

/// Symbol string ('0','1','#') to the 2-bit encoding, padded with the pad
/// symbol up to total_symbols.
BitLabel cw_encode_symbols(const std::string& symbols, std::size_t total_symbols);

/// Reference block decoder: at the first block whose leading bits differ the
/// two k-bit tails must share a position holding 1 in both. Identical leading
/// bits throughout is a defined reject. Throws on malformed block structure.
bool cw_block_accepts(const std::string& sx, const std::string& sy, int k);

/// DFA over the 2-bit re-encoded, interleaved labels computing the same
/// relation (malformed inputs fall into a dead state instead of throwing).
Dfa cliquewidth_block_dfa(int k);

DecoderPtr cliquewidth_block_decoder(int k);

} // namespace labelab

#endif
