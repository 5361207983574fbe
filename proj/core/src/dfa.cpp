#include "labelab/dfa.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace labelab {

void Dfa::validate() const {
    if (states < 1 || alphabet < 1)
        throw std::invalid_argument("dfa needs at least one state and symbol");
    if (start < 0 || start >= states)
        throw std::invalid_argument("dfa start state out of range");
    if (static_cast<int>(transitions.size()) != states)
        throw std::invalid_argument("dfa transition table is not total");
    for (const auto& row : transitions) {
        if (static_cast<int>(row.size()) != alphabet)
            throw std::invalid_argument("dfa transition table is not total");
        for (int t : row)
            if (t < 0 || t >= states)
                throw std::invalid_argument("dfa transition target out of range");
    }
    for (int s : accepting)
        if (s < 0 || s >= states)
            throw std::invalid_argument("dfa accepting state out of range");
}

bool Dfa::run(const std::vector<int>& word) const {
    int state = start;
    for (int symbol : word) {
        if (symbol < 0 || symbol >= alphabet)
            throw std::invalid_argument("dfa input symbol outside alphabet");
        state = transitions[state][symbol];
    }
    return accepting.count(state) > 0;
}

bool dfa_decode(const Dfa& d, const BitLabel& x, const BitLabel& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dfa_decode: label length mismatch");
    std::vector<int> word;
    word.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        word.push_back(x.bits[i] ? 1 : 0);
        word.push_back(y.bits[i] ? 1 : 0);
    }
    return d.run(word);
}

Dfa lex_less_dfa() {
    // 0 undecided (expects x bit), 1 saw x=0, 2 saw x=1, 3 less, 4 not-less
    Dfa d;
    d.states = 5;
    d.alphabet = 2;
    d.start = 0;
    d.accepting = {3};
    d.transitions = {
        {1, 2}, // undecided
        {0, 3}, // x=0: y=0 equal, y=1 less
        {4, 0}, // x=1: y=0 not-less, y=1 equal
        {3, 3},
        {4, 4},
    };
    return d;
}

DecoderPtr lex_less_decoder() {
    return std::make_shared<DfaDecoder>(lex_less_dfa());
}

BitLabel cw_encode_symbols(const std::string& symbols, std::size_t total_symbols) {
    if (symbols.size() > total_symbols)
        throw std::invalid_argument("cw_encode_symbols: padding target too small");
    std::vector<bool> bits;
    bits.reserve(2 * total_symbols);
    auto push = [&bits](int code) {
        bits.push_back((code >> 1) & 1);
        bits.push_back(code & 1);
    };
    for (char c : symbols) {
        switch (c) {
        case '0': push(kCwSymbolZero); break;
        case '1': push(kCwSymbolOne); break;
        case '#': push(kCwSymbolDelim); break;
        default: throw std::invalid_argument("cw symbol must be 0, 1 or #");
        }
    }
    for (std::size_t i = symbols.size(); i < total_symbols; ++i)
        push(kCwSymbolPad);
    return BitLabel(std::move(bits));
}

namespace {

std::vector<std::string> split_blocks(const std::string& s, int k) {
    std::vector<std::string> blocks;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t delim = s.find('#', pos);
        if (delim == std::string::npos)
            throw std::invalid_argument("cw label: missing block delimiter");
        std::string block = s.substr(pos, delim - pos);
        if (static_cast<int>(block.size()) != k + 1)
            throw std::invalid_argument("cw label: block has wrong width");
        for (char c : block)
            if (c != '0' && c != '1')
                throw std::invalid_argument("cw label: block must be binary");
        blocks.push_back(block);
        pos = delim + 1;
    }
    return blocks;
}

} // namespace

bool cw_block_accepts(const std::string& sx, const std::string& sy, int k) {
    auto bx = split_blocks(sx, k);
    auto by = split_blocks(sy, k);
    std::size_t common = std::min(bx.size(), by.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (bx[i][0] == by[i][0])
            continue;
        for (int p = 1; p <= k; ++p)
            if (bx[i][p] == '1' && by[i][p] == '1')
                return true;
        return false;
    }
    return false; // identical leading bits in every block: defined reject
}

namespace {

// Logical states of the block DFA, expanded below over the 2-bit symbol
// encoding and bit interleaving.
struct CwState {
    enum class Mode { eq, diff, latch, padrest, dead };
    Mode mode = Mode::eq;
    int pos = 0;     // position within block: 0 lead, 1..k tail, k+1 delim
    bool seen = false;
    bool accept = false; // latch verdict

    bool operator<(const CwState& o) const {
        return std::tie(mode, pos, seen, accept) <
               std::tie(o.mode, o.pos, o.seen, o.accept);
    }
};

CwState cw_step(const CwState& s, int symx, int symy, int k) {
    using Mode = CwState::Mode;
    auto dead = [] { return CwState{Mode::dead, 0, false, false}; };
    switch (s.mode) {
    case Mode::dead:
        return s;
    case Mode::latch:
        return s;
    case Mode::padrest:
        if (symx == kCwSymbolPad && symy == kCwSymbolPad)
            return s;
        return dead();
    case Mode::eq:
        if (s.pos == 0) {
            if (symx == kCwSymbolPad && symy == kCwSymbolPad)
                return CwState{Mode::padrest, 0, false, false};
            bool bitx = symx == kCwSymbolZero || symx == kCwSymbolOne;
            bool bity = symy == kCwSymbolZero || symy == kCwSymbolOne;
            if (!bitx || !bity)
                return dead();
            if (symx == symy)
                return CwState{Mode::eq, 1, false, false};
            return CwState{Mode::diff, 1, false, false};
        }
        if (s.pos <= k) {
            bool bitx = symx == kCwSymbolZero || symx == kCwSymbolOne;
            bool bity = symy == kCwSymbolZero || symy == kCwSymbolOne;
            if (!bitx || !bity)
                return dead();
            return CwState{Mode::eq, s.pos + 1, false, false};
        }
        if (symx == kCwSymbolDelim && symy == kCwSymbolDelim)
            return CwState{Mode::eq, 0, false, false};
        return dead();
    case Mode::diff:
        if (s.pos <= k) {
            bool bitx = symx == kCwSymbolZero || symx == kCwSymbolOne;
            bool bity = symy == kCwSymbolZero || symy == kCwSymbolOne;
            if (!bitx || !bity)
                return dead();
            bool seen = s.seen || (symx == kCwSymbolOne && symy == kCwSymbolOne);
            return CwState{Mode::diff, s.pos + 1, seen, false};
        }
        if (symx == kCwSymbolDelim && symy == kCwSymbolDelim)
            return CwState{Mode::latch, 0, false, s.seen};
        return dead();
    }
    return dead();
}

} // namespace

Dfa cliquewidth_block_dfa(int k) {
    if (k < 1)
        throw std::invalid_argument("cliquewidth block dfa needs k >= 1");
    // Expanded state: logical state + phase within the 4-bit group
    // (x1 y1 x2 y2) + the bits collected so far in the group.
    struct Key {
        CwState logical;
        int phase;
        int collected; // up to 3 bits, phase-many of them meaningful

        bool operator<(const Key& o) const {
            return std::tie(logical, phase, collected) <
                   std::tie(o.logical, o.phase, o.collected);
        }
    };
    std::map<Key, int> ids;
    std::vector<Key> order;
    auto intern = [&](const Key& key) {
        auto it = ids.find(key);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(order.size());
        ids.emplace(key, id);
        order.push_back(key);
        return id;
    };
    Key start{CwState{}, 0, 0};
    intern(start);
    std::vector<std::vector<int>> transitions;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Key key = order[i];
        std::vector<int> row(2);
        for (int bit = 0; bit < 2; ++bit) {
            Key next = key;
            next.collected = (key.collected << 1) | bit;
            next.phase = key.phase + 1;
            if (next.phase == 4) {
                int x1 = (next.collected >> 3) & 1;
                int y1 = (next.collected >> 2) & 1;
                int x2 = (next.collected >> 1) & 1;
                int y2 = next.collected & 1;
                int symx = (x1 << 1) | x2;
                int symy = (y1 << 1) | y2;
                next = Key{cw_step(key.logical, symx, symy, k), 0, 0};
            }
            row[bit] = intern(next);
        }
        transitions.push_back(std::move(row));
        // intern() may have grown `order`; the loop bound re-reads it.
    }
    Dfa d;
    d.states = static_cast<int>(order.size());
    d.alphabet = 2;
    d.start = 0;
    d.transitions = std::move(transitions);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Key& key = order[i];
        if (key.logical.mode == CwState::Mode::latch && key.logical.accept &&
            key.phase == 0)
            d.accepting.insert(static_cast<int>(i));
    }
    d.validate();
    return d;
}

DecoderPtr cliquewidth_block_decoder(int k) {
    return std::make_shared<DfaDecoder>(cliquewidth_block_dfa(k));
}

} // namespace labelab
