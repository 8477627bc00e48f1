#include "eqc/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "eqc/errors.hpp"

namespace eqc {

Hand parse_hand(const std::string& text) {
    if (text == "right" || text == "r" || text == "R") return Hand::Right;
    if (text == "left" || text == "l" || text == "L") return Hand::Left;
    throw DomainError(ErrorCode::InvalidInput, "hand must be right or left: " + text);
}

const char* hand_name(Hand h) { return h == Hand::Right ? "right" : "left"; }

BraidWord::BraidWord(int strands_, std::vector<int> letters_) : strands(strands_), letters(std::move(letters_)) {
    if (strands < 2) throw DomainError(ErrorCode::InvalidInput, "a braid needs at least two strands");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= strands)
            throw DomainError(ErrorCode::InvalidInput, "letter " + std::to_string(l) + " out of range");
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int parse_int(const std::string& tok) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < -1000000 || v > 1000000) throw std::invalid_argument(tok);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw DomainError(ErrorCode::InvalidInput, "bad braid token: " + tok);
    }
}

// s3, s3^-1, s3^2 or a plain signed integer
void append_token(const std::string& tok, std::vector<int>& out) {
    if (tok.empty()) return;
    if (tok[0] != 's' && tok[0] != 'S') {
        out.push_back(parse_int(tok));
        return;
    }
    const std::size_t caret = tok.find('^');
    const int gen = parse_int(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int power = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1));
    if (power == 0) return;
    const int letter = power > 0 ? gen : -gen;
    for (int k = 0; k < std::abs(power); ++k) out.push_back(letter);
}

std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) append_token(tok, out);
    return out;
}

}  // namespace

BraidWord BraidWord::parse(const std::string& text) {
    const std::size_t bar = text.find('|');
    if (bar != std::string::npos) {
        return BraidWord(parse_int(strip(text.substr(0, bar))), parse_letters(text.substr(bar + 1)));
    }
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos) throw DomainError(ErrorCode::InvalidInput, "unrecognized braid: " + text);
    std::string head = strip(text.substr(0, semi));
    std::string tail = strip(text.substr(semi + 1));
    auto value_after = [&](const std::string& part, const std::string& key) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos || strip(part.substr(0, colon)) != key)
            throw DomainError(ErrorCode::InvalidInput, "expected '" + key + ":' in braid: " + text);
        return strip(part.substr(colon + 1));
    };
    return BraidWord(parse_int(value_after(head, "strands")), parse_letters(value_after(tail, "word")));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    os << strands << " |";
    for (int l : letters) os << ' ' << l;
    return os.str();
}

int closure_component_count(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : b.letters) {
        const int i = std::abs(l) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
    }
    return cycles;
}

// Seifert's algorithm on a closed braid gives one disk per strand and one
// half-twisted band per letter. A basis of H_1 is formed by loops through
// consecutive bands of the same generator index.
SeifertMatrix seifert_matrix_of_closure(const BraidWord& b) {
    if (closure_component_count(b) != 1)
        throw DomainError(ErrorCode::NotAKnot, "closure of " + b.to_string() + " has several components");
    struct Loop {
        int index;
        std::size_t x1, x2;  // band positions, x1 < x2
        int e1, e2;          // band signs
    };
    std::vector<Loop> loops;
    for (int i = 1; i < b.strands; ++i) {
        std::vector<std::size_t> pos;
        for (std::size_t k = 0; k < b.letters.size(); ++k)
            if (std::abs(b.letters[k]) == i) pos.push_back(k);
        if (pos.empty())
            throw DomainError(ErrorCode::DisconnectedSurface, "generator " + std::to_string(i) + " is absent");
        for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
            loops.push_back({i, pos[k], pos[k + 1], b.letters[pos[k]] > 0 ? 1 : -1,
                             b.letters[pos[k + 1]] > 0 ? 1 : -1});
        }
    }
    // ordering by position keeps the matrix banded
    std::stable_sort(loops.begin(), loops.end(), [](const Loop& a, const Loop& c) {
        return a.x1 != c.x1 ? a.x1 < c.x1 : a.index < c.index;
    });
    const std::size_t g = loops.size();
    SeifertMatrix v(g);
    for (std::size_t a = 0; a < g; ++a) {
        const Loop& la = loops[a];
        v(a, a) = -(la.e1 + la.e2) / 2;
        for (std::size_t c = 0; c < g; ++c) {
            const Loop& lc = loops[c];
            if (lc.index == la.index && lc.x1 == la.x2) {
                // shared band of sign e
                v(a, c) = (la.e2 - 1) / 2;
                v(c, a) = (la.e2 + 1) / 2;
            } else if (lc.index == la.index + 1) {
                if (la.x1 < lc.x1 && lc.x1 < la.x2 && la.x2 < lc.x2) v(a, c) = 1;
                else if (lc.x1 < la.x1 && la.x1 < lc.x2 && lc.x2 < la.x2) v(a, c) = -1;
            }
        }
    }
    return v;
}

BraidWord torus_knot(long p, long q, Hand hand) {
    if (p < 2 || q < 2 || gcd_long(p, q) != 1)
        throw DomainError(ErrorCode::NotCoprime, "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
    if (q > 1000 || p * (q - 1) > 1000000) throw DomainError(ErrorCode::InvalidInput, "torus knot too large");
    std::vector<int> letters;
    const int sign = hand == Hand::Right ? 1 : -1;
    for (long r = 0; r < p; ++r)
        for (int i = 1; i < q; ++i) letters.push_back(sign * i);
    return BraidWord(static_cast<int>(q), std::move(letters));
}

BraidWord cork_branch_knot() {
    BraidWord b = torus_knot(5, 6, Hand::Left);
    b.letters.push_back(-1);
    b.letters.push_back(-1);
    return b;
}

}  // namespace eqc
