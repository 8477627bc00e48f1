#pragma once

#include <string>
#include <vector>

#include "eqc/seifert.hpp"

namespace eqc {

enum class Hand { Right, Left };

Hand parse_hand(const std::string& text);
const char* hand_name(Hand h);

struct BraidWord {
    int strands = 2;
    std::vector<int> letters;  // +-i is the i-th generator, 1 <= i < strands

    BraidWord() = default;
    BraidWord(int strands_, std::vector<int> letters_);

    // "strands: N; word: s1 s2^-1 s1" or "N | 1 -2 1"
    static BraidWord parse(const std::string& text);
    std::string to_string() const;  // compact form

    bool operator==(const BraidWord& o) const { return strands == o.strands && letters == o.letters; }
};

int closure_component_count(const BraidWord& b);

SeifertMatrix seifert_matrix_of_closure(const BraidWord& b);

BraidWord torus_knot(long p, long q, Hand hand);

// Left-handed T(5,6) braid followed by a full negative twist on strands 1-2.
BraidWord cork_branch_knot();

}  // namespace eqc
