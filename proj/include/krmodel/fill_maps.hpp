#pragma once

// fill and sfill: folding subset -> filling.  After every segment of the
// chain (one per column in type A, left and right halves otherwise) the
// current prefix product contributes its first k entries as a column.

#include <vector>

#include "alcove.hpp"
#include "weyl.hpp"

namespace krm {

struct FillResult {
    std::vector<Column> raw;
    std::vector<Column> sorted;
    std::vector<Window> prefix;   // the permutation at the end of each segment
};

inline FillResult fill(const LambdaChain& ch, const std::vector<int>& J) {
    check_subset(ch, J);
    FillResult res;
    Window w = identity_window(ch.type.rank);
    std::size_t next = 0;
    for (const Segment& s : ch.segments) {
        for (std::size_t p = s.begin; p < s.end; ++p) {
            if (next < J.size() && J[next] == static_cast<int>(p) + 1) {
                w = apply_reflection(w, ch.positions[p].root);
                ++next;
            }
        }
        Column col(w.begin(), w.begin() + s.height);
        res.raw.push_back(col);
        res.sorted.push_back(sorted_column(col, ch.type.rank));
        res.prefix.push_back(w);
    }
    return res;
}

inline std::vector<Column> sfill(const LambdaChain& ch, const std::vector<int>& J) { return fill(ch, J).sorted; }

} // namespace krm
