#ifndef HODGEMICRO_BIDEGREE_HPP
#define HODGEMICRO_BIDEGREE_HPP

#include <cstddef>
#include <map>
#include <utility>

namespace hodgemicro {

/// Sparse table (a, b) -> nonnegative dimension. Zero entries are absent.
struct BidegreeTable {
    std::map<std::pair<int, int>, std::size_t> entries;

    void add(int a, int b, std::size_t v) {
        if (v == 0) return;
        entries[{a, b}] += v;
    }

    std::size_t at(int a, int b) const {
        auto it = entries.find({a, b});
        return it == entries.end() ? 0 : it->second;
    }

    friend bool operator==(const BidegreeTable& x, const BidegreeTable& y) {
        return x.entries == y.entries;
    }
};

}  // namespace hodgemicro

#endif
