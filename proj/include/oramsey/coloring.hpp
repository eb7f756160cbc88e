#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oramsey/arith.hpp"

namespace oramsey {

// Red marks the sparse/forbidden structure throughout; violations enumerate
// set bits.
enum class Color : std::uint8_t { Blue = 0, Red = 1 };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
const char* color_name(Color c);

// Colexicographic rank of a strictly increasing k-subset:
// rank{s_1 < ... < s_k} = sum C(s_i, i).  Bijective onto 0..C(N,k)-1 for
// subsets of {0..N-1}.  Throws std::invalid_argument on unsorted, duplicate
// or negative input.
i64 subset_rank(std::span<const int> subset);

// Inverse of subset_rank.
std::vector<int> subset_unrank(i64 rank, int k);

// Advances a strictly increasing k-subset of {0..n-1} to its colex successor.
// Returns false when the input was the last subset.
bool next_subset_colex(std::span<int> subset, int n);

// A red/blue coloring of all k-subsets of {0..n-1}, one bit per subset in
// colex order (bit 1 = Red).  Vertices are 0-based and never relabeled.
// Immutable use after construction is safe from any number of threads.
class OrderedColoring {
public:
    OrderedColoring(int k, int n, Color fill = Color::Blue);

    int uniformity() const { return k_; }
    int vertex_count() const { return n_; }
    i64 edge_count() const { return bit_count_; }

    Color color_at(i64 rank) const {
        return (words_[static_cast<std::size_t>(rank >> 6)] >> (rank & 63)) & 1
                   ? Color::Red
                   : Color::Blue;
    }
    // Reads the bit at subset_rank(subset); validates membership in
    // {0..n-1} and sortedness.
    Color color(std::span<const int> subset) const;

    void set_at(i64 rank, Color c);
    void set(std::span<const int> subset, Color c);

    OrderedColoring flipped() const;

    // Coloring induced on a sorted vertex subset, relabeled to 0..m-1.
    OrderedColoring induced(std::span<const int> vertices) const;

    bool operator==(const OrderedColoring&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> mutable_words() { return words_; }

private:
    i64 checked_rank(std::span<const int> subset) const;

    int k_;
    int n_;
    i64 bit_count_;
    std::vector<std::uint64_t> words_;
};

}  // namespace oramsey
