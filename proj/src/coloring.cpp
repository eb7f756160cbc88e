#include "oramsey/coloring.hpp"

#include <stdexcept>
#include <string>

namespace oramsey {

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

namespace {

void require_valid_subset(std::span<const int> subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0)
            throw std::invalid_argument("invalid subset: negative vertex");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument("invalid subset: entries must be strictly increasing");
    }
}

}  // namespace

i64 subset_rank(std::span<const int> subset) {
    require_valid_subset(subset);
    i64 rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        rank += binomial(subset[i], static_cast<i64>(i) + 1);
    return rank;
}

std::vector<int> subset_unrank(i64 rank, int k) {
    if (rank < 0) throw std::invalid_argument("subset_unrank: negative rank");
    if (k < 0) throw std::invalid_argument("subset_unrank: negative k");
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest c with C(c, i) <= rank
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        subset[static_cast<std::size_t>(i) - 1] = c;
        rank -= binomial(c, i);
    }
    return subset;
}

bool next_subset_colex(std::span<int> subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? subset[i + 1] : n;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (int j = 0; j < i; ++j) subset[j] = j;
            return true;
        }
    }
    return false;
}

OrderedColoring::OrderedColoring(int k, int n, Color fill) : k_(k), n_(n) {
    if (k < 2) throw std::invalid_argument("OrderedColoring: uniformity must be >= 2");
    if (n < 0) throw std::invalid_argument("OrderedColoring: negative vertex count");
    bit_count_ = binomial(n, k);
    words_.assign(static_cast<std::size_t>((bit_count_ + 63) / 64), 0);
    if (fill == Color::Red && bit_count_ > 0) {
        for (auto& w : words_) w = ~std::uint64_t{0};
        const int tail = static_cast<int>(bit_count_ & 63);
        if (tail != 0) words_.back() = (std::uint64_t{1} << tail) - 1;
    }
}

i64 OrderedColoring::checked_rank(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw std::invalid_argument("invalid subset: size does not match uniformity");
    if (!subset.empty() && subset.back() >= n_)
        throw std::invalid_argument("invalid subset: vertex " + std::to_string(subset.back()) +
                                    " out of range");
    return subset_rank(subset);
}

Color OrderedColoring::color(std::span<const int> subset) const {
    return color_at(checked_rank(subset));
}

void OrderedColoring::set_at(i64 rank, Color c) {
    const auto word = static_cast<std::size_t>(rank >> 6);
    const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
    if (c == Color::Red)
        words_[word] |= mask;
    else
        words_[word] &= ~mask;
}

void OrderedColoring::set(std::span<const int> subset, Color c) {
    set_at(checked_rank(subset), c);
}

OrderedColoring OrderedColoring::flipped() const {
    OrderedColoring out(k_, n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    const int tail = static_cast<int>(bit_count_ & 63);
    if (tail != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

OrderedColoring OrderedColoring::induced(std::span<const int> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= n_)
            throw std::invalid_argument("induced: vertex out of range");
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw std::invalid_argument("induced: vertices must be strictly increasing");
    }
    const int m = static_cast<int>(vertices.size());
    OrderedColoring out(k_, m);
    if (m < k_) return out;
    std::vector<int> local(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) local[static_cast<std::size_t>(i)] = i;
    std::vector<int> mapped(static_cast<std::size_t>(k_));
    i64 rank = 0;
    do {
        for (int i = 0; i < k_; ++i)
            mapped[static_cast<std::size_t>(i)] = vertices[static_cast<std::size_t>(local[static_cast<std::size_t>(i)])];
        out.set_at(rank, color_at(subset_rank(mapped)));
        ++rank;
    } while (next_subset_colex(local, m));
    return out;
}

}  // namespace oramsey
