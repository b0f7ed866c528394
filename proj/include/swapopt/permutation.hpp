#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace swapopt {

/// An ordering of n distinct labels 0..n-1. Label k stands for the k-th
/// constituent of the alphabet (e.g. "SOV": S=0, O=1, V=2).
class Permutation {
public:
    explicit Permutation(std::vector<int> labels) : labels_(std::move(labels)) {
        validate();
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& labels() const { return labels_; }

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

    /// Render with a constituent alphabet, e.g. "SOV" -> "SVO".
    std::string to_label(const std::string& alphabet) const {
        if (static_cast<int>(alphabet.size()) != size())
            throw std::invalid_argument("alphabet size does not match permutation length");
        std::string s;
        for (int v : labels_) s.push_back(alphabet[static_cast<std::size_t>(v)]);
        return s;
    }

    /// Parse an order label such as "SVO" against an alphabet such as "SOV".
    static Permutation from_label(const std::string& label, const std::string& alphabet) {
        if (label.size() != alphabet.size())
            throw std::invalid_argument("order label '" + label + "' has wrong length");
        std::vector<int> v;
        v.reserve(label.size());
        for (char c : label) {
            auto pos = alphabet.find(c);
            if (pos == std::string::npos)
                throw std::invalid_argument("order label '" + label + "' uses a symbol outside the alphabet");
            v.push_back(static_cast<int>(pos));
        }
        return Permutation(std::move(v));
    }

private:
    void validate() const {
        const int n = size();
        if (n < 2) throw std::invalid_argument("permutation length must be at least 2");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : labels_) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("labels must be a permutation of 0..n-1");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> labels_;
};

/// Minimum number of adjacent swaps transforming a into b; equals the number
/// of inversions (Kendall tau distance) between the two orders.
inline int swap_distance(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("swap_distance: length mismatch");
    const int n = a.size();
    // Position of each label in b, then count inversions of a relative to b.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(b[i])] = i;
    std::vector<int> rel(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(a[i])];
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel[static_cast<std::size_t>(i)] > rel[static_cast<std::size_t>(j)]) ++inv;
    return inv;
}

}  // namespace swapopt
