#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "sphtet/core.hpp"

namespace sphtet {

// One of the six unordered vertex pairs {i, j}, 0 <= i < j <= 3, of a
// tetrahedron, in the fixed canonical order 01, 02, 03, 12, 13, 23.
// Opposite pairs partition the six edges: 01|23, 02|13, 03|12.
class EdgeId {
public:
    static constexpr int kCount = 6;

    // Unordered constructor: EdgeId(2, 0) names the same edge as EdgeId(0, 2).
    EdgeId(int i, int j) : index_(pair_index(i, j)) {}

    static constexpr EdgeId from_index(int index) { return EdgeId(index); }

    // Accepts two vertex digits, e.g. "02" or "20"; rejects everything else.
    static std::optional<EdgeId> parse(std::string_view text);

    constexpr int index() const { return index_; }
    constexpr int first() const { return kPairs[index_].first; }
    constexpr int second() const { return kPairs[index_].second; }
    constexpr EdgeId opposite() const { return EdgeId(kCount - 1 - index_); }
    constexpr bool contains(int vertex) const {
        return vertex == first() || vertex == second();
    }

    std::string name() const {
        return std::string{static_cast<char>('0' + first()),
                           static_cast<char>('0' + second())};
    }

    friend constexpr bool operator==(EdgeId a, EdgeId b) { return a.index_ == b.index_; }
    friend constexpr bool operator!=(EdgeId a, EdgeId b) { return a.index_ != b.index_; }

private:
    static constexpr std::array<std::pair<int, int>, kCount> kPairs = {
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    explicit constexpr EdgeId(int index) : index_(index) {}

    static int pair_index(int i, int j) {
        if (i > j) std::swap(i, j);
        for (int k = 0; k < kCount; ++k) {
            if (kPairs[k].first == i && kPairs[k].second == j) return k;
        }
        throw DomainError("no edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }

    int index_;
};

inline std::optional<EdgeId> EdgeId::parse(std::string_view text) {
    if (text.size() != 2) return std::nullopt;
    const int i = text[0] - '0';
    const int j = text[1] - '0';
    if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) return std::nullopt;
    return EdgeId(i, j);
}

inline const std::array<EdgeId, EdgeId::kCount>& all_edges() {
    static const std::array<EdgeId, EdgeId::kCount> edges = {
        EdgeId(0, 1), EdgeId(0, 2), EdgeId(0, 3),
        EdgeId(1, 2), EdgeId(1, 3), EdgeId(2, 3)};
    return edges;
}

}  // namespace sphtet
