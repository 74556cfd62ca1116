#pragma once

#include <vector>

namespace runnergap {

// Maximum bipartite matching via augmenting paths (Kuhn).  adj[u] lists the
// right-side vertices available to left vertex u.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t left, std::size_t right, std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), match_left_(left, -1), match_right_(right, -1) {}

    std::size_t solve() {
        std::size_t matched = 0;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            visited_.assign(match_right_.size(), false);
            if (try_augment(static_cast<int>(u))) ++matched;
        }
        return matched;
    }

    // match_left()[u] is the right vertex assigned to u, or -1.
    const std::vector<int>& match_left() const { return match_left_; }

private:
    bool try_augment(int u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (visited_[static_cast<std::size_t>(v)]) continue;
            visited_[static_cast<std::size_t>(v)] = true;
            if (match_right_[static_cast<std::size_t>(v)] == -1 ||
                try_augment(match_right_[static_cast<std::size_t>(v)])) {
                match_left_[static_cast<std::size_t>(u)] = v;
                match_right_[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<bool> visited_;
};

}  // namespace runnergap
