#include "ababfree/pattern.hpp"

#include "ababfree/errors.hpp"

#include <algorithm>
#include <numeric>

namespace abab {

HalfIntegerL parse_half_integer_l(const std::string& text) {
    auto bad = [&]() {
        fail(ErrorKind::Parse, "l must be a half-integer >= 1 (e.g. \"2\" or \"2.5\"), got \"" +
                                   text + "\"");
    };
    std::string whole = text;
    bool has_half = false;
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string fraction = text.substr(dot + 1);
        if (fraction != "5") bad();
        whole = text.substr(0, dot);
        has_half = true;
    }
    if (whole.empty() || whole.size() > 6) bad();
    for (char ch : whole) {
        if (ch < '0' || ch > '9') bad();
    }
    int twice = 2 * std::stoi(whole) + (has_half ? 1 : 0);
    if (twice < 2) bad();
    return HalfIntegerL{twice};
}

std::string format_half_integer_l(HalfIntegerL l) {
    std::string s = std::to_string(l.twice_l / 2);
    if (l.twice_l % 2) s += ".5";
    return s;
}

namespace {

// A \ B and B \ A for strictly increasing index lists.
void set_differences(const std::vector<int>& a, const std::vector<int>& b,
                     std::vector<int>& a_only, std::vector<int>& b_only) {
    a_only.clear();
    b_only.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            a_only.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            b_only.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
}

// Greedy longest alternation a_1 < b_1 < a_2 < ... over the two disjoint
// increasing lists; taking the smallest usable element at each step is
// optimal (an exchange argument keeps every prefix of the greedy sequence
// no larger, element-wise, than any competitor's). Optionally records the
// chosen vertices.
int greedy_alternation(const std::vector<int>& a_only, const std::vector<int>& b_only,
                       std::vector<int>* witness) {
    int count = 0;
    long long last = -1;  // vertex indices are >= 0
    std::size_t i = 0, j = 0;
    while (true) {
        const std::vector<int>& src = (count % 2 == 0) ? a_only : b_only;
        std::size_t& pos = (count % 2 == 0) ? i : j;
        while (pos < src.size() && src[pos] <= last) ++pos;
        if (pos == src.size()) break;
        last = src[pos];
        if (witness) witness->push_back(src[pos]);
        ++count;
        ++pos;
    }
    return count;
}

} // namespace

int alternation_length(const std::vector<int>& edge_a, const std::vector<int>& edge_b) {
    std::vector<int> a_only, b_only;
    set_differences(edge_a, edge_b, a_only, b_only);
    std::vector<int> chosen;
    return greedy_alternation(a_only, b_only, &chosen);
}

std::optional<PatternViolation> find_abl_violation(const OrderedHypergraph& hg, HalfIntegerL l) {
    if (l.twice_l < 2) fail(ErrorKind::Invalid, "l must be >= 1");
    // Family-wide shortcut: an alternation uses ceil(len/2) vertices from
    // A \ B, so len <= 2 * |A| for every pair; if even the largest edge is
    // too small no violation can exist.
    std::size_t max_size = 0;
    for (const auto& e : hg.edges) max_size = std::max(max_size, e.size());
    if (2 * max_size < static_cast<std::size_t>(l.twice_l)) return std::nullopt;

    std::vector<int> a_only, b_only, witness;
    const int m = hg.edge_count();
    for (int ia = 0; ia < m; ++ia) {
        const auto& a = hg.edges[ia];
        if (2 * a.size() < static_cast<std::size_t>(l.twice_l)) continue;
        for (int ib = 0; ib < m; ++ib) {
            if (ib == ia) continue;
            const auto& b = hg.edges[ib];
            if (2 * b.size() + 1 < static_cast<std::size_t>(l.twice_l)) continue;
            set_differences(a, b, a_only, b_only);
            if (2 * a_only.size() < static_cast<std::size_t>(l.twice_l)) continue;
            witness.clear();
            int len = greedy_alternation(a_only, b_only, &witness);
            if (len >= l.twice_l) {
                witness.resize(l.twice_l);
                return PatternViolation{a, b, witness};
            }
        }
    }
    return std::nullopt;
}

bool is_abl_free_ordered(const OrderedHypergraph& hg, HalfIntegerL l) {
    return !find_abl_violation(hg, l).has_value();
}

OrderedHypergraph apply_vertex_order(const OrderedHypergraph& hg, const std::vector<int>& order) {
    const int n = hg.vertex_count();
    if (static_cast<int>(order.size()) != n) {
        fail(ErrorKind::Invalid, "order length does not match vertex count");
    }
    std::vector<int> position(n, -1);
    for (int k = 0; k < n; ++k) {
        int v = order[k];
        if (v < 0 || v >= n || position[v] != -1) {
            fail(ErrorKind::Invalid, "order is not a permutation of the vertices");
        }
        position[v] = k;
    }
    std::vector<std::string> vertices(n);
    for (int k = 0; k < n; ++k) vertices[k] = hg.vertices[order[k]];
    std::vector<std::vector<int>> edges = hg.edges;
    for (auto& edge : edges) {
        for (int& v : edge) v = position[v];
        std::sort(edge.begin(), edge.end());
    }
    return make_hypergraph(std::move(vertices), std::move(edges));
}

std::optional<std::vector<int>> find_abl_free_order(const OrderedHypergraph& hg, HalfIntegerL l) {
    const int n = hg.vertex_count();
    if (n > 10) {
        fail(ErrorKind::Guard,
             "order search is exhaustive over permutations; vertex count " + std::to_string(n) +
                 " exceeds 10");
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_abl_free_ordered(apply_vertex_order(hg, order), l)) {
            return order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

} // namespace abab
