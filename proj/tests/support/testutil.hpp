#ifndef TESTS_SUPPORT_TESTUTIL_HPP
#define TESTS_SUPPORT_TESTUTIL_HPP

#include "ababfree/errors.hpp"
#include "ababfree/hypergraph.hpp"
#include "ababfree/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

// Runs fn, which must throw abab::Error, and reports the error kind.
template <typename Fn>
abab::ErrorKind error_kind(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const abab::Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected abab::Error, but nothing was thrown");
}

// Hypergraph on n vertices labeled v0..v(n-1).
inline abab::OrderedHypergraph hg(int n, std::vector<std::vector<int>> edges) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return abab::make_hypergraph(std::move(labels), std::move(edges));
}

inline abab::Rat rat(long long p, long long q = 1) { return abab::Rat(p) / abab::Rat(q); }

} // namespace testutil

#endif
