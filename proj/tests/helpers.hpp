#pragma once

#include "sodd/ktree.hpp"
#include "sodd/sum.hpp"

inline sodd::KTreeSeq make_seq(int k, std::vector<sodd::VertexSet> parents) {
    sodd::KTreeSeq s;
    s.k = k;
    for (int i = 0; i < k; ++i) s.initial.push_back(i);
    for (std::size_t i = 0; i < parents.size(); ++i) s.steps.push_back({k + static_cast<int>(i), parents[i]});
    return s;
}

// K3 as a one-step 2-tree, P = 1, no apexes.
inline sodd::Summand triangle() { return {make_seq(2, {{0, 1}}), 1}; }
