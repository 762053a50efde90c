#pragma once

namespace lbie::detail {

/// Interleaved (u, v) node coordinates for one interpolation order, and the
/// total degree the node set integrates exactly with its interpolatory weights.
struct NodeTable {
    const double* uv;
    int degree;
};

NodeTable node_table(int order);

}  // namespace lbie::detail
