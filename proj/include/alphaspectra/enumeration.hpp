#pragma once

#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

/// Enumeration size caps. ALPHA_SPECTRA_BUDGET can lower (or raise, up to the
/// hard caps 16 / 8) the defaults: either a single integer applied to both,
/// or "trees=A,graphs=B".
struct EnumBudget {
    int max_n_trees = 12;
    int max_n_graphs = 7;
    static EnumBudget from_env();
};

/// One canonical representative per unlabeled tree on n vertices, sorted by
/// canonical code. Built by leaf augmentation with canonical deduplication.
std::vector<Graph> all_trees(int n, const EnumBudget& budget = EnumBudget::from_env());

/// One canonical representative per unlabeled connected graph on n vertices,
/// sorted by canonical code. Exhaustive scan over labeled graphs with
/// canonical deduplication; jobs controls the OpenMP split (0 = default,
/// 1 = serial). The result is identical for every job count.
std::vector<Graph> all_connected_graphs(int n, const EnumBudget& budget = EnumBudget::from_env(),
                                        int jobs = 0);

std::vector<Graph> trees_with_matching(int n, int k,
                                       const EnumBudget& budget = EnumBudget::from_env());
std::vector<Graph> graphs_with_cut_vertices(int n, int k,
                                            const EnumBudget& budget = EnumBudget::from_env(),
                                            int jobs = 0);

/// Process-wide memoized streams (generation is the expensive part; the
/// n = 7 scan visits 2^21 labeled graphs).
const std::vector<Graph>& cached_trees(int n, const EnumBudget& budget = EnumBudget::from_env());
const std::vector<Graph>& cached_connected_graphs(int n,
                                                  const EnumBudget& budget = EnumBudget::from_env(),
                                                  int jobs = 0);

}  // namespace alphaspectra
