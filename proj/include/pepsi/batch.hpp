// Batch kernels over label sets. Each has a serial reference path and an
// OpenMP path; results must be identical and the benchmark compares their
// throughput. The per-element work is pure, so parallelism is a plain
// data-split.
#pragma once

#include <span>
#include <vector>

#include "pepsi/node.hpp"
#include "pepsi/querier.hpp"

namespace pepsi {

enum class ExecMode { Serial, Parallel };

struct TagPairRow {
    Tag node_tag;
    Tag querier_tag;
};

// Runs the full node pipeline (grey key -> shared secret -> tag) and the
// full querier pipeline (yellow key -> shared secret -> tag) independently
// for every label.
std::vector<TagPairRow> batch_tag_pairs(const MasterSecret& ms,
                                        std::span<const Label> labels,
                                        const SystemParams& params,
                                        ExecMode mode);

}  // namespace pepsi
