#include "pepsi/batch.hpp"

namespace pepsi {

namespace {

TagPairRow tag_pair_for(const MasterSecret& ms, const Label& label,
                        const SystemParams& params) {
    NodeKey nk = register_node(ms, label, "batch-node");
    QuerierKey qk = register_querier(ms, label, "batch-querier");
    return TagPairRow{derive_tag(node_shared_secret(nk, params)),
                      derive_tag(querier_shared_secret(qk, params))};
}

}  // namespace

std::vector<TagPairRow> batch_tag_pairs(const MasterSecret& ms,
                                        std::span<const Label> labels,
                                        const SystemParams& params,
                                        ExecMode mode) {
    std::vector<TagPairRow> out(labels.size());
    if (mode == ExecMode::Serial) {
        for (size_t i = 0; i < labels.size(); ++i)
            out[i] = tag_pair_for(ms, labels[i], params);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)labels.size(); ++i)
            out[i] = tag_pair_for(ms, labels[i], params);
    }
    return out;
}

}  // namespace pepsi
