#include "pdg/fcfilt.hpp"

namespace pdg {

FpMat regular_nilpotent(int n, uint32_t p) {
    FpMat D(static_cast<size_t>(n), static_cast<size_t>(n), p);
    for (int k = 0; k + 1 < n; ++k)
        D.at(static_cast<size_t>(k), static_cast<size_t>(k) + 1) = 1;
    return D;
}

FpMat unit_idempotent(int n, uint32_t p, int i) {
    FpMat e(static_cast<size_t>(n), static_cast<size_t>(n), p);
    e.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;
    return e;
}

FcDatum<GradedModuleMap> ee_decomposition(int a, int b, uint32_t p) {
    FcDatum<GradedModuleMap> d;
    Fp F(p);
    for (const Partition& lam : partitions_in_box(a, b)) {
        Partition hat = lam.box_complement(a, b);
        uint32_t sign = (hat.size() % 2) ? F.neg(1) : 1;
        FcItem<GradedModuleMap> item{
            split_map(a, b, lam, p),
            gm_scalar(sign, merge_map(a, b, hat, p)),
            2 * lam.size() - a * b};
        d.items.push_back(std::move(item));
    }
    return d;
}

} // namespace pdg
