#include "deltatopo/simplicial.hpp"

#include <algorithm>

namespace delta {

ChainComplex simplicial_chain_complex(const DeltaSet& x, const RingSpec& ring) {
    if (x.empty_set()) return ChainComplex(ring);
    std::vector<long> ranks;
    for (int d = 0; d <= x.top_dim(); ++d) ranks.push_back(x.count(d));
    ChainComplex c(ring, 0, std::move(ranks));
    for (int d = 1; d <= x.top_dim(); ++d) {
        Matrix m(ring, x.count(d - 1), x.count(d));
        RingElem one = re_one(ring);
        RingElem minus = re_neg(ring, one);
        for (int j = 0; j < x.count(d); ++j)
            for (int i = 0; i <= d; ++i)
                m.add_at(x.faces[d][j][i], j, (i % 2 == 0) ? one : minus);
        c.set_diff(d, std::move(m));
    }
    return c;
}

ChainComplex relative_complex(const DeltaSet& x, const SubDeltaSet& a, const RingSpec& ring) {
    if (!is_face_closed(x, a)) throw DomainError("relative_complex: subset is not face-closed");
    if (x.empty_set()) return ChainComplex(ring);
    // keep[d]: ambient index -> position among surviving simplices, or -1
    std::vector<std::vector<long>> keep(x.top_dim() + 1);
    std::vector<long> ranks(x.top_dim() + 1, 0);
    for (int d = 0; d <= x.top_dim(); ++d) {
        keep[d].assign(x.count(d), -1);
        for (int i = 0; i < x.count(d); ++i)
            if (!a.contains({d, i})) keep[d][i] = ranks[d]++;
    }
    ChainComplex c(ring, 0, ranks);
    for (int d = 1; d <= x.top_dim(); ++d) {
        if (ranks[d] == 0) continue;
        Matrix m(ring, ranks[d - 1], ranks[d]);
        RingElem one = re_one(ring);
        RingElem minus = re_neg(ring, one);
        for (int j = 0; j < x.count(d); ++j) {
            if (keep[d][j] < 0) continue;
            for (int i = 0; i <= d; ++i) {
                long row = keep[d - 1][x.faces[d][j][i]];
                if (row < 0) continue;  // face lands in A: quotient kills it
                m.add_at(row, keep[d][j], (i % 2 == 0) ? one : minus);
            }
        }
        c.set_diff(d, std::move(m));
    }
    return c.trimmed();
}

}  // namespace delta
