#include "bsl/fusion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bsl {

std::vector<IndexBlock> AdmissiblePartition::fused_blocks() const {
    std::vector<IndexBlock> out;
    for (const auto& b : blocks) {
        if (b.size() > 1) out.push_back(b);
    }
    return out;
}

std::string AdmissiblePartition::str() const {
    std::ostringstream os;
    for (const auto& b : blocks) {
        os << "{";
        for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
        os << "}";
    }
    return os.str();
}

AdmissiblePartition make_partition(std::vector<IndexBlock> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const IndexBlock& x, const IndexBlock& y) { return x.front() < y.front(); });
    return AdmissiblePartition{std::move(blocks)};
}

bool is_admissible(const AdmissiblePartition& lambda, std::size_t d, const std::vector<std::size_t>& pairing) {
    if (pairing.size() != d + 1 || lambda.blocks.empty()) return false;
    if (lambda.blocks[0] != IndexBlock{0}) return false;
    std::vector<int> owner(d + 1, -1);
    for (std::size_t b = 0; b < lambda.blocks.size(); ++b) {
        if (lambda.blocks[b].empty()) return false;
        for (auto x : lambda.blocks[b]) {
            if (x > d || owner[x] != -1) return false;
            owner[x] = static_cast<int>(b);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
    for (const auto& block : lambda.blocks) {
        IndexBlock image;
        for (auto x : block) image.push_back(pairing[x]);
        std::sort(image.begin(), image.end());
        const auto& target = lambda.blocks[static_cast<std::size_t>(owner[image.front()])];
        if (target != image) return false;
    }
    return true;
}

std::vector<AdmissiblePartition> enumerate_admissible(std::size_t d, const std::vector<std::size_t>& pairing) {
    if (pairing.size() != d + 1 || pairing[0] != 0) throw std::invalid_argument("pairing must be an involution fixing 0");
    for (std::size_t i = 0; i <= d; ++i) {
        if (pairing[i] > d || pairing[pairing[i]] != i) throw std::invalid_argument("pairing must be an involution");
    }
    std::vector<AdmissiblePartition> out;
    if (d == 0) {
        out.push_back(AdmissiblePartition{{IndexBlock{0}}});
        return out;
    }
    // Restricted-growth strings a_1..a_d with a_1 = 0, a_k <= 1 + max(a_1..a_{k-1}).
    std::vector<std::size_t> rgs(d, 0), prefix_max(d, 0);
    while (true) {
        std::size_t blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        std::vector<IndexBlock> parts(blocks + 1);
        parts[0] = {0};
        for (std::size_t k = 0; k < d; ++k) parts[rgs[k] + 1].push_back(k + 1);
        AdmissiblePartition cand = make_partition(std::move(parts));
        if (is_admissible(cand, d, pairing)) out.push_back(std::move(cand));

        // next string in lexicographic order
        std::size_t pos = d;
        while (pos-- > 1) {
            if (rgs[pos] <= prefix_max[pos - 1]) break;
        }
        if (pos == 0 || pos >= d) break;
        ++rgs[pos];
        prefix_max[pos] = std::max(prefix_max[pos - 1], rgs[pos]);
        for (std::size_t k = pos + 1; k < d; ++k) {
            rgs[k] = 0;
            prefix_max[k] = prefix_max[pos];
        }
    }
    return out;
}

std::optional<FusionResult> bannai_muzychuk(const Eigenmatrix& P, const std::vector<std::size_t>& pairing,
                                            const AdmissiblePartition& lambda) {
    const std::size_t size = P.size();
    if (size == 0 || !is_admissible(lambda, size - 1, pairing)) return std::nullopt;
    const std::size_t nb = lambda.blocks.size();

    // Row signature: sums of the row over each block.
    std::vector<std::vector<GaussInt>> sig(size, std::vector<GaussInt>(nb));
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t b = 0; b < nb; ++b) {
            for (auto j : lambda.blocks[b]) sig[r][b] += P.at(r, j);
        }
    }
    std::vector<IndexBlock> delta;
    for (std::size_t r = 0; r < size; ++r) {
        auto it = std::find_if(delta.begin(), delta.end(), [&](const IndexBlock& cls) { return sig[cls.front()] == sig[r]; });
        if (it == delta.end()) delta.push_back({r});
        else it->push_back(r);
    }
    if (delta.size() != nb || delta[0] != IndexBlock{0}) return std::nullopt;

    FusionResult res;
    res.partition = lambda;
    res.delta = delta;
    res.fused_P = Eigenmatrix(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t b = 0; b < nb; ++b) res.fused_P.at(i, b) = sig[delta[i].front()][b];
    }
    res.class_count = nb - 1;
    res.fused_pairing.resize(nb);
    res.symmetric = true;
    for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t image = pairing[lambda.blocks[b].front()];
        for (std::size_t c = 0; c < nb; ++c) {
            if (std::find(lambda.blocks[c].begin(), lambda.blocks[c].end(), image) != lambda.blocks[c].end()) {
                res.fused_pairing[b] = c;
            }
        }
        if (res.fused_pairing[b] != b) res.symmetric = false;
    }
    return res;
}

std::vector<FusionResult> fusion_table(const Eigenmatrix& P, const std::vector<std::size_t>& pairing,
                                       std::size_t min_class) {
    const std::size_t d = P.class_count();
    std::vector<FusionResult> out;
    for (const auto& lambda : enumerate_admissible(d, pairing)) {
        if (lambda.class_count() == d || lambda.class_count() < min_class) continue;
        if (auto r = bannai_muzychuk(P, pairing, lambda)) out.push_back(std::move(*r));
    }
    std::stable_sort(out.begin(), out.end(), [](const FusionResult& a, const FusionResult& b) {
        if (a.class_count != b.class_count) return a.class_count > b.class_count;
        return a.partition.fused_blocks() < b.partition.fused_blocks();
    });
    return out;
}

DifferencePartition fuse_partition(const DifferencePartition& part, const AdmissiblePartition& lambda) {
    if (!is_admissible(lambda, part.class_count(), part.pairing())) {
        throw PartitionError("partition " + lambda.str() + " is not admissible");
    }
    std::vector<ElementSet> classes;
    for (const auto& block : lambda.blocks) {
        ElementSet s(part.ring().n());
        for (auto j : block) s |= part.cls(j);
        classes.push_back(std::move(s));
    }
    return DifferencePartition(part.ring_ptr(), std::move(classes));
}

AdmissiblePartition compose(const AdmissiblePartition& inner, const AdmissiblePartition& outer) {
    std::vector<IndexBlock> blocks;
    for (const auto& ob : outer.blocks) {
        IndexBlock merged;
        for (auto idx : ob) {
            const auto& ib = inner.blocks.at(idx);
            merged.insert(merged.end(), ib.begin(), ib.end());
        }
        blocks.push_back(std::move(merged));
    }
    return make_partition(std::move(blocks));
}

bool t_invariance(const DifferencePartition& part, const AdmissiblePartition& lambda) {
    const GaloisRing& R = part.ring();
    const auto T = R.subsets().T.members();
    const DifferencePartition fused = fuse_partition(part, lambda);
    for (const auto& cls : fused.classes()) {
        for (auto x : cls.members()) {
            for (auto t : T) {
                if (!cls.contains(R.mul(RingElem{t}, RingElem{x}).packed)) return false;
            }
        }
    }
    return true;
}

}  // namespace bsl
