#include "bsl/scheme.hpp"

#include <array>
#include <deque>
#include <optional>
#include <random>
#include <sstream>

#include "bsl/parallel.hpp"

namespace bsl {

// ---------------------------------------------------------------------------
// DifferencePartition

DifferencePartition::DifferencePartition(std::shared_ptr<const GaloisRing> ring, std::vector<ElementSet> classes)
    : ring_(std::move(ring)), classes_(std::move(classes)) {
    const GaloisRing& R = *ring_;
    const std::size_t n = R.n();
    if (classes_.empty()) throw PartitionError("partition has no classes");
    if (classes_.size() > 255) throw PartitionError("too many classes");
    for (const auto& c : classes_) {
        if (c.universe() != n) throw PartitionError("class mask has the wrong universe size");
        if (c.empty()) throw PartitionError("empty class");
    }
    if (classes_[0].count() != 1 || !classes_[0].contains(0)) throw PartitionError("S_0 must be {0}");

    class_of_.assign(n, 0xFF);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (auto x : classes_[i].members()) {
            if (class_of_[x] != 0xFF) {
                throw PartitionError("element " + std::to_string(x) + " lies in classes " +
                                     std::to_string(class_of_[x]) + " and " + std::to_string(i));
            }
            class_of_[x] = static_cast<std::uint8_t>(i);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (class_of_[x] == 0xFF) throw PartitionError("element " + std::to_string(x) + " is in no class");
    }

    pairing_.resize(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const auto members = classes_[i].members();
        const std::size_t target = class_of_[R.neg(RingElem{members.front()}).packed];
        for (auto x : members) {
            if (class_of_[R.neg(RingElem{x}).packed] != target) {
                throw PartitionError("-S_" + std::to_string(i) + " is not a class");
            }
        }
        if (classes_[target].count() != members.size()) {
            throw PartitionError("-S_" + std::to_string(i) + " is not a class");
        }
        pairing_[i] = target;
    }
}

std::vector<std::uint64_t> DifferencePartition::sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_) out.push_back(c.count());
    return out;
}

DifferencePartition build_partition(std::shared_ptr<const GaloisRing> ring) {
    const GaloisRing& R = *ring;
    const RingSubsets& sub = R.subsets();
    const std::size_t n = R.n();

    ElementSet s0(n), s1(n), s2(n), s4(n);
    s0.insert(0);
    const auto H = sub.H.members();
    for (auto t : sub.T.members()) {
        if (RingElem{t} == R.one()) continue;
        for (auto h : H) {
            const RingElem x = R.mul(RingElem{t}, RingElem{h});
            s1.insert(x.packed);
            s2.insert(R.neg(x).packed);
        }
    }
    for (auto h : H) s4.insert(R.neg(RingElem{h}).packed);
    ElementSet s5 = sub.P0;
    s5.erase(0);
    ElementSet s6 = sub.P - sub.P0;

    return DifferencePartition(std::move(ring), {s0, s1, s2, sub.H, s4, s5, s6});
}

// ---------------------------------------------------------------------------
// Axiom verification

NotAScheme::NotAScheme(std::size_t i_, std::size_t j_, std::size_t k_, RingElem w1, std::uint64_t c1, RingElem w2,
                       std::uint64_t c2)
    : std::runtime_error("not an association scheme: |{(b,c) in S_" + std::to_string(i_) + " x S_" +
                         std::to_string(j_) + " : b+c = x}| differs on S_" + std::to_string(k_) + " (x=" +
                         std::to_string(w1.packed) + " gives " + std::to_string(c1) + ", x=" +
                         std::to_string(w2.packed) + " gives " + std::to_string(c2) + ")"),
      i(i_), j(j_), k(k_), witness1(w1), witness2(w2), count1(c1), count2(c2) {}

Scheme verify_scheme(const DifferencePartition& part) {
    const GaloisRing& R = part.ring();
    const std::size_t n = R.n();
    const std::size_t size = part.classes().size();
    const std::size_t d = size - 1;

    std::vector<std::vector<std::uint32_t>> members;
    members.reserve(size);
    for (const auto& c : part.classes()) members.push_back(c.members());

    struct Violation {
        std::size_t k;
        RingElem w1, w2;
        std::uint64_t c1, c2;
    };
    struct PairResult {
        std::vector<std::uint64_t> p;
        std::optional<Violation> violation;
    };
    std::vector<PairResult> results(size * size);
    std::vector<std::vector<std::uint32_t>> scratch(worker_count(), std::vector<std::uint32_t>(n));

    parallel_for(size * size, [&](std::size_t worker, std::size_t idx) {
        const std::size_t i = idx / size, j = idx % size;
        auto& counts = scratch[worker];
        std::fill(counts.begin(), counts.end(), 0u);
        for (auto beta : members[i]) {
            for (auto gamma : members[j]) ++counts[R.add(RingElem{beta}, RingElem{gamma}).packed];
        }
        PairResult& out = results[idx];
        out.p.resize(size);
        for (std::size_t k = 0; k < size && !out.violation; ++k) {
            const std::uint32_t first = members[k].front();
            const std::uint32_t value = counts[first];
            out.p[k] = value;
            for (auto x : members[k]) {
                if (counts[x] != value) {
                    out.violation = Violation{k, RingElem{first}, RingElem{x}, value, counts[x]};
                    break;
                }
            }
        }
    });

    Scheme s;
    s.n = n;
    s.d = d;
    s.valencies = part.sizes();
    s.pairing = part.pairing();
    s.intersection.resize(size * size * size);
    for (std::size_t idx = 0; idx < size * size; ++idx) {
        const auto& r = results[idx];
        if (r.violation) {
            const auto& v = *r.violation;
            throw NotAScheme(idx / size, idx % size, v.k, v.w1, v.c1, v.w2, v.c2);
        }
        std::copy(r.p.begin(), r.p.end(), s.intersection.begin() + static_cast<std::ptrdiff_t>(idx * size));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Eigenmatrix

Eigenmatrix::Eigenmatrix(std::size_t size, std::vector<GaussInt> entries) : size_(size), entries_(std::move(entries)) {
    if (entries_.size() != size_ * size_) throw std::invalid_argument("eigenmatrix entry count mismatch");
}

Integer Eigenmatrix::order() const {
    Integer sum = 0;
    for (std::size_t j = 0; j < size_; ++j) {
        if (!at(0, j).is_real()) throw std::domain_error("row 0 of an eigenmatrix must be real");
        sum += at(0, j).re();
    }
    return sum;
}

GaussInt Eigenmatrix::determinant() const {
    // Bareiss: every intermediate pivot divides the next minors exactly.
    std::vector<GaussInt> m = entries_;
    const std::size_t N = size_;
    if (N == 0) return GaussInt(1);
    GaussInt sign = 1;
    GaussInt prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (m[k * N + k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < N && m[swap_row * N + k].is_zero()) ++swap_row;
            if (swap_row == N) return GaussInt(0);
            for (std::size_t c = 0; c < N; ++c) std::swap(m[k * N + c], m[swap_row * N + c]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < N; ++r) {
            for (std::size_t c = k + 1; c < N; ++c) {
                const GaussInt num = m[r * N + c] * m[k * N + k] - m[r * N + k] * m[k * N + c];
                const auto q = GaussInt::exact_div(num, prev);
                if (!q) throw ArithmeticError("Bareiss division was not exact");
                m[r * N + c] = *q;
            }
            m[r * N + k] = 0;
        }
        prev = m[k * N + k];
    }
    return sign * m[(N - 1) * N + (N - 1)];
}

NotConstant::NotConstant(std::size_t i_, std::size_t j_, RingElem a1, RingElem a2)
    : std::runtime_error("lambda_alpha(S_" + std::to_string(j_) + ") is not constant on S_" + std::to_string(i_) +
                         " (alpha=" + std::to_string(a1.packed) + " vs alpha=" + std::to_string(a2.packed) + ")"),
      i(i_), j(j_), alpha1(a1), alpha2(a2) {}

RingElem class_representative(const DifferencePartition& part, std::size_t i) {
    const GaloisRing& R = part.ring();
    const auto members = part.cls(i).members();
    RingElem best{members.front()};
    for (auto x : members) {
        if (R.teich_order_key(RingElem{x}) < R.teich_order_key(best)) best = RingElem{x};
    }
    return best;
}

namespace {

using ChiCounts = std::vector<std::array<long long, 4>>;

// lambda_alpha(S_j) for every j, as counts of chi values i^0..i^3.
void lambda_row(const DifferencePartition& part, RingElem alpha, ChiCounts& out) {
    const GaloisRing& R = part.ring();
    for (auto& c : out) c = {0, 0, 0, 0};
    for (std::uint32_t beta = 0; beta < R.n(); ++beta) {
        const RingElem b{beta};
        ++out[part.class_of(b)][static_cast<std::size_t>(R.chi_exponent(R.mul(alpha, b)))];
    }
}

GaussInt to_gauss(const std::array<long long, 4>& c) { return GaussInt(c[0] - c[2], c[1] - c[3]); }

}  // namespace

Eigenmatrix eigenmatrix(const DifferencePartition& part, const Constancy& constancy) {
    const std::size_t size = part.classes().size();
    Eigenmatrix P(size);
    std::vector<ChiCounts> reference(size, ChiCounts(size));
    std::vector<RingElem> reps(size);
    for (std::size_t i = 0; i < size; ++i) {
        reps[i] = class_representative(part, i);
        lambda_row(part, reps[i], reference[i]);
        for (std::size_t j = 0; j < size; ++j) P.at(i, j) = to_gauss(reference[i][j]);
    }

    // Elements whose rows are compared against their class representative.
    std::vector<std::pair<std::size_t, RingElem>> checks;
    std::mt19937_64 rng(constancy.seed);
    for (std::size_t i = 0; i < size; ++i) {
        const auto members = part.cls(i).members();
        if (constancy.mode == Constancy::Mode::full || constancy.samples >= members.size()) {
            for (auto x : members) checks.emplace_back(i, RingElem{x});
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            for (std::size_t s = 0; s < constancy.samples; ++s) checks.emplace_back(i, RingElem{members[pick(rng)]});
        }
    }

    struct Mismatch {
        std::size_t j;
    };
    std::vector<std::optional<Mismatch>> failures(checks.size());
    std::vector<ChiCounts> scratch(worker_count(), ChiCounts(size));
    parallel_for(checks.size(), [&](std::size_t worker, std::size_t idx) {
        const auto [i, alpha] = checks[idx];
        if (alpha == reps[i]) return;
        ChiCounts& row = scratch[worker];
        lambda_row(part, alpha, row);
        for (std::size_t j = 0; j < size; ++j) {
            // equal character counts are sufficient but not necessary; compare values
            if (to_gauss(row[j]) != P.at(i, j)) {
                failures[idx] = Mismatch{j};
                return;
            }
        }
    });
    for (std::size_t idx = 0; idx < checks.size(); ++idx) {
        if (failures[idx]) {
            const auto [i, alpha] = checks[idx];
            throw NotConstant(i, failures[idx]->j, reps[i], alpha);
        }
    }
    return P;
}

std::string check_column_products(const Eigenmatrix& P, const Scheme& s) {
    const std::size_t size = P.size();
    if (size != s.d + 1) return "size mismatch between eigenmatrix and scheme";
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
            for (std::size_t r = 0; r < size; ++r) {
                GaussInt rhs = 0;
                for (std::size_t l = 0; l < size; ++l) {
                    const std::uint64_t c = s.p(j, k, l);
                    if (c) rhs += GaussInt(Integer(c)) * P.at(r, l);
                }
                if (P.at(r, j) * P.at(r, k) != rhs) {
                    std::ostringstream os;
                    os << "row " << r << ": P[" << r << "][" << j << "]*P[" << r << "][" << k << "] = "
                       << P.at(r, j) * P.at(r, k) << " but sum_l p_" << j << k << "^l P[" << r << "][l] = " << rhs;
                    return os.str();
                }
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Dense views

std::vector<AdjacencyMatrix> adjacency_matrices(const DifferencePartition& part, std::size_t cap) {
    const GaloisRing& R = part.ring();
    const std::size_t n = R.n();
    if (n > cap) {
        throw CapExceeded("ring order " + std::to_string(n) + " exceeds the dense cap " + std::to_string(cap));
    }
    std::vector<AdjacencyMatrix> out(part.classes().size());
    for (auto& A : out) {
        A.n = n;
        A.bits.assign(n * n, 0);
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            out[part.class_of(R.sub(RingElem{a}, RingElem{b}))].bits[std::size_t{a} * n + b] = 1;
        }
    }
    return out;
}

CliqueReport clique_structure(const GaloisRing& ring, const ElementSet& connection_set) {
    const std::size_t n = ring.n();
    const auto D = connection_set.members();
    std::vector<std::int64_t> component(n, -1);
    CliqueReport report;
    report.all_complete = true;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        const auto id = static_cast<std::int64_t>(report.component_sizes.size());
        std::vector<std::uint32_t> verts{start};
        component[start] = id;
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty()) {
            const std::uint32_t v = queue.front();
            queue.pop_front();
            for (auto s : D) {
                const std::uint32_t w = ring.add(RingElem{v}, RingElem{s}).packed;
                if (component[w] < 0) {
                    component[w] = id;
                    verts.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        report.component_sizes.push_back(verts.size());
        for (std::size_t x = 0; x < verts.size() && report.all_complete; ++x) {
            for (std::size_t y = 0; y < verts.size(); ++y) {
                if (x == y) continue;
                if (!connection_set.contains(ring.sub(RingElem{verts[x]}, RingElem{verts[y]}).packed)) {
                    report.all_complete = false;
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace bsl
