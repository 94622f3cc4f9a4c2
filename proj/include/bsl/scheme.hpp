#pragma once

// Translation association schemes on GR(4, e): difference partitions,
// certification of the scheme axioms by direct convolution, and first
// eigenmatrices from additive character sums.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsl/element_set.hpp"
#include "bsl/exact_numbers.hpp"
#include "bsl/galois_ring.hpp"

namespace bsl {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Partition S_0 = {0}, S_1, ..., S_d of R with -S_i = S_{pairing[i]}.
class DifferencePartition {
public:
    // Validates disjointness, coverage, S_0 = {0} and closure under negation.
    DifferencePartition(std::shared_ptr<const GaloisRing> ring, std::vector<ElementSet> classes);

    const GaloisRing& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const GaloisRing>& ring_ptr() const noexcept { return ring_; }
    std::size_t class_count() const noexcept { return classes_.size() - 1; }  // d
    const std::vector<ElementSet>& classes() const noexcept { return classes_; }
    const ElementSet& cls(std::size_t i) const { return classes_.at(i); }
    const std::vector<std::size_t>& pairing() const noexcept { return pairing_; }
    std::size_t class_of(RingElem a) const noexcept { return class_of_[a.packed]; }
    std::vector<std::uint64_t> sizes() const;

private:
    std::shared_ptr<const GaloisRing> ring_;
    std::vector<ElementSet> classes_;
    std::vector<std::size_t> pairing_;
    std::vector<std::uint8_t> class_of_;
};

// S_0 = {0}, S_1 = (T\{1})H, S_2 = -S_1, S_3 = H, S_4 = -H,
// S_5 = P0\{0}, S_6 = P\P0.
DifferencePartition build_partition(std::shared_ptr<const GaloisRing> ring);

struct Scheme {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::uint64_t> valencies;
    std::vector<std::size_t> pairing;
    std::vector<std::uint64_t> intersection;  // (d+1)^3, index (i*(d+1) + j)*(d+1) + k

    std::uint64_t p(std::size_t i, std::size_t j, std::size_t k) const {
        return intersection[(i * (d + 1) + j) * (d + 1) + k];
    }
};

// Thrown when the number of ways to write delta = beta + gamma with beta in
// S_i, gamma in S_j differs between two elements of S_k.
class NotAScheme : public std::runtime_error {
public:
    NotAScheme(std::size_t i, std::size_t j, std::size_t k, RingElem w1, std::uint64_t c1, RingElem w2,
               std::uint64_t c2);
    std::size_t i, j, k;
    RingElem witness1, witness2;
    std::uint64_t count1, count2;
};

Scheme verify_scheme(const DifferencePartition& part);

class Eigenmatrix {
public:
    Eigenmatrix() = default;
    explicit Eigenmatrix(std::size_t size) : size_(size), entries_(size * size) {}
    Eigenmatrix(std::size_t size, std::vector<GaussInt> entries);

    std::size_t size() const noexcept { return size_; }
    std::size_t class_count() const noexcept { return size_ - 1; }
    const GaussInt& at(std::size_t i, std::size_t j) const { return entries_.at(i * size_ + j); }
    GaussInt& at(std::size_t i, std::size_t j) { return entries_.at(i * size_ + j); }
    const std::vector<GaussInt>& entries() const noexcept { return entries_; }

    // Sum of row 0, i.e. the number of points.
    Integer order() const;
    // Exact determinant over Z[i] (fraction-free elimination).
    GaussInt determinant() const;

    friend bool operator==(const Eigenmatrix& a, const Eigenmatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Eigenmatrix& a, const Eigenmatrix& b) { return !(a == b); }

private:
    std::size_t size_ = 0;
    std::vector<GaussInt> entries_;
};

struct Constancy {
    enum class Mode { full, sample };
    Mode mode = Mode::full;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;

    static Constancy full() { return {}; }
    static Constancy sample(std::size_t m, std::uint64_t seed = 0) { return {Mode::sample, m, seed}; }
};

class NotConstant : public std::runtime_error {
public:
    NotConstant(std::size_t i, std::size_t j, RingElem a1, RingElem a2);
    std::size_t i, j;
    RingElem alpha1, alpha2;
};

// Representative of class i: the lowest element in GaloisRing::teich_order_key order.
RingElem class_representative(const DifferencePartition& part, std::size_t i);

// p_{i,j} = lambda_alpha(S_j) for the representative alpha of S_i, with
// constancy over S_i checked on all of S_i (full) or on a seeded sample.
Eigenmatrix eigenmatrix(const DifferencePartition& part, const Constancy& constancy = Constancy::full());

// P[.,j] o P[.,k] == sum_l p_{jk}^l P[.,l] for all j, k. Returns a
// description of the first failure, or an empty string.
std::string check_column_products(const Eigenmatrix& P, const Scheme& s);

// Dense 0/1 adjacency matrix, row-major n x n.
struct AdjacencyMatrix {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;
    std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * n + c]; }
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultDenseCap = 4096;

std::vector<AdjacencyMatrix> adjacency_matrices(const DifferencePartition& part, std::size_t cap = kDefaultDenseCap);

// Connected components of the Cayley graph Cay(R, D) for a symmetric D not
// containing 0, and whether each component is complete.
struct CliqueReport {
    bool all_complete = false;
    std::vector<std::size_t> component_sizes;
};

CliqueReport clique_structure(const GaloisRing& ring, const ElementSet& connection_set);

}  // namespace bsl
