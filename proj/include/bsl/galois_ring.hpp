#pragma once

// GR(4, e) = (Z/4Z)[x] / (Phi(x)) for odd e >= 3.
//
// Elements are packed two bits per coefficient: coefficient k of
// 1, xi, ..., xi^{e-1} sits in bits 2k and 2k+1, so the packed integers
// 0 .. 4^e - 1 enumerate the ring. Every element has a unique 2-adic form
// alpha = alpha0 + 2 alpha1 with alpha0, alpha1 in T u {0}, and after
// construction multiplication, Frobenius and trace are table lookups.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bsl/element_set.hpp"
#include "bsl/exact_numbers.hpp"

namespace bsl {

class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RingElem {
    std::uint32_t packed = 0;

    friend bool operator==(RingElem a, RingElem b) { return a.packed == b.packed; }
    friend bool operator!=(RingElem a, RingElem b) { return a.packed != b.packed; }
    friend bool operator<(RingElem a, RingElem b) { return a.packed < b.packed; }
};

// Binary polynomials are bit masks: bit k is the coefficient of x^k.
using Gf2Poly = std::uint32_t;

int gf2_degree(Gf2Poly p);
bool is_primitive_gf2(Gf2Poly p, int degree);
// Smallest primitive polynomial of the given degree, comparing bit masks as
// integers (i.e. coefficient vectors from the top degree down).
Gf2Poly smallest_primitive_gf2(int degree);

// Polynomials over Z/4Z, low-degree coefficient first, entries in 0..3.
using Z4Poly = std::vector<std::uint8_t>;

// Monic Phi with Phi(x^2) = -phi(x) phi(-x) mod 4 (e odd).
Z4Poly graeffe_lift(Gf2Poly phi2);
// Remainder of a modulo a monic m over Z/4Z.
Z4Poly z4_poly_mod(const Z4Poly& a, const Z4Poly& m);

// The distinguished subsets of R. T0/T1 split T by the GF(2^e) trace.
struct RingSubsets {
    ElementSet T, T0, T1, P, P0, H, E;
};

class GaloisRing {
public:
    static constexpr int kMaxE = 11;

    // Throws RingError for even e, e < 3, e > kMaxE or a non-primitive phi2.
    static std::shared_ptr<const GaloisRing> construct(int e, std::optional<Gf2Poly> phi2 = std::nullopt);

    int e() const noexcept { return e_; }
    std::uint64_t b() const noexcept { return std::uint64_t{1} << (e_ - 1); }
    std::size_t n() const noexcept { return n_; }
    // |T| = 2^e - 1
    std::uint32_t teich_order() const noexcept { return q1_; }
    Gf2Poly phi2() const noexcept { return phi2_; }
    const Z4Poly& phi4() const noexcept { return phi4_; }

    RingElem zero() const noexcept { return RingElem{0}; }
    RingElem one() const noexcept { return RingElem{1}; }
    RingElem from_int(int c) const noexcept;
    RingElem from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(RingElem a) const;

    RingElem add(RingElem a, RingElem b) const noexcept {
        const std::uint32_t s = (a.packed & kLow) + (b.packed & kLow);
        return RingElem{(s ^ ((a.packed ^ b.packed) & kHigh)) & mask_};
    }
    RingElem neg(RingElem a) const noexcept {
        // -c = (~c + 1) per 2-bit lane
        const std::uint32_t inv = ~a.packed & mask_;
        return add(RingElem{inv}, RingElem{kLow & mask_});
    }
    RingElem sub(RingElem a, RingElem b) const noexcept { return add(a, neg(b)); }
    // 2 * a: low bit of each lane moves to the high bit.
    RingElem twice(RingElem a) const noexcept { return RingElem{(a.packed & kLow) << 1}; }

    // Table-driven product through the 2-adic decomposition.
    RingElem mul(RingElem a, RingElem b) const noexcept;
    // Schoolbook product reduced modulo (Phi, 4); independent of the tables.
    RingElem mul_poly(RingElem a, RingElem b) const;
    RingElem pow(RingElem a, std::uint64_t k) const;

    // xi^j for any integer j.
    RingElem teich(long long j) const noexcept;
    // Exponent j with a = xi^j, or nullopt if a is not in T.
    std::optional<std::uint32_t> teich_log(RingElem a) const noexcept;

    struct TwoAdic {
        // -1 encodes the zero component, otherwise the exponent of xi.
        std::int32_t log0;
        std::int32_t log1;
    };
    TwoAdic decompose(RingElem a) const noexcept {
        return TwoAdic{log0_[a.packed], log1_[a.packed]};
    }
    RingElem compose(TwoAdic t) const noexcept;

    RingElem frobenius(RingElem a) const noexcept;
    // S(a) in Z/4Z.
    int trace(RingElem a) const noexcept { return trace_[a.packed]; }
    // chi(a) = i^{e S(a)}, encoded as the exponent of i in 0..3.
    int chi_exponent(RingElem a) const noexcept { return chi_[a.packed]; }
    GaussInt chi(RingElem a) const;
    // sum_{beta in A} chi(alpha beta)
    GaussInt lambda_sum(RingElem alpha, const ElementSet& A) const;

    // Field trace of zeta^j in GF(2^e) = GF(2)[x]/(phi2), computed in the field.
    int field_trace_of_power(std::uint32_t j) const;

    bool is_unit(RingElem a) const noexcept { return log0_[a.packed] >= 0; }
    bool in_ideal(RingElem a) const noexcept { return log0_[a.packed] < 0; }

    const RingSubsets& subsets() const noexcept { return subsets_; }

    // Deterministic ordering of elements by (log0, log1) with zero first in
    // each component; used to pick class representatives.
    std::uint64_t teich_order_key(RingElem a) const noexcept;

    GaloisRing(const GaloisRing&) = delete;
    GaloisRing& operator=(const GaloisRing&) = delete;

private:
    GaloisRing(int e, Gf2Poly phi2);
    void build_tables();
    void build_subsets();

    static constexpr std::uint32_t kLow = 0x55555555u;
    static constexpr std::uint32_t kHigh = 0xAAAAAAAAu;

    int e_;
    std::size_t n_;
    std::uint32_t q1_;
    std::uint32_t mask_;
    Gf2Poly phi2_;
    Z4Poly phi4_;

    std::vector<std::uint32_t> teich_exp_;    // j -> xi^j packed, j < q1
    std::vector<std::int32_t> residue_log_;   // residue as an e-bit GF(2) polynomial -> j
    std::vector<std::int16_t> log0_, log1_;   // per element 2-adic logs
    std::vector<std::uint8_t> trace_;
    std::vector<std::uint8_t> chi_;
    RingSubsets subsets_;
};

}  // namespace bsl
