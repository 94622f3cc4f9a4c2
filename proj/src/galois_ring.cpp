#include "bsl/galois_ring.hpp"

#include <string>

namespace bsl {

// ---------------------------------------------------------------------------
// GF(2) polynomials

int gf2_degree(Gf2Poly p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

namespace {

Gf2Poly gf2_mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
    const int dm = gf2_degree(m);
    Gf2Poly r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1u) a ^= m;
    }
    return r;
}

Gf2Poly gf2_powmod(Gf2Poly a, std::uint64_t k, Gf2Poly m) {
    Gf2Poly r = 1;
    while (k) {
        if (k & 1u) r = gf2_mulmod(r, a, m);
        a = gf2_mulmod(a, a, m);
        k >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

bool is_primitive_gf2(Gf2Poly p, int degree) {
    if (degree < 1 || degree > 30 || gf2_degree(p) != degree || (p & 1u) == 0) return false;
    const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
    const Gf2Poly x = degree == 1 ? 0u : 2u;
    if (gf2_powmod(x, order, p) != 1) return false;
    for (auto q : prime_factors(order)) {
        if (gf2_powmod(x, order / q, p) == 1) return false;
    }
    return true;
}

Gf2Poly smallest_primitive_gf2(int degree) {
    for (Gf2Poly p = Gf2Poly{1} << degree; p < (Gf2Poly{2} << degree); ++p) {
        if (is_primitive_gf2(p, degree)) return p;
    }
    throw RingError("no primitive polynomial of degree " + std::to_string(degree));
}

// ---------------------------------------------------------------------------
// Z/4Z polynomials

Z4Poly z4_poly_mod(const Z4Poly& a, const Z4Poly& m) {
    const std::size_t dm = m.size() - 1;
    if (m.back() != 1) throw RingError("z4_poly_mod: modulus must be monic");
    Z4Poly r = a;
    for (std::size_t top = r.size(); top-- > dm;) {
        const int c = r[top] & 3;
        if (c == 0) continue;
        const std::size_t shift = top - dm;
        for (std::size_t k = 0; k <= dm; ++k) {
            r[shift + k] = static_cast<std::uint8_t>((r[shift + k] + 4 * 4 - c * m[k]) & 3);
        }
    }
    r.resize(dm);
    return r;
}

Z4Poly graeffe_lift(Gf2Poly phi2) {
    const int e = gf2_degree(phi2);
    if (e < 1) throw RingError("graeffe_lift: degree must be positive");
    const auto size = static_cast<std::size_t>(e) + 1;
    Z4Poly f(size), g(size);
    for (std::size_t k = 0; k < size; ++k) {
        f[k] = (phi2 >> k) & 1u;
        g[k] = (k % 2 == 1) ? static_cast<std::uint8_t>((4 - f[k]) & 3) : f[k];  // phi(-x)
    }
    Z4Poly prod(2 * size - 1);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + f[i] * g[j]) & 3);
    }
    // phi(x) phi(-x) is even in x with leading coefficient (-1)^e.
    const int sign = (e % 2 == 1) ? 3 : 1;
    Z4Poly lift(size);
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (k % 2 == 1) {
            if (prod[k] != 0) throw RingError("graeffe_lift: odd coefficient survived");
            continue;
        }
        lift[k / 2] = static_cast<std::uint8_t>((prod[k] * sign) & 3);
    }
    return lift;
}

// ---------------------------------------------------------------------------
// GaloisRing

std::shared_ptr<const GaloisRing> GaloisRing::construct(int e, std::optional<Gf2Poly> phi2) {
    if (e % 2 == 0) throw RingError("e must be odd (got " + std::to_string(e) + ")");
    if (e < 3) throw RingError("e must be at least 3 (got " + std::to_string(e) + ")");
    if (e > kMaxE) throw RingError("e must be at most " + std::to_string(kMaxE) + " (got " + std::to_string(e) + ")");
    const Gf2Poly phi = phi2.value_or(smallest_primitive_gf2(e));
    if (!is_primitive_gf2(phi, e)) throw RingError("phi2 is not a primitive polynomial of degree " + std::to_string(e));
    return std::shared_ptr<const GaloisRing>(new GaloisRing(e, phi));
}

GaloisRing::GaloisRing(int e, Gf2Poly phi2)
    : e_(e),
      n_(std::size_t{1} << (2 * e)),
      q1_((std::uint32_t{1} << e) - 1),
      mask_(static_cast<std::uint32_t>(n_ - 1)),
      phi2_(phi2),
      phi4_(graeffe_lift(phi2)) {
    for (int k = 0; k <= e_; ++k) {
        if ((phi4_[static_cast<std::size_t>(k)] & 1u) != ((phi2_ >> k) & 1u)) {
            throw RingError("lifted polynomial does not reduce to phi2");
        }
    }
    Z4Poly xq(static_cast<std::size_t>(q1_) + 1);
    xq[0] = 3;
    xq[q1_] = 1;
    for (auto c : z4_poly_mod(xq, phi4_)) {
        if (c != 0) throw RingError("lifted polynomial does not divide x^(2^e-1) - 1");
    }
    build_tables();
    build_subsets();
}

RingElem GaloisRing::from_int(int c) const noexcept {
    return RingElem{static_cast<std::uint32_t>(((c % 4) + 4) % 4)};
}

RingElem GaloisRing::from_coeffs(const std::vector<int>& coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(e_)) throw RingError("too many coefficients for GR(4,e)");
    std::uint32_t packed = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        packed |= static_cast<std::uint32_t>(((coeffs[k] % 4) + 4) % 4) << (2 * k);
    }
    return RingElem{packed};
}

std::vector<int> GaloisRing::coeffs(RingElem a) const {
    std::vector<int> out(static_cast<std::size_t>(e_));
    for (int k = 0; k < e_; ++k) out[static_cast<std::size_t>(k)] = static_cast<int>((a.packed >> (2 * k)) & 3u);
    return out;
}

RingElem GaloisRing::mul_poly(RingElem a, RingElem b) const {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    Z4Poly prod(2 * static_cast<std::size_t>(e_) - 1);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) {
            prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + ca[i] * cb[j]) & 3);
        }
    }
    const Z4Poly r = z4_poly_mod(prod, phi4_);
    std::vector<int> out(r.begin(), r.end());
    return from_coeffs(out);
}

RingElem GaloisRing::teich(long long j) const noexcept {
    const long long q = q1_;
    return RingElem{teich_exp_[static_cast<std::size_t>(((j % q) + q) % q)]};
}

std::optional<std::uint32_t> GaloisRing::teich_log(RingElem a) const noexcept {
    const auto t = decompose(a);
    if (t.log0 < 0 || t.log1 >= 0) return std::nullopt;
    return static_cast<std::uint32_t>(t.log0);
}

RingElem GaloisRing::compose(TwoAdic t) const noexcept {
    RingElem r = t.log0 >= 0 ? teich(t.log0) : zero();
    if (t.log1 >= 0) r = add(r, twice(teich(t.log1)));
    return r;
}

RingElem GaloisRing::mul(RingElem a, RingElem b) const noexcept {
    const std::int32_t a0 = log0_[a.packed], a1 = log1_[a.packed];
    const std::int32_t b0 = log0_[b.packed], b1 = log1_[b.packed];
    // (a0 + 2a1)(b0 + 2b1) = a0 b0 + 2 (a0 b1 + a1 b0)
    RingElem r = zero();
    if (a0 >= 0 && b0 >= 0) r = teich(a0 + b0);
    if (a0 >= 0 && b1 >= 0) r = add(r, twice(teich(a0 + b1)));
    if (a1 >= 0 && b0 >= 0) r = add(r, twice(teich(a1 + b0)));
    return r;
}

RingElem GaloisRing::pow(RingElem a, std::uint64_t k) const {
    RingElem r = one();
    while (k) {
        if (k & 1u) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

RingElem GaloisRing::frobenius(RingElem a) const noexcept {
    const auto t = decompose(a);
    return compose(TwoAdic{t.log0 >= 0 ? 2 * t.log0 % static_cast<std::int32_t>(q1_) : -1,
                           t.log1 >= 0 ? 2 * t.log1 % static_cast<std::int32_t>(q1_) : -1});
}

GaussInt GaloisRing::chi(RingElem a) const {
    static const GaussInt powers[4] = {GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)};
    return powers[chi_[a.packed]];
}

GaussInt GaloisRing::lambda_sum(RingElem alpha, const ElementSet& A) const {
    long long counts[4] = {0, 0, 0, 0};
    for (auto beta : A.members()) ++counts[chi_[mul(alpha, RingElem{beta}).packed]];
    return GaussInt(counts[0] - counts[2], counts[1] - counts[3]);
}

int GaloisRing::field_trace_of_power(std::uint32_t j) const {
    Gf2Poly z = gf2_powmod(2u, j, phi2_);
    Gf2Poly sum = 0;
    for (int k = 0; k < e_; ++k) {
        sum ^= z;
        z = gf2_mulmod(z, z, phi2_);
    }
    if (sum > 1) throw RingError("field trace left GF(2)");
    return static_cast<int>(sum);
}

std::uint64_t GaloisRing::teich_order_key(RingElem a) const noexcept {
    const auto t = decompose(a);
    return static_cast<std::uint64_t>(t.log0 + 1) * (std::uint64_t{q1_} + 1) + static_cast<std::uint64_t>(t.log1 + 1);
}

namespace {

// Gather the low bit of every 2-bit lane into an e-bit integer.
std::uint32_t compress_residue(std::uint32_t packed, int e) {
    std::uint32_t r = 0;
    for (int k = 0; k < e; ++k) r |= ((packed >> (2 * k)) & 1u) << k;
    return r;
}

}  // namespace

void GaloisRing::build_tables() {
    // -(Phi_0 + ... + Phi_{e-1} x^{e-1}) packed, so that x^e = neg_low.
    std::uint32_t neg_low = 0;
    for (int k = 0; k < e_; ++k) {
        neg_low |= static_cast<std::uint32_t>((4 - phi4_[static_cast<std::size_t>(k)]) & 3) << (2 * k);
    }
    auto times_xi = [&](std::uint32_t v) {
        const std::uint32_t top = (v >> (2 * (e_ - 1))) & 3u;
        RingElem r{(v << 2) & mask_};
        for (std::uint32_t c = 0; c < top; ++c) r = add(r, RingElem{neg_low});
        return r.packed;
    };

    teich_exp_.resize(q1_);
    residue_log_.assign(std::size_t{1} << e_, -1);
    std::uint32_t cur = 1;
    for (std::uint32_t j = 0; j < q1_; ++j) {
        teich_exp_[j] = cur;
        const std::uint32_t res = compress_residue(cur, e_);
        if (residue_log_[res] != -1) throw RingError("xi has order smaller than 2^e - 1");
        residue_log_[res] = static_cast<std::int32_t>(j);
        cur = times_xi(cur);
    }
    if (cur != 1) throw RingError("xi^(2^e-1) != 1");

    log0_.assign(n_, -1);
    log1_.assign(n_, -1);
    for (std::uint32_t v = 0; v < n_; ++v) {
        const std::uint32_t res0 = compress_residue(v, e_);
        RingElem rest{v};
        if (res0 != 0) {
            const std::int32_t j0 = residue_log_[res0];
            log0_[v] = static_cast<std::int16_t>(j0);
            rest = sub(rest, RingElem{teich_exp_[static_cast<std::size_t>(j0)]});
        }
        // rest = 2 alpha1: its lanes are 0 or 2
        const std::uint32_t res1 = compress_residue(rest.packed >> 1, e_);
        if (res1 != 0) log1_[v] = static_cast<std::int16_t>(residue_log_[res1]);
    }

    trace_.resize(n_);
    chi_.resize(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
        RingElem a{v};
        RingElem s = zero();
        for (int k = 0; k < e_; ++k) {
            s = add(s, a);
            a = frobenius(a);
        }
        if (s.packed > 3) throw RingError("trace left Z/4Z");
        trace_[v] = static_cast<std::uint8_t>(s.packed);
        chi_[v] = static_cast<std::uint8_t>((e_ * static_cast<int>(s.packed)) % 4);
    }
}

void GaloisRing::build_subsets() {
    RingSubsets& s = subsets_;
    s.T = s.T0 = s.T1 = s.P = s.P0 = s.H = s.E = ElementSet(n_);
    for (std::uint32_t j = 0; j < q1_; ++j) {
        const RingElem t = teich(j);
        s.T.insert(t.packed);
        (field_trace_of_power(j) == 0 ? s.T0 : s.T1).insert(t.packed);
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
        if (!in_ideal(RingElem{v})) continue;
        s.P.insert(v);
        s.E.insert(add(one(), RingElem{v}).packed);
    }
    s.P0.insert(0);
    for (auto t : s.T0.members()) s.P0.insert(twice(RingElem{t}).packed);
    for (auto p : s.P0.members()) s.H.insert(add(one(), RingElem{p}).packed);
}

}  // namespace bsl
