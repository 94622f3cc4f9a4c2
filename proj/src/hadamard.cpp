#include "bsl/hadamard.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bsl/parallel.hpp"

namespace bsl {

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(int order, std::vector<long long> exponents) : order_(order), exps_(std::move(exponents)) {
    if (!is_supported_order(order)) throw ArithmeticError("unsupported root order " + std::to_string(order));
    if (exps_.empty()) throw std::invalid_argument("weight vector is empty");
    for (auto& x : exps_) x = ((x % order_) + order_) % order_;
    if (exps_[0] != 0) throw std::invalid_argument("w_0 must be 1");
}

std::vector<CycInt> WeightVector::values() const {
    std::vector<CycInt> out;
    out.reserve(exps_.size());
    for (std::size_t j = 0; j < exps_.size(); ++j) out.push_back(value(j));
    return out;
}

bool WeightVector::is_hermitian(const std::vector<std::size_t>& pairing) const {
    if (pairing.size() != exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if ((exps_[pairing[i]] + exps_[i]) % order_ != 0) return false;
    }
    return true;
}

std::string WeightVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (j) os << ", ";
        const auto g = value(j).to_gauss();
        if (g) os << *g;
        else os << "z" << order_ << "^" << exps_[j];
    }
    os << ")";
    return os.str();
}

bool operator==(const WeightVector& a, const WeightVector& b) {
    if (a.exps_.size() != b.exps_.size()) return false;
    for (std::size_t j = 0; j < a.exps_.size(); ++j) {
        if (a.value(j) != b.value(j)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// gamma / e_k / dense checks

std::vector<QuadPoly> build_e_polynomials(const Eigenmatrix& P) {
    const std::size_t d = P.class_count();
    const GaussInt n(P.order());
    std::vector<QuadPoly> out;
    out.reserve(d);
    for (std::size_t k = 1; k <= d; ++k) {
        // 1 + 2(sum_j P_kj X_j + sum_{j1<j2} P_kj1 P_kj2 X_j1 X_j2) + sum_j P_kj^2 X_j^2 - n
        QuadPoly e = QuadPoly::constant(d, GaussInt(1) - n);
        for (std::size_t j = 1; j <= d; ++j) {
            e.linear(j - 1) += GaussInt(2) * P.at(k, j);
            e.quad(j - 1, j - 1) += P.at(k, j) * P.at(k, j);
            for (std::size_t j2 = j + 1; j2 <= d; ++j2) e.quad(j - 1, j2 - 1) += GaussInt(2) * P.at(k, j) * P.at(k, j2);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CycInt> gamma(const Eigenmatrix& P, const WeightVector& w) {
    if (w.size() != P.size()) throw std::invalid_argument("weight vector and eigenmatrix dimensions differ");
    const int L = lcm_order(w.order(), 4);
    const auto vals = w.values();
    std::vector<CycInt> out;
    out.reserve(P.size());
    for (std::size_t k = 0; k < P.size(); ++k) {
        CycInt g(L);
        for (std::size_t j = 0; j < P.size(); ++j) g += CycInt::from_gauss(L, P.at(k, j)) * vals[j];
        out.push_back(std::move(g));
    }
    return out;
}

bool is_chm_gamma(const Eigenmatrix& P, const WeightVector& w) {
    const auto g = gamma(P, w);
    const CycInt n = CycInt::from_integer(4, P.order());
    for (std::size_t k = 1; k < g.size(); ++k) {
        if (g[k] * g[k] != n) return false;
    }
    return true;
}

bool is_chm_ezero(const Eigenmatrix& P, const WeightVector& w) {
    if (w.size() != P.size()) throw std::invalid_argument("weight vector and eigenmatrix dimensions differ");
    const auto vals = w.values();
    const std::vector<CycInt> x(vals.begin() + 1, vals.end());
    for (const auto& e : build_e_polynomials(P)) {
        if (!e.evaluate(x).is_zero()) return false;
    }
    return true;
}

bool DenseWeightMatrix::is_hermitian() const {
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const int a = at(r, c), b = at(c, r);
            if ((a < 0) != (b < 0)) return false;
            if (a >= 0 && (a + b) % order != 0) return false;
        }
    }
    return true;
}

bool DenseWeightMatrix::all_unimodular() const {
    return std::all_of(exps.begin(), exps.end(), [](std::int16_t x) { return x >= 0; });
}

DenseWeightMatrix dense_weight_matrix(const DifferencePartition& part, const WeightVector& w, std::size_t cap) {
    const GaloisRing& R = part.ring();
    const std::size_t n = R.n();
    if (n > cap) throw CapExceeded("ring order " + std::to_string(n) + " exceeds the dense cap " + std::to_string(cap));
    if (w.size() != part.classes().size()) throw std::invalid_argument("weight vector does not match the partition");
    DenseWeightMatrix W;
    W.n = n;
    W.order = w.order();
    W.exps.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            W.exps[std::size_t{a} * n + b] =
                static_cast<std::int16_t>(w.exponent(part.class_of(R.sub(RingElem{a}, RingElem{b}))));
        }
    }
    return W;
}

bool is_chm_direct(const DenseWeightMatrix& W, std::size_t cap) {
    if (W.n > cap) throw CapExceeded("matrix order " + std::to_string(W.n) + " exceeds the dense cap " + std::to_string(cap));
    if (!W.all_unimodular()) return false;
    const std::size_t n = W.n;
    const auto N = static_cast<std::size_t>(W.order);
    std::vector<char> ok(n, 1);
    parallel_for(n, [&](std::size_t, std::size_t r) {
        std::vector<Integer> counts(N);
        std::vector<long long> raw(N);
        for (std::size_t c = 0; c < n && ok[r]; ++c) {
            std::fill(raw.begin(), raw.end(), 0);
            for (std::size_t k = 0; k < n; ++k) {
                const int x = W.at(r, k) - W.at(c, k);
                ++raw[static_cast<std::size_t>(((x % W.order) + W.order) % W.order)];
            }
            for (std::size_t t = 0; t < N; ++t) counts[t] = raw[t];
            const CycInt entry(W.order, counts);
            const CycInt expect = CycInt::from_integer(W.order, r == c ? Integer(n) : Integer(0));
            if (entry != expect) ok[r] = 0;
        }
    });
    return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
}

// ---------------------------------------------------------------------------
// Search

std::string form_name(ButsonForm f) {
    switch (f) {
        case ButsonForm::W1: return "W1";
        case ButsonForm::W2: return "W2";
        case ButsonForm::other: return "other";
    }
    return "other";
}

ButsonSolution classify(const WeightVector& w) {
    ButsonSolution sol{w, ButsonForm::other, 0, 0};
    if (w.size() != 7) return sol;
    std::vector<GaussInt> g;
    for (std::size_t j = 0; j < 7; ++j) {
        const auto v = w.value(j).to_gauss();
        if (!v) return sol;
        g.push_back(*v);
    }
    const GaussInt I = GaussInt::i();
    for (int e1 : {1, -1}) {
        for (int e2 : {1, -1}) {
            const GaussInt a(e1), b(e2);
            const std::vector<GaussInt> w1{1, a * I, -a * I, b * I, -b * I, 1, 1};
            const std::vector<GaussInt> w2{1, a * I, -a * I, b, b, 1, -1};
            if (g == w1) return ButsonSolution{w, ButsonForm::W1, e1, e2};
            if (g == w2) return ButsonSolution{w, ButsonForm::W2, e1, e2};
        }
    }
    return sol;
}

namespace {

struct FreeSlot {
    std::size_t cls;
    std::size_t partner;  // == cls when self-paired
    std::vector<long long> choices;
};

std::vector<FreeSlot> free_slots(const std::vector<std::size_t>& pairing, int order) {
    std::vector<FreeSlot> slots;
    for (std::size_t i = 1; i < pairing.size(); ++i) {
        const std::size_t p = pairing[i];
        if (p < i) continue;
        FreeSlot s{i, p, {}};
        if (p == i) {
            s.choices.push_back(0);
            if (order % 2 == 0) s.choices.push_back(order / 2);
        } else {
            for (long long k = 0; k < order; ++k) s.choices.push_back(k);
        }
        slots.push_back(std::move(s));
    }
    return slots;
}

}  // namespace

std::uint64_t butson_candidate_count(const std::vector<std::size_t>& pairing, int order) {
    std::uint64_t total = 1;
    for (const auto& s : free_slots(pairing, order)) total *= s.choices.size();
    return total;
}

std::vector<ButsonSolution> search_butson(const Eigenmatrix& P, const std::vector<std::size_t>& pairing, int order) {
    if (!is_supported_order(order)) throw ArithmeticError("unsupported root order " + std::to_string(order));
    if (pairing.size() != P.size()) throw std::invalid_argument("pairing does not match the eigenmatrix");
    const auto slots = free_slots(pairing, order);
    const std::uint64_t total = butson_candidate_count(pairing, order);

    auto candidate = [&](std::uint64_t index) {
        std::vector<long long> exps(P.size(), 0);
        for (std::size_t s = slots.size(); s-- > 0;) {
            const auto& slot = slots[s];
            const long long k = slot.choices[index % slot.choices.size()];
            index /= slot.choices.size();
            exps[slot.cls] = k;
            exps[slot.partner] = (order - k) % order;
        }
        return WeightVector(order, std::move(exps));
    };

    std::vector<char> hit(total, 0);
    parallel_for(total, [&](std::size_t, std::size_t idx) { hit[idx] = is_chm_gamma(P, candidate(idx)) ? 1 : 0; });

    std::vector<ButsonSolution> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (hit[idx]) out.push_back(classify(candidate(idx)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Class-3 eigenmatrices

Class3Case class3_case_i(const Integer& a) {
    if (a < 1) throw std::invalid_argument("a must be a positive integer");
    return Class3Case{Class3CaseTag::i, 2 * a * (2 * a - 1), 2 * a - 1};
}

Class3Parameters class3_parameters(const Class3Case& c) {
    switch (c.tag) {
        case Class3CaseTag::i: {
            if (c.k2 == 0) throw ArithmeticError("case (i) needs k2 != 0");
            const Integer num = c.k1 * (c.k2 + 1);
            if (num % c.k2 != 0) throw ArithmeticError("case (i): b^2 = k1(k2+1)/k2 is not an integer");
            return {0, -(c.k2 + 1), num / c.k2};
        }
        case Class3CaseTag::ii:
            return {-(c.k2 + 1), 0, (1 + c.k2) * (1 + c.k1 + c.k2)};
        case Class3CaseTag::iii:
            return {-1, c.k1, c.k1 + 1};
    }
    throw std::invalid_argument("unknown case");
}

Eigenmatrix class3_eigenmatrix(const Class3Case& c) {
    const Class3Parameters p = class3_parameters(c);
    if (p.b2 < 0) throw ArithmeticError("b^2 is negative");
    const Integer b = boost::multiprecision::sqrt(p.b2);
    if (b * b != p.b2) throw ArithmeticError("b^2 = " + p.b2.str() + " is not a perfect square");
    auto half = [](const Integer& v, const char* what) {
        if (v % 2 != 0) throw ArithmeticError(std::string("non-integral entry ") + what + "/2");
        return Integer(v / 2);
    };
    const Integer k1h = half(c.k1, "k1");
    const GaussInt rp(half(p.r, "r"), half(b, "b"));
    const Integer sh = half(p.s, "s");
    std::vector<GaussInt> e{
        GaussInt(1), GaussInt(k1h),  GaussInt(k1h), GaussInt(c.k2),
        GaussInt(1), rp,             rp.conj(),     GaussInt(-(p.r + 1)),
        GaussInt(1), rp.conj(),      rp,            GaussInt(-(p.r + 1)),
        GaussInt(1), GaussInt(sh),   GaussInt(sh),  GaussInt(-(p.s + 1)),
    };
    return Eigenmatrix(4, std::move(e));
}

// ---------------------------------------------------------------------------
// Identities

std::vector<IdentityId> all_identity_ids() {
    return {IdentityId::e2_minus_e1, IdentityId::e4_minus_e3, IdentityId::e5_minus_e6, IdentityId::class3_main,
            IdentityId::class3_spec};
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::e2_minus_e1: return "01-7";
        case IdentityId::e4_minus_e3: return "01-8";
        case IdentityId::e5_minus_e6: return "01-9";
        case IdentityId::class3_main: return "class3-main";
        case IdentityId::class3_spec: return "class3-spec";
    }
    return "?";
}

IdentityId parse_identity_id(const std::string& name) {
    for (auto id : all_identity_ids()) {
        if (identity_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown identity '" + name + "'");
}

IdentityFailed::IdentityFailed(std::string identity_, std::string instance_, std::string difference_)
    : std::runtime_error("identity " + identity_ + " failed at " + instance_ + ": " + difference_),
      identity(std::move(identity_)), instance(std::move(instance_)), difference(std::move(difference_)) {}

void expect_equal(const QuadPoly& lhs, const QuadPoly& rhs, const std::string& identity, const std::string& instance) {
    if (auto diff = first_difference(lhs, rhs)) throw IdentityFailed(identity, instance, *diff);
}

namespace {

using Specialization = std::map<std::size_t, Substitution>;

// X5 := 1 together with the two zeta_4 points realizing X1 = -X2, X1^2 = -1.
std::vector<std::pair<std::string, Specialization>> zeta4_points() {
    const CycInt i4 = CycInt::root(4, 1);
    const CycInt one = CycInt::from_integer(4, 1);
    return {
        {"X5=1,X1=i,X2=-i", {{4, one}, {0, i4}, {1, -i4}}},
        {"X5=1,X1=-i,X2=i", {{4, one}, {0, -i4}, {1, i4}}},
    };
}

Integer class6_b(const Eigenmatrix& P) {
    if (P.size() != 7) throw std::invalid_argument("class-6 identities need a 7x7 eigenmatrix");
    return P.at(0, 3).re();
}

}  // namespace

IdentityReport verify_identity(IdentityId id, const Eigenmatrix* class6, int a_max) {
    IdentityReport rep;
    rep.id = identity_name(id);
    const GaussInt I = GaussInt::i();

    switch (id) {
        case IdentityId::e2_minus_e1: {
            if (!class6) throw std::invalid_argument("identity 01-7 needs the class-6 eigenmatrix");
            const Integer b = class6_b(*class6);
            const auto e = build_e_polynomials(*class6);
            const std::size_t d = 6;
            auto X = [&](std::size_t j) { return QuadPoly::variable(d, j - 1); };
            const QuadPoly one = QuadPoly::constant(d, 1);
            const QuadPoly rhs = GaussInt(4) * I * GaussInt(b) * ((X(1) - X(2)) * (X(5) - one));
            expect_equal(e[1] - e[0], rhs, rep.id, "b=" + b.str());
            rep.statement = "e2 - e1 = 4ib(X1 - X2)(X5 - 1)";
            rep.instances = 1;
            break;
        }
        case IdentityId::e4_minus_e3:
        case IdentityId::e5_minus_e6: {
            if (!class6) throw std::invalid_argument("identity " + rep.id + " needs the class-6 eigenmatrix");
            const Integer b = class6_b(*class6);
            const auto e = build_e_polynomials(*class6);
            const std::size_t d = 6;
            auto X = [&](std::size_t j) { return QuadPoly::variable(d, j - 1); };
            const QuadPoly one = QuadPoly::constant(d, 1);
            QuadPoly lhs(d), rhs(d);
            if (id == IdentityId::e4_minus_e3) {
                lhs = e[3] - e[2];
                rhs = GaussInt(4) * I * GaussInt(b * b) * ((X(6) - one) * (X(3) - X(4)));
                rep.statement = "e4 - e3 = 4ib^2(X6 - 1)(X3 - X4) at X5 = 1, X1 = -X2, X1^2 = -1";
            } else {
                lhs = e[4] - e[5];
                rhs = GaussInt(4) * GaussInt(b * b) * ((X(6) + one) * (X(3) + X(4)));
                rep.statement = "e5 - e6 = 4b^2(X6 + 1)(X3 + X4) at X5 = 1, X1 = -X2, X1^2 = -1";
            }
            for (const auto& [label, spec] : zeta4_points()) {
                expect_equal(poly_specialize(lhs, spec), poly_specialize(rhs, spec), rep.id, "b=" + b.str() + "," + label);
                ++rep.instances;
            }
            break;
        }
        case IdentityId::class3_main:
        case IdentityId::class3_spec: {
            const std::size_t d = 3;
            auto X = [&](std::size_t j) { return QuadPoly::variable(d, j - 1); };
            auto C = [&](const GaussInt& c) { return QuadPoly::constant(d, c); };
            for (int a = 1; a <= a_max; ++a) {
                const Class3Case sc = class3_case_i(a);
                const Class3Parameters sp = class3_parameters(sc);
                const Integer b = boost::multiprecision::sqrt(sp.b2);
                const auto e = build_e_polynomials(class3_eigenmatrix(sc));
                const std::string inst = "a=" + std::to_string(a);
                if (id == IdentityId::class3_main) {
                    const QuadPoly rhs = GaussInt(0, b) *
                                         ((X(1) - X(2)) * (GaussInt(sp.r) * (X(1) + X(2) - GaussInt(2) * X(3)) -
                                                           GaussInt(2) * X(3) + C(2)));
                    expect_equal(e[0] - e[1], rhs, rep.id, inst);
                } else {
                    const Specialization x3{{2, CycInt::from_integer(4, 1)}};
                    const GaussInt s(sp.s), bi(0, b);
                    const QuadPoly f1 = (s - bi) * X(1) + (s + bi) * X(2) - C(GaussInt(2) * s);
                    const QuadPoly f2 = (s + bi) * X(1) + (s - bi) * X(2) - C(GaussInt(2) * s);
                    const QuadPoly lhs = GaussInt(4) * poly_specialize(e[2] - e[0], x3);
                    expect_equal(lhs, poly_specialize(f1 * f2, x3), rep.id, inst);
                }
                ++rep.instances;
            }
            rep.statement = id == IdentityId::class3_main
                                ? "e1 - e2 = bi(X1 - X2)(r(X1 + X2 - 2X3) - 2X3 + 2)"
                                : "4(e3 - e1) = ((s-bi)X1 + (s+bi)X2 - 2s)((s+bi)X1 + (s-bi)X2 - 2s) at X3 = 1";
            break;
        }
    }
    rep.passed = true;
    return rep;
}

}  // namespace bsl
