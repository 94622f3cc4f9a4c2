#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bsl/fusion.hpp"
#include "bsl/hadamard.hpp"
#include "reference_matrices.hpp"
#include "weight_sampling.hpp"

using namespace bsl;
using bsl::testing::class3_reference;
using bsl::testing::class6_reference;
using bsl::testing::random_hermitian_weights;
using bsl::testing::shared_ring;

namespace {

const std::vector<std::size_t> kPairing6{0, 2, 1, 4, 3, 5, 6};
const std::vector<std::size_t> kPairing3{0, 2, 1, 3};

// Exponents of i for the two closed forms.
WeightVector form_w1(int e1, int e2) {
    const long long a = e1 > 0 ? 1 : 3, b = e2 > 0 ? 1 : 3;
    return WeightVector(4, {0, a, 4 - a, b, 4 - b, 0, 0});
}

WeightVector form_w2(int e1, int e2) {
    const long long a = e1 > 0 ? 1 : 3, b = e2 > 0 ? 0 : 2;
    return WeightVector(4, {0, a, 4 - a, b, b, 0, 2});
}

std::vector<WeightVector> closed_form_solutions() {
    std::vector<WeightVector> out;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            out.push_back(form_w1(e1, e2));
            out.push_back(form_w2(e1, e2));
        }
    return out;
}

bool contains(const std::vector<WeightVector>& v, const WeightVector& w) {
    return std::any_of(v.begin(), v.end(), [&](const WeightVector& x) { return x == w; });
}

// (1 + sum_j P_kj X_j)^2 - n built as a product of linear forms.
QuadPoly squared_row(const Eigenmatrix& P, std::size_t k) {
    const std::size_t d = P.class_count();
    QuadPoly lin = QuadPoly::constant(d, 1);
    for (std::size_t j = 1; j <= d; ++j) lin += P.at(k, j) * QuadPoly::variable(d, j - 1);
    return lin * lin - QuadPoly::constant(d, GaussInt(P.order()));
}

}  // namespace

TEST(WeightVector, Basics) {
    const WeightVector w(4, {4, 5, -1, 2});
    EXPECT_EQ(w.exponents(), (std::vector<long long>{0, 1, 3, 2}));
    EXPECT_EQ(w.value(1), CycInt::root(4, 1));
    EXPECT_TRUE(w.is_hermitian(kPairing3));
    EXPECT_FALSE(WeightVector(4, {0, 1, 1, 0}).is_hermitian(kPairing3));
    EXPECT_FALSE(WeightVector(4, {0, 1, 3, 1}).is_hermitian(kPairing3));
    EXPECT_THROW(WeightVector(4, {1, 0}), std::invalid_argument);
    EXPECT_THROW(WeightVector(5, {0, 1}), ArithmeticError);
    EXPECT_EQ(WeightVector(8, {0, 2, 6, 0}), WeightVector(4, {0, 1, 3, 0}));
    EXPECT_EQ(w.str(), "(1, i, -i, -1)");
}

TEST(EPolynomials, MatchSquaredLinearForms) {
    for (const auto& P : {class6_reference(4), class6_reference(16), class3_reference(3)}) {
        const auto e = build_e_polynomials(P);
        ASSERT_EQ(e.size(), P.class_count());
        for (std::size_t k = 1; k <= P.class_count(); ++k) EXPECT_EQ(e[k - 1], squared_row(P, k)) << k;
    }
}

TEST(EPolynomials, AllOnesGivesMinusN) {
    const auto P = class6_reference(4);
    const std::vector<GaussInt> ones(6, GaussInt(1));
    for (const auto& e : build_e_polynomials(P)) EXPECT_EQ(e.evaluate(ones), GaussInt(-64));
}

TEST(EPolynomials, EqualGammaSquaredMinusN) {
    const auto P = class6_reference(4);
    const auto e = build_e_polynomials(P);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto w = random_hermitian_weights(rng, kPairing6);
        const auto g = gamma(P, w);
        const auto vals = w.values();
        const std::vector<CycInt> x(vals.begin() + 1, vals.end());
        for (std::size_t k = 1; k <= 6; ++k) {
            EXPECT_EQ(e[k - 1].evaluate(x), g[k] * g[k] - CycInt::from_integer(4, 64));
        }
    }
}

TEST(Gamma, AllOnesAndClosedForms) {
    const auto P = class6_reference(4);
    const auto g = gamma(P, WeightVector(4, std::vector<long long>(7, 0)));
    EXPECT_EQ(g[0], CycInt::from_integer(4, 64));
    for (std::size_t k = 1; k < 7; ++k) EXPECT_TRUE(g[k].is_zero());
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            EXPECT_EQ(gamma(P, form_w1(e1, e2))[0], CycInt::from_integer(4, 8));
            const auto g0 = gamma(P, form_w2(e1, e2))[0];
            EXPECT_EQ(g0 * g0, CycInt::from_integer(4, 64));
        }
    EXPECT_THROW(gamma(P, WeightVector(4, {0, 1, 3})), std::invalid_argument);
}

TEST(Chm, ClosedFormsPassBothAlgebraicTests) {
    for (long long b : {4, 16, 64}) {
        const auto P = class6_reference(b);
        for (const auto& w : closed_form_solutions()) {
            EXPECT_TRUE(is_chm_gamma(P, w)) << w.str();
            EXPECT_TRUE(is_chm_ezero(P, w)) << w.str();
        }
        const WeightVector ones(4, std::vector<long long>(7, 0));
        EXPECT_FALSE(is_chm_gamma(P, ones));
        EXPECT_FALSE(is_chm_ezero(P, ones));
        const WeightVector mixed(4, {0, 1, 3, 1, 3, 0, 2});  // (1, i, -i, i, -i, 1, -1)
        EXPECT_FALSE(is_chm_gamma(P, mixed));
        EXPECT_FALSE(is_chm_ezero(P, mixed));
    }
}

TEST(Chm, ClassifyForms) {
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            const auto s1 = classify(form_w1(e1, e2));
            EXPECT_EQ(s1.form, ButsonForm::W1);
            EXPECT_EQ(s1.eps1, e1);
            EXPECT_EQ(s1.eps2, e2);
            const auto s2 = classify(form_w2(e1, e2));
            EXPECT_EQ(s2.form, ButsonForm::W2);
            EXPECT_EQ(s2.eps1, e1);
            EXPECT_EQ(s2.eps2, e2);
        }
    EXPECT_EQ(classify(WeightVector(4, {0, 1, 3, 1, 3, 0, 2})).form, ButsonForm::other);
    EXPECT_EQ(classify(WeightVector(8, {0, 1, 7, 0, 0, 0, 0})).form, ButsonForm::other);
    EXPECT_EQ(classify(WeightVector(8, {0, 2, 6, 2, 6, 0, 0})).form, ButsonForm::W1);
}

TEST(Search, CandidateCount) {
    for (int N : {4, 8, 12, 24}) {
        EXPECT_EQ(butson_candidate_count(kPairing6, N), 4ull * N * N);
        EXPECT_EQ(butson_candidate_count(kPairing3, N), 2ull * N);
    }
}

TEST(Search, FourthRootsGiveTheEightClosedForms) {
    for (long long b : {4, 16}) {
        const auto sols = search_butson(class6_reference(b), kPairing6, 4);
        ASSERT_EQ(sols.size(), 8u);
        std::vector<WeightVector> found;
        std::size_t w1 = 0, w2 = 0;
        for (const auto& s : sols) {
            found.push_back(s.w);
            w1 += s.form == ButsonForm::W1;
            w2 += s.form == ButsonForm::W2;
        }
        EXPECT_EQ(w1, 4u);
        EXPECT_EQ(w2, 4u);
        for (const auto& w : closed_form_solutions()) EXPECT_TRUE(contains(found, w)) << w.str();
    }
}

TEST(Search, FinerRootsAddNothing) {
    const auto P = eigenmatrix(build_partition(shared_ring(3)));
    const auto base = search_butson(P, kPairing6, 4);
    for (int N : {8, 12, 24}) {
        const auto sols = search_butson(P, kPairing6, N);
        ASSERT_EQ(sols.size(), base.size()) << N;
        for (std::size_t t = 0; t < sols.size(); ++t) {
            EXPECT_EQ(sols[t].w, base[t].w);
            EXPECT_NE(sols[t].form, ButsonForm::other);
        }
    }
}

TEST(Search, BruteForceAgreesWithEquationForm) {
    // Every candidate at N = 8: gamma test and e_k test agree.
    const auto P = class6_reference(4);
    std::size_t hits = 0;
    for (long long a = 0; a < 8; ++a)
        for (long long c = 0; c < 8; ++c)
            for (long long s5 : {0, 4})
                for (long long s6 : {0, 4}) {
                    const WeightVector w(8, {0, a, 8 - a, c, 8 - c, s5, s6});
                    const bool g = is_chm_gamma(P, w);
                    ASSERT_EQ(g, is_chm_ezero(P, w)) << w.str();
                    hits += g;
                }
    EXPECT_EQ(hits, 8u);
}

TEST(Search, ClassThreeSolutions) {
    for (long long a : {1, 2, 4, 16}) {
        const auto P = class3_reference(a);
        for (int N : {4, 8, 12}) {
            std::size_t complex_sols = 0, real_sols = 0;
            for (const auto& s : search_butson(P, kPairing3, N)) {
                if (s.w.value(1) == s.w.value(2)) {
                    ++real_sols;
                    continue;
                }
                ++complex_sols;
                const auto w1 = s.w.value(1).to_gauss();
                ASSERT_TRUE(w1);
                EXPECT_TRUE(*w1 == GaussInt::i() || *w1 == -GaussInt::i());
                EXPECT_EQ(s.w.value(2), s.w.value(1).conj());
                EXPECT_EQ(s.w.value(3), CycInt::from_integer(4, 1));
            }
            EXPECT_EQ(complex_sols, 2u) << a << " " << N;
            // real Hadamard matrices only exist at order 4
            EXPECT_EQ(real_sols, a == 1 ? 2u : 0u) << a << " " << N;
        }
    }
}

TEST(Search, RejectsBadInput) {
    EXPECT_THROW(search_butson(class6_reference(4), kPairing6, 5), ArithmeticError);
    EXPECT_THROW(search_butson(class6_reference(4), kPairing3, 4), std::invalid_argument);
}

TEST(Dense, ClosedFormsAreHadamardAtThree) {
    const auto part = build_partition(shared_ring(3));
    for (const auto& w : closed_form_solutions()) {
        const auto W = dense_weight_matrix(part, w);
        EXPECT_TRUE(W.is_hermitian());
        EXPECT_TRUE(W.all_unimodular());
        EXPECT_TRUE(is_chm_direct(W)) << w.str();
    }
}

TEST(Dense, NegativeControls) {
    DenseWeightMatrix I;
    I.n = 4;
    I.order = 4;
    I.exps.assign(16, -1);
    for (std::size_t k = 0; k < 4; ++k) I.exps[k * 4 + k] = 0;
    EXPECT_FALSE(is_chm_direct(I));
    EXPECT_TRUE(I.is_hermitian());

    // every real hermitian candidate fails at e = 3
    const auto part = build_partition(shared_ring(3));
    const auto P = eigenmatrix(part);
    for (int mask = 0; mask < 16; ++mask) {
        const long long a = (mask & 1) ? 2 : 0, c = (mask & 2) ? 2 : 0;
        const WeightVector w(4, {0, a, a, c, c, (mask & 4) ? 2 : 0, (mask & 8) ? 2 : 0});
        EXPECT_FALSE(is_chm_gamma(P, w));
        EXPECT_FALSE(is_chm_direct(dense_weight_matrix(part, w))) << w.str();
    }
    EXPECT_THROW(dense_weight_matrix(part, form_w1(1, 1), 32), CapExceeded);
}

TEST(Dense, EveryCandidateIsHermitianAndAgrees) {
    const auto part = build_partition(shared_ring(3));
    const auto P = eigenmatrix(part);
    for (long long a = 0; a < 4; ++a)
        for (long long c = 0; c < 4; ++c)
            for (long long s5 : {0, 2})
                for (long long s6 : {0, 2}) {
                    const WeightVector w(4, {0, a, 4 - a, c, 4 - c, s5, s6});
                    const auto W = dense_weight_matrix(part, w);
                    ASSERT_TRUE(W.is_hermitian()) << w.str();
                    ASSERT_EQ(is_chm_direct(W), is_chm_gamma(P, w)) << w.str();
                }
}

TEST(Dense, NonHermitianWeightsGiveNonHermitianMatrix) {
    const auto part = build_partition(shared_ring(3));
    EXPECT_FALSE(dense_weight_matrix(part, WeightVector(4, {0, 1, 1, 0, 0, 0, 0})).is_hermitian());
}

TEST(Hadamard, ThreeWayAgreementOnRandomVectors) {
    const auto part = build_partition(shared_ring(3));
    const auto P = eigenmatrix(part);
    std::mt19937_64 rng(2024);
    std::size_t positives = 0;
    for (int t = 0; t < 200; ++t) {
        const auto w = random_hermitian_weights(rng, kPairing6);
        const bool g = is_chm_gamma(P, w);
        EXPECT_EQ(g, is_chm_ezero(P, w)) << w.str();
        EXPECT_EQ(g, is_chm_direct(dense_weight_matrix(part, w))) << w.str();
        positives += g;
    }
    EXPECT_GT(positives, 0u);
}

TEST(ClassThree, CaseOneMatchesAmorphousMatrix) {
    for (int a = 1; a <= 8; ++a) {
        const auto c = class3_case_i(a);
        const auto p = class3_parameters(c);
        EXPECT_EQ(p.r, 0);
        EXPECT_EQ(p.s, -2 * a);
        EXPECT_EQ(p.b2, 4 * a * a);
        EXPECT_EQ(class3_eigenmatrix(c), class3_reference(a));
    }
    EXPECT_THROW(class3_case_i(0), std::invalid_argument);
}

TEST(ClassThree, FusedMatrixMatchesCaseOne) {
    for (int e : {3, 5}) {
        const auto R = shared_ring(e);
        const auto P = eigenmatrix(build_partition(R));
        const auto x7 = bannai_muzychuk(P, kPairing6, make_partition({{0}, {1, 3}, {2, 4}, {5, 6}}));
        ASSERT_TRUE(x7);
        EXPECT_EQ(x7->fused_P, class3_eigenmatrix(class3_case_i(static_cast<long long>(R->b()))));
    }
}

TEST(ClassThree, OtherCases) {
    const Class3Case iii{Class3CaseTag::iii, 3, 5};
    const auto p = class3_parameters(iii);
    EXPECT_EQ(p.r, -1);
    EXPECT_EQ(p.s, 3);
    EXPECT_EQ(p.b2, 4);
    EXPECT_THROW(class3_eigenmatrix(iii), ArithmeticError);

    const Class3Case ii{Class3CaseTag::ii, 6, 2};
    const auto q = class3_parameters(ii);
    EXPECT_EQ(q.r, -3);
    EXPECT_EQ(q.s, 0);
    EXPECT_EQ(q.b2, 27);
    EXPECT_THROW(class3_eigenmatrix(ii), ArithmeticError);

    EXPECT_THROW(class3_parameters(Class3Case{Class3CaseTag::i, 3, 2}), ArithmeticError);
}

TEST(Identities, AllPassAtThreeAndFive) {
    for (long long b : {4, 16, 64}) {
        const auto P = class6_reference(b);
        for (auto id : all_identity_ids()) {
            const auto rep = verify_identity(id, &P);
            EXPECT_TRUE(rep.passed) << rep.id;
            EXPECT_GT(rep.instances, 0u);
        }
    }
    EXPECT_EQ(verify_identity(IdentityId::class3_main).instances, 8u);
}

TEST(Identities, NamesRoundTrip) {
    for (auto id : all_identity_ids()) EXPECT_EQ(parse_identity_id(identity_name(id)), id);
    EXPECT_THROW(parse_identity_id("01-6"), std::invalid_argument);
    EXPECT_THROW(verify_identity(IdentityId::e2_minus_e1), std::invalid_argument);
}

TEST(Identities, NumericSpotChecks) {
    // Evaluate both sides at random Gaussian points without the polynomial layer.
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coord(-5, 5);
    const long long b = 16;
    const auto P = class6_reference(b);
    auto row_value = [&](std::size_t k, const std::vector<GaussInt>& x) {
        GaussInt lin = 1;
        for (std::size_t j = 1; j <= 6; ++j) lin += P.at(k, j) * x[j - 1];
        return lin * lin - GaussInt(64 * 4 * 4);
    };
    const GaussInt I = GaussInt::i();
    for (int t = 0; t < 100; ++t) {
        std::vector<GaussInt> x(6);
        for (auto& v : x) v = GaussInt(coord(rng), coord(rng));
        EXPECT_EQ(row_value(2, x) - row_value(1, x), GaussInt(4 * b) * I * (x[0] - x[1]) * (x[4] - GaussInt(1)));
        // the specialized identities at X5 = 1, X1 = i, X2 = -i
        x[4] = 1;
        x[0] = I;
        x[1] = -I;
        EXPECT_EQ(row_value(4, x) - row_value(3, x), GaussInt(4 * b * b) * I * (x[5] - GaussInt(1)) * (x[2] - x[3]));
        EXPECT_EQ(row_value(5, x) - row_value(6, x), GaussInt(4 * b * b) * (x[5] + GaussInt(1)) * (x[2] + x[3]));
    }
}

TEST(Identities, FailureCarriesWitness) {
    auto P = class6_reference(4);
    P.at(1, 5) = GaussInt(-2);
    try {
        verify_identity(IdentityId::e2_minus_e1, &P);
        FAIL() << "perturbed matrix satisfied the identity";
    } catch (const IdentityFailed& err) {
        EXPECT_EQ(err.identity, "01-7");
        EXPECT_FALSE(err.difference.empty());
    }
}
