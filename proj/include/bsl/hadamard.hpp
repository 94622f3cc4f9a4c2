#pragma once

// Hermitian complex Hadamard matrices W = sum_j w_j A_j in a Bose-Mesner
// algebra, tested three ways: through gamma_k = sum_j w_j P_{k,j}, through
// the quadratic polynomials e_k, and by the dense product W conj(W)^T.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsl/exact_numbers.hpp"
#include "bsl/scheme.hpp"

namespace bsl {

// w_j = zeta_order^{exponents[j]}, w_0 = 1.
class WeightVector {
public:
    WeightVector(int order, std::vector<long long> exponents);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return exps_.size(); }
    long long exponent(std::size_t j) const { return exps_.at(j); }
    const std::vector<long long>& exponents() const noexcept { return exps_; }

    CycInt value(std::size_t j) const { return CycInt::root(order_, exps_.at(j)); }
    std::vector<CycInt> values() const;

    // w_{pairing[i]} == conj(w_i) for every i.
    bool is_hermitian(const std::vector<std::size_t>& pairing) const;

    std::string str() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b);

private:
    int order_;
    std::vector<long long> exps_;  // reduced mod order
};

// e_k for k = 1..d (element k-1 of the result); variable j-1 stands for X_j.
std::vector<QuadPoly> build_e_polynomials(const Eigenmatrix& P);

std::vector<CycInt> gamma(const Eigenmatrix& P, const WeightVector& w);

bool is_chm_gamma(const Eigenmatrix& P, const WeightVector& w);
bool is_chm_ezero(const Eigenmatrix& P, const WeightVector& w);

// Dense matrix of roots of unity (or zeros), entry = zeta_order^exp or 0 when exp < 0.
struct DenseWeightMatrix {
    std::size_t n = 0;
    int order = 4;
    std::vector<std::int16_t> exps;  // row-major

    std::int16_t at(std::size_t r, std::size_t c) const { return exps[r * n + c]; }
    bool is_hermitian() const;
    bool all_unimodular() const;
};

// W[a][b] = w_{class(a - b)}.
DenseWeightMatrix dense_weight_matrix(const DifferencePartition& part, const WeightVector& w,
                                      std::size_t cap = kDefaultDenseCap);

// W conj(W)^T == n I exactly.
bool is_chm_direct(const DenseWeightMatrix& W, std::size_t cap = kDefaultDenseCap);

enum class ButsonForm { W1, W2, other };

struct ButsonSolution {
    WeightVector w;
    ButsonForm form = ButsonForm::other;
    int eps1 = 0;  // +-1 for W1/W2
    int eps2 = 0;
};

std::string form_name(ButsonForm f);

// Matches w against (1, e1 i, -e1 i, e2 i, -e2 i, 1, 1) and
// (1, e1 i, -e1 i, e2, e2, 1, -1).
ButsonSolution classify(const WeightVector& w);

// Exhaustive search over hermitian weight vectors of order-th roots of
// unity: one root per conjugate pair {i, i'} with i < i', and +-1 for each
// self-paired class. Output follows the enumeration order, class 1 most
// significant.
std::vector<ButsonSolution> search_butson(const Eigenmatrix& P, const std::vector<std::size_t>& pairing, int order);

std::uint64_t butson_candidate_count(const std::vector<std::size_t>& pairing, int order);

// ---------------------------------------------------------------------------
// Class-3 eigenmatrices with one pair of nonsymmetric classes

enum class Class3CaseTag { i, ii, iii };

struct Class3Case {
    Class3CaseTag tag;
    Integer k1;
    Integer k2;
};

struct Class3Parameters {
    Integer r, s, b2;
};

// Case (i) with (k1, k2) = (2a(2a-1), 2a-1).
Class3Case class3_case_i(const Integer& a);
Class3Parameters class3_parameters(const Class3Case& c);
// Rows (1, k1/2, k1/2, k2), (1, (r+bi)/2, (r-bi)/2, -(r+1)),
// (1, (r-bi)/2, (r+bi)/2, -(r+1)), (1, s/2, s/2, -(s+1)).
Eigenmatrix class3_eigenmatrix(const Class3Case& c);

// ---------------------------------------------------------------------------
// Polynomial identities

enum class IdentityId {
    e2_minus_e1,  // id "01-7"
    e4_minus_e3,  // id "01-8"
    e5_minus_e6,  // id "01-9"
    class3_main,
    class3_spec,
};

std::vector<IdentityId> all_identity_ids();
std::string identity_name(IdentityId id);
IdentityId parse_identity_id(const std::string& name);

class IdentityFailed : public std::runtime_error {
public:
    IdentityFailed(std::string identity, std::string instance, std::string difference);
    std::string identity, instance, difference;
};

struct IdentityReport {
    std::string id;
    std::string statement;
    std::size_t instances = 0;
    bool passed = false;
};

// Throws IdentityFailed with the first differing coefficient.
void expect_equal(const QuadPoly& lhs, const QuadPoly& rhs, const std::string& identity, const std::string& instance);

// The class-6 identities need the eigenmatrix of the scheme on GR(4,e);
// the class-3 ones run over case (i) with a = 1..a_max.
IdentityReport verify_identity(IdentityId id, const Eigenmatrix* class6 = nullptr, int a_max = 8);

}  // namespace bsl
