#pragma once

// Exact arithmetic: Gaussian integers, cyclotomic integers Z[zeta_N] for
// N dividing 24, and degree <= 2 multivariate polynomials over Z[i].

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsl {

using Integer = boost::multiprecision::cpp_int;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// GaussInt

class GaussInt {
public:
    GaussInt() = default;
    GaussInt(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussInt(long long re) : re_(re), im_(0) {}
    GaussInt(int re) : re_(re), im_(0) {}

    static GaussInt i() { return GaussInt(0, 1); }

    const Integer& re() const noexcept { return re_; }
    const Integer& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussInt conj() const { return GaussInt(re_, -im_); }
    Integer norm() const { return re_ * re_ + im_ * im_; }

    GaussInt& operator+=(const GaussInt& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussInt& operator*=(const GaussInt& o) {
        Integer re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend GaussInt operator-(const GaussInt& a) { return GaussInt(-a.re_, -a.im_); }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

    // Exact quotient a / b in Z[i]; nullopt when b does not divide a.
    static std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b);

    std::string str() const;

private:
    Integer re_ = 0;
    Integer im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

enum class GaussOp { add, sub, mul, conj };

// conj ignores b.
GaussInt gauss_arith(const GaussInt& a, const GaussInt& b, GaussOp op);

// ---------------------------------------------------------------------------
// Cyclotomic integers

// Supported orders: 1, 2, 4, 8, 12, 24. All of them divide 24, so any two
// supported elements can be compared or combined in Z[zeta_lcm].
bool is_supported_order(int order) noexcept;
int lcm_order(int a, int b);

// Phi_N(x), low-degree coefficient first. Throws ArithmeticError for
// unsupported N.
std::vector<Integer> cyclotomic_poly(int order);

class CycInt {
public:
    // Zero of Z[zeta_order].
    explicit CycInt(int order = 4);
    CycInt(int order, std::vector<Integer> coeffs);

    static CycInt from_integer(int order, const Integer& v);
    // Requires 4 | order unless z is real.
    static CycInt from_gauss(int order, const GaussInt& z);
    // zeta_order^k for any integer k.
    static CycInt root(int order, long long k);

    int order() const noexcept { return order_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree_bound() const noexcept { return coeffs_.size(); }

    bool is_zero() const;

    // Image in Z[zeta_target]; target must be a supported multiple of order().
    CycInt embed(int target) const;
    // nullopt when the value does not lie in Z[i].
    std::optional<GaussInt> to_gauss() const;

    // zeta -> zeta^{-1}.
    CycInt conj() const;
    CycInt pow(unsigned long long k) const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend CycInt operator-(const CycInt& a);

    // Compares values, embedding both into a common order first.
    friend bool operator==(const CycInt& a, const CycInt& b);
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce(std::vector<Integer> full);

    int order_;
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycInt& z);

// ---------------------------------------------------------------------------
// QuadPoly: c + sum_j l_j X_j + sum_{j<=k} q_jk X_j X_k over Z[i].
// Variables are numbered 0 .. nvars-1.

class QuadPoly {
public:
    explicit QuadPoly(std::size_t nvars = 0);

    static QuadPoly constant(std::size_t nvars, const GaussInt& c);
    static QuadPoly variable(std::size_t nvars, std::size_t j);

    std::size_t nvars() const noexcept { return nvars_; }

    const GaussInt& constant_term() const noexcept { return constant_; }
    const GaussInt& linear(std::size_t j) const { return linear_.at(j); }
    // Order of j, k does not matter.
    const GaussInt& quad(std::size_t j, std::size_t k) const;

    GaussInt& constant_term() noexcept { return constant_; }
    GaussInt& linear(std::size_t j) { return linear_.at(j); }
    GaussInt& quad(std::size_t j, std::size_t k);

    bool is_zero() const;
    // 0, 1 or 2 (the zero polynomial reports 0).
    int degree() const;

    QuadPoly& operator+=(const QuadPoly& o);
    QuadPoly& operator-=(const QuadPoly& o);
    QuadPoly& operator*=(const GaussInt& s);

    friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
    friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
    friend QuadPoly operator*(QuadPoly a, const GaussInt& s) { return a *= s; }
    friend QuadPoly operator*(const GaussInt& s, QuadPoly a) { return a *= s; }
    friend QuadPoly operator-(const QuadPoly& a);
    // Both factors must have degree <= 1.
    friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b);

    friend bool operator==(const QuadPoly& a, const QuadPoly& b);
    friend bool operator!=(const QuadPoly& a, const QuadPoly& b) { return !(a == b); }

    GaussInt evaluate(const std::vector<GaussInt>& x) const;
    // Result lives in Z[zeta_L] with L = lcm(4, orders of x).
    CycInt evaluate(const std::vector<CycInt>& x) const;

    std::string str() const;

private:
    std::size_t qindex(std::size_t j, std::size_t k) const;
    void check_same_shape(const QuadPoly& o) const;

    std::size_t nvars_;
    GaussInt constant_;
    std::vector<GaussInt> linear_;
    std::vector<GaussInt> quad_;  // upper triangle, row-major
};

QuadPoly poly_sub(const QuadPoly& p, const QuadPoly& q);

// Human-readable description of the first coefficient where p and q differ,
// or nullopt when they are equal.
std::optional<std::string> first_difference(const QuadPoly& p, const QuadPoly& q);

// X_j := sign * X_target
struct VarAlias {
    std::size_t target;
    int sign = 1;
};

using Substitution = std::variant<CycInt, VarAlias>;

// Substitutes constants (which must lie in Z[i]) and signed aliases. Alias
// chains are followed; cycles are rejected. Substituted variables keep their
// slot but carry zero coefficients in the result.
QuadPoly poly_specialize(const QuadPoly& p, const std::map<std::size_t, Substitution>& assignments);

}  // namespace bsl
