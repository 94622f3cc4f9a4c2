#include "bsl/exact_numbers.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace bsl {

// ---------------------------------------------------------------------------
// GaussInt

std::optional<GaussInt> GaussInt::exact_div(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) return std::nullopt;
    const Integer nb = b.norm();
    const GaussInt num = a * b.conj();
    if (num.re() % nb != 0 || num.im() % nb != 0) return std::nullopt;
    return GaussInt(num.re() / nb, num.im() / nb);
}

std::string GaussInt::str() const {
    std::ostringstream os;
    if (im_.is_zero()) {
        os << re_;
    } else if (re_.is_zero()) {
        if (im_ == 1) os << "i";
        else if (im_ == -1) os << "-i";
        else os << im_ << "i";
    } else {
        os << re_ << (im_ < 0 ? "-" : "+");
        const Integer a = abs(im_);
        if (a != 1) os << a;
        os << "i";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

GaussInt gauss_arith(const GaussInt& a, const GaussInt& b, GaussOp op) {
    switch (op) {
        case GaussOp::add: return a + b;
        case GaussOp::sub: return a - b;
        case GaussOp::mul: return a * b;
        case GaussOp::conj: return a.conj();
    }
    throw ArithmeticError("unknown GaussOp");
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

constexpr std::array<int, 6> kSupportedOrders{1, 2, 4, 8, 12, 24};

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Division by a monic polynomial; returns {quotient, remainder}.
std::pair<IntPoly, IntPoly> poly_divmod_monic(IntPoly a, const IntPoly& m) {
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) return {IntPoly{0}, a};
    IntPoly q(a.size() - dm);
    for (std::size_t top = a.size(); top-- > dm;) {
        const Integer c = a[top];
        if (c.is_zero()) continue;
        const std::size_t shift = top - dm;
        q[shift] = c;
        for (std::size_t k = 0; k <= dm; ++k) a[shift + k] -= c * m[k];
    }
    a.resize(std::max<std::size_t>(dm, 1));
    trim(q);
    return {q, a};
}

IntPoly compute_cyclotomic(int n) {
    IntPoly num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod_monic(num, compute_cyclotomic(d));
        for (const auto& c : r) {
            if (!c.is_zero()) throw ArithmeticError("cyclotomic division left a remainder");
        }
        num = std::move(q);
    }
    return num;
}

const IntPoly& cyclotomic_cached(int order) {
    static const std::array<IntPoly, kSupportedOrders.size()> table = [] {
        std::array<IntPoly, kSupportedOrders.size()> t;
        for (std::size_t i = 0; i < kSupportedOrders.size(); ++i) t[i] = compute_cyclotomic(kSupportedOrders[i]);
        return t;
    }();
    for (std::size_t i = 0; i < kSupportedOrders.size(); ++i) {
        if (kSupportedOrders[i] == order) return table[i];
    }
    throw ArithmeticError("unsupported cyclotomic order " + std::to_string(order));
}

std::size_t phi_degree(int order) { return cyclotomic_cached(order).size() - 1; }

}  // namespace

bool is_supported_order(int order) noexcept {
    return std::find(kSupportedOrders.begin(), kSupportedOrders.end(), order) != kSupportedOrders.end();
}

int lcm_order(int a, int b) {
    if (!is_supported_order(a) || !is_supported_order(b)) {
        throw ArithmeticError("unsupported cyclotomic order in lcm");
    }
    return std::lcm(a, b);
}

std::vector<Integer> cyclotomic_poly(int order) { return cyclotomic_cached(order); }

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(int order) : order_(order), coeffs_(phi_degree(order)) {}

CycInt::CycInt(int order, std::vector<Integer> coeffs) : order_(order) {
    (void)phi_degree(order);
    reduce(std::move(coeffs));
}

void CycInt::reduce(std::vector<Integer> full) {
    const IntPoly& phi = cyclotomic_cached(order_);
    const std::size_t deg = phi.size() - 1;
    if (full.empty()) full.push_back(0);
    if (full.size() > deg) {
        full = poly_divmod_monic(std::move(full), phi).second;
    }
    full.resize(deg);
    coeffs_ = std::move(full);
}

CycInt CycInt::from_integer(int order, const Integer& v) {
    CycInt r(order);
    r.coeffs_[0] = v;
    return r;
}

CycInt CycInt::from_gauss(int order, const GaussInt& z) {
    if (z.is_real()) return from_integer(order, z.re());
    if (!is_supported_order(order) || order % 4 != 0) {
        throw ArithmeticError("Gaussian integer " + z.str() + " is not in Z[zeta_" + std::to_string(order) + "]");
    }
    CycInt r = root(order, order / 4);
    for (auto& c : r.coeffs_) c *= z.im();
    r.coeffs_[0] += z.re();
    return r;
}

CycInt CycInt::root(int order, long long k) {
    const long long m = ((k % order) + order) % order;
    std::vector<Integer> full(static_cast<std::size_t>(m) + 1);
    full[static_cast<std::size_t>(m)] = 1;
    return CycInt(order, std::move(full));
}

bool CycInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.is_zero(); });
}

CycInt CycInt::embed(int target) const {
    if (!is_supported_order(target) || target % order_ != 0) {
        throw ArithmeticError("cannot embed Z[zeta_" + std::to_string(order_) + "] into Z[zeta_" +
                              std::to_string(target) + "]");
    }
    if (target == order_) return *this;
    const std::size_t step = static_cast<std::size_t>(target / order_);
    std::vector<Integer> full(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) full[k * step] = coeffs_[k];
    return CycInt(target, std::move(full));
}

std::optional<GaussInt> CycInt::to_gauss() const {
    const int L = lcm_order(order_, 4);
    const CycInt x = embed(L);
    // i = zeta_L^{L/4} and L/4 < phi(L) for every supported L, so i is a basis monomial.
    const std::size_t ipos = static_cast<std::size_t>(L / 4);
    for (std::size_t k = 1; k < x.coeffs_.size(); ++k) {
        if (k != ipos && !x.coeffs_[k].is_zero()) return std::nullopt;
    }
    return GaussInt(x.coeffs_[0], x.coeffs_[ipos]);
}

CycInt CycInt::conj() const {
    // zeta^k -> zeta^{N-k}
    std::vector<Integer> full(static_cast<std::size_t>(order_) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        const std::size_t m = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
        full[m] += coeffs_[k];
    }
    return CycInt(order_, std::move(full));
}

CycInt CycInt::pow(unsigned long long k) const {
    CycInt result = from_integer(order_, 1);
    CycInt base = *this;
    while (k > 0) {
        if (k & 1ULL) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

namespace {

std::pair<CycInt, CycInt> common(const CycInt& a, const CycInt& b) {
    const int L = lcm_order(a.order(), b.order());
    return {a.embed(L), b.embed(L)};
}

}  // namespace

CycInt& CycInt::operator+=(const CycInt& o) {
    if (o.order_ != order_) {
        auto [x, y] = common(*this, o);
        return *this = x + y;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (o.order_ != order_) {
        auto [x, y] = common(*this, o);
        return *this = x - y;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    if (o.order_ != order_) {
        auto [x, y] = common(*this, o);
        return *this = x * y;
    }
    reduce(poly_mul(coeffs_, o.coeffs_));
    return *this;
}

CycInt operator-(const CycInt& a) {
    CycInt r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const Integer a = abs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "z" << order_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycInt& z) { return os << z.str(); }

// ---------------------------------------------------------------------------
// QuadPoly

QuadPoly::QuadPoly(std::size_t nvars)
    : nvars_(nvars), linear_(nvars), quad_(nvars * (nvars + 1) / 2) {}

QuadPoly QuadPoly::constant(std::size_t nvars, const GaussInt& c) {
    QuadPoly p(nvars);
    p.constant_ = c;
    return p;
}

QuadPoly QuadPoly::variable(std::size_t nvars, std::size_t j) {
    if (j >= nvars) throw std::out_of_range("variable index out of range");
    QuadPoly p(nvars);
    p.linear_[j] = 1;
    return p;
}

std::size_t QuadPoly::qindex(std::size_t j, std::size_t k) const {
    if (j > k) std::swap(j, k);
    if (k >= nvars_) throw std::out_of_range("variable index out of range");
    // row j of the upper triangle starts after j rows of decreasing length
    return j * nvars_ - j * (j - 1) / 2 + (k - j);
}

const GaussInt& QuadPoly::quad(std::size_t j, std::size_t k) const { return quad_[qindex(j, k)]; }
GaussInt& QuadPoly::quad(std::size_t j, std::size_t k) { return quad_[qindex(j, k)]; }

bool QuadPoly::is_zero() const { return degree() == 0 && constant_.is_zero(); }

int QuadPoly::degree() const {
    for (const auto& q : quad_) {
        if (!q.is_zero()) return 2;
    }
    for (const auto& l : linear_) {
        if (!l.is_zero()) return 1;
    }
    return 0;
}

void QuadPoly::check_same_shape(const QuadPoly& o) const {
    if (o.nvars_ != nvars_) {
        throw std::invalid_argument("QuadPoly dimension mismatch: " + std::to_string(nvars_) + " vs " +
                                    std::to_string(o.nvars_));
    }
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
    check_same_shape(o);
    constant_ += o.constant_;
    for (std::size_t j = 0; j < linear_.size(); ++j) linear_[j] += o.linear_[j];
    for (std::size_t j = 0; j < quad_.size(); ++j) quad_[j] += o.quad_[j];
    return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
    check_same_shape(o);
    constant_ -= o.constant_;
    for (std::size_t j = 0; j < linear_.size(); ++j) linear_[j] -= o.linear_[j];
    for (std::size_t j = 0; j < quad_.size(); ++j) quad_[j] -= o.quad_[j];
    return *this;
}

QuadPoly& QuadPoly::operator*=(const GaussInt& s) {
    constant_ *= s;
    for (auto& l : linear_) l *= s;
    for (auto& q : quad_) q *= s;
    return *this;
}

QuadPoly operator-(const QuadPoly& a) { return a * GaussInt(-1); }

QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
    a.check_same_shape(b);
    if (a.degree() > 1 || b.degree() > 1) {
        throw std::invalid_argument("QuadPoly product requires two linear forms");
    }
    const std::size_t d = a.nvars_;
    QuadPoly r(d);
    r.constant_ = a.constant_ * b.constant_;
    for (std::size_t j = 0; j < d; ++j) {
        r.linear_[j] = a.constant_ * b.linear_[j] + a.linear_[j] * b.constant_;
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (a.linear_[j].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) r.quad(j, k) += a.linear_[j] * b.linear_[k];
    }
    return r;
}

bool operator==(const QuadPoly& a, const QuadPoly& b) {
    return a.nvars_ == b.nvars_ && a.constant_ == b.constant_ && a.linear_ == b.linear_ && a.quad_ == b.quad_;
}

GaussInt QuadPoly::evaluate(const std::vector<GaussInt>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    GaussInt r = constant_;
    for (std::size_t j = 0; j < nvars_; ++j) {
        r += linear_[j] * x[j];
        for (std::size_t k = j; k < nvars_; ++k) r += quad(j, k) * x[j] * x[k];
    }
    return r;
}

CycInt QuadPoly::evaluate(const std::vector<CycInt>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    int L = 4;
    for (const auto& v : x) L = lcm_order(L, v.order());
    std::vector<CycInt> xs;
    xs.reserve(x.size());
    for (const auto& v : x) xs.push_back(v.embed(L));
    CycInt r = CycInt::from_gauss(L, constant_);
    for (std::size_t j = 0; j < nvars_; ++j) {
        if (!linear_[j].is_zero()) r += CycInt::from_gauss(L, linear_[j]) * xs[j];
        for (std::size_t k = j; k < nvars_; ++k) {
            const GaussInt& q = quad(j, k);
            if (!q.is_zero()) r += CycInt::from_gauss(L, q) * xs[j] * xs[k];
        }
    }
    return r;
}

std::string QuadPoly::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const GaussInt& c, const std::string& mono) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        if (mono.empty()) {
            os << c;
        } else if (c == GaussInt(1)) {
            os << mono;
        } else {
            os << "(" << c << ")" << mono;
        }
    };
    term(constant_, "");
    for (std::size_t j = 0; j < nvars_; ++j) term(linear_[j], "X" + std::to_string(j));
    for (std::size_t j = 0; j < nvars_; ++j) {
        for (std::size_t k = j; k < nvars_; ++k) {
            term(quad(j, k), j == k ? "X" + std::to_string(j) + "^2"
                                    : "X" + std::to_string(j) + "X" + std::to_string(k));
        }
    }
    if (first) os << "0";
    return os.str();
}

QuadPoly poly_sub(const QuadPoly& p, const QuadPoly& q) { return p - q; }

std::optional<std::string> first_difference(const QuadPoly& p, const QuadPoly& q) {
    if (p.nvars() != q.nvars()) return "dimension " + std::to_string(p.nvars()) + " vs " + std::to_string(q.nvars());
    auto show = [](const std::string& where, const GaussInt& a, const GaussInt& b) {
        return where + ": " + a.str() + " vs " + b.str();
    };
    if (p.constant_term() != q.constant_term()) return show("constant", p.constant_term(), q.constant_term());
    for (std::size_t j = 0; j < p.nvars(); ++j) {
        if (p.linear(j) != q.linear(j)) return show("X" + std::to_string(j), p.linear(j), q.linear(j));
    }
    for (std::size_t j = 0; j < p.nvars(); ++j) {
        for (std::size_t k = j; k < p.nvars(); ++k) {
            if (p.quad(j, k) != q.quad(j, k)) {
                return show("X" + std::to_string(j) + "X" + std::to_string(k), p.quad(j, k), q.quad(j, k));
            }
        }
    }
    return std::nullopt;
}

QuadPoly poly_specialize(const QuadPoly& p, const std::map<std::size_t, Substitution>& assignments) {
    const std::size_t d = p.nvars();
    for (const auto& [var, sub] : assignments) {
        if (var >= d) throw std::out_of_range("specialized variable out of range");
        if (const auto* alias = std::get_if<VarAlias>(&sub)) {
            if (alias->target >= d) throw std::out_of_range("alias target out of range");
            if (alias->sign != 1 && alias->sign != -1) throw std::invalid_argument("alias sign must be +1 or -1");
        }
    }

    // Image of each variable as a linear form.
    std::vector<QuadPoly> image;
    image.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        GaussInt sign = 1;
        std::size_t cur = j;
        std::set<std::size_t> seen{j};
        std::optional<QuadPoly> form;
        while (!form) {
            auto it = assignments.find(cur);
            if (it == assignments.end()) {
                form = QuadPoly::variable(d, cur) * sign;
            } else if (const auto* c = std::get_if<CycInt>(&it->second)) {
                const auto g = c->to_gauss();
                if (!g) throw ArithmeticError("substituted value " + c->str() + " is not a Gaussian integer");
                form = QuadPoly::constant(d, *g * sign);
            } else {
                const auto& alias = std::get<VarAlias>(it->second);
                if (!seen.insert(alias.target).second) {
                    throw std::invalid_argument("inconsistent alias chain at X" + std::to_string(j));
                }
                sign *= GaussInt(alias.sign);
                cur = alias.target;
            }
        }
        image.push_back(std::move(*form));
    }

    QuadPoly r = QuadPoly::constant(d, p.constant_term());
    for (std::size_t j = 0; j < d; ++j) {
        if (!p.linear(j).is_zero()) r += image[j] * p.linear(j);
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j; k < d; ++k) {
            if (!p.quad(j, k).is_zero()) r += (image[j] * image[k]) * p.quad(j, k);
        }
    }
    return r;
}

}  // namespace bsl
