#include "mckay/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mckay {

namespace {

Coeff ck_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in addition");
    return r;
}

Coeff ck_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in subtraction");
    return r;
}

Coeff ck_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in multiplication");
    return r;
}

// Integer polynomials, ascending degree, no trailing zeros.
using Poly = std::vector<Coeff>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = ck_add(r[i + j], ck_mul(a[i], b[j]));
    }
    return r;
}

// Long division by a monic divisor. Quotient returned, remainder left in num.
Poly poly_divmod_monic(Poly& num, const Poly& div) {
    trim(num);
    Poly q;
    if (num.size() >= div.size()) q.assign(num.size() - div.size() + 1, 0);
    while (num.size() >= div.size()) {
        const Coeff f = num.back();
        const std::size_t shift = num.size() - div.size();
        q[shift] = f;
        for (std::size_t i = 0; i < div.size(); ++i)
            num[shift + i] = ck_sub(num[shift + i], ck_mul(f, div[i]));
        trim(num);
    }
    return q;
}

// Memoized table of cyclotomic polynomials. Filled bottom-up over the
// divisors of n so each entry is computed once; guarded for concurrent use.
const Poly& cyclotomic_memo(int n) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        Poly num(static_cast<std::size_t>(d) + 1, 0);
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1;
        for (int e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            Poly q = poly_divmod_monic(num, cache.at(e));
            if (!num.empty())
                throw std::logic_error("cyclotomic polynomial division left a remainder");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

void require_order(int n) {
    if (n < 1) throw std::invalid_argument("root order must be >= 1");
}

void require_same_order(const CycloInt& a, const CycloInt& b) {
    if (a.root_order() != b.root_order())
        throw std::invalid_argument("mismatched root orders: " +
                                    std::to_string(a.root_order()) + " vs " +
                                    std::to_string(b.root_order()));
}

// Canonical residue of p modulo Phi_n, padded to length phi(n).
std::vector<Coeff> reduce_mod_phi(int n, Poly p) {
    const Poly& phi = cyclotomic_memo(n);
    poly_divmod_monic(p, phi);
    p.resize(phi.size() - 1, 0);
    return p;
}

} // namespace

Coeff checked_add(Coeff a, Coeff b) { return ck_add(a, b); }
Coeff checked_mul(Coeff a, Coeff b) { return ck_mul(a, b); }

long long euler_phi(int n) {
    require_order(n);
    long long result = n;
    int m = n;
    for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Coeff> cyclotomic_polynomial(int n) {
    require_order(n);
    return cyclotomic_memo(n);
}

CycloInt CycloInt::zero(int root_order) {
    require_order(root_order);
    return CycloInt(root_order,
                    std::vector<Coeff>(static_cast<std::size_t>(euler_phi(root_order)), 0));
}

CycloInt CycloInt::one(int root_order) {
    return from_integer(root_order, 1);
}

CycloInt CycloInt::from_integer(int root_order, Coeff value) {
    CycloInt r = zero(root_order);
    r.coeffs_[0] = value;
    return r;
}

CycloInt CycloInt::root_power(int root_order, long long k) {
    require_order(root_order);
    const long long n = root_order;
    const long long kk = ((k % n) + n) % n;
    Poly p(static_cast<std::size_t>(kk) + 1, 0);
    p[static_cast<std::size_t>(kk)] = 1;
    return CycloInt(root_order, reduce_mod_phi(root_order, std::move(p)));
}

CycloInt CycloInt::from_power_sums(int root_order,
                                   const std::vector<std::pair<Coeff, long long>>& terms) {
    require_order(root_order);
    const long long n = root_order;
    Poly p(static_cast<std::size_t>(n), 0);
    for (const auto& [c, power] : terms) {
        const long long k = ((power % n) + n) % n;
        p[static_cast<std::size_t>(k)] = ck_add(p[static_cast<std::size_t>(k)], c);
    }
    return CycloInt(root_order, reduce_mod_phi(root_order, std::move(p)));
}

CycloInt CycloInt::from_polynomial(int root_order, const std::vector<Coeff>& coeffs) {
    require_order(root_order);
    const std::size_t n = static_cast<std::size_t>(root_order);
    Poly p(n, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        p[k % n] = ck_add(p[k % n], coeffs[k]);
    }
    return CycloInt(root_order, reduce_mod_phi(root_order, std::move(p)));
}

bool CycloInt::is_zero() const {
    for (Coeff c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_one() const {
    return as_integer() == Coeff{1};
}

std::optional<Coeff> CycloInt::as_integer() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return std::nullopt;
    return coeffs_[0];
}

std::optional<CycloInt> CycloInt::divided_by(Coeff m) const {
    if (m < 1) throw std::invalid_argument("divisor must be >= 1");
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] % m != 0) return std::nullopt;
        out[k] = coeffs_[k] / m;
    }
    return CycloInt(root_order_, std::move(out));
}

CycloInt CycloInt::conjugate() const {
    const std::size_t n = static_cast<std::size_t>(root_order_);
    Poly p(n, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const std::size_t j = (n - k) % n;
        p[j] = ck_add(p[j], coeffs_[k]);
    }
    return CycloInt(root_order_, reduce_mod_phi(root_order_, std::move(p)));
}

CycloInt CycloInt::scaled(Coeff m) const {
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = ck_mul(coeffs_[k], m);
    return CycloInt(root_order_, std::move(out));
}

CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    require_same_order(a, b);
    std::vector<Coeff> out(a.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = ck_add(a.coeffs_[k], b.coeffs_[k]);
    return CycloInt(a.root_order_, std::move(out));
}

CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    require_same_order(a, b);
    std::vector<Coeff> out(a.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = ck_sub(a.coeffs_[k], b.coeffs_[k]);
    return CycloInt(a.root_order_, std::move(out));
}

CycloInt CycloInt::operator-() const {
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = ck_sub(0, coeffs_[k]);
    return CycloInt(root_order_, std::move(out));
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    require_same_order(a, b);
    Poly prod = poly_mul(a.coeffs_, b.coeffs_);
    return CycloInt(a.root_order_, reduce_mod_phi(a.root_order_, std::move(prod)));
}

std::string CycloInt::to_string() const {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << (coeffs_[k] > 0 ? " + " : " - ");
        else if (coeffs_[k] < 0) out << "-";
        const Coeff mag = coeffs_[k] > 0 ? coeffs_[k] : -coeffs_[k];
        if (mag != 1 || k == 0) out << mag;
        if (k >= 1) {
            if (mag != 1) out << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (first) out << "0";
    out << " @ n=" << root_order_ << ")";
    return out.str();
}

} // namespace mckay
