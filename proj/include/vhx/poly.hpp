#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vhx {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer polynomial in one variable; exponents may be negative.
/// The tag only fixes the printed variable name.
template <class Tag>
class BasicPoly {
public:
    using Map = std::map<int, BigInt>;

    BasicPoly() = default;
    BasicPoly(BigInt c) { add_term(0, std::move(c)); }
    BasicPoly(long long c) { add_term(0, BigInt(c)); }

    static BasicPoly monomial(int e, BigInt c = 1) {
        BasicPoly p;
        p.add_term(e, std::move(c));
        return p;
    }

    static const char* var() { return Tag::name; }

    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    BigInt leading() const { return terms_.empty() ? BigInt(0) : terms_.rbegin()->second; }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    BasicPoly operator-() const {
        BasicPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    BasicPoly scaled(const BigInt& c) const {
        BasicPoly r;
        for (auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }
    BasicPoly shifted(int s) const {
        BasicPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
        return r;
    }

    BasicPoly pow(unsigned k) const {
        BasicPoly r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    // Only meaningful when every exponent is nonnegative.
    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            // Horner over possibly sparse exponents
            auto next = std::next(it);
            int lower = next == terms_.rend() ? 0 : next->first;
            r += it->second;
            for (int i = lower; i < it->first; ++i) r *= x;
        }
        return r;
    }

    bool operator==(const BasicPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BasicPoly& o) const { return !(*this == o); }

    /// Descending exponents, e.g. `2*n^3 - 2*n`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            BigInt c = it->second;
            int e = it->first;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c << "*";
            os << var();
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    /// [[e, c], ...] ascending by exponent; coefficients as decimal strings
    /// when they do not fit in 64 bits.
    std::vector<std::pair<int, BigInt>> term_list() const {
        return {terms_.begin(), terms_.end()};
    }

private:
    Map terms_;
};

struct QVar { static constexpr const char* name = "q"; };
struct NVar { static constexpr const char* name = "n"; };
struct TVar { static constexpr const char* name = "t"; };

using LaurentPoly = BasicPoly<QVar>;
using IntPoly = BasicPoly<NVar>;
using TPoly = BasicPoly<TVar>;

inline bool is_even_function(const IntPoly& p) {
    for (auto& [e, c] : p.terms())
        if (e % 2 != 0) return false;
    return true;
}

inline bool is_odd_function(const IntPoly& p) {
    for (auto& [e, c] : p.terms())
        if (e % 2 == 0) return false;
    return true;
}

/// Lagrange interpolation through (0, y0), (1, y1), ... with exact
/// integer result; throws if the data is not an integer polynomial.
inline IntPoly interpolate_integer(const std::vector<BigInt>& ys) {
    using boost::multiprecision::cpp_rational;
    std::size_t d = ys.size();
    // Newton forward differences
    std::vector<BigInt> diff(ys);
    std::vector<BigInt> lead(d);
    for (std::size_t k = 0; k < d; ++k) {
        lead[k] = diff[0];
        for (std::size_t i = 0; i + 1 < d - k; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    // p(x) = sum lead[k] * C(x, k)
    std::vector<cpp_rational> coef(d, cpp_rational(0));
    std::vector<cpp_rational> binom{cpp_rational(1)};  // coefficients of C(x,k)
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < binom.size(); ++i) coef[i] += binom[i] * cpp_rational(lead[k]);
        // binom <- binom * (x - k) / (k + 1)
        std::vector<cpp_rational> nb(binom.size() + 1, cpp_rational(0));
        for (std::size_t i = 0; i < binom.size(); ++i) {
            nb[i + 1] += binom[i];
            nb[i] -= binom[i] * cpp_rational(static_cast<long long>(k));
        }
        for (auto& x : nb) x /= cpp_rational(static_cast<long long>(k + 1));
        binom = std::move(nb);
    }
    IntPoly p;
    for (std::size_t i = 0; i < d; ++i) {
        if (boost::multiprecision::denominator(coef[i]) != 1)
            throw std::runtime_error("interpolation produced a non-integer coefficient");
        p.add_term(static_cast<int>(i), boost::multiprecision::numerator(coef[i]));
    }
    return p;
}

}  // namespace vhx
