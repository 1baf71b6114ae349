#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <map>
#include <optional>

namespace redop {

// Commutative monomial over indexed variables. Variable 0 is the least
// variable; larger indices have higher precedence. Zero exponents are not
// stored.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(int v, int exponent = 1) {
        Monomial m;
        if (exponent > 0) {
            m.exps_[v] = exponent;
            m.degree_ = exponent;
        }
        return m;
    }

    bool is_one() const { return exps_.empty(); }
    int total_degree() const { return degree_; }
    int exponent(int v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }
    const std::map<int, int>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const {
        Monomial m = *this;
        for (const auto& [v, e] : o.exps_) m.exps_[v] += e;
        m.degree_ += o.degree_;
        return m;
    }

    bool divides(const Monomial& m) const {
        for (const auto& [v, e] : exps_)
            if (m.exponent(v) < e) return false;
        return true;
    }

    // m / d when d divides m.
    static std::optional<Monomial> quotient(const Monomial& m,
                                            const Monomial& d) {
        Monomial q;
        for (const auto& [v, e] : m.exps_) {
            const int r = e - d.exponent(v);
            if (r < 0) return std::nullopt;
            if (r > 0) {
                q.exps_[v] = r;
                q.degree_ += r;
            }
        }
        if (d.degree_ > m.degree_) return std::nullopt;
        return q;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (const auto& [v, e] : b.exps_) {
            int& slot = m.exps_[v];
            if (e > slot) {
                m.degree_ += e - slot;
                slot = e;
            }
        }
        return m;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (const auto& [v, e] : a.exps_) {
            const int f = std::min(e, b.exponent(v));
            if (f > 0) {
                m.exps_[v] = f;
                m.degree_ += f;
            }
        }
        return m;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    // Degree-reverse-lexicographic order: the higher total degree wins; on
    // equal degrees the smaller exponent on the least variable wins, then the
    // next variable up, and so on.
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (degree_ != o.degree_) return degree_ <=> o.degree_;
        auto a = exps_.begin();
        auto b = o.exps_.begin();
        while (a != exps_.end() || b != o.exps_.end()) {
            const int va = a != exps_.end() ? a->first : INT_MAX;
            const int vb = b != o.exps_.end() ? b->first : INT_MAX;
            if (va < vb) {
                return std::strong_ordering::less;  // extra exponent on a lesser variable
            }
            if (vb < va) {
                return std::strong_ordering::greater;
            }
            if (a->second != b->second) return b->second <=> a->second;
            ++a;
            ++b;
        }
        return std::strong_ordering::equal;
    }

private:
    std::map<int, int> exps_;
    int degree_ = 0;
};

}  // namespace redop
