#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "pslab/base.hpp"

namespace pslab {

// An exponent gamma = num/den held exactly.  Membership tests for the set
// {floor(n^{1/gamma})} reduce to integer power comparisons only when gamma is
// rational, so the ratio is the ground truth and the float view is derived.
class gamma_exponent {
public:
    // Reduces a/b; requires 0 < a/b < 1.
    gamma_exponent(u64 num, u64 den) {
        if (num == 0 || den == 0 || num >= den)
            throw std::domain_error("gamma must satisfy 0 < num/den < 1");
        u64 g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    // Accepts the exact form "a/b"; anything else is rejected so float
    // approximations cannot sneak in through the text interface.
    static gamma_exponent parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
            throw std::invalid_argument("gamma must be written as a fraction a/b: " + text);
        u64 a = 0, b = 0;
        std::size_t pos_a = 0, pos_b = 0;
        try {
            a = std::stoull(text.substr(0, slash), &pos_a);
            b = std::stoull(text.substr(slash + 1), &pos_b);
        } catch (const std::exception&) {
            throw std::invalid_argument("gamma must be written as a fraction a/b: " + text);
        }
        if (pos_a != slash || pos_b != text.size() - slash - 1)
            throw std::invalid_argument("gamma must be written as a fraction a/b: " + text);
        if (b == 0 || a == 0 || a >= b)
            throw std::domain_error("gamma must satisfy 0 < a/b < 1: " + text);
        if (b > 1000000)
            throw std::domain_error("gamma denominator capped at 10^6: " + text);
        return gamma_exponent(a, b);
    }

    u64 num() const { return num_; }
    u64 den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    ld value_ld() const { return static_cast<ld>(num_) / static_cast<ld>(den_); }

    bool operator==(const gamma_exponent& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Exact comparison via cross multiplication; fits in 128 bits because
    // parse caps denominators.
    bool operator<(const gamma_exponent& o) const {
        return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
    }

    // gamma > 1/2, exactly.
    bool above_half() const { return 2 * num_ > den_; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    u64 num_, den_;
};

// Ordered pair 1/2 < gamma2 < gamma1 < 1, compared exactly.  theorem_range()
// additionally decides 21/11 < gamma1 + gamma2 < 2, which is the regime where
// the intersection count follows the integral main term.
class gamma_pair {
public:
    gamma_pair(gamma_exponent g1, gamma_exponent g2) : g1_(g1), g2_(g2) {
        if (!(g2_ < g1_))
            throw std::invalid_argument("require gamma2 < gamma1 (exact rational comparison)");
        if (!g2_.above_half())
            throw std::domain_error("require gamma2 > 1/2");
    }

    const gamma_exponent& g1() const { return g1_; }
    const gamma_exponent& g2() const { return g2_; }

    double sum() const { return g1_.value() + g2_.value(); }
    ld sum_ld() const { return g1_.value_ld() + g2_.value_ld(); }

    // 21/11 < g1 + g2 < 2 by cross multiplication.  g1 + g2 < 2 already holds
    // since both are below 1; the lower bound is the real constraint.
    bool theorem_range() const {
        i128 num = static_cast<i128>(g1_.num()) * g2_.den() + static_cast<i128>(g2_.num()) * g1_.den();
        i128 den = static_cast<i128>(g1_.den()) * g2_.den();
        return num * 11 > den * 21;
    }

private:
    gamma_exponent g1_, g2_;
};

}  // namespace pslab
