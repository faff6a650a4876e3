// rational.hpp - exact rational arithmetic for densities and thresholds.
//
// All quantities in this project are tiny (edge counts up to a few thousand,
// set sizes up to a few hundred), so int64 numerators never get close to
// overflow as long as values stay normalized.
#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tritile {

struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    Rat abs() const { return num < 0 ? Rat(-num, den) : *this; }

    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "3", "3/7" and decimal notation like "0.45".
    static Rat parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            int64_t n = std::stoll(s.substr(0, slash));
            int64_t d = std::stoll(s.substr(slash + 1));
            return Rat(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(std::stoll(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.size() > 15) throw std::invalid_argument("decimal literal too long: " + s);
        bool neg = !ip.empty() && ip[0] == '-';
        int64_t whole = ip.empty() || ip == "-" ? 0 : std::stoll(ip);
        int64_t den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        int64_t frac = fp.empty() ? 0 : std::stoll(fp);
        int64_t n = (neg ? -1 : 1) * ((whole < 0 ? -whole : whole) * den + frac);
        return Rat(n, den);
    }
};

// smallest integer k with k > r (used for strict size thresholds like |X| > eps|A|)
inline int strict_floor_plus_one(const Rat& r) {
    int64_t q = r.num >= 0 ? r.num / r.den : -((-r.num + r.den - 1) / r.den);
    return int(q + 1);
}

// smallest integer k with k >= r
inline int ceil_of(const Rat& r) {
    if (r.num >= 0) return int((r.num + r.den - 1) / r.den);
    return int(-((-r.num) / r.den));
}

}  // namespace tritile
