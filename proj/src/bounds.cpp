#include "sodd/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sodd {

namespace bmp = boost::multiprecision;

Magnitude Magnitude::from_log2(long double l) {
    Magnitude m;
    m.huge_ = true;
    m.log2_ = l;
    return m;
}

Magnitude Magnitude::normalize(Int v) {
    if (v == 0 || bmp::msb(v) < kMaxBits) {
        Magnitude m;
        m.exact_ = std::move(v);
        return m;
    }
    Magnitude m;
    m.huge_ = true;
    unsigned top = bmp::msb(v);
    Int head = v >> (top - 60);
    m.log2_ = static_cast<long double>(top - 60) + std::log2(static_cast<long double>(head.convert_to<std::uint64_t>()));
    return m;
}

long double Magnitude::log2() const {
    if (huge_) return log2_;
    if (exact_ == 0) return -std::numeric_limits<long double>::infinity();
    unsigned top = bmp::msb(exact_);
    if (top < 62) return std::log2(static_cast<long double>(exact_.convert_to<std::uint64_t>()));
    Int head = exact_ >> (top - 60);
    return static_cast<long double>(top - 60) + std::log2(static_cast<long double>(head.convert_to<std::uint64_t>()));
}

std::string Magnitude::str() const {
    std::ostringstream os;
    if (!huge_ && bmp::msb(exact_ == 0 ? Int(1) : exact_) < 200) {
        os << exact_;
        return os.str();
    }
    const long double l = log2();
    if (std::isinf(l))
        os << "2^inf";
    else
        os << "2^" << static_cast<double>(l);
    return os.str();
}

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
    if (!a.huge_ && !b.huge_) return Magnitude::normalize(a.exact_ + b.exact_);
    const long double x = a.log2(), y = b.log2();
    const long double hi = std::max(x, y), lo = std::min(x, y);
    if (std::isinf(hi)) return Magnitude::from_log2(hi);
    return Magnitude::from_log2(hi + std::log2(1.0L + std::exp2(lo - hi)));
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
    if (!a.huge_ && !b.huge_) {
        if (a.exact_ == 0 || b.exact_ == 0) return Magnitude(0);
        if (bmp::msb(a.exact_) + bmp::msb(b.exact_) < Magnitude::kMaxBits) return Magnitude::normalize(a.exact_ * b.exact_);
    }
    if ((!a.huge_ && a.exact_ == 0) || (!b.huge_ && b.exact_ == 0)) return Magnitude(0);
    return Magnitude::from_log2(a.log2() + b.log2());
}

Magnitude Magnitude::pow2(const Magnitude& e) {
    if (!e.huge_ && e.exact_ < kMaxBits) {
        Int one = 1;
        return normalize(one << e.exact_.convert_to<unsigned>());
    }
    if (!e.huge_) return from_log2(static_cast<long double>(e.exact_.convert_to<long double>()));
    // 2^(2^l) with l = log2 of the exponent
    return from_log2(std::exp2(e.log2_));
}

bool Magnitude::at_least(std::int64_t count) const {
    if (huge_) return true;
    return Int(count) <= exact_;
}

Magnitude ColorBounds::f1(int k, int l, int m) {
    l = std::max(l, 1);
    auto key = std::make_tuple(k, l, m);
    if (auto it = f1_.find(key); it != f1_.end()) return it->second;
    Magnitude r;
    if (k == 0) {
        r = Magnitude::pow2(Magnitude(m + 1));
    } else {
        const int mm = m + k * l;
        Magnitude inner = f1(k - 1, l, mm);
        Magnitude types = Magnitude::pow2(Magnitude(mm) * inner);
        r = Magnitude(2) * (Magnitude(3) * inner * types * g1(k - 1) + Magnitude(k));
    }
    f1_.emplace(key, r);
    return r;
}

Magnitude ColorBounds::g1(int k) { return f1(k, 1, 1); }

Magnitude ColorBounds::f2(int k, int m) {
    auto key = std::make_pair(k, m);
    if (auto it = f2_.find(key); it != f2_.end()) return it->second;
    Magnitude a = f1(k, 3, m);
    Magnitude r = Magnitude(6) * a * Magnitude::pow2(Magnitude(m) * a);
    f2_.emplace(key, r);
    return r;
}

Magnitude ColorBounds::f3(int k, int t, int m) {
    auto key = std::make_tuple(k, t, m);
    if (auto it = f3_.find(key); it != f3_.end()) return it->second;
    Magnitude r = f2(k, m + t) + Magnitude(t);
    f3_.emplace(key, r);
    return r;
}

Magnitude ColorBounds::f4(int k, int t, int m, int w) {
    auto key = std::make_tuple(k, t, m, w);
    if (auto it = f4_.find(key); it != f4_.end()) return it->second;
    Magnitude r;
    if (w == 0) {
        Magnitude a = f3(k, t, m);
        r = a * Magnitude::pow2(Magnitude(m) * a) * f1(0, 0, m);
    } else {
        Magnitude inner = f4(k, t, m + w, w - 1);
        Magnitude layer = f4(k, t, 0, w - 1);
        Magnitude types = Magnitude::pow2((Magnitude(m) + layer) * inner);
        // one extra clique color for components without a parent clique
        r = Magnitude(2) * (Magnitude(3) * inner * types * (g4(k, t, w - 1) + Magnitude(1)) + f4(k, t, m, 0));
    }
    f4_.emplace(key, r);
    return r;
}

Magnitude ColorBounds::g4(int k, int t, int w) {
    return Magnitude::pow2(Magnitude(k + 2 + t)) * f4(k, t, 1, w);
}

ColorBounds& bounds() {
    static ColorBounds b;
    return b;
}

}  // namespace sodd
