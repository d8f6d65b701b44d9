#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace sodd {

// Nonnegative integer that is exact while it fits in kMaxBits bits and is
// otherwise kept as log2 only (possibly +inf). Every machine-size count is
// below a huge magnitude.
class Magnitude {
public:
    static constexpr unsigned kMaxBits = 1u << 16;
    using Int = boost::multiprecision::cpp_int;

    Magnitude(std::int64_t v = 0) : exact_(v) {}
    static Magnitude from_log2(long double l);

    bool is_exact() const { return !huge_; }
    const Int& exact() const { return exact_; }
    long double log2() const;
    std::string str() const;

    friend Magnitude operator+(const Magnitude& a, const Magnitude& b);
    friend Magnitude operator*(const Magnitude& a, const Magnitude& b);
    static Magnitude pow2(const Magnitude& e);

    bool at_least(std::int64_t count) const;  // count <= *this

private:
    static Magnitude normalize(Int v);
    bool huge_ = false;
    Int exact_;
    long double log2_ = 0;
};

// Memoized color bounds of the constructive algorithms. Helpers pad l = 0 to 1.
class ColorBounds {
public:
    Magnitude f1(int k, int l, int m);
    Magnitude g1(int k);
    Magnitude f2(int k, int m);
    Magnitude f3(int k, int t, int m);
    Magnitude f4(int k, int t, int m, int w);
    Magnitude g4(int k, int t, int w);

private:
    std::map<std::tuple<int, int, int>, Magnitude> f1_, f3_;
    std::map<std::pair<int, int>, Magnitude> f2_;
    std::map<std::tuple<int, int, int, int>, Magnitude> f4_;
};

ColorBounds& bounds();

}  // namespace sodd
