#pragma once

// Exact arithmetic in mu_N, the group of N-th roots of unity, written
// multiplicatively. An element is e^{2*pi*i*k/N} stored as the reduced
// numerator k with 0 <= k < N. The modulus N is a shared ambient value
// fixed per computation; mixing moduli is an error, callers rescale via
// rescaled(lcm) first.

#include <string>

#include "flat2g/common.hpp"

namespace flat2g {

class CircleElement {
  public:
    CircleElement() : num_(0), mod_(1) {}

    static CircleElement make(int64_t k, int64_t n) {
        if (n < 1) throw spec_error("CircleElement: modulus must be >= 1");
        return CircleElement(mod_floor(k, n), n);
    }

    static CircleElement identity(int64_t n) { return make(0, n); }

    int64_t numerator() const { return num_; }
    int64_t modulus() const { return mod_; }
    bool is_identity() const { return num_ == 0; }

    CircleElement mul(const CircleElement& o) const {
        require_same(o);
        return CircleElement(mod_floor(num_ + o.num_, mod_), mod_);
    }

    CircleElement inv() const { return CircleElement(mod_floor(-num_, mod_), mod_); }

    CircleElement pow(int64_t e) const {
        return CircleElement(mod_floor(mod_floor(e, mod_) * num_, mod_), mod_);
    }

    // Embed into mu_M for M a multiple of the current modulus.
    CircleElement rescaled(int64_t m) const {
        if (m % mod_ != 0)
            throw spec_error("CircleElement: rescale target " + std::to_string(m) +
                             " is not a multiple of " + std::to_string(mod_));
        return CircleElement(num_ * (m / mod_), m);
    }

    // Order of the element as a root of unity.
    int64_t order() const { return mod_ / std::gcd(num_, mod_); }

    // Serialized form "k/N", bit-exact.
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(mod_); }

    friend bool operator==(const CircleElement& a, const CircleElement& b) {
        return a.num_ == b.num_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const CircleElement& a, const CircleElement& b) { return !(a == b); }
    friend CircleElement operator*(const CircleElement& a, const CircleElement& b) {
        return a.mul(b);
    }

  private:
    CircleElement(int64_t num, int64_t mod) : num_(num), mod_(mod) {}

    void require_same(const CircleElement& o) const {
        if (mod_ != o.mod_)
            throw spec_error("CircleElement: modulus mismatch " + std::to_string(mod_) + " vs " +
                             std::to_string(o.mod_));
    }

    int64_t num_;
    int64_t mod_;
};

// Parse "k/N".
inline CircleElement parse_circle(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw spec_error("circle value must look like k/N: " + s);
    try {
        int64_t k = std::stoll(s.substr(0, slash));
        int64_t n = std::stoll(s.substr(slash + 1));
        return CircleElement::make(k, n);
    } catch (const std::logic_error&) {
        throw spec_error("bad circle value: " + s);
    }
}

}  // namespace flat2g
