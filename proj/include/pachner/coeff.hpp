#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace pachner {

// Exact integer type for all coefficient and matrix arithmetic.  No fixed
// width anywhere, so no overflow assumption is ever needed.
using Int = boost::multiprecision::cpp_int;

/// Coefficient domain for chains, cochains and homology: Z or Z/m (m >= 2).
/// Modular elements are kept as canonical residues in [0, m).
class CoefficientGroup {
public:
    static CoefficientGroup integers() { return CoefficientGroup(Int(0)); }

    static CoefficientGroup modular(Int m) {
        if (m < 2)
            throw std::invalid_argument("CoefficientGroup: modulus must be at least 2");
        return CoefficientGroup(std::move(m));
    }

    bool is_modular() const { return modulus_ != 0; }
    const Int& modulus() const { return modulus_; }

    /// Canonical representative of x.
    Int reduce(Int x) const {
        if (!is_modular())
            return x;
        Int r = x % modulus_;
        if (r < 0)
            r += modulus_;
        return r;
    }

    std::string name() const {
        return is_modular() ? "Z/" + modulus_.str() : "Z";
    }

    friend bool operator==(const CoefficientGroup& a, const CoefficientGroup& b) {
        return a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const CoefficientGroup& a, const CoefficientGroup& b) {
        return !(a == b);
    }

private:
    explicit CoefficientGroup(Int m) : modulus_(std::move(m)) {}

    Int modulus_;  // 0 encodes Z
};

}  // namespace pachner
