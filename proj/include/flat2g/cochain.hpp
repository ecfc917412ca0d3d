#pragma once

// A-valued group cochains on a finite group with dense tables, the coboundary
// in the Cech-compatible convention
//   d c(g_1,...,g_{n+1}) = c(g_2,..) * prod_i c(..,g_i g_{i+1},..)^{(-1)^i}
//                          * c(g_1,..,g_n)^{(-1)^{n+1}},
// cocycle and normalization predicates, the standard cyclic 3-cocycle family,
// pullbacks, and brute-force H^3 classification for tiny groups.

#include <optional>
#include <vector>

#include "flat2g/circle.hpp"
#include "flat2g/group.hpp"

namespace flat2g {

class Cochain {
  public:
    // All-identity cochain of the given degree.
    Cochain(const FiniteGroup& g, int degree, int64_t modulus);

    int degree() const { return degree_; }
    int64_t modulus() const { return modulus_; }
    int group_order() const { return n_; }

    // exponent access; args.size() == degree
    int64_t at(const std::vector<Elt>& args) const { return vals_[index(args)]; }
    void set(const std::vector<Elt>& args, int64_t e) { vals_[index(args)] = mod_floor(e, modulus_); }
    CircleElement value(const std::vector<Elt>& args) const {
        return CircleElement::make(at(args), modulus_);
    }

    // raw table, mixed-radix order (last argument varies fastest)
    const std::vector<int64_t>& raw() const { return vals_; }
    int64_t& raw_at(size_t i) { return vals_[i]; }

    bool is_normalized() const;
    bool is_identity() const;

    Cochain mul(const Cochain& o) const;  // pointwise product
    Cochain inv() const;

    size_t index(const std::vector<Elt>& args) const;
    std::vector<Elt> args_of(size_t index) const;

  private:
    int n_;
    int degree_;
    int64_t modulus_;
    std::vector<int64_t> vals_;
};

// Coboundary, degrees 0..3 supported (output degree+1).
Cochain coboundary(const FiniteGroup& g, const Cochain& c);

// Degree-3 closedness: a(h,k,l) a(g,hk,l) a(g,h,k) = a(gh,k,l) a(g,h,kl).
// Returns a violating quadruple if not closed.
std::optional<std::vector<Elt>> cocycle_witness(const FiniteGroup& g, const Cochain& alpha);
bool is_cocycle(const FiniteGroup& g, const Cochain& alpha);

// A degree-3 cochain validated normalized and closed.
class ThreeCocycle {
  public:
    ThreeCocycle(const FiniteGroup& g, Cochain c);

    int64_t modulus() const { return c_.modulus(); }
    const Cochain& cochain() const { return c_; }
    int64_t exp(Elt g, Elt h, Elt k) const { return c_.at({g, h, k}); }
    CircleElement value(Elt g, Elt h, Elt k) const { return c_.value({g, h, k}); }
    bool is_trivial() const { return c_.is_identity(); }

    // Pointwise product (same group, same modulus).
    ThreeCocycle mul(const FiniteGroup& g, const ThreeCocycle& o) const;
    ThreeCocycle rescaled(const FiniteGroup& g, int64_t m) const;

  private:
    Cochain c_;
};

// alpha_p(a,b,c) = e^{2 pi i p a floor((b+c)/n) / n} on Z_n, embedded in mu_N.
ThreeCocycle cyclic_cocycle(const FiniteGroup& zn, int64_t p, int64_t ambient_modulus = 0);

// Pullback along a homomorphism phi: G -> H (image table), alpha on H.
ThreeCocycle pullback_cocycle(const FiniteGroup& g, const std::vector<Elt>& phi,
                              const FiniteGroup& h, const ThreeCocycle& alpha);

struct H3Class {
    Cochain representative;
    int64_t class_size;  // number of cocycles in the class
};

// All normalized mu_N-valued 3-cocycles partitioned into classes under shift
// by coboundaries of normalized 2-cochains. Guarded brute force.
std::vector<H3Class> enumerate_h3(const FiniteGroup& g, int64_t modulus,
                                  int64_t budget = int64_t(1) << 24);

// cocycle-spec grammar: "trivial", "cyclic:<n>:<p>", "file:<path>" (lines
// "g,h,k,value" with value "k/N"; unlisted triples default to identity).
// The ambient modulus is lcm(|G|, user_n, file/cyclic modulus).
struct CocycleSpec {
    ThreeCocycle alpha;
    int64_t modulus;
};
CocycleSpec parse_cocycle(const std::string& spec, const FiniteGroup& g, int64_t user_n);

// Same parse without the closedness/normalization gate (for verification
// suites that report the failing quadruple instead of rejecting the input).
struct RawCocycleSpec {
    Cochain table;
    int64_t modulus;
};
RawCocycleSpec parse_cocycle_raw(const std::string& spec, const FiniteGroup& g, int64_t user_n);

}  // namespace flat2g
