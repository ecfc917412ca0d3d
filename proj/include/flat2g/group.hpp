#pragma once

// Finite groups as validated Cayley tables, with the structural queries the
// cohomological formulas consume: conjugation, centralizers, commutators,
// conjugacy classes. Element 0 is always the identity.

#include <set>
#include <string>
#include <vector>

#include "flat2g/common.hpp"

namespace flat2g {

using Elt = int;  // index into a FiniteGroup, 0 = identity

class FiniteGroup {
  public:
    // Builds and validates. Throws spec_error on any axiom failure.
    FiniteGroup(std::vector<std::vector<Elt>> table, std::vector<std::string> names,
                std::string spec_name = "");

    int order() const { return n_; }
    const std::string& spec_name() const { return spec_name_; }

    Elt mul(Elt a, Elt b) const { return table_[a][b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    Elt conj(Elt c, Elt g) const { return mul(mul(c, g), inv_[c]); }  // c g c^-1
    // [a,b] = a b a^-1 b^-1
    Elt commutator(Elt a, Elt b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
    Elt pow(Elt a, int64_t e) const;
    int element_order(Elt a) const;
    bool commute(Elt a, Elt b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;

    const std::string& name(Elt a) const { return names_[a]; }
    // Element by name; also accepts a decimal index. Throws spec_error.
    Elt element_by_name(const std::string& s) const;

    std::vector<Elt> centralizer(const std::vector<Elt>& s) const;
    std::vector<std::vector<Elt>> conjugacy_classes() const;

    // All homomorphisms into the target group (by image tables), brute force.
    std::vector<std::vector<Elt>> homs_to(const FiniteGroup& target) const;

  private:
    void validate();

    int n_;
    std::vector<std::vector<Elt>> table_;
    std::vector<Elt> inv_;
    std::vector<std::string> names_;
    std::string spec_name_;
};

// group-spec grammar: "Z<n>", products "Z<n>xZ<m>" (repeatable), "D<n>"
// (dihedral, order 2n), "S<n>" (n <= 5), "Q8", "table:<path>" (CSV Cayley
// table, row-major indices, element 0 = identity).
FiniteGroup build_group(const std::string& spec);

}  // namespace flat2g
