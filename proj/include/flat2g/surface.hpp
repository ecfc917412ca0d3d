#pragma once

// Genus-g surface group presentations, chain-level fundamental 2-cycles in
// the bar complex, the bar boundary, the shuffle 3-cycle for Sigma x S^1,
// and multiplicative pairing of cochains against chains.
//
// Words are letter sequences over the free generators a_1,b_1,...,a_g,b_g
// plus one extra central letter for the circle factor. The word problem in
// pi_1(Sigma_g) is decided by abelianization for g = 1 and by Dehn's
// algorithm for g >= 2 (the standard relator presentation is C'(1/6) there).

#include <array>
#include <functional>
#include <vector>

#include "flat2g/circle.hpp"
#include "flat2g/group.hpp"

namespace flat2g {

// letter +k = generator k-1, letter -k = its inverse
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) { free_reduce(); }

    static Word gen(int index, int exponent = 1);

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    Word mul(const Word& o) const;
    Word inv() const;
    void free_reduce();

    bool operator==(const Word& o) const = default;
    std::string str(int genus) const;
};

class SurfaceGroup {
  public:
    explicit SurfaceGroup(int genus);

    int genus() const { return genus_; }
    int num_gens() const { return 2 * genus_; }          // surface generators
    int circle_gen() const { return 2 * genus_; }        // extra central letter
    Word a(int i) const { return Word::gen(2 * i); }
    Word b(int i) const { return Word::gen(2 * i + 1); }
    Word relator() const;  // prod [a_i, b_i]

    // Word problem in pi_1(Sigma_g) x Z (circle letter is central).
    bool is_trivial(const Word& w) const;
    bool equal(const Word& u, const Word& v) const;

    // exponent-sum vector over surface gens + circle gen (abelianization)
    std::vector<int64_t> abelianized(const Word& w) const;

  private:
    bool surface_trivial(std::vector<int> surface_letters) const;

    int genus_;
    std::vector<std::vector<int>> relator_conjugates_;  // rotations of r, r^-1
};

template <int K>
struct Chain {
    struct Term {
        std::array<Word, K> slots;
        int64_t coeff;
    };
    std::vector<Term> terms;

    void add(const std::array<Word, K>& slots, int64_t c) { terms.push_back({slots, c}); }
    bool empty() const { return terms.empty(); }
};

using Chain1 = Chain<1>;
using Chain2 = Chain<2>;
using Chain3 = Chain<3>;

// Merge equal-in-the-group terms, drop degenerate simplices (any slot trivial
// in pi_1 x Z) and zero coefficients.
Chain1 normalized(const SurfaceGroup& sg, const Chain1& c);
Chain2 normalized(const SurfaceGroup& sg, const Chain2& c);
Chain3 normalized(const SurfaceGroup& sg, const Chain3& c);

// The fan 2-cycle on the relator word: sum_k (prefix_{k-1} (x) letter_k)
// minus one correction term (y^-1 (x) y) per inverse letter occurrence.
// Closed modulo degenerate simplices; for g = 1 it pairs identically with
// a (x) b - b (x) a.
Chain2 fundamental_cycle(int genus);

// The literal genus-1 representative a (x) b - b (x) a.
Chain2 torus_cycle();

// Bar differential, linear extension of d(u,v) = v - uv + u and
// d(u,v,w) = (v,w) - (uv,w) + (u,vw) - (u,v); degenerates dropped.
Chain1 bar_boundary(const SurfaceGroup& sg, const Chain2& c);
Chain2 bar_boundary(const SurfaceGroup& sg, const Chain3& c);

// Shuffle with the circle 1-cycle e: u (x) v maps to
// u (x) v (x) e - u (x) e (x) v + e (x) u (x) v.
Chain3 shuffle_with_circle(const SurfaceGroup& sg, const Chain2& c);

// Evaluation map pi_1(Sigma_g) x Z -> G: images of a_1,b_1,...,a_g,b_g and
// of the circle generator. The relator is verified; if the circle image is
// set it must centralize the generator images (otherwise the map is not a
// homomorphism on pi_1 x Z).
class EvalMap {
  public:
    EvalMap(const FiniteGroup& g, std::vector<Elt> gen_images);
    EvalMap(const FiniteGroup& g, std::vector<Elt> gen_images, Elt circle_image);

    Elt eval(const Word& w) const;
    const FiniteGroup& group() const { return *g_; }

  private:
    const FiniteGroup* g_;
    std::vector<Elt> images_;  // per generator, circle image last when present
    bool has_circle_;
};

// prod over chain terms of f(eval u, eval v)^coeff, exponent arithmetic mod N.
CircleElement pair2(const std::function<int64_t(Elt, Elt)>& f, int64_t modulus, const EvalMap& ev,
                    const Chain2& c);
CircleElement pair3(const std::function<int64_t(Elt, Elt, Elt)>& f, int64_t modulus,
                    const EvalMap& ev, const Chain3& c);

}  // namespace flat2g
