#include "flat2g/surface.hpp"

#include <algorithm>

namespace flat2g {

Word Word::gen(int index, int exponent) {
    Word w;
    int letter = index + 1;
    if (exponent < 0) letter = -letter;
    int k = exponent < 0 ? -exponent : exponent;
    w.letters.assign(k, letter);
    return w;
}

void Word::free_reduce() {
    std::vector<int> out;
    for (int l : letters) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    letters = std::move(out);
}

Word Word::mul(const Word& o) const {
    Word w;
    w.letters = letters;
    for (int l : o.letters) {
        if (!w.letters.empty() && w.letters.back() == -l) w.letters.pop_back();
        else w.letters.push_back(l);
    }
    return w;
}

Word Word::inv() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

std::string Word::str(int genus) const {
    if (letters.empty()) return "1";
    std::string out;
    for (int l : letters) {
        int idx = (l > 0 ? l : -l) - 1;
        std::string nm;
        if (idx == 2 * genus) nm = "e";
        else nm = (idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
        out += nm;
        if (l < 0) out += "^-1 ";
        else out += " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

SurfaceGroup::SurfaceGroup(int genus) : genus_(genus) {
    if (genus < 1) throw spec_error("surface: genus must be >= 1");
    if (genus_ >= 2) {
        Word r = relator();
        auto rot_all = [&](const Word& w) {
            for (size_t s = 0; s < w.letters.size(); ++s) {
                std::vector<int> rot;
                rot.insert(rot.end(), w.letters.begin() + s, w.letters.end());
                rot.insert(rot.end(), w.letters.begin(), w.letters.begin() + s);
                relator_conjugates_.push_back(std::move(rot));
            }
        };
        rot_all(r);
        rot_all(r.inv());
    }
}

Word SurfaceGroup::relator() const {
    Word r;
    for (int i = 0; i < genus_; ++i)
        r = r.mul(a(i)).mul(b(i)).mul(a(i).inv()).mul(b(i).inv());
    return r;
}

std::vector<int64_t> SurfaceGroup::abelianized(const Word& w) const {
    std::vector<int64_t> v(2 * genus_ + 1, 0);
    for (int l : w.letters) {
        int idx = (l > 0 ? l : -l) - 1;
        v[idx] += l > 0 ? 1 : -1;
    }
    return v;
}

bool SurfaceGroup::surface_trivial(std::vector<int> w) const {
    // free reduce
    auto reduce = [](std::vector<int>& v) {
        std::vector<int> out;
        for (int l : v) {
            if (!out.empty() && out.back() == -l) out.pop_back();
            else out.push_back(l);
        }
        v = std::move(out);
    };
    reduce(w);
    if (genus_ == 1) {
        int64_t ea = 0, eb = 0;
        for (int l : w) {
            int idx = (l > 0 ? l : -l) - 1;
            (idx == 0 ? ea : eb) += l > 0 ? 1 : -1;
        }
        return ea == 0 && eb == 0;
    }
    // Dehn's algorithm: replace any subword that is more than half of a
    // relator conjugate by the inverse of its complement.
    const size_t rl = 4 * static_cast<size_t>(genus_);
    while (!w.empty()) {
        bool replaced = false;
        for (size_t i = 0; i < w.size() && !replaced; ++i) {
            for (const auto& c : relator_conjugates_) {
                size_t match = 0;
                while (match < c.size() && i + match < w.size() && w[i + match] == c[match])
                    ++match;
                if (match * 2 > rl) {
                    std::vector<int> next(w.begin(), w.begin() + i);
                    for (size_t j = c.size(); j > match; --j) next.push_back(-c[j - 1]);
                    next.insert(next.end(), w.begin() + i + match, w.end());
                    reduce(next);
                    w = std::move(next);
                    replaced = true;
                    break;
                }
            }
        }
        if (!replaced) return false;  // Dehn-reduced and nonempty
    }
    return true;
}

bool SurfaceGroup::is_trivial(const Word& w) const {
    std::vector<int> surf;
    int64_t circle = 0;
    int cl = circle_gen() + 1;
    for (int l : w.letters) {
        if (l == cl) ++circle;
        else if (l == -cl) --circle;
        else surf.push_back(l);
    }
    if (circle != 0) return false;
    return surface_trivial(std::move(surf));
}

bool SurfaceGroup::equal(const Word& u, const Word& v) const {
    if (u == v) return true;
    if (abelianized(u) != abelianized(v)) return false;
    return is_trivial(u.mul(v.inv()));
}

namespace {

template <int K>
Chain<K> normalize_impl(const SurfaceGroup& sg, const Chain<K>& c) {
    Chain<K> out;
    for (const auto& term : c.terms) {
        bool degenerate = false;
        for (const auto& w : term.slots)
            if (sg.is_trivial(w)) {
                degenerate = true;
                break;
            }
        if (degenerate || term.coeff == 0) continue;
        bool merged = false;
        for (auto& have : out.terms) {
            bool same = true;
            for (int i = 0; i < K && same; ++i) same = sg.equal(have.slots[i], term.slots[i]);
            if (same) {
                have.coeff += term.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(term);
    }
    std::erase_if(out.terms, [](const auto& t) { return t.coeff == 0; });
    return out;
}

}  // namespace

Chain1 normalized(const SurfaceGroup& sg, const Chain1& c) { return normalize_impl<1>(sg, c); }
Chain2 normalized(const SurfaceGroup& sg, const Chain2& c) { return normalize_impl<2>(sg, c); }
Chain3 normalized(const SurfaceGroup& sg, const Chain3& c) { return normalize_impl<3>(sg, c); }

Chain2 fundamental_cycle(int genus) {
    if (genus < 1) throw spec_error("fundamental_cycle: genus must be >= 1 (sphere cycle is 0)");
    SurfaceGroup sg(genus);
    Word r = sg.relator();
    Chain2 c;
    Word prefix;
    for (int l : r.letters) {
        Word letter(std::vector<int>{l});
        if (!prefix.empty()) c.add({prefix, letter}, 1);
        if (l < 0) c.add({letter, letter.inv()}, -1);
        prefix = prefix.mul(letter);
    }
    return normalized(sg, c);
}

Chain2 torus_cycle() {
    SurfaceGroup sg(1);
    Chain2 c;
    c.add({sg.a(0), sg.b(0)}, 1);
    c.add({sg.b(0), sg.a(0)}, -1);
    return c;
}

Chain1 bar_boundary(const SurfaceGroup& sg, const Chain2& c) {
    Chain1 out;
    for (const auto& t : c.terms) {
        const Word &u = t.slots[0], &v = t.slots[1];
        out.add({v}, t.coeff);
        out.add({u.mul(v)}, -t.coeff);
        out.add({u}, t.coeff);
    }
    return normalized(sg, out);
}

Chain2 bar_boundary(const SurfaceGroup& sg, const Chain3& c) {
    Chain2 out;
    for (const auto& t : c.terms) {
        const Word &u = t.slots[0], &v = t.slots[1], &w = t.slots[2];
        out.add({v, w}, t.coeff);
        out.add({u.mul(v), w}, -t.coeff);
        out.add({u, v.mul(w)}, t.coeff);
        out.add({u, v}, -t.coeff);
    }
    return normalized(sg, out);
}

Chain3 shuffle_with_circle(const SurfaceGroup& sg, const Chain2& c) {
    Word e = Word::gen(sg.circle_gen());
    Chain3 out;
    for (const auto& t : c.terms) {
        const Word &u = t.slots[0], &v = t.slots[1];
        out.add({u, v, e}, t.coeff);
        out.add({u, e, v}, -t.coeff);
        out.add({e, u, v}, t.coeff);
    }
    return normalized(sg, out);
}

EvalMap::EvalMap(const FiniteGroup& g, std::vector<Elt> gen_images)
    : g_(&g), images_(std::move(gen_images)), has_circle_(false) {
    if (images_.size() % 2 != 0) throw spec_error("EvalMap: need images for a_i, b_i pairs");
    Elt rel = 0;
    for (size_t i = 0; i + 1 < images_.size(); i += 2)
        rel = g.mul(rel, g.commutator(images_[i], images_[i + 1]));
    if (rel != 0) throw spec_error("EvalMap: images do not satisfy the surface relator");
}

EvalMap::EvalMap(const FiniteGroup& g, std::vector<Elt> gen_images, Elt circle_image)
    : EvalMap(g, gen_images) {
    for (Elt im : images_)
        if (!g.commute(im, circle_image))
            throw spec_error("EvalMap: circle image does not centralize the holonomy");
    images_.push_back(circle_image);
    has_circle_ = true;
}

Elt EvalMap::eval(const Word& w) const {
    Elt acc = 0;
    for (int l : w.letters) {
        int idx = (l > 0 ? l : -l) - 1;
        if (idx >= static_cast<int>(images_.size()))
            throw spec_error("EvalMap: word uses a generator without an image");
        Elt im = images_[idx];
        acc = g_->mul(acc, l > 0 ? im : g_->inv(im));
    }
    return acc;
}

CircleElement pair2(const std::function<int64_t(Elt, Elt)>& f, int64_t modulus, const EvalMap& ev,
                    const Chain2& c) {
    int64_t acc = 0;
    for (const auto& t : c.terms)
        acc += t.coeff * f(ev.eval(t.slots[0]), ev.eval(t.slots[1]));
    return CircleElement::make(acc, modulus);
}

CircleElement pair3(const std::function<int64_t(Elt, Elt, Elt)>& f, int64_t modulus,
                    const EvalMap& ev, const Chain3& c) {
    int64_t acc = 0;
    for (const auto& t : c.terms)
        acc += t.coeff * f(ev.eval(t.slots[0]), ev.eval(t.slots[1]), ev.eval(t.slots[2]));
    return CircleElement::make(acc, modulus);
}

}  // namespace flat2g
