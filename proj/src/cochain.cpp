#include "flat2g/cochain.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace flat2g {

Cochain::Cochain(const FiniteGroup& g, int degree, int64_t modulus)
    : n_(g.order()), degree_(degree), modulus_(modulus) {
    if (degree < 0 || degree > 4) throw spec_error("cochain degree out of range");
    if (modulus < 1) throw spec_error("cochain modulus must be >= 1");
    size_t sz = 1;
    for (int i = 0; i < degree; ++i) sz *= static_cast<size_t>(n_);
    vals_.assign(sz, 0);
}

size_t Cochain::index(const std::vector<Elt>& args) const {
    size_t ix = 0;
    for (Elt a : args) ix = ix * n_ + static_cast<size_t>(a);
    return ix;
}

std::vector<Elt> Cochain::args_of(size_t index) const {
    std::vector<Elt> args(degree_);
    for (int i = degree_ - 1; i >= 0; --i) {
        args[i] = static_cast<Elt>(index % n_);
        index /= n_;
    }
    return args;
}

bool Cochain::is_normalized() const {
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (vals_[i] == 0) continue;
        auto args = args_of(i);
        if (std::find(args.begin(), args.end(), 0) != args.end()) return false;
    }
    return true;
}

bool Cochain::is_identity() const {
    return std::all_of(vals_.begin(), vals_.end(), [](int64_t v) { return v == 0; });
}

Cochain Cochain::mul(const Cochain& o) const {
    if (degree_ != o.degree_ || modulus_ != o.modulus_ || n_ != o.n_)
        throw spec_error("cochain product: shape mismatch");
    Cochain out = *this;
    for (size_t i = 0; i < vals_.size(); ++i)
        out.vals_[i] = mod_floor(vals_[i] + o.vals_[i], modulus_);
    return out;
}

Cochain Cochain::inv() const {
    Cochain out = *this;
    for (auto& v : out.vals_) v = mod_floor(-v, modulus_);
    return out;
}

Cochain coboundary(const FiniteGroup& g, const Cochain& c) {
    int d = c.degree();
    if (d > 3) throw spec_error("coboundary: degree too high");
    Cochain out(g, d + 1, c.modulus());
    std::vector<Elt> args(d + 1), sub(d);
    size_t total = 1;
    for (int i = 0; i <= d; ++i) total *= static_cast<size_t>(g.order());
    for (size_t ix = 0; ix < total; ++ix) {
        args = out.args_of(ix);
        int64_t acc = 0;
        // face 0: drop first argument
        for (int i = 0; i < d; ++i) sub[i] = args[i + 1];
        acc += c.at(sub);
        // faces 1..d: merge args[i-1], args[i]
        int sign = -1;
        for (int i = 1; i <= d; ++i) {
            int k = 0;
            for (int j = 0; j <= d; ++j) {
                if (j == i) continue;
                sub[k++] = (j == i - 1) ? g.mul(args[i - 1], args[i]) : args[j];
            }
            acc += sign * c.at(sub);
            sign = -sign;
        }
        // face d+1: drop last argument
        for (int i = 0; i < d; ++i) sub[i] = args[i];
        acc += sign * c.at(sub);
        out.set(args, acc);
    }
    return out;
}

std::optional<std::vector<Elt>> cocycle_witness(const FiniteGroup& g, const Cochain& alpha) {
    if (alpha.degree() != 3) throw spec_error("cocycle_witness: degree-3 cochain expected");
    int n = g.order();
    int64_t N = alpha.modulus();
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                for (Elt d = 0; d < n; ++d) {
                    int64_t lhs = alpha.at({b, c, d}) + alpha.at({a, g.mul(b, c), d}) +
                                  alpha.at({a, b, c});
                    int64_t rhs = alpha.at({g.mul(a, b), c, d}) + alpha.at({a, b, g.mul(c, d)});
                    if (mod_floor(lhs - rhs, N) != 0) return std::vector<Elt>{a, b, c, d};
                }
    return std::nullopt;
}

bool is_cocycle(const FiniteGroup& g, const Cochain& alpha) {
    return !cocycle_witness(g, alpha).has_value();
}

ThreeCocycle::ThreeCocycle(const FiniteGroup& g, Cochain c) : c_(std::move(c)) {
    if (c_.degree() != 3) throw spec_error("3-cocycle: degree-3 cochain expected");
    if (!c_.is_normalized())
        throw spec_error("3-cocycle: not normalized (identity-argument value != 1)");
    if (auto w = cocycle_witness(g, c_)) {
        throw spec_error("3-cocycle: closedness fails at (" + g.name((*w)[0]) + "," +
                         g.name((*w)[1]) + "," + g.name((*w)[2]) + "," + g.name((*w)[3]) + ")");
    }
}

ThreeCocycle ThreeCocycle::mul(const FiniteGroup& g, const ThreeCocycle& o) const {
    return ThreeCocycle(g, c_.mul(o.c_));
}

ThreeCocycle ThreeCocycle::rescaled(const FiniteGroup& g, int64_t m) const {
    if (m % modulus() != 0) throw spec_error("cocycle rescale: bad target modulus");
    int64_t f = m / modulus();
    Cochain c(g, 3, m);
    for (size_t i = 0; i < c_.raw().size(); ++i) c.raw_at(i) = c_.raw()[i] * f;
    return ThreeCocycle(g, std::move(c));
}

ThreeCocycle cyclic_cocycle(const FiniteGroup& zn, int64_t p, int64_t ambient) {
    int n = zn.order();
    // the formula lives on residues: require the group to actually be Z_n
    // with element a = index a (i.e. index addition mod n)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (zn.mul(a, b) != (a + b) % n)
                throw spec_error("cyclic_cocycle: group is not Z" + std::to_string(n) +
                                 " in residue form");
    if (ambient == 0) ambient = n;
    if (ambient % n != 0) throw spec_error("cyclic_cocycle: ambient modulus not a multiple of n");
    int64_t f = ambient / n;
    Cochain c(zn, 3, ambient);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt cc = 0; cc < n; ++cc)
                c.set({a, b, cc}, mod_floor(p * a * ((b + cc) / n), n) * f);
    return ThreeCocycle(zn, std::move(c));
}

ThreeCocycle pullback_cocycle(const FiniteGroup& g, const std::vector<Elt>& phi,
                              const FiniteGroup& h, const ThreeCocycle& alpha) {
    if (static_cast<int>(phi.size()) != g.order()) throw spec_error("pullback: phi size mismatch");
    for (Elt a = 0; a < g.order(); ++a)
        for (Elt b = 0; b < g.order(); ++b)
            if (h.mul(phi[a], phi[b]) != phi[g.mul(a, b)])
                throw spec_error("pullback: phi is not a homomorphism");
    Cochain c(g, 3, alpha.modulus());
    for (Elt a = 0; a < g.order(); ++a)
        for (Elt b = 0; b < g.order(); ++b)
            for (Elt cc = 0; cc < g.order(); ++cc)
                c.set({a, b, cc}, alpha.exp(phi[a], phi[b], phi[cc]));
    return ThreeCocycle(g, std::move(c));
}

namespace {

// enumerate values over the free (no-identity-argument) positions
struct FreeTuples {
    std::vector<size_t> positions;  // indices into the dense table
    explicit FreeTuples(const Cochain& shape) {
        size_t total = shape.raw().size();
        for (size_t i = 0; i < total; ++i) {
            auto args = shape.args_of(i);
            if (std::find(args.begin(), args.end(), 0) == args.end()) positions.push_back(i);
        }
    }
};

}  // namespace

std::vector<H3Class> enumerate_h3(const FiniteGroup& g, int64_t modulus, int64_t budget) {
    Cochain shape3(g, 3, modulus);
    Cochain shape2(g, 2, modulus);
    FreeTuples free3(shape3), free2(shape2);
    // candidate count N^free3, coboundary count N^free2
    double cand = 1, cobs = 1;
    for (size_t i = 0; i < free3.positions.size(); ++i) cand *= static_cast<double>(modulus);
    for (size_t i = 0; i < free2.positions.size(); ++i) cobs *= static_cast<double>(modulus);
    if (cand > static_cast<double>(budget) || cobs > static_cast<double>(budget))
        throw budget_error("enumerate_h3: search space exceeds budget");

    // all normalized closed 3-cochains
    std::vector<std::vector<int64_t>> cocycles;
    std::vector<int64_t> assign(free3.positions.size(), 0);
    auto emit = [&]() {
        Cochain c = shape3;
        for (size_t i = 0; i < assign.size(); ++i) c.raw_at(free3.positions[i]) = assign[i];
        if (is_cocycle(g, c)) cocycles.push_back(c.raw());
    };
    size_t total = static_cast<size_t>(cand);
    for (size_t code = 0; code < total; ++code) {
        size_t x = code;
        for (size_t i = 0; i < assign.size(); ++i) {
            assign[i] = static_cast<int64_t>(x % modulus);
            x /= modulus;
        }
        emit();
    }

    // coboundaries of normalized 2-cochains
    std::vector<std::vector<int64_t>> shifts;
    {
        std::vector<int64_t> a2(free2.positions.size(), 0);
        size_t tot2 = static_cast<size_t>(cobs);
        std::set<std::vector<int64_t>> seen;
        for (size_t code = 0; code < tot2; ++code) {
            size_t x = code;
            Cochain beta = shape2;
            for (size_t i = 0; i < a2.size(); ++i) {
                beta.raw_at(free2.positions[i]) = static_cast<int64_t>(x % modulus);
                x /= modulus;
            }
            auto db = coboundary(g, beta).raw();
            if (seen.insert(db).second) shifts.push_back(db);
        }
    }

    // partition by min-representative under shifts
    std::map<std::vector<int64_t>, int64_t> classes;
    for (const auto& c : cocycles) {
        std::vector<int64_t> best = c;
        std::vector<int64_t> cur(c.size());
        for (const auto& s : shifts) {
            for (size_t i = 0; i < c.size(); ++i) cur[i] = mod_floor(c[i] - s[i], modulus);
            if (cur < best) best = cur;
        }
        classes[best]++;
    }
    std::vector<H3Class> out;
    for (const auto& [rep, size] : classes) {
        Cochain c = shape3;
        for (size_t i = 0; i < rep.size(); ++i) c.raw_at(i) = rep[i];
        out.push_back(H3Class{std::move(c), size});
    }
    return out;
}

RawCocycleSpec parse_cocycle_raw(const std::string& spec, const FiniteGroup& g, int64_t user_n) {
    if (user_n < 1) throw spec_error("modulus must be >= 1");
    int64_t base = lcm64(g.order(), user_n);
    if (spec == "trivial") {
        return RawCocycleSpec{Cochain(g, 3, base), base};
    }
    if (spec.rfind("cyclic:", 0) == 0) {
        auto rest = spec.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw spec_error("cyclic cocycle spec needs cyclic:<n>:<p>");
        int64_t n, p;
        try {
            n = std::stoll(rest.substr(0, colon));
            p = std::stoll(rest.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw spec_error("bad cyclic cocycle spec: " + spec);
        }
        if (n != g.order())
            throw spec_error("cyclic:<n>:<p> requires |G| = n, got |G| = " +
                             std::to_string(g.order()));
        int64_t ambient = lcm64(base, n);
        return RawCocycleSpec{cyclic_cocycle(g, p, ambient).cochain(), ambient};
    }
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw spec_error("cannot open cocycle file: " + path);
        struct Entry {
            Elt a, b, c;
            CircleElement v;
        };
        std::vector<Entry> entries;
        int64_t ambient = base;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::stringstream ss(line);
            std::string ga, gb, gc, val;
            if (!std::getline(ss, ga, ',') || !std::getline(ss, gb, ',') ||
                !std::getline(ss, gc, ',') || !std::getline(ss, val))
                throw spec_error("bad cocycle line: " + line);
            CircleElement v = parse_circle(val);
            ambient = lcm64(ambient, v.modulus());
            entries.push_back({g.element_by_name(ga), g.element_by_name(gb),
                               g.element_by_name(gc), v});
        }
        Cochain c(g, 3, ambient);
        for (const auto& e : entries)
            c.set({e.a, e.b, e.c}, e.v.rescaled(ambient).numerator());
        return RawCocycleSpec{std::move(c), ambient};
    }
    throw spec_error("unrecognized cocycle spec: " + spec);
}

CocycleSpec parse_cocycle(const std::string& spec, const FiniteGroup& g, int64_t user_n) {
    RawCocycleSpec raw = parse_cocycle_raw(spec, g, user_n);
    return CocycleSpec{ThreeCocycle(g, std::move(raw.table)), raw.modulus};
}

}  // namespace flat2g
