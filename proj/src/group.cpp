#include "flat2g/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace flat2g {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elt>> table, std::vector<std::string> names,
                         std::string spec_name)
    : n_(static_cast<int>(table.size())),
      table_(std::move(table)),
      names_(std::move(names)),
      spec_name_(std::move(spec_name)) {
    if (n_ == 0) throw spec_error("group: empty table");
    if (static_cast<int>(names_.size()) != n_) throw spec_error("group: name count mismatch");
    inv_.assign(n_, -1);
    validate();
}

void FiniteGroup::validate() {
    for (const auto& row : table_)
        if (static_cast<int>(row.size()) != n_) throw spec_error("group: table not square");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] < 0 || table_[a][b] >= n_)
                throw spec_error("group: entry out of range");
    // identity row/column
    for (int a = 0; a < n_; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw spec_error("group: element 0 is not a two-sided identity");
    // latin square
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> row(n_, false), col(n_, false);
        for (int b = 0; b < n_; ++b) {
            if (row[table_[a][b]]) throw spec_error("group: duplicate in row " + std::to_string(a));
            if (col[table_[b][a]]) throw spec_error("group: duplicate in col " + std::to_string(a));
            row[table_[a][b]] = true;
            col[table_[b][a]] = true;
        }
    }
    // two-sided inverses
    for (int a = 0; a < n_; ++a) {
        int found = -1;
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) found = b;
        if (found < 0) throw spec_error("group: element " + std::to_string(a) + " has no inverse");
        inv_[a] = found;
    }
    // associativity, all triples
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw spec_error("group: not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
}

Elt FiniteGroup::pow(Elt a, int64_t e) const {
    Elt base = e < 0 ? inv_[a] : a;
    int64_t k = e < 0 ? -e : e;
    Elt acc = 0;
    for (int64_t i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
}

int FiniteGroup::element_order(Elt a) const {
    Elt acc = a;
    int k = 1;
    while (acc != 0) {
        acc = mul(acc, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

Elt FiniteGroup::element_by_name(const std::string& s) const {
    for (int a = 0; a < n_; ++a)
        if (names_[a] == s) return a;
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size() && v >= 0 && v < n_) return v;
    } catch (const std::logic_error&) {
    }
    throw spec_error("group " + spec_name_ + ": no element named '" + s + "'");
}

std::vector<Elt> FiniteGroup::centralizer(const std::vector<Elt>& s) const {
    std::vector<Elt> out;
    for (int t = 0; t < n_; ++t) {
        bool ok = true;
        for (Elt g : s)
            if (mul(t, g) != mul(g, t)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<std::vector<Elt>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<Elt>> classes;
    std::vector<bool> seen(n_, false);
    for (int g = 0; g < n_; ++g) {
        if (seen[g]) continue;
        std::set<Elt> orbit;
        for (int c = 0; c < n_; ++c) orbit.insert(conj(c, g));
        classes.emplace_back(orbit.begin(), orbit.end());
        for (Elt x : orbit) seen[x] = true;
    }
    return classes;
}

std::vector<std::vector<Elt>> FiniteGroup::homs_to(const FiniteGroup& target) const {
    // brute force over image assignments, pruned by incremental closure
    std::vector<std::vector<Elt>> out;
    std::vector<Elt> img(n_, -1);
    img[0] = 0;
    // assign images in index order; closure check on each full prefix
    std::vector<int> free_pts;
    for (int a = 1; a < n_; ++a) free_pts.push_back(a);
    // depth-first with propagation: once img[a], img[b] known, img[ab] is forced
    struct Rec {
        const FiniteGroup& src;
        const FiniteGroup& dst;
        std::vector<std::vector<Elt>>& out;
        std::vector<Elt>& img;
        bool propagate() {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int a = 0; a < src.order(); ++a) {
                    if (img[a] < 0) continue;
                    for (int b = 0; b < src.order(); ++b) {
                        if (img[b] < 0) continue;
                        Elt ab = src.mul(a, b);
                        Elt v = dst.mul(img[a], img[b]);
                        if (img[ab] < 0) {
                            img[ab] = v;
                            changed = true;
                        } else if (img[ab] != v) {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        void go() {
            std::vector<Elt> saved = img;
            if (!propagate()) {
                img = saved;
                return;
            }
            int a = -1;
            for (int i = 0; i < src.order(); ++i)
                if (img[i] < 0) {
                    a = i;
                    break;
                }
            if (a < 0) {
                out.push_back(img);
                img = saved;
                return;
            }
            std::vector<Elt> after_prop = img;
            for (int v = 0; v < dst.order(); ++v) {
                img = after_prop;
                img[a] = v;
                go();
            }
            img = saved;
        }
    } rec{*this, target, out, img};
    rec.go();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

FiniteGroup make_cyclic(int n) {
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(names), "Z" + std::to_string(n));
}

FiniteGroup make_product(const FiniteGroup& g1, const FiniteGroup& g2, const std::string& nm) {
    int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    auto idx = [n2](int a, int b) { return a * n2 + b; };
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) {
            names[idx(a1, a2)] = g1.name(a1) + "." + g2.name(a2);
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    t[idx(a1, a2)][idx(b1, b2)] = idx(g1.mul(a1, b1), g2.mul(a2, b2));
        }
    return FiniteGroup(std::move(t), std::move(names), nm);
}

FiniteGroup make_dihedral(int n) {
    // order 2n; indices k < n are r^k, k >= n are r^(k-n) s
    int m = 2 * n;
    std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
    std::vector<std::string> names(m);
    for (int k = 0; k < n; ++k) {
        names[k] = k == 0 ? "e" : (k == 1 ? "r" : "r" + std::to_string(k));
        names[n + k] = k == 0 ? "s" : (k == 1 ? "rs" : "r" + std::to_string(k) + "s");
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x < n && y < n) t[x][y] = (x + y) % n;
            else if (x < n) t[x][y] = n + (x + (y - n)) % n;
            else if (y < n) t[x][y] = n + (((x - n) - y) % n + n) % n;
            else t[x][y] = (((x - n) - (y - n)) % n + n) % n;
        }
    return FiniteGroup(std::move(t), std::move(names), "D" + std::to_string(n));
}

FiniteGroup make_symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
    std::vector<std::string> names(m);
    for (int a = 0; a < m; ++a) {
        std::string nm;
        for (int x : perms[a]) nm += std::to_string(x);
        names[a] = nm;
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = index[c];
        }
    }
    return FiniteGroup(std::move(t), std::move(names), "S" + std::to_string(n));
}

FiniteGroup make_quaternion() {
    // 1,-1,i,-i,j,-j,k,-k
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto mul = [](int a, int b) {
        int sa = a % 2 == 0 ? 1 : -1, ua = a / 2;
        int sb = b % 2 == 0 ? 1 : -1, ub = b / 2;
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        int s = sign[ua][ub] * sa * sb;
        return unit[ua][ub] * 2 + (s == 1 ? 0 : 1);
    };
    std::vector<std::vector<Elt>> t(8, std::vector<Elt>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return FiniteGroup(std::move(t), std::move(names), "Q8");
}

FiniteGroup load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open group table: " + path);
    std::vector<std::vector<Elt>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Elt> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stoi(cell));
            } catch (const std::logic_error&) {
                throw spec_error("bad table entry '" + cell + "' in " + path);
            }
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::string> names(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) names[i] = "g" + std::to_string(i);
    return FiniteGroup(std::move(rows), std::move(names), "table:" + path);
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 1) throw spec_error("bad " + what + ": " + s);
        return v;
    } catch (const std::logic_error&) {
        throw spec_error("bad " + what + ": " + s);
    }
}

}  // namespace

FiniteGroup build_group(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) return load_table(spec.substr(6));
    if (spec == "Q8") return make_quaternion();
    if (spec.find('x') != std::string::npos) {
        // product of cyclic factors Z<n>xZ<m>x...
        std::vector<int> ns;
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, 'x')) {
            if (part.size() < 2 || part[0] != 'Z')
                throw spec_error("bad product group spec: " + spec);
            ns.push_back(parse_int(part.substr(1), "cyclic order"));
        }
        FiniteGroup g = make_cyclic(ns[0]);
        for (size_t i = 1; i < ns.size(); ++i)
            g = make_product(g, make_cyclic(ns[i]), spec);
        return g;
    }
    if (spec.size() >= 2 && spec[0] == 'Z') return make_cyclic(parse_int(spec.substr(1), "cyclic order"));
    if (spec.size() >= 2 && spec[0] == 'D') return make_dihedral(parse_int(spec.substr(1), "dihedral index"));
    if (spec.size() >= 2 && spec[0] == 'S') {
        int n = parse_int(spec.substr(1), "symmetric index");
        if (n > 5) throw spec_error("S<n> supported only for n <= 5");
        return make_symmetric(n);
    }
    throw spec_error("unrecognized group spec: " + spec);
}

}  // namespace flat2g
