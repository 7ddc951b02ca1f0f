#include "stirperm/bijections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "stirperm/enumerate.hpp"
#include "stirperm/error.hpp"

namespace stirperm {

namespace {

const Pattern& pat213()
{
    static const Pattern p = Pattern::parse("213");
    return p;
}
const Pattern& pat123()
{
    static const Pattern p = Pattern::parse("123");
    return p;
}
const Pattern& pat132()
{
    static const Pattern p = Pattern::parse("132");
    return p;
}

// Relabel the letters of w to 1..k preserving order.
std::vector<int> standardize(const std::vector<int>& w)
{
    std::vector<int> values(w);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w) out.push_back(1 + static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin()));
    return out;
}

std::vector<int> lr_min_positions(const Word& perm)
{
    std::vector<int> pos;
    int low = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (pos.empty() || perm[i] < low) {
            pos.push_back(static_cast<int>(i));
            low = perm[i];
        }
    }
    return pos;
}

}  // namespace

std::string APair::to_string() const
{
    std::string out = perm.to_string() + ";";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

APair APair::parse(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("pair \"" + std::string(text) + "\" must look like perm;s1,s2,...");
    APair a;
    a.perm = Word::parse(text.substr(0, semi));
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("pair \"" + std::string(text) + "\" has a malformed s entry");
        }
        a.s.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return a;
}

Composition composition_of(const Word& perm)
{
    const auto pos = lr_min_positions(perm);
    Composition c;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const int next = i + 1 < pos.size() ? pos[i + 1] : static_cast<int>(perm.size());
        c.parts.push_back(next - pos[i]);
    }
    return c;
}

std::vector<std::vector<int>> lr_min_segments(const Word& perm)
{
    std::vector<std::vector<int>> segs;
    const auto pos = lr_min_positions(perm);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const int next = i + 1 < pos.size() ? pos[i + 1] : static_cast<int>(perm.size());
        segs.emplace_back(perm.letters().begin() + pos[i], perm.letters().begin() + next);
    }
    return segs;
}

// ---- phi ----

namespace {

TernaryTree phi_rec(const std::vector<int>& w)
{
    // w is a standardized 213-avoiding Stirling permutation; 1 occurs twice.
    const auto first = std::find(w.begin(), w.end(), 1);
    const auto second = std::find(first + 1, w.end(), 1);
    const std::vector<int> a(w.begin(), first);
    const std::vector<int> b(first + 1, second);
    const std::vector<int> c(second + 1, w.end());
    auto min_of = [](const std::vector<int>& v) { return *std::min_element(v.begin(), v.end()); };
    auto max_of = [](const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); };
    if ((!a.empty() && !b.empty() && min_of(a) < max_of(b)) || (!a.empty() && !c.empty() && min_of(a) < max_of(c))
        || (!b.empty() && !c.empty() && min_of(b) < max_of(c))) {
        throw NotAvoider("word does not split as s' 1 s'' 1 s''' with s' > s'' > s'''");
    }
    std::optional<TernaryTree> kids[3];
    const std::vector<int>* blocks[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        if (!blocks[i]->empty()) kids[i] = phi_rec(standardize(*blocks[i]));
    }
    auto ptr = [&](int i) { return kids[i] ? &*kids[i] : nullptr; };
    return TernaryTree(ptr(0), ptr(1), ptr(2));
}

// Letters base+1 .. base+order.
void phi_inverse_rec(const TernaryTree& t, int base, std::vector<int>& out)
{
    using S = TernaryTree::Slot;
    const int sizes[3] = {
        t.has_child(S::left) ? t.child(S::left).edges() + 1 : 0,
        t.has_child(S::vertical) ? t.child(S::vertical).edges() + 1 : 0,
        t.has_child(S::right) ? t.child(S::right).edges() + 1 : 0,
    };
    // Right block sits just above the minimum, then vertical, then left.
    const int base_right = base + 1;
    const int base_vertical = base_right + sizes[2];
    const int base_left = base_vertical + sizes[1];
    if (sizes[0]) phi_inverse_rec(t.child(S::left), base_left, out);
    out.push_back(base + 1);
    if (sizes[1]) phi_inverse_rec(t.child(S::vertical), base_vertical, out);
    out.push_back(base + 1);
    if (sizes[2]) phi_inverse_rec(t.child(S::right), base_right, out);
}

}  // namespace

TernaryTree phi(const StirlingPermutation& sigma)
{
    if (sigma.order() == 0) throw NotAvoider("phi needs a Stirling permutation of order at least 1");
    if (contains(sigma.word(), pat213())) throw NotAvoider(sigma.to_string() + " contains 213");
    return phi_rec(sigma.word().letters());
}

StirlingPermutation phi_inverse(const TernaryTree& t)
{
    std::vector<int> out;
    phi_inverse_rec(t, 0, out);
    return StirlingPermutation(Word(std::move(out)));
}

// ---- psi ----

APair psi(const StirlingPermutation& sigma)
{
    const Word& w = sigma.word();
    APair a;
    a.perm = first_occurrence_permutation(w);
    for (int pos : lr_min_positions(a.perm)) {
        const int m = a.perm[pos];
        const auto& l = w.letters();
        const auto first = std::find(l.begin(), l.end(), m);
        const auto second = std::find(first + 1, l.end(), m);
        const std::set<int> distinct(first, second + 1);
        a.s.push_back(static_cast<int>(distinct.size()));
    }
    return a;
}

namespace {

void check_pair(const APair& a)
{
    if (!is_permutation_of_n(a.perm)) throw InvalidPair(a.to_string() + ": perm is not a permutation of 1..n");
    const Composition c = composition_of(a.perm);
    if (a.s.size() != c.parts.size()) {
        throw InvalidPair(a.to_string() + ": s needs " + std::to_string(c.parts.size()) + " entries");
    }
    for (std::size_t i = 0; i < a.s.size(); ++i) {
        if (a.s[i] < 1 || a.s[i] > c.parts[i]) {
            throw InvalidPair(a.to_string() + ": s[" + std::to_string(i + 1) + "] must lie in 1.."
                              + std::to_string(c.parts[i]));
        }
    }
}

StirlingPermutation psi_inverse_over(const APair& a, const Pattern& base)
{
    check_pair(a);
    if (contains(a.perm, base)) throw InvalidPair(a.to_string() + ": perm contains " + base.to_string());
    std::vector<int> out;
    const auto segs = lr_min_segments(a.perm);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& seg = segs[i];
        out.push_back(seg.front());
        for (std::size_t j = 1; j <= seg.size(); ++j) {
            if (static_cast<int>(j) == a.s[i]) out.push_back(seg.front());
            if (j < seg.size()) {
                out.push_back(seg[j]);
                out.push_back(seg[j]);
            }
        }
    }
    return StirlingPermutation(Word(std::move(out)));
}

}  // namespace

StirlingPermutation psi_inverse_123(const APair& a) { return psi_inverse_over(a, pat123()); }

StirlingPermutation psi_inverse_132(const APair& a) { return psi_inverse_over(a, pat132()); }

APair involution_A(const APair& a)
{
    check_pair(a);
    const Composition c = composition_of(a.perm);
    APair out = a;
    for (std::size_t i = 0; i < out.s.size(); ++i) out.s[i] = c.parts[i] + 1 - a.s[i];
    return out;
}

std::vector<APair> all_pairs(int n, const Pattern& base)
{
    std::vector<APair> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const Word w(perm);
        if (contains(w, base)) continue;
        const Composition c = composition_of(w);
        std::vector<int> s(c.parts.size(), 1);
        while (true) {
            out.push_back(APair{w, s});
            std::size_t i = 0;
            while (i < s.size() && s[i] == c.parts[i]) s[i++] = 1;
            if (i == s.size()) break;
            ++s[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---- rho and favorite-child trees ----

namespace {

// Children (sorted increasingly) of each label in 0..n, from the segment rule.
std::vector<std::vector<int>> rho_children(const Word& perm)
{
    if (!is_permutation_of_n(perm)) throw InvalidPair(perm.to_string() + " is not a permutation of 1..n");
    if (contains(perm, pat123())) throw NotAvoider(perm.to_string() + " contains 123");
    std::vector<std::vector<int>> kids(perm.size() + 1);
    for (const auto& seg : lr_min_segments(perm)) {
        for (int x : seg) kids[seg.front() - 1].push_back(x);
    }
    for (auto& k : kids) std::sort(k.begin(), k.end());
    return kids;
}

OrderedTree build_ordered(const std::vector<std::vector<int>>& kids, int v)
{
    OrderedTree t;
    for (int c : kids[v]) t.children.push_back(build_ordered(kids, c));
    return t;
}

FCOrderedTree build_fc(const std::vector<std::vector<int>>& kids, const std::vector<int>& fav, int v)
{
    FCOrderedTree t;
    for (int c : kids[v]) t.children.push_back(build_fc(kids, fav, c));
    t.favorite = fav[v];
    return t;
}

void favorites_preorder(const FCOrderedTree& t, std::vector<int>& out)
{
    out.push_back(t.favorite);
    for (const auto& c : t.children) favorites_preorder(c, out);
}

FCOrderedTree involute(const FCOrderedTree& t)
{
    FCOrderedTree out;
    for (const auto& c : t.children) out.children.push_back(involute(c));
    out.favorite = t.children.empty() ? 0 : static_cast<int>(t.children.size()) + 1 - t.favorite;
    return out;
}

}  // namespace

OrderedTree rho(const Word& perm) { return build_ordered(rho_children(perm), 0); }

Word rho_inverse(const OrderedTree& t)
{
    const FlatTree flat = FlatTree::from(t);
    const std::vector<int> label = left_path_labeling(t);
    std::vector<std::vector<int>> segs;
    for (std::size_t v = 0; v < flat.children.size(); ++v) {
        if (flat.children[v].empty()) continue;
        std::vector<int> seg;
        for (int c : flat.children[v]) seg.push_back(label[c]);
        // Leftmost child is the minimum; the rest decrease left to right.
        std::sort(seg.begin() + 1, seg.end(), std::greater<>());
        segs.push_back(std::move(seg));
    }
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.front() > b.front(); });
    std::vector<int> out;
    for (const auto& seg : segs) out.insert(out.end(), seg.begin(), seg.end());
    return Word(std::move(out));
}

FCOrderedTree to_fc_tree(const APair& a)
{
    check_pair(a);
    const auto kids = rho_children(a.perm);
    std::vector<int> fav(kids.size(), 0);
    const auto segs = lr_min_segments(a.perm);
    for (std::size_t i = 0; i < segs.size(); ++i) fav[segs[i].front() - 1] = a.s[i];
    return build_fc(kids, fav, 0);
}

APair fc_to_pair(const FCOrderedTree& t)
{
    if (!t.valid()) throw InvalidPair("favorite-child tree " + t.to_string() + " has an invalid favorite index");
    const OrderedTree shape = t.shape();
    const std::vector<int> label = left_path_labeling(shape);
    std::vector<int> fav_pre;
    favorites_preorder(t, fav_pre);
    std::vector<int> fav_by_label(label.size(), 0);
    for (std::size_t v = 0; v < label.size(); ++v) fav_by_label[label[v]] = fav_pre[v];
    APair a;
    a.perm = rho_inverse(shape);
    for (const auto& seg : lr_min_segments(a.perm)) a.s.push_back(fav_by_label[seg.front() - 1]);
    return a;
}

FCOrderedTree fc_involution(const FCOrderedTree& t)
{
    if (!t.valid()) throw InvalidPair("favorite-child tree " + t.to_string() + " has an invalid favorite index");
    return involute(t);
}

// ---- exhaustive verification ----

std::vector<std::string> bijection_names() { return {"phi", "psi", "psi132", "rho", "fc"}; }

namespace {

class Checker {
public:
    explicit Checker(BijectionReport& r) : r_(r) {}

    template <class F>
    void item(const std::string& label, F&& body)
    {
        ++r_.checked;
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note(label + ": " + e.what());
            ++r_.failures;
            return;
        }
        if (!ok) {
            ++r_.failures;
            note(label + ": round trip failed");
        }
    }

    void transport(bool ok, const std::string& label)
    {
        if (ok) return;
        if (r_.statistic_transport) note(label + ": statistic transport failed");
        r_.statistic_transport = false;
    }

    void note(const std::string& what)
    {
        if (r_.first_failure.empty()) r_.first_failure = what;
    }

private:
    BijectionReport& r_;
};

int count_where(const std::vector<int>& s, const std::vector<int>& ref)
{
    int k = 0;
    for (std::size_t i = 0; i < s.size(); ++i) k += s[i] == ref[i];
    return k;
}

using PsiInverse = StirlingPermutation (*)(const APair&);

void verify_psi(int n, const Pattern& base, PsiInverse inverse, bool with_descents, BijectionReport& r)
{
    Checker ck(r);
    const std::vector<Pattern> avoid{base};
    std::set<APair> image;
    for (const auto& sigma : generate_avoiders(n, avoid)) {
        const APair a = psi(sigma);
        image.insert(a);
        ck.item(sigma.to_string(), [&] { return inverse(a) == sigma; });
        const Composition c = composition_of(a.perm);
        const int k = static_cast<int>(c.parts.size());
        const StatVector st = stats(sigma.word());
        ck.transport(st.plat == n - k + count_where(a.s, std::vector<int>(a.s.size(), 1)), sigma.to_string());
        if (with_descents) ck.transport(st.ades() == n - k + count_where(a.s, c.parts), sigma.to_string());
        if (with_descents) {
            const StirlingPermutation swapped = inverse(involution_A(a));
            const StatVector sw = stats(swapped.word());
            ck.transport(sw.plat == st.ades() && sw.ades() == st.plat, sigma.to_string() + " under the involution");
        }
    }
    const auto pairs = all_pairs(n, base);
    for (const auto& a : pairs) {
        ck.item(a.to_string(), [&] { return psi(inverse(a)) == a; });
    }
    ++r.checked;
    if (image.size() != pairs.size()) {
        ++r.failures;
        ck.note("image has " + std::to_string(image.size()) + " pairs, target has " + std::to_string(pairs.size()));
    }
}

}  // namespace

BijectionReport verify_bijection(const std::string& map, int n)
{
    if (n < 1) throw std::invalid_argument("bijection check needs n >= 1");
    BijectionReport r;
    r.map = map;
    r.n = n;
    Checker ck(r);
    if (map == "phi") {
        const std::vector<Pattern> avoid{pat213()};
        std::set<std::string> image;
        for (const auto& sigma : generate_avoiders(n, avoid)) {
            const TernaryTree t = phi(sigma);
            image.insert(t.to_string());
            ck.item(sigma.to_string(), [&] { return phi_inverse(t) == sigma; });
            const StatVector st = stats(sigma.word());
            const auto e = t.edge_counts();
            ck.transport(e.left == n - st.aasc() && e.vertical == n - st.plat && e.right == n - st.ades(),
                         sigma.to_string());
        }
        const auto trees = all_ternary_trees(n - 1);
        for (const auto& t : trees) ck.item(t.to_string(), [&] { return phi(phi_inverse(t)) == t; });
        ++r.checked;
        if (image.size() != trees.size()) {
            ++r.failures;
            ck.note("image has " + std::to_string(image.size()) + " trees, target has " + std::to_string(trees.size()));
        }
    } else if (map == "psi") {
        verify_psi(n, pat123(), psi_inverse_123, true, r);
    } else if (map == "psi132") {
        verify_psi(n, pat132(), psi_inverse_132, false, r);
    } else if (map == "rho") {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            const Word p(perm);
            if (contains(p, pat123())) continue;
            const OrderedTree t = rho(p);
            ck.item(p.to_string(), [&] { return rho_inverse(t) == p; });
            // Segment lengths right to left against family sizes in label order.
            std::vector<int> seg_lengths = composition_of(p).parts;
            std::reverse(seg_lengths.begin(), seg_lengths.end());
            const FlatTree flat = FlatTree::from(t);
            const auto label = left_path_labeling(t);
            std::vector<int> by_label(label.size());
            for (std::size_t v = 0; v < label.size(); ++v) by_label[label[v]] = static_cast<int>(v);
            std::vector<int> families;
            for (int v : by_label) {
                if (!flat.children[v].empty()) families.push_back(static_cast<int>(flat.children[v].size()));
            }
            ck.transport(families == seg_lengths, p.to_string());
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& t : all_ordered_trees(n)) ck.item(t.to_string(), [&] { return rho(rho_inverse(t)) == t; });
    } else if (map == "fc") {
        for (const auto& a : all_pairs(n, pat123())) {
            const FCOrderedTree t = to_fc_tree(a);
            ck.item(a.to_string(), [&] { return fc_to_pair(t) == a; });
            ck.transport(to_fc_tree(involution_A(a)) == fc_involution(t) && fc_involution(fc_involution(t)) == t,
                         a.to_string());
        }
        for (const auto& t : all_fc_trees(n)) ck.item(t.to_string(), [&] { return to_fc_tree(fc_to_pair(t)) == t; });
    } else {
        throw std::invalid_argument("unknown map \"" + map + "\"; expected one of phi, psi, psi132, rho, fc");
    }
    return r;
}

}  // namespace stirperm
