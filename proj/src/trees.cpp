#include "stirperm/trees.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "stirperm/error.hpp"

namespace stirperm {

TernaryTree::TernaryTree(const TernaryTree* left, const TernaryTree* vertical, const TernaryTree* right)
{
    const TernaryTree* src[3] = {left, vertical, right};
    for (int i = 0; i < 3; ++i) {
        if (src[i]) child_[i] = std::make_shared<const TernaryTree>(*src[i]);
    }
}

int TernaryTree::edges() const
{
    int n = 0;
    for (const auto& c : child_) {
        if (c) n += 1 + c->edges();
    }
    return n;
}

TernaryTree::EdgeCounts TernaryTree::edge_counts() const
{
    EdgeCounts out;
    int* slots[3] = {&out.left, &out.vertical, &out.right};
    for (int i = 0; i < 3; ++i) {
        if (!child_[i]) continue;
        *slots[i] += 1;
        EdgeCounts sub = child_[i]->edge_counts();
        out.left += sub.left;
        out.vertical += sub.vertical;
        out.right += sub.right;
    }
    return out;
}

TernaryTree TernaryTree::permute_slots(const std::array<Slot, 3>& image) const
{
    TernaryTree out;
    for (int i = 0; i < 3; ++i) {
        if (child_[i]) out.child_[image[i]] = std::make_shared<const TernaryTree>(child_[i]->permute_slots(image));
    }
    return out;
}

std::string TernaryTree::to_string() const
{
    std::string out = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) out += ',';
        out += child_[i] ? child_[i]->to_string() : "-";
    }
    return out + ")";
}

bool operator==(const TernaryTree& a, const TernaryTree& b)
{
    for (int i = 0; i < 3; ++i) {
        if (static_cast<bool>(a.child_[i]) != static_cast<bool>(b.child_[i])) return false;
        if (a.child_[i] && !(*a.child_[i] == *b.child_[i])) return false;
    }
    return true;
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int read_int()
    {
        int v = 0;
        const std::size_t start = pos_;
        while (peek() >= '0' && peek() <= '9') v = v * 10 + (text_[pos_++] - '0');
        if (pos_ == start) fail("expected a number");
        return v;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("tree \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

TernaryTree read_ternary(Reader& in)
{
    in.expect('(');
    std::array<std::optional<TernaryTree>, 3> kids;
    for (int i = 0; i < 3; ++i) {
        if (i) in.expect(',');
        if (in.peek() == '-') in.expect('-');
        else kids[i] = read_ternary(in);
    }
    in.expect(')');
    auto ptr = [&](int i) { return kids[i] ? &*kids[i] : nullptr; };
    return TernaryTree(ptr(0), ptr(1), ptr(2));
}

OrderedTree read_ordered(Reader& in)
{
    OrderedTree t;
    in.expect('(');
    while (in.peek() == '(') t.children.push_back(read_ordered(in));
    in.expect(')');
    return t;
}

FCOrderedTree read_fc(Reader& in)
{
    FCOrderedTree t;
    in.expect('(');
    while (in.peek() == '(') t.children.push_back(read_fc(in));
    in.expect(')');
    if (in.peek() == '@') {
        in.expect('@');
        t.favorite = in.read_int();
    }
    return t;
}

}  // namespace

TernaryTree TernaryTree::parse(std::string_view text)
{
    Reader in(text);
    TernaryTree t = read_ternary(in);
    if (!in.at_end()) in.fail("trailing characters");
    return t;
}

std::vector<TernaryTree> all_ternary_trees(int edges)
{
    // Split the edge budget over the three optional root edges.
    std::vector<std::vector<TernaryTree>> by_size(static_cast<std::size_t>(edges) + 1);
    by_size[0].emplace_back();
    for (int m = 1; m <= edges; ++m) {
        for (int mask = 1; mask < 8; ++mask) {
            const int used = std::popcount(static_cast<unsigned>(mask));
            if (used > m) continue;
            // Distribute m - used extra edges among the present children.
            const int extra = m - used;
            for (int a = 0; a <= extra; ++a) {
                for (int b = 0; a + b <= extra; ++b) {
                    const int c = extra - a - b;
                    int sizes[3] = {a, b, c};
                    bool ok = true;
                    for (int i = 0; i < 3; ++i) {
                        if (!(mask & (1 << i)) && sizes[i] != 0) ok = false;
                    }
                    if (!ok) continue;
                    auto pick = [&](int i) -> const std::vector<TernaryTree>& { return by_size[sizes[i]]; };
                    static const std::vector<TernaryTree> none(1);
                    const auto& l = (mask & 1) ? pick(0) : none;
                    const auto& v = (mask & 2) ? pick(1) : none;
                    const auto& r = (mask & 4) ? pick(2) : none;
                    for (const auto& tl : l) {
                        for (const auto& tv : v) {
                            for (const auto& tr : r) {
                                by_size[m].emplace_back((mask & 1) ? &tl : nullptr, (mask & 2) ? &tv : nullptr,
                                                        (mask & 4) ? &tr : nullptr);
                            }
                        }
                    }
                }
            }
        }
    }
    return by_size[edges];
}

int OrderedTree::edges() const
{
    int n = 0;
    for (const auto& c : children) n += 1 + c.edges();
    return n;
}

std::string OrderedTree::to_string() const
{
    std::string out = "(";
    for (const auto& c : children) out += c.to_string();
    return out + ")";
}

OrderedTree OrderedTree::parse(std::string_view text)
{
    Reader in(text);
    OrderedTree t = read_ordered(in);
    if (!in.at_end()) in.fail("trailing characters");
    return t;
}

namespace {

// Forests with a given total number of vertices, as child lists.
std::vector<std::vector<OrderedTree>> all_forests(int vertices, std::vector<std::vector<std::vector<OrderedTree>>>& memo);

std::vector<OrderedTree> trees_with_vertices(int vertices, std::vector<std::vector<std::vector<OrderedTree>>>& memo)
{
    std::vector<OrderedTree> out;
    for (auto& kids : all_forests(vertices - 1, memo)) out.push_back(OrderedTree{std::move(kids)});
    return out;
}

std::vector<std::vector<OrderedTree>> all_forests(int vertices, std::vector<std::vector<std::vector<OrderedTree>>>& memo)
{
    if (vertices < static_cast<int>(memo.size()) && !memo[vertices].empty()) return memo[vertices];
    std::vector<std::vector<OrderedTree>> out;
    if (vertices == 0) {
        out.emplace_back();
    } else {
        for (int first = 1; first <= vertices; ++first) {
            for (const auto& head : trees_with_vertices(first, memo)) {
                for (auto& tail : all_forests(vertices - first, memo)) {
                    std::vector<OrderedTree> forest{head};
                    forest.insert(forest.end(), tail.begin(), tail.end());
                    out.push_back(std::move(forest));
                }
            }
        }
    }
    if (vertices >= static_cast<int>(memo.size())) memo.resize(vertices + 1);
    memo[vertices] = out;
    return out;
}

}  // namespace

std::vector<OrderedTree> all_ordered_trees(int edges)
{
    std::vector<std::vector<std::vector<OrderedTree>>> memo;
    return trees_with_vertices(edges + 1, memo);
}

int FCOrderedTree::edges() const
{
    int n = 0;
    for (const auto& c : children) n += 1 + c.edges();
    return n;
}

OrderedTree FCOrderedTree::shape() const
{
    OrderedTree t;
    for (const auto& c : children) t.children.push_back(c.shape());
    return t;
}

bool FCOrderedTree::valid() const
{
    if (children.empty()) return favorite == 0;
    if (favorite < 1 || favorite > static_cast<int>(children.size())) return false;
    return std::all_of(children.begin(), children.end(), [](const FCOrderedTree& c) { return c.valid(); });
}

std::string FCOrderedTree::to_string() const
{
    std::string out = "(";
    for (const auto& c : children) out += c.to_string();
    out += ")";
    if (!children.empty()) out += "@" + std::to_string(favorite);
    return out;
}

FCOrderedTree FCOrderedTree::parse(std::string_view text)
{
    Reader in(text);
    FCOrderedTree t = read_fc(in);
    if (!in.at_end()) in.fail("trailing characters");
    if (!t.valid()) throw ParseError("favorite-child tree \"" + std::string(text) + "\" has an invalid favorite index");
    return t;
}

namespace {

std::vector<FCOrderedTree> decorate(const OrderedTree& t)
{
    // Cartesian product over children decorations, times the favorite choice.
    std::vector<std::vector<FCOrderedTree>> kid_lists;
    for (const auto& c : t.children) kid_lists.push_back(decorate(c));
    std::vector<std::vector<FCOrderedTree>> combos{{}};
    for (const auto& options : kid_lists) {
        std::vector<std::vector<FCOrderedTree>> next;
        for (const auto& prefix : combos) {
            for (const auto& o : options) {
                auto extended = prefix;
                extended.push_back(o);
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }
    std::vector<FCOrderedTree> out;
    for (auto& kids : combos) {
        if (kids.empty()) {
            out.push_back(FCOrderedTree{});
            continue;
        }
        for (int fav = 1; fav <= static_cast<int>(kids.size()); ++fav) out.push_back(FCOrderedTree{kids, fav});
    }
    return out;
}

}  // namespace

std::vector<FCOrderedTree> all_fc_trees(int edges)
{
    std::vector<FCOrderedTree> out;
    for (const auto& t : all_ordered_trees(edges)) {
        auto d = decorate(t);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

FlatTree FlatTree::from(const OrderedTree& t)
{
    FlatTree flat;
    auto visit = [&](auto& self, const OrderedTree& node, int parent) -> int {
        const int id = static_cast<int>(flat.parent.size());
        flat.parent.push_back(parent);
        flat.children.emplace_back();
        for (const auto& c : node.children) {
            const int cid = self(self, c, id);
            flat.children[id].push_back(cid);
        }
        return id;
    };
    visit(visit, t, -1);
    return flat;
}

std::vector<int> left_path_labeling(const OrderedTree& t)
{
    const FlatTree flat = FlatTree::from(t);
    const int n = static_cast<int>(flat.parent.size());
    std::vector<int> label(n, -1);
    std::vector<int> vertex_of_label(n, -1);
    int next = 0;
    auto assign = [&](int v) {
        label[v] = next;
        vertex_of_label[next] = v;
        ++next;
    };
    assign(0);
    // Labels are handed out in increasing order, so scanning labels upward
    // visits "the smallest labeled vertex with an unlabeled child" in turn.
    for (int lab = 0; lab < next; ++lab) {
        const int v = vertex_of_label[lab];
        for (int c : flat.children[v]) {
            if (label[c] >= 0) continue;
            for (int u = c;; u = flat.children[u].front()) {
                assign(u);
                if (flat.children[u].empty()) break;
            }
        }
    }
    return label;
}

}  // namespace stirperm
