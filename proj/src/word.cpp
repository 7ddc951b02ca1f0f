#include "stirperm/word.hpp"

#include <algorithm>
#include <charconv>

#include "stirperm/error.hpp"

namespace stirperm {

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word::Word(std::vector<int> letters) : letters_(std::move(letters))
{
    for (int v : letters_) {
        if (v < 1) throw ParseError("word letters must be positive, got " + std::to_string(v));
    }
}

Word Word::parse(std::string_view text)
{
    std::vector<int> letters;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw ParseError("bad letter '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
            }
            letters.push_back(c - '0');
        }
        return Word(std::move(letters));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("bad item \"" + std::string(item) + "\" in word \"" + std::string(text) + "\"");
        }
        letters.push_back(v);
        start = end + 1;
    }
    return Word(std::move(letters));
}

int Word::max_letter() const
{
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::reversed() const
{
    return Word(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

std::string Word::to_string() const
{
    std::string out;
    if (max_letter() <= 9) {
        for (int v : letters_) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(letters_[i]);
    }
    return out;
}

Pattern::Pattern(Word letters) : word_(std::move(letters))
{
    if (word_.empty()) throw BadPattern("empty pattern");
    const int m = word_.max_letter();
    std::vector<bool> seen(m + 1, false);
    for (int v : word_.letters()) seen[v] = true;
    for (int v = 1; v <= m; ++v) {
        if (!seen[v]) {
            throw BadPattern("pattern " + word_.to_string() + " skips value " + std::to_string(v));
        }
    }
}

Pattern Pattern::parse(std::string_view text)
{
    try {
        return Pattern(Word::parse(text));
    } catch (const ParseError& e) {
        throw BadPattern(e.what());
    }
}

Pattern Pattern::direct_sum(const Pattern& other) const
{
    std::vector<int> letters = word_.letters();
    const int shift = word_.max_letter();
    for (int v : other.word().letters()) letters.push_back(v + shift);
    return Pattern(Word(std::move(letters)));
}

bool is_stirling(const Word& w)
{
    const auto& s = w.letters();
    if (s.size() % 2 != 0) return false;
    const int n = static_cast<int>(s.size() / 2);
    std::vector<int> count(n + 1, 0);
    for (int v : s) {
        if (v > n) return false;
        if (++count[v] > 2) return false;
    }
    // Every letter between the two copies of v exceeds v exactly when, scanning
    // left to right, an open value is never followed by a smaller new letter
    // before it closes: the open values form a stack with increasing tops.
    std::vector<int> open;
    std::vector<bool> opened(n + 1, false);
    for (int v : s) {
        if (!opened[v]) {
            if (!open.empty() && open.back() > v) return false;
            opened[v] = true;
            open.push_back(v);
        } else {
            if (open.empty() || open.back() != v) return false;
            open.pop_back();
        }
    }
    return true;
}

StirlingPermutation::StirlingPermutation(Word w) : word_(std::move(w))
{
    if (!is_stirling(word_)) throw ParseError(word_.to_string() + " is not a Stirling permutation");
}

StatVector stats(const Word& w)
{
    StatVector sv;
    sv.order = static_cast<int>(w.size() / 2);
    const auto& s = w.letters();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] > s[i + 1]) ++sv.des;
        else if (s[i] < s[i + 1]) ++sv.asc;
        else ++sv.plat;
    }
    return sv;
}

namespace {

// Backtracking over pattern positions. chosen[t] is the word index matched to
// pattern position t; each new choice is checked against all earlier ones.
class Matcher {
public:
    Matcher(const Word& w, const Pattern& tau)
        : s_(w.letters()), t_(tau.word().letters()), chosen_(t_.size())
    {
    }

    std::size_t run(bool stop_at_first)
    {
        stop_ = stop_at_first;
        found_ = 0;
        if (t_.size() <= s_.size()) extend(0, 0);
        return found_;
    }

private:
    bool consistent(std::size_t pos, int letter) const
    {
        for (std::size_t u = 0; u < pos; ++u) {
            const int a = s_[chosen_[u]];
            const int tu = t_[u];
            const int tp = t_[pos];
            if ((tu < tp) != (a < letter)) return false;
            if ((tu == tp) != (a == letter)) return false;
        }
        return true;
    }

    void extend(std::size_t pos, std::size_t from)
    {
        if (pos == t_.size()) {
            ++found_;
            return;
        }
        const std::size_t remaining = t_.size() - pos;
        for (std::size_t i = from; i + remaining <= s_.size(); ++i) {
            if (!consistent(pos, s_[i])) continue;
            chosen_[pos] = i;
            extend(pos + 1, i + 1);
            if (stop_ && found_) return;
        }
    }

    const std::vector<int>& s_;
    const std::vector<int>& t_;
    std::vector<std::size_t> chosen_;
    bool stop_ = false;
    std::size_t found_ = 0;
};

}  // namespace

bool contains(const Word& w, const Pattern& tau)
{
    return Matcher(w, tau).run(true) > 0;
}

bool avoids_all(const Word& w, std::span<const Pattern> patterns)
{
    return std::none_of(patterns.begin(), patterns.end(), [&](const Pattern& t) { return contains(w, t); });
}

std::size_t count_occurrences(const Word& w, const Pattern& tau)
{
    return Matcher(w, tau).run(false);
}

std::size_t count_plateau_anchored_122(const Word& w)
{
    const auto& s = w.letters();
    std::size_t total = 0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        if (s[j] != s[j + 1]) continue;
        for (std::size_t i = 0; i < j; ++i) {
            if (s[i] < s[j]) ++total;
        }
    }
    return total;
}

Word first_occurrence_permutation(const Word& w)
{
    std::vector<int> out;
    std::vector<bool> seen(w.max_letter() + 1, false);
    for (int v : w.letters()) {
        if (!seen[v]) {
            seen[v] = true;
            out.push_back(v);
        }
    }
    return Word(std::move(out));
}

bool is_permutation_of_n(const Word& w)
{
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w.letters()) {
        if (v > static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace stirperm
