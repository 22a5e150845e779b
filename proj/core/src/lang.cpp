#include "sre/lang.hpp"

#include <stdexcept>
#include <unordered_map>

#include "sre/errors.hpp"

namespace sre {

namespace {

void shuffle_into(const Word& x, std::size_t i, const Word& y, std::size_t j, Word& prefix,
                  std::set<Word>& out) {
    if (i == x.size()) {
        Word w = prefix;
        w.insert(w.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
        out.insert(std::move(w));
        return;
    }
    if (j == y.size()) {
        Word w = prefix;
        w.insert(w.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
        out.insert(std::move(w));
        return;
    }
    prefix.push_back(x[i]);
    shuffle_into(x, i + 1, y, j, prefix, out);
    prefix.back() = y[j];
    shuffle_into(x, i, y, j + 1, prefix, out);
    prefix.pop_back();
}

class LangBuilder {
public:
    LangBuilder(int limit, const OracleLimits& limits) : limit_(limit), limits_(limits) {}

    const std::set<Word>& language(Expr e) {
        auto it = memo_.find(e.id());
        if (it != memo_.end()) return it->second;
        std::set<Word> words;
        switch (e.kind()) {
        case ExprKind::Empty:
            break;
        case ExprKind::Eps:
            words.insert(Word{});
            break;
        case ExprKind::Sym:
            if (limit_ >= 1) words.insert(Word{e.symbol_index()});
            break;
        case ExprKind::Union: {
            words = language(e.left());
            const auto& r = language(e.right());
            words.insert(r.begin(), r.end());
            guard(words.size());
            break;
        }
        case ExprKind::Concat:
            words = concat(language(e.left()), language(e.right()));
            break;
        case ExprKind::Shuffle:
            words = shuffle(language(e.left()), language(e.right()));
            break;
        case ExprKind::Star: {
            const auto& base = language(e.left());
            words.insert(Word{});
            std::set<Word> frontier = words;
            while (!frontier.empty()) {
                std::set<Word> grown = concat(frontier, base);
                frontier.clear();
                for (auto& w : grown) {
                    if (words.insert(w).second) frontier.insert(w);
                }
                guard(words.size());
            }
            break;
        }
        }
        guard(words.size());
        return memo_.emplace(e.id(), std::move(words)).first->second;
    }

private:
    void guard(std::size_t n) const {
        if (n > limits_.max_words) {
            throw BudgetError("bounded language exceeds the word-set guard");
        }
    }

    std::set<Word> concat(const std::set<Word>& a, const std::set<Word>& b) const {
        std::set<Word> out;
        for (const auto& x : a) {
            if (static_cast<int>(x.size()) > limit_) continue;
            for (const auto& y : b) {
                if (static_cast<int>(x.size() + y.size()) > limit_) continue;
                Word w = x;
                w.insert(w.end(), y.begin(), y.end());
                out.insert(std::move(w));
                guard(out.size());
            }
        }
        return out;
    }

    std::set<Word> shuffle(const std::set<Word>& a, const std::set<Word>& b) const {
        std::set<Word> out;
        for (const auto& x : a) {
            for (const auto& y : b) {
                if (static_cast<int>(x.size() + y.size()) > limit_) continue;
                Word prefix;
                prefix.reserve(x.size() + y.size());
                shuffle_into(x, 0, y, 0, prefix, out);
                guard(out.size());
            }
        }
        return out;
    }

    int limit_;
    OracleLimits limits_;
    std::unordered_map<std::uint32_t, std::set<Word>> memo_;
};

} // namespace

std::set<Word> shuffle_words(const Word& x, const Word& y) {
    std::set<Word> out;
    Word prefix;
    prefix.reserve(x.size() + y.size());
    shuffle_into(x, 0, y, 0, prefix, out);
    return out;
}

BoundedLang bounded_language(Expr e, int limit, const OracleLimits& limits) {
    if (limit < 0) throw std::invalid_argument("negative length bound");
    if (limit > limits.max_len) {
        throw BudgetError("length bound exceeds the oracle cap");
    }
    LangBuilder builder(limit, limits);
    return BoundedLang{limit, builder.language(e)};
}

BoundedLang left_quotient(const BoundedLang& lang, int symbol) {
    if (lang.limit < 1) throw std::invalid_argument("left_quotient needs limit >= 1");
    BoundedLang out;
    out.limit = lang.limit - 1;
    for (const auto& w : lang.words) {
        if (!w.empty() && w.front() == symbol) {
            out.words.insert(Word(w.begin() + 1, w.end()));
        }
    }
    return out;
}

bool member_bruteforce(Expr e, const Word& w, const OracleLimits& limits) {
    int len = static_cast<int>(w.size());
    if (len > limits.max_len) throw BudgetError("word exceeds the oracle cap");
    BoundedLang lang = bounded_language(e, len, limits);
    return lang.words.count(w) != 0;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.substr(i) == "@") return w; // explicit empty word
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c < 'a' || c > 'z') {
            throw ParseError("invalid word character '" + std::string(1, c) + "'", i);
        }
        std::size_t start = i++;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        std::string name(text.substr(start, i - start));
        auto index = alphabet.index_of(name);
        if (!index) throw ParseError("unknown symbol '" + name + "'", start);
        w.push_back(*index);
    }
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) return "@";
    std::string out;
    for (int s : w) out += alphabet.at(s).name;
    return out;
}

} // namespace sre
