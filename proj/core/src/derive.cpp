#include "sre/derive.hpp"

#include <deque>
#include <unordered_map>

#include "sre/errors.hpp"

namespace sre {

namespace {

// Memoizes support sets per subterm. Work is charged before each set
// operation, sized by the elements about to be produced, so a runaway
// shuffle product trips the budget instead of thrashing first.
class PiBuilder {
public:
    PiBuilder(ExprPool& pool, const DeriveLimits& limits) : pool_(pool), limits_(limits) {}

    const ExprSet& support(Expr e) {
        auto it = memo_.find(e.id());
        if (it != memo_.end()) return it->second;
        ExprSet out;
        switch (e.kind()) {
        case ExprKind::Empty:
        case ExprKind::Eps:
            break;
        case ExprKind::Sym:
            out.insert(pool_.eps());
            break;
        case ExprKind::Union: {
            const ExprSet& ls = support(e.left());
            const ExprSet& rs = support(e.right());
            charge(ls.size() + rs.size());
            out = ls;
            out.merge(rs);
            break;
        }
        case ExprKind::Concat: {
            const ExprSet& ls = support(e.left());
            const ExprSet& rs = support(e.right());
            charge(ls.size() + rs.size());
            out = set_concat(pool_, ls, e.right());
            out.merge(rs);
            break;
        }
        case ExprKind::Shuffle: {
            const ExprSet& ls = support(e.left());
            const ExprSet& rs = support(e.right());
            // charged up front: the product is the actual work
            charge(ls.size() * rs.size() + ls.size() + rs.size());
            out = set_shuffle(pool_, ls, rs);
            out.merge(set_shuffle_right(pool_, ls, e.right()));
            out.merge(set_shuffle_left(pool_, e.left(), rs));
            break;
        }
        case ExprKind::Star: {
            const ExprSet& ls = support(e.left());
            charge(ls.size());
            out = set_concat(pool_, ls, e);
            break;
        }
        }
        return memo_.emplace(e.id(), std::move(out)).first->second;
    }

private:
    void charge(std::size_t work) {
        if (limits_.max_set_items == 0) return;
        spent_ += work;
        if (spent_ > limits_.max_set_items) {
            throw BudgetError("support computation exceeds the set-element budget");
        }
    }

    ExprPool& pool_;
    DeriveLimits limits_;
    std::size_t spent_ = 0;
    std::unordered_map<std::uint32_t, ExprSet> memo_;
};

ExprSet derive_one(ExprPool& pool, Expr e, int symbol) {
    ExprSet out;
    switch (e.kind()) {
    case ExprKind::Empty:
    case ExprKind::Eps:
        break;
    case ExprKind::Sym:
        if (e.symbol_index() == symbol) out.insert(pool.eps());
        break;
    case ExprKind::Union:
        out = derive_one(pool, e.left(), symbol);
        out.merge(derive_one(pool, e.right(), symbol));
        break;
    case ExprKind::Concat:
        out = set_concat(pool, derive_one(pool, e.left(), symbol), e.right());
        if (e.left().nullable()) out.merge(derive_one(pool, e.right(), symbol));
        break;
    case ExprKind::Shuffle:
        out = set_shuffle_right(pool, derive_one(pool, e.left(), symbol), e.right());
        out.merge(set_shuffle_left(pool, e.left(), derive_one(pool, e.right(), symbol)));
        break;
    case ExprKind::Star:
        out = set_concat(pool, derive_one(pool, e.left(), symbol), e);
        break;
    }
    return out;
}

} // namespace

ExprSet pi(ExprPool& pool, Expr e, const DeriveLimits& limits) {
    PiBuilder builder(pool, limits);
    return builder.support(e);
}

ExprSet partial_derivative(ExprPool& pool, Expr e, int symbol) {
    if (symbol < 0 || symbol >= pool.alphabet().size()) {
        throw std::invalid_argument("symbol index out of range");
    }
    return derive_one(pool, e, symbol);
}

ExprSet derivative_by_word(ExprPool& pool, Expr e, const Word& w) {
    ExprSet current;
    current.insert(e);
    for (int symbol : w) {
        ExprSet next;
        for (Expr g : current) {
            next.merge(partial_derivative(pool, g, symbol));
        }
        current = std::move(next);
    }
    return current;
}

DerivClosure closure(ExprPool& pool, Expr e, const DeriveLimits& limits) {
    DerivClosure result;
    result.origin = e;
    result.all.insert(e);

    std::deque<Expr> queue{e};
    int k = pool.alphabet().size();
    while (!queue.empty()) {
        Expr g = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a) {
            ExprSet derived = derive_one(pool, g, a);
            for (Expr d : derived) {
                result.proper.insert(d);
                if (result.all.insert(d)) {
                    if (result.all.size() > limits.max_states) {
                        throw BudgetError("derivative closure exceeds the state budget");
                    }
                    queue.push_back(d);
                }
            }
        }
    }
    return result;
}

BigInt p_upper(Expr e) {
    switch (e.kind()) {
    case ExprKind::Empty:
    case ExprKind::Eps:
        return 0;
    case ExprKind::Sym:
        return 1;
    case ExprKind::Union:
    case ExprKind::Concat:
        return p_upper(e.left()) + p_upper(e.right());
    case ExprKind::Shuffle: {
        BigInt a = p_upper(e.left());
        BigInt b = p_upper(e.right());
        return a * b + a + b;
    }
    case ExprKind::Star:
        return p_upper(e.left());
    }
    return 0;
}

bool check_support(ExprPool& pool, Expr e, int limit, const OracleLimits& limits) {
    if (limit > limits.max_len) throw BudgetError("length bound exceeds the oracle cap");

    ExprSet prebase = pi(pool, e);
    prebase.insert(e);

    int k = pool.alphabet().size();
    for (Expr g : prebase) {
        BoundedLang lhs = bounded_language(g, limit, limits);

        std::set<Word> rhs;
        if (g.nullable()) rhs.insert(Word{});
        if (limit >= 1) {
            for (int a = 0; a < k; ++a) {
                for (Expr d : derive_one(pool, g, a)) {
                    BoundedLang tail = bounded_language(d, limit - 1, limits);
                    for (const auto& w : tail.words) {
                        Word prefixed;
                        prefixed.reserve(w.size() + 1);
                        prefixed.push_back(a);
                        prefixed.insert(prefixed.end(), w.begin(), w.end());
                        rhs.insert(std::move(prefixed));
                    }
                }
            }
        }
        if (lhs.words != rhs) return false;
    }
    return true;
}

} // namespace sre
