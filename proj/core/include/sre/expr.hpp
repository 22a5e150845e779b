#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "sre/alphabet.hpp"

namespace sre {

class ExprPool;

enum class ExprKind : std::uint8_t {
    Empty,   // the empty language, printed `$`, only legal at top level
    Eps,     // the empty word, printed `@`
    Sym,     // a single alphabet symbol
    Union,   // +
    Concat,  // . or juxtaposition
    Shuffle, // #
    Star,    // postfix *
};

namespace detail {

struct ExprNode {
    ExprKind kind;
    bool nullable;
    std::int32_t sym;        // symbol index for Sym nodes, -1 otherwise
    const ExprNode* left;    // the only child of Star
    const ExprNode* right;
    std::uint32_t id;        // dense, creation order within the owning pool
    std::uint32_t size;      // symbol count, parentheses excluded
    std::uint32_t width;     // number of Sym leaves
    const ExprPool* pool;
};

// Open-addressing set of interned nodes, keyed by node identity. The
// closure and support computations insert here millions of times, so this
// stays deliberately minimal.
class NodeSet {
public:
    bool insert(const ExprNode* p) {
        if (count_ * 4 >= slots_.size() * 3) grow();
        std::size_t idx = probe(slots_, p);
        if (slots_[idx]) return false;
        slots_[idx] = p;
        ++count_;
        return true;
    }

    bool contains(const ExprNode* p) const {
        if (slots_.empty()) return false;
        return slots_[probe(slots_, p)] != nullptr;
    }

    std::size_t size() const noexcept { return count_; }

private:
    static std::size_t probe(const std::vector<const ExprNode*>& slots, const ExprNode* p) {
        std::size_t mask = slots.size() - 1;
        std::size_t idx = (p->id * 0x9e3779b97f4a7c15ULL) & mask;
        while (slots[idx] && slots[idx] != p) idx = (idx + 1) & mask;
        return idx;
    }

    void grow() {
        std::vector<const ExprNode*> next(slots_.empty() ? 16 : slots_.size() * 2, nullptr);
        for (const ExprNode* p : slots_) {
            if (p) next[probe(next, p)] = p;
        }
        slots_ = std::move(next);
    }

    std::vector<const ExprNode*> slots_;
    std::size_t count_ = 0;
};

} // namespace detail

// A handle to an interned, immutable expression node. Handles are cheap to
// copy and compare; two handles from the same pool are equal iff the
// expressions are structurally equal. A handle must not outlive its pool.
class Expr {
public:
    Expr() = default;

    bool valid() const noexcept { return node_ != nullptr; }
    ExprKind kind() const noexcept { return node_->kind; }

    bool is(ExprKind k) const noexcept { return node_->kind == k; }

    // Child accessors; left() is the single child of Star.
    Expr left() const noexcept { return Expr(node_->left); }
    Expr right() const noexcept { return Expr(node_->right); }

    int symbol_index() const noexcept { return node_->sym; }

    // Number of symbols, parentheses not counted: leaves and the Star
    // marker count 1 each, every binary operator adds 1.
    int size() const noexcept { return static_cast<int>(node_->size); }

    // Number of alphabet-symbol occurrences (Sym leaves).
    int alphabetic_width() const noexcept { return static_cast<int>(node_->width); }

    // True iff the empty word belongs to the denoted language.
    bool nullable() const noexcept { return node_->nullable; }

    std::uint32_t id() const noexcept { return node_->id; }
    const ExprPool& pool() const noexcept { return *node_->pool; }
    const Alphabet& alphabet() const noexcept;

    friend bool operator==(Expr a, Expr b) noexcept { return a.node_ == b.node_; }
    friend bool operator!=(Expr a, Expr b) noexcept { return a.node_ != b.node_; }

    // Orders by interning id; used for canonical set comparisons.
    friend bool operator<(Expr a, Expr b) noexcept { return a.node_->id < b.node_->id; }

    const detail::ExprNode* node() const noexcept { return node_; }

private:
    friend class ExprPool;
    explicit Expr(const detail::ExprNode* n) : node_(n) {}

    const detail::ExprNode* node_ = nullptr;
};

// Arena and interning table for expressions over one alphabet.
//
// Construction (the make_* functions) requires exclusive access to the
// pool; reading through Expr handles never does, so fully built
// expressions can be shared across threads freely.
class ExprPool {
public:
    explicit ExprPool(Alphabet alphabet);

    ExprPool(const ExprPool&) = delete;
    ExprPool& operator=(const ExprPool&) = delete;

    const Alphabet& alphabet() const noexcept { return alphabet_; }

    Expr empty() noexcept { return Expr(empty_); }
    Expr eps() noexcept { return Expr(eps_); }
    Expr sym(int index);

    // Binary constructors reject Empty children: the grammar produces the
    // empty set only as a whole expression, never inside one.
    Expr make_union(Expr a, Expr b);
    Expr make_concat(Expr a, Expr b);
    Expr make_shuffle(Expr a, Expr b);
    Expr make_star(Expr a);

    std::size_t node_count() const noexcept { return nodes_.size(); }

private:
    const detail::ExprNode* intern(ExprKind kind, const detail::ExprNode* l,
                                   const detail::ExprNode* r, std::int32_t sym);
    void check_child(Expr e) const;

    static std::uint64_t key_hash(ExprKind kind, std::uint32_t a, std::uint32_t b,
                                  std::int32_t sym);
    std::size_t probe(ExprKind kind, const detail::ExprNode* l, const detail::ExprNode* r,
                      std::int32_t sym) const;
    void grow_table();

    Alphabet alphabet_;
    std::deque<detail::ExprNode> nodes_; // stable addresses
    std::vector<const detail::ExprNode*> table_; // open addressing over nodes_
    std::vector<const detail::ExprNode*> syms_;
    const detail::ExprNode* empty_ = nullptr;
    const detail::ExprNode* eps_ = nullptr;
};

// A finite set of expressions from one pool, deduplicated by structural
// equality. Iteration follows insertion order, which is deterministic for
// a deterministic computation; equality is order-insensitive.
class ExprSet {
public:
    ExprSet() = default;

    bool insert(Expr e) {
        if (!index_.insert(e.node())) return false;
        items_.push_back(e);
        return true;
    }

    bool contains(Expr e) const { return index_.contains(e.node()); }

    void merge(const ExprSet& other) {
        for (Expr e : other.items_) insert(e);
    }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    const std::vector<Expr>& items() const noexcept { return items_; }
    std::vector<Expr> sorted() const; // ascending id

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const ExprSet& a, const ExprSet& b);

private:
    std::vector<Expr> items_;
    detail::NodeSet index_;
};

// Unit-collapsing element constructors shared by the support and
// derivative computations: eps is a two-sided unit of both concatenation
// and shuffle, so `eps . b` = `b`, `a . eps` = `a`, and likewise for `#`.
// Arguments must not be Empty.
Expr concat_expr(ExprPool& pool, Expr a, Expr b);
Expr shuffle_expr(ExprPool& pool, Expr a, Expr b);

// Elementwise images with the unit rules applied per element. A
// Concat/Shuffle with Empty on the expression side yields the empty set.
ExprSet set_concat(ExprPool& pool, const ExprSet& s, Expr beta);
ExprSet set_shuffle(ExprPool& pool, const ExprSet& s, const ExprSet& t);
ExprSet set_shuffle_right(ExprPool& pool, const ExprSet& s, Expr beta);
ExprSet set_shuffle_left(ExprPool& pool, Expr alpha, const ExprSet& t);

} // namespace sre

template <>
struct std::hash<sre::Expr> {
    std::size_t operator()(sre::Expr e) const noexcept {
        return std::hash<const void*>()(e.node());
    }
};
