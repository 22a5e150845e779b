#include "sre/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace sre {

const Alphabet& Expr::alphabet() const noexcept { return node_->pool->alphabet(); }

ExprPool::ExprPool(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    table_.assign(64, nullptr);
    empty_ = intern(ExprKind::Empty, nullptr, nullptr, -1);
    eps_ = intern(ExprKind::Eps, nullptr, nullptr, -1);
    syms_.resize(static_cast<std::size_t>(alphabet_.size()), nullptr);
}

std::uint64_t ExprPool::key_hash(ExprKind kind, std::uint32_t a, std::uint32_t b,
                                 std::int32_t sym) {
    std::uint64_t h = static_cast<std::uint64_t>(kind);
    h = h * 0x9e3779b97f4a7c15ULL + a;
    h ^= h >> 30;
    h = h * 0xbf58476d1ce4e5b9ULL + b;
    h ^= h >> 27;
    h = h * 0x94d049bb133111ebULL + static_cast<std::uint32_t>(sym + 1);
    h ^= h >> 31;
    return h;
}

std::size_t ExprPool::probe(ExprKind kind, const detail::ExprNode* l, const detail::ExprNode* r,
                            std::int32_t sym) const {
    std::uint32_t lid = l ? l->id : 0;
    std::uint32_t rid = r ? r->id : 0;
    std::size_t mask = table_.size() - 1;
    std::size_t idx = static_cast<std::size_t>(key_hash(kind, lid, rid, sym)) & mask;
    for (;;) {
        const detail::ExprNode* n = table_[idx];
        if (!n) return idx;
        if (n->kind == kind && n->left == l && n->right == r && n->sym == sym) return idx;
        idx = (idx + 1) & mask;
    }
}

void ExprPool::grow_table() {
    std::vector<const detail::ExprNode*> old = std::move(table_);
    table_.assign(old.size() * 2, nullptr);
    for (const detail::ExprNode* n : old) {
        if (n) table_[probe(n->kind, n->left, n->right, n->sym)] = n;
    }
}

const detail::ExprNode* ExprPool::intern(ExprKind kind, const detail::ExprNode* l,
                                         const detail::ExprNode* r, std::int32_t sym) {
    if (nodes_.size() * 4 >= table_.size() * 3) grow_table();
    std::size_t idx = probe(kind, l, r, sym);
    if (table_[idx]) return table_[idx];

    detail::ExprNode n{};
    n.kind = kind;
    n.sym = sym;
    n.left = l;
    n.right = r;
    n.id = static_cast<std::uint32_t>(nodes_.size());
    n.pool = this;
    switch (kind) {
    case ExprKind::Empty:
        n.nullable = false;
        n.size = 1;
        n.width = 0;
        break;
    case ExprKind::Eps:
        n.nullable = true;
        n.size = 1;
        n.width = 0;
        break;
    case ExprKind::Sym:
        n.nullable = false;
        n.size = 1;
        n.width = 1;
        break;
    case ExprKind::Union:
        n.nullable = l->nullable || r->nullable;
        n.size = l->size + r->size + 1;
        n.width = l->width + r->width;
        break;
    case ExprKind::Concat:
    case ExprKind::Shuffle:
        n.nullable = l->nullable && r->nullable;
        n.size = l->size + r->size + 1;
        n.width = l->width + r->width;
        break;
    case ExprKind::Star:
        n.nullable = true;
        n.size = l->size + 1;
        n.width = l->width;
        break;
    }
    nodes_.push_back(n);
    const detail::ExprNode* stored = &nodes_.back();
    table_[idx] = stored;
    return stored;
}

void ExprPool::check_child(Expr e) const {
    if (!e.valid()) throw std::invalid_argument("null expression handle");
    if (&e.pool() != this) throw std::invalid_argument("expression belongs to another pool");
    if (e.is(ExprKind::Empty)) {
        throw std::invalid_argument("the empty set cannot occur inside an expression");
    }
}

Expr ExprPool::sym(int index) {
    if (index < 0 || index >= alphabet_.size()) {
        throw std::invalid_argument("symbol index out of range");
    }
    auto& slot = syms_[static_cast<std::size_t>(index)];
    if (!slot) slot = intern(ExprKind::Sym, nullptr, nullptr, index);
    return Expr(slot);
}

Expr ExprPool::make_union(Expr a, Expr b) {
    check_child(a);
    check_child(b);
    return Expr(intern(ExprKind::Union, a.node(), b.node(), -1));
}

Expr ExprPool::make_concat(Expr a, Expr b) {
    check_child(a);
    check_child(b);
    return Expr(intern(ExprKind::Concat, a.node(), b.node(), -1));
}

Expr ExprPool::make_shuffle(Expr a, Expr b) {
    check_child(a);
    check_child(b);
    return Expr(intern(ExprKind::Shuffle, a.node(), b.node(), -1));
}

Expr ExprPool::make_star(Expr a) {
    check_child(a);
    return Expr(intern(ExprKind::Star, a.node(), nullptr, -1));
}

std::vector<Expr> ExprSet::sorted() const {
    std::vector<Expr> out = items_;
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const ExprSet& a, const ExprSet& b) {
    if (a.size() != b.size()) return false;
    for (Expr e : a.items_) {
        if (!b.contains(e)) return false;
    }
    return true;
}

Expr concat_expr(ExprPool& pool, Expr a, Expr b) {
    if (a.is(ExprKind::Eps)) return b;
    if (b.is(ExprKind::Eps)) return a;
    return pool.make_concat(a, b);
}

Expr shuffle_expr(ExprPool& pool, Expr a, Expr b) {
    if (a.is(ExprKind::Eps)) return b;
    if (b.is(ExprKind::Eps)) return a;
    return pool.make_shuffle(a, b);
}

ExprSet set_concat(ExprPool& pool, const ExprSet& s, Expr beta) {
    ExprSet out;
    if (beta.is(ExprKind::Empty)) return out;
    for (Expr a : s) out.insert(concat_expr(pool, a, beta));
    return out;
}

ExprSet set_shuffle(ExprPool& pool, const ExprSet& s, const ExprSet& t) {
    ExprSet out;
    for (Expr a : s) {
        for (Expr b : t) out.insert(shuffle_expr(pool, a, b));
    }
    return out;
}

ExprSet set_shuffle_right(ExprPool& pool, const ExprSet& s, Expr beta) {
    ExprSet out;
    if (beta.is(ExprKind::Empty)) return out;
    for (Expr a : s) out.insert(shuffle_expr(pool, a, beta));
    return out;
}

ExprSet set_shuffle_left(ExprPool& pool, Expr alpha, const ExprSet& t) {
    ExprSet out;
    if (alpha.is(ExprKind::Empty)) return out;
    for (Expr b : t) out.insert(shuffle_expr(pool, alpha, b));
    return out;
}

} // namespace sre
