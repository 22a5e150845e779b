#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sre {

// A single alphabet symbol. Valid names match [a-z][0-9]*; symbols
// compare by name.
struct Symbol {
    std::string name;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

bool valid_symbol_name(std::string_view name);

// An ordered, duplicate-free list of symbols. The order is fixed at
// construction and indexes are stable, so symbols are passed around as
// plain int indexes everywhere else.
class Alphabet {
public:
    Alphabet() = default;

    // Validates every name and rejects duplicates.
    explicit Alphabet(std::vector<std::string> names);

    // The first k single-letter symbols a, b, ..., z (k <= 26).
    static Alphabet prefix(int k);

    int size() const noexcept { return static_cast<int>(symbols_.size()); }
    const Symbol& at(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }
    std::optional<int> index_of(std::string_view name) const;

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;
};

} // namespace sre
