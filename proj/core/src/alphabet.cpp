#include "sre/alphabet.hpp"

#include <stdexcept>

namespace sre {

bool valid_symbol_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return false;
    }
    return true;
}

Alphabet::Alphabet(std::vector<std::string> names) {
    symbols_.reserve(names.size());
    for (auto& name : names) {
        if (!valid_symbol_name(name)) {
            throw std::invalid_argument("invalid symbol name: '" + name + "'");
        }
        for (const auto& existing : symbols_) {
            if (existing.name == name) {
                throw std::invalid_argument("duplicate symbol: '" + name + "'");
            }
        }
        symbols_.push_back(Symbol{std::move(name)});
    }
}

Alphabet Alphabet::prefix(int k) {
    if (k < 0 || k > 26) {
        throw std::invalid_argument("single-letter alphabet supports at most 26 symbols");
    }
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(std::move(names));
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

} // namespace sre
