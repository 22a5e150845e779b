#include "sre/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>

#include "json.hpp"

#include "sre/errors.hpp"
#include "sre/parse.hpp"

namespace sre {

namespace {

std::vector<std::uint32_t> step(const Nfa& nfa, const std::vector<std::uint32_t>& states,
                                int symbol) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : states) {
        const auto& targets = nfa.transitions[s][static_cast<std::size_t>(symbol)];
        next.insert(next.end(), targets.begin(), targets.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

bool accepts(const Nfa& nfa, const std::vector<std::uint32_t>& states) {
    return std::any_of(states.begin(), states.end(),
                       [&](std::uint32_t s) { return nfa.is_final(s); });
}

void collect_accepted(const Nfa& nfa, const std::vector<std::uint32_t>& states, int remaining,
                      Word& prefix, std::set<Word>& out, const OracleLimits& limits) {
    if (states.empty()) return;
    if (accepts(nfa, states)) {
        out.insert(prefix);
        if (out.size() > limits.max_words) {
            throw BudgetError("accepted-word enumeration exceeds the word-set guard");
        }
    }
    if (remaining == 0) return;
    for (int a = 0; a < nfa.alphabet.size(); ++a) {
        prefix.push_back(a);
        collect_accepted(nfa, step(nfa, states, a), remaining - 1, prefix, out, limits);
        prefix.pop_back();
    }
}

} // namespace

bool Nfa::is_final(std::uint32_t s) const {
    return std::binary_search(finals.begin(), finals.end(), s);
}

Nfa build_apd(ExprPool& pool, Expr e, const DeriveLimits& limits) {
    Nfa nfa;
    nfa.alphabet = pool.alphabet();
    int k = nfa.alphabet.size();

    std::unordered_map<std::uint32_t, std::uint32_t> index; // expr id -> state
    auto state_of = [&](Expr g) {
        auto [it, inserted] = index.emplace(g.id(), static_cast<std::uint32_t>(nfa.states.size()));
        if (inserted) {
            if (nfa.states.size() >= limits.max_states) {
                throw BudgetError("partial derivative automaton exceeds the state budget");
            }
            nfa.states.push_back(g);
        }
        return it->second;
    };

    state_of(e);
    nfa.initial = {0};
    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        Expr g = nfa.states[s];
        nfa.transitions.resize(nfa.states.size());
        nfa.transitions[s].resize(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            ExprSet derived = partial_derivative(pool, g, a);
            auto& row = nfa.transitions[s][static_cast<std::size_t>(a)];
            row.reserve(derived.size());
            for (Expr d : derived) row.push_back(state_of(d));
            std::sort(row.begin(), row.end());
        }
    }
    nfa.transitions.resize(nfa.states.size());
    for (auto& per_state : nfa.transitions) per_state.resize(static_cast<std::size_t>(k));

    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        if (nfa.states[s].nullable()) nfa.finals.push_back(s);
    }
    return nfa;
}

bool nfa_member(const Nfa& nfa, const Word& w) {
    std::vector<std::uint32_t> current = nfa.initial;
    for (int a : w) {
        if (a < 0 || a >= nfa.alphabet.size()) {
            throw std::invalid_argument("word symbol outside the automaton alphabet");
        }
        current = step(nfa, current, a);
        if (current.empty()) return false;
    }
    return accepts(nfa, current);
}

bool right_language_check(const Nfa& nfa, std::uint32_t state, int limit,
                          const OracleLimits& limits) {
    if (state >= nfa.states.size()) throw std::invalid_argument("state index out of range");
    if (limit > limits.max_len) throw BudgetError("length bound exceeds the oracle cap");

    std::set<Word> accepted;
    Word prefix;
    std::vector<std::uint32_t> start{state};
    collect_accepted(nfa, start, limit, prefix, accepted, limits);

    BoundedLang expected = bounded_language(nfa.states[state], limit, limits);
    return accepted == expected.words;
}

EquivResult bounded_equiv(ExprPool& pool, Expr e1, Expr e2, int limit,
                          const DeriveLimits& limits) {
    Nfa a = build_apd(pool, e1, limits);
    Nfa b = build_apd(pool, e2, limits);
    int k = pool.alphabet().size();

    using Pair = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    std::map<Pair, Word> seen; // reached subset pair -> shortest reaching word
    std::deque<const std::pair<const Pair, Word>*> queue;

    auto visit = [&](Pair pair, Word prefix) -> std::optional<Word> {
        if (accepts(a, pair.first) != accepts(b, pair.second)) return prefix;
        auto [it, inserted] = seen.emplace(std::move(pair), std::move(prefix));
        if (inserted) {
            if (seen.size() > limits.max_states) {
                throw BudgetError("equivalence walk exceeds the state budget");
            }
            queue.push_back(&*it);
        }
        return std::nullopt;
    };

    if (auto w = visit({a.initial, b.initial}, {})) return {false, *w};
    while (!queue.empty()) {
        const auto* entry = queue.front();
        queue.pop_front();
        const auto& [pair, prefix] = *entry;
        if (static_cast<int>(prefix.size()) >= limit) continue;
        for (int s = 0; s < k; ++s) {
            Word next_prefix = prefix;
            next_prefix.push_back(s);
            Pair next{step(a, pair.first, s), step(b, pair.second, s)};
            if (auto w = visit(std::move(next), std::move(next_prefix))) {
                return {false, *w};
            }
        }
    }
    return {true, {}};
}

std::string export_json(const Nfa& nfa) {
    nlohmann::ordered_json j;
    j["alphabet"] = nlohmann::json::array();
    for (const auto& s : nfa.alphabet.symbols()) j["alphabet"].push_back(s.name);
    j["states"] = nlohmann::json::array();
    for (Expr e : nfa.states) j["states"].push_back(pretty_print(e));
    j["initial"] = nfa.initial;
    j["final"] = nfa.finals;
    auto& transitions = j["transitions"] = nlohmann::json::array();
    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        for (int a = 0; a < nfa.alphabet.size(); ++a) {
            for (std::uint32_t t : nfa.transitions[s][static_cast<std::size_t>(a)]) {
                transitions.push_back({s, nfa.alphabet.at(a).name, t});
            }
        }
    }
    return j.dump(2) + "\n";
}

std::string export_dot(const Nfa& nfa) {
    std::string out = "digraph apd {\n  rankdir=LR;\n  __start [shape=point, label=\"\"];\n";
    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        out += "  " + std::to_string(s) + " [shape=" +
               (nfa.is_final(s) ? "doublecircle" : "circle") + ", label=\"" +
               pretty_print(nfa.states[s]) + "\"];\n";
    }
    for (std::uint32_t s : nfa.initial) {
        out += "  __start -> " + std::to_string(s) + ";\n";
    }
    for (std::uint32_t s = 0; s < nfa.states.size(); ++s) {
        for (int a = 0; a < nfa.alphabet.size(); ++a) {
            for (std::uint32_t t : nfa.transitions[s][static_cast<std::size_t>(a)]) {
                out += "  " + std::to_string(s) + " -> " + std::to_string(t) + " [label=\"" +
                       nfa.alphabet.at(a).name + "\"];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

Nfa import_json(ExprPool& pool, std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);

    std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
    Alphabet alphabet(names);
    if (!(alphabet == pool.alphabet())) {
        throw std::invalid_argument("automaton alphabet does not match the pool alphabet");
    }

    Nfa nfa;
    nfa.alphabet = alphabet;
    for (const auto& label : j.at("states")) {
        nfa.states.push_back(parse(pool, label.get<std::string>()));
    }
    nfa.initial = j.at("initial").get<std::vector<std::uint32_t>>();
    nfa.finals = j.at("final").get<std::vector<std::uint32_t>>();
    nfa.transitions.assign(nfa.states.size(), std::vector<std::vector<std::uint32_t>>(
                                                  static_cast<std::size_t>(alphabet.size())));
    for (const auto& t : j.at("transitions")) {
        std::uint32_t from = t.at(0).get<std::uint32_t>();
        auto symbol = alphabet.index_of(t.at(1).get<std::string>());
        std::uint32_t to = t.at(2).get<std::uint32_t>();
        if (!symbol || from >= nfa.states.size() || to >= nfa.states.size()) {
            throw std::invalid_argument("malformed transition in automaton JSON");
        }
        nfa.transitions[from][static_cast<std::size_t>(*symbol)].push_back(to);
    }
    for (auto& per_state : nfa.transitions) {
        for (auto& row : per_state) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }
    return nfa;
}

} // namespace sre
