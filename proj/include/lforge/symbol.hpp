#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lforge {

enum class SymbolClass : std::uint8_t {
    State = 0,       // x, y, z roles of the 2ODE (count toward degree)
    Parameter = 1,   // physical parameters and method-introduced constants
    Unknown = 2,     // undetermined ansatz coefficients
};

/// Lightweight symbol handle. The id encodes the class in the top byte so
/// that plain id order realizes the session symbol order
/// state < parameter < unknown, with creation order inside each class.
struct Symbol {
    std::uint32_t id = 0;

    SymbolClass cls() const { return static_cast<SymbolClass>(id >> 24); }

    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
    friend bool operator<(Symbol a, Symbol b) { return a.id < b.id; }
};

/// Owns symbol names and classes. Symbol creation is the only mutation;
/// everything downstream treats the table as read-only, so create symbols
/// up front or synchronize externally.
class Session {
public:
    Symbol make_symbol(const std::string& name, SymbolClass cls) {
        if (by_name_.count(name)) throw std::invalid_argument("symbol name already used: " + name);
        auto& pool = names_[static_cast<int>(cls)];
        if (pool.size() >= (1u << 24)) throw std::length_error("symbol pool exhausted");
        Symbol s{(static_cast<std::uint32_t>(cls) << 24) | static_cast<std::uint32_t>(pool.size())};
        pool.push_back(name);
        by_name_.emplace(name, s);
        return s;
    }

    /// Creates name, name_2, name_3, ... whichever is free.
    Symbol make_fresh(const std::string& base, SymbolClass cls) {
        if (!by_name_.count(base)) return make_symbol(base, cls);
        for (int k = 2;; ++k) {
            std::string cand = base + "_" + std::to_string(k);
            if (!by_name_.count(cand)) return make_symbol(cand, cls);
        }
    }

    const std::string& name(Symbol s) const {
        return names_[static_cast<int>(s.cls())].at(s.id & 0xffffffu);
    }

    std::optional<Symbol> lookup(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(Symbol s) const {
        auto idx = s.id & 0xffffffu;
        return idx < names_[static_cast<int>(s.cls())].size();
    }

    std::size_t count(SymbolClass cls) const { return names_[static_cast<int>(cls)].size(); }

private:
    std::vector<std::string> names_[3];
    std::unordered_map<std::string, Symbol> by_name_;
};

}  // namespace lforge

template <>
struct std::hash<lforge::Symbol> {
    std::size_t operator()(lforge::Symbol s) const noexcept { return std::hash<std::uint32_t>()(s.id); }
};
