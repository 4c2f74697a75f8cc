#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oddu {

/// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard,
/// so identical seeds give identical streams on every platform. The modulo
/// reduction in below() is deliberate: the tiny bias is irrelevant for the
/// ranges used here and keeps the mapping reproducible.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    /// Integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

/// One line of a verification report.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample or extra context, empty when passing
};

/// Result of a self-check; failures are data, not errors.
struct Report {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    std::string summary() const {
        std::string out;
        for (const auto& it : items) {
            out += it.name;
            out += it.pass ? ": PASS" : ": FAIL";
            if (!it.detail.empty()) {
                out += " (";
                out += it.detail;
                out += ")";
            }
            out += "\n";
        }
        return out;
    }
};

} // namespace oddu
