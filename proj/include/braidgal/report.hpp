#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidgal/linmap.hpp"

namespace braidgal {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample basis index etc., empty on pass
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto &it : items)
            if (!it.pass)
                return false;
        return true;
    }

    const CheckItem *find(const std::string &name) const {
        for (const auto &it : items)
            if (it.name == name)
                return &it;
        return nullptr;
    }

    const CheckItem *first_failure() const {
        for (const auto &it : items)
            if (!it.pass)
                return &it;
        return nullptr;
    }

    void merge(const CheckReport &other, const std::string &prefix = "") {
        for (const auto &it : other.items)
            items.push_back({prefix + it.name, it.pass, it.detail});
    }
};

/// Record lhs == rhs as a named check, with the first differing domain basis
/// index on failure.
inline void check_equal(CheckReport &rep, const std::string &name, const LinMap &lhs, const LinMap &rhs) {
    CheckItem item{name, false, ""};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        item.detail = "shape mismatch";
    } else if (auto col = lhs.first_differing_column(rhs)) {
        item.detail = "differs on domain basis index " + std::to_string(*col);
    } else {
        item.pass = true;
    }
    rep.items.push_back(std::move(item));
}

} // namespace braidgal
