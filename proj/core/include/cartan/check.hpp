#pragma once

#include <string>
#include <vector>

namespace cartan {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;  // residual or actual value when failing
};

struct CheckList {
    std::vector<Check> items;

    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back({std::move(name), ok, std::move(detail)});
    }
    bool all_ok() const {
        for (const auto& c : items)
            if (!c.ok) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : items)
            if (!c.ok) return &c;
        return nullptr;
    }
};

}  // namespace cartan
