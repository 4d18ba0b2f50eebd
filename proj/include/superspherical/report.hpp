#pragma once

#include <map>
#include <string>
#include <vector>

namespace superspherical {

struct CheckItem {
    std::string name;
    bool pass = true;
    // Set on failure: a short description of the first counterexample.
    std::string witness;
    // Extra figures (ranks, counts), values already formatted.
    std::map<std::string, std::string> data;
};

struct CheckReport {
    std::string suite;
    unsigned degree = 0;
    std::vector<CheckItem> items;
    double seconds = 0;

    bool pass() const;
    CheckItem &add(std::string name, bool pass, std::string witness = {});
    // Appends the items of `other`, prefixing their names with `prefix`.
    void merge(const CheckReport &other, const std::string &prefix = {});
};

} // namespace superspherical
