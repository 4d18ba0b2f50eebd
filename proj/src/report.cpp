#include "superspherical/report.hpp"

#include <algorithm>

namespace superspherical {

bool CheckReport::pass() const
{
    return std::all_of(items.begin(), items.end(), [](const CheckItem &i) { return i.pass; });
}

CheckItem &CheckReport::add(std::string name, bool ok, std::string witness)
{
    items.push_back(CheckItem{std::move(name), ok, std::move(witness), {}});
    return items.back();
}

void CheckReport::merge(const CheckReport &other, const std::string &prefix)
{
    for (auto item : other.items) {
        item.name = prefix + item.name;
        items.push_back(std::move(item));
    }
    seconds += other.seconds;
}

} // namespace superspherical
