#include "polycorr/symbols.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace polycorr {

namespace {
std::mutex g_mu;
std::map<std::string, uint32_t>& table() {
    static std::map<std::string, uint32_t> t;
    return t;
}
std::vector<std::string>& names() {
    static std::vector<std::string> n;
    return n;
}
}  // namespace

uint32_t irr_intern(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty irrational name");
    std::lock_guard<std::mutex> lock(g_mu);
    auto it = table().find(name);
    if (it != table().end()) return it->second;
    uint32_t id = static_cast<uint32_t>(names().size());
    table().emplace(name, id);
    names().push_back(name);
    return id;
}

const std::string& irr_name(uint32_t id) {
    std::lock_guard<std::mutex> lock(g_mu);
    if (id >= names().size()) throw std::out_of_range("unknown irrational id");
    return names()[id];
}

double IrrAssign::get(uint32_t id) const {
    auto it = values_.find(id);
    if (it == values_.end())
        throw std::invalid_argument("no numeric assignment for irrational '" + irr_name(id) + "'");
    return it->second;
}

}  // namespace polycorr
