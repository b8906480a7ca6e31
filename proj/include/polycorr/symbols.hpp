#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace polycorr {

/// Formal irrational rotation angles are interned global symbols. Every
/// Phase refers to them by id; equality of angles is equality of ids.
/// Declared mutual rational independence of distinct symbols (and of each
/// symbol with 1) is the modeling assumption all exact arithmetic rests on.
uint32_t irr_intern(const std::string& name);
const std::string& irr_name(uint32_t id);

/// Numeric assignments per symbol, for the floating evaluation path.
class IrrAssign {
  public:
    IrrAssign() = default;
    void set(const std::string& name, double value) { values_[irr_intern(name)] = value; }
    double get(uint32_t id) const;
    bool has(uint32_t id) const { return values_.count(id) != 0; }

  private:
    std::map<uint32_t, double> values_;
};

}  // namespace polycorr
