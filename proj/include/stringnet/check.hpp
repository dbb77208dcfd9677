#pragma once

#include <string>
#include <vector>

namespace sn {

// Named pass/fail checks with a witness for each failure.
struct CheckReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string witness;
  };
  std::vector<Item> items;

  void add(std::string name, bool pass, std::string witness = "") {
    items.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  }
  void append(const CheckReport& o, const std::string& prefix = "") {
    for (const auto& it : o.items) items.push_back({prefix + it.name, it.pass, it.witness});
  }
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  // first failing item, or nullptr
  const Item* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
};

}  // namespace sn
