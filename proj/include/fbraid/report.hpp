#pragma once

#include <string>
#include <vector>

namespace fbraid {

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Flat pass/fail report shared by the relation suite, the derivation
// verifier and the geometry checks.
struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  void add(std::string id, bool pass, std::string detail = "") {
    items.push_back(CheckItem{std::move(id), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const CheckItem& item : items)
      if (!item.pass) return false;
    return true;
  }
};

}  // namespace fbraid
