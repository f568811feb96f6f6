// Machine-readable record of verification outcomes: one item per identity
// checked, carrying a rendered residual witness on failure.
#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace cwb {

struct CheckItem {
  std::string check;    // e.g. "skew (Y,Y) -> M"
  bool pass = true;
  std::string witness;  // rendered residual or note; empty when passing
};

struct VerifyReport {
  std::string subject;
  std::vector<CheckItem> items;

  bool ok() const {
    for (const CheckItem& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const CheckItem& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }

  void add(std::string check, bool pass, std::string witness = "") {
    items.push_back({std::move(check), pass, std::move(witness)});
  }

  std::string summary() const {
    std::ostringstream os;
    os << subject << ": " << (ok() ? "pass" : "FAIL");
    if (const CheckItem* f = first_failure())
      os << " [" << f->check << ": " << f->witness << "]";
    os << " (" << items.size() << " identities)";
    return os.str();
  }
};

}  // namespace cwb
