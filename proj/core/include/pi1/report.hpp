#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pi1 {

struct CheckReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string what) {
    passed = false;
    failures.push_back(std::move(what));
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
  void merge(const CheckReport& other) {
    passed = passed && other.passed;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace pi1
