/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace ipart {

LawResult& LawReport::entry(const std::string& law) {
  auto it = std::find_if(laws_.begin(), laws_.end(), [&](const LawResult& r) { return r.law == law; });
  if (it != laws_.end()) return *it;
  LawResult r;
  r.law = law;
  laws_.push_back(std::move(r));
  return laws_.back();
}

void LawReport::declare(const std::string& law) { entry(law); }

void LawReport::check(const std::string& law, bool ok, const std::string& counterexample) {
  LawResult& r = entry(law);
  ++r.checks;
  if (!ok && r.passed) {
    r.passed = false;
    r.counterexample = counterexample;
  }
}

bool LawReport::passed() const {
  return std::all_of(laws_.begin(), laws_.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& r : laws_)
    if (r.law == law) return &r;
  return nullptr;
}

void LawReport::merge(const LawReport& other) {
  for (const auto& r : other.laws_) {
    LawResult& mine = entry(r.law);
    mine.checks += r.checks;
    if (!r.passed && mine.passed) {
      mine.passed = false;
      mine.counterexample = r.counterexample;
    }
  }
}

std::string LawReport::to_jsonl() const {
  std::string out;
  for (const auto& r : laws_) {
    nlohmann::ordered_json j;
    j["law"] = r.law;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    j["checks"] = r.checks;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace ipart
