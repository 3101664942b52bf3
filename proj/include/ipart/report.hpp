/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ipart {

struct LawResult {
  std::string law;
  bool passed = true;
  std::optional<std::string> counterexample;  // first failure only
  long checks = 0;
};

/*
 * Outcome of a verifier: one entry per law, in first-use order. Serialized as
 * JSON lines {law, status, counterexample?}.
 */
class LawReport {
 public:
  /* Records one check of `law`; the counterexample is kept for the first failure. */
  void check(const std::string& law, bool ok, const std::string& counterexample = {});
  template <class F>
  void check_lazy(const std::string& law, bool ok, F&& describe) {
    check(law, ok, ok ? std::string() : describe());
  }
  /* Declares a law so it shows up even when vacuous. */
  void declare(const std::string& law);

  bool passed() const;
  const std::vector<LawResult>& laws() const { return laws_; }
  const LawResult* find(const std::string& law) const;
  void merge(const LawReport& other);

  std::string to_jsonl() const;

 private:
  LawResult& entry(const std::string& law);
  std::vector<LawResult> laws_;
};

}  // namespace ipart
