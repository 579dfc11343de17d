#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>

#include "posetdet/ring.hpp"

namespace posetdet {

enum class Verdict { pass, fail, hypothesis_failed };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::hypothesis_failed: return "HYPOTHESIS-FAILED";
  }
  return "?";
}

/// Outcome of checking one determinant identity on one instance.
struct IdentityReport {
  std::string name;
  std::string description;
  std::size_t dimension = 0;
  RingValue computed;
  RingValue predicted;
  Verdict verdict = Verdict::fail;
  std::chrono::duration<double> elapsed{0};
  /// Optional human-readable factorization of the prediction.
  std::string factored;

  bool passed() const { return verdict == Verdict::pass; }

  /// "PASS <name> det=<value> predicted=<value>"
  std::string line() const {
    std::string out = std::string(verdict_name(verdict)) + " " + name + " det=" + computed.to_string() +
                      " predicted=" + predicted.to_string();
    if (!factored.empty()) out += " factored=" + factored;
    return out;
  }

  /// Tab-separated: name, n, det, predicted, verdict.
  std::string machine_line() const {
    return name + "\t" + std::to_string(dimension) + "\t" + computed.to_string() + "\t" + predicted.to_string() +
           "\t" + verdict_name(verdict);
  }
};

/// Verdict is pass iff the two sides are identical ring values.
inline IdentityReport make_report(std::string name, std::string description, std::size_t dimension,
                                  RingValue computed, RingValue predicted,
                                  std::chrono::steady_clock::time_point started) {
  IdentityReport r;
  r.name = std::move(name);
  r.description = std::move(description);
  r.dimension = dimension;
  r.verdict = computed == predicted ? Verdict::pass : Verdict::fail;
  r.computed = std::move(computed);
  r.predicted = std::move(predicted);
  r.elapsed = std::chrono::steady_clock::now() - started;
  return r;
}

}  // namespace posetdet
