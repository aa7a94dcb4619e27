#pragma once

#include <string>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

enum class Verdict { pass, fail, vacuous, bound_exceeded };

std::string verdict_name(Verdict v);

// Result of running one theorem verifier: each assertion made along the way
// becomes a law entry.  `vacuous` means a hypothesis was unmet and nothing
// was asserted.
struct TheoremReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<LawStatus> laws;
  std::string note;

  bool ok() const { return verdict != Verdict::fail; }
  void add(LawStatus law) {
    if (!law.ok) verdict = Verdict::fail;
    laws.push_back(std::move(law));
  }
};

// What a CLI command prints.  Deterministic for identical inputs except for
// timing_ms, which the renderers put on a line of its own so consumers can
// strip it.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, digest
  Verdict verdict = Verdict::pass;
  std::string conclusion;
  Witness witnesses;
  std::vector<LawStatus> laws;
  long long timing_ms = 0;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace qlab
