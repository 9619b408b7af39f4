#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "picnum/classifier.hpp"
#include "picnum/clifford.hpp"
#include "picnum/orthogonality.hpp"
#include "picnum/split_oracle.hpp"

namespace picnum::cli {

using json = nlohmann::ordered_json;

// Every number in a report is a decimal string ("p/q" for rationals) so the
// output is exact and byte-deterministic; no floating point is ever emitted.
std::string js(Int v);
std::string js(const Rational& q);
std::string js(bool b);

// One CLI invocation's result. JSON form is deterministic for identical
// inputs; wall-clock timing is text-mode only for that reason.
struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<std::string> citations;
  std::vector<std::string> caveats;

  std::string to_json() const;                            // pretty, 2-space indent
  std::string to_text(std::optional<double> millis) const;  // aligned key: value
};

// Shared output-block builders.
void put_picard(json& out, const PicardNumerics& p);
void put_popa(json& out, const GuaranteedRanks& p);
const char* assumption_name(Assumption a);
const char* popa_regime_name(PopaRegime r);
const char* segment_case_name(SegmentCase c);
const char* orth_kind_name(OrthKind k);
const char* branch_name(MinusDeltaBranch b);

}  // namespace picnum::cli
