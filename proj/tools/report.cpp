#include "report.hpp"

#include <sstream>

namespace picnum::cli {

std::string js(Int v) { return to_string(v); }
std::string js(const Rational& q) { return q.str(); }
std::string js(bool b) { return b ? "true" : "false"; }

std::string Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["citations"] = citations;
  j["caveats"] = caveats;
  return j.dump(2);
}

namespace {

void text_block(std::ostringstream& os, const std::string& heading, const json& obj,
                int depth = 0) {
  std::string pad(2 * depth, ' ');
  if (!heading.empty()) os << pad << heading << ":\n";
  std::size_t width = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    width = std::max(width, it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_object()) {
      text_block(os, it.key(), *it, depth + 1);
    } else if (it->is_array()) {
      os << pad << "  " << it.key() << ":\n";
      for (const auto& row : *it) {
        if (row.is_object()) {
          os << pad << "    -";
          for (auto rit = row.begin(); rit != row.end(); ++rit)
            os << " " << rit.key() << "=" << rit->get<std::string>();
          os << "\n";
        } else {
          os << pad << "    - " << row.get<std::string>() << "\n";
        }
      }
    } else {
      os << pad << "  " << it.key() << ":";
      os << std::string(width - it.key().size() + 1, ' ');
      os << it->get<std::string>() << "\n";
    }
  }
}

}  // namespace

std::string Report::to_text(std::optional<double> millis) const {
  std::ostringstream os;
  os << command << "\n";
  text_block(os, "inputs", inputs);
  text_block(os, "outputs", outputs);
  if (!citations.empty()) {
    os << "citations:\n";
    for (const auto& c : citations) os << "  - " << c << "\n";
  }
  if (!caveats.empty()) {
    os << "caveats:\n";
    for (const auto& c : caveats) os << "  - " << c << "\n";
  }
  if (millis) {
    os << "timing: " << static_cast<long long>(*millis * 1000.0) / 1000.0 << " ms\n";
  }
  return os.str();
}

void put_picard(json& out, const PicardNumerics& p) {
  json pj = json::object();
  switch (p.vanishing) {
    case TransformVanishing::none_known: pj["vanishing"] = "none known"; break;
    case TransformVanishing::e1_zero: pj["vanishing"] = "E1 = 0"; break;
    case TransformVanishing::e0_zero: pj["vanishing"] = "E0 = 0"; break;
  }
  if (p.rank0) pj["rank0"] = js(*p.rank0);
  if (p.rank1) pj["rank1"] = js(*p.rank1);
  if (p.restriction_minus) pj["restriction_minus"] = p.restriction_minus->str();
  if (p.restriction_plus) pj["restriction_plus"] = p.restriction_plus->str();
  if (p.theta_slope) pj["theta_slope"] = js(*p.theta_slope);
  out["picard"] = std::move(pj);
}

void put_popa(json& out, const GuaranteedRanks& p) {
  json pj = json::object();
  pj["r_reduced"] = js(p.r_reduced);
  pj["regime"] = popa_regime_name(p.regime);
  if (p.k_min) pj["k_min"] = js(*p.k_min);
  if (p.R_min) pj["R_min"] = js(*p.R_min);
  out["popa"] = std::move(pj);
}

const char* assumption_name(Assumption a) {
  switch (a) {
    case Assumption::stable: return "stable";
    case Assumption::semistable: return "semistable";
    case Assumption::exists_semistable: return "exists";
  }
  return "?";
}

const char* popa_regime_name(PopaRegime r) {
  switch (r) {
    case PopaRegime::f0_exists: return "F0_exists";
    case PopaRegime::f1_exists: return "F1_exists";
    case PopaRegime::fminus_sum_semistable: return "Fminus_sum_semistable";
    case PopaRegime::not_covered: return "not_covered";
  }
  return "?";
}

const char* segment_case_name(SegmentCase c) {
  switch (c) {
    case SegmentCase::negative: return "negative";
    case SegmentCase::clifford_range: return "clifford_range";
    case SegmentCase::nonspecial: return "nonspecial";
  }
  return "?";
}

const char* orth_kind_name(OrthKind k) {
  switch (k) {
    case OrthKind::tensor: return "tensor";
    case OrthKind::minus_delta: return "minus_delta";
    case OrthKind::plus_delta: return "plus_delta";
  }
  return "?";
}

const char* branch_name(MinusDeltaBranch b) {
  switch (b) {
    case MinusDeltaBranch::nonzero: return "nonzero";
    case MinusDeltaBranch::slope_formula: return "slope_formula";
    case MinusDeltaBranch::chi_degenerate: return "chi_degenerate";
    case MinusDeltaBranch::pole_degenerate: return "pole_degenerate";
  }
  return "?";
}

}  // namespace picnum::cli
