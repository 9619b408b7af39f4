#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "picnum/errors.hpp"
#include "picnum/fourier_mukai.hpp"
#include "report.hpp"

namespace picnum::cli {
namespace {

const char* kNecessaryCaveat =
    "vanishing of the obstruction is a necessary condition for orthogonality, never a "
    "sufficient one";
const char* kSemistableCaveat =
    "transform-term values assume the bundle is semistable";
const char* kThetaCaveat =
    "theta slope is the slope of the transform restricted to an embedded copy of the "
    "curve; no intrinsic degree against the theta divisor is assigned";
const char* kGgModelCaveat =
    "globally-generated marking of pieces is a modeling assumption (trivial, positive "
    "hyperelliptic powers, generic of degree >= g+1)";
const char* kSplitOnlyCaveat =
    "the oracle universe contains split bundles only; non-split equality witnesses are "
    "outside its reach";

Int arg_int(const std::string& s, const char* name) {
  try {
    return parse_int(s);
  } catch (const error&) {
    throw hypothesis_error(std::string("invalid integer for ") + name + ": '" + s + "'");
  }
}

NumClass arg_class(const std::string& s, const char* name) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw hypothesis_error(std::string(name) + " must look like R:D, got '" + s + "'");
  return NumClass(arg_int(s.substr(0, colon), name), arg_int(s.substr(colon + 1), name));
}

std::pair<Int, Int> arg_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw hypothesis_error("--deg-range must look like LO:HI, got '" + s + "'");
  Int lo = arg_int(s.substr(0, colon), "--deg-range");
  Int hi = arg_int(s.substr(colon + 1), "--deg-range");
  if (lo > hi) throw hypothesis_error("--deg-range must have LO <= HI, got '" + s + "'");
  return {lo, hi};
}

HNPolygon arg_polygon(const std::string& s) {
  std::vector<NumClass> segs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string item =
        comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    if (item.empty()) throw hypothesis_error("empty segment in --polygon '" + s + "'");
    segs.push_back(arg_class(item, "--polygon segment"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return HNPolygon::merge_equal_slopes(std::move(segs));
}

Assumption arg_assumption(const std::string& s) {
  if (s == "stable") return Assumption::stable;
  if (s == "semistable") return Assumption::semistable;
  if (s == "exists") return Assumption::exists_semistable;
  throw hypothesis_error("--assume must be stable|semistable|exists, got '" + s + "'");
}

OrthKind arg_kind(const std::string& s) {
  if (s == "tensor") return OrthKind::tensor;
  if (s == "minus") return OrthKind::minus_delta;
  if (s == "plus") return OrthKind::plus_delta;
  throw hypothesis_error("--kind must be tensor|minus|plus, got '" + s + "'");
}

// ---- subcommand handlers; each fills a Report and returns the exit code ----

int run_classify(Report& rep, const std::string& gs, const std::string& rs,
                 const std::string& ds, const std::string& as) {
  Genus g(arg_int(gs, "--genus"));
  NumClass c(arg_int(rs, "--rank"), arg_int(ds, "--degree"));
  Assumption a = arg_assumption(as);
  rep.inputs["genus"] = js(g.g);
  rep.inputs["rank"] = js(c.r);
  rep.inputs["degree"] = js(c.d);
  rep.inputs["assume"] = assumption_name(a);
  Verdict v = classify(g, c, a);
  rep.outputs["mu"] = js(slope(c));
  rep.outputs["chi"] = js(chi(g, c));
  rep.outputs["regime"] = v.regime;
  rep.outputs["conclusion"] = conclusion_name(v.conclusion);
  if (!v.detail.empty()) rep.outputs["detail"] = v.detail;
  put_picard(rep.outputs, v.picard);
  if (v.popa) put_popa(rep.outputs, *v.popa);
  if (!v.citation.empty()) rep.citations.push_back(v.citation);
  rep.caveats = v.caveats;
  return 0;
}

int run_clifford(Report& rep, const std::string& gs, const std::string& ps) {
  Genus g(arg_int(gs, "--genus"));
  HNPolygon poly = arg_polygon(ps);
  rep.inputs["genus"] = js(g.g);
  rep.inputs["polygon"] = ps;
  CliffordReport cr = h0_upper_bound(g, poly);
  rep.outputs["polygon"] = poly.str();
  rep.outputs["total"] = poly.total().str();
  rep.outputs["mu_max"] = js(poly.mu_max());
  rep.outputs["mu_min"] = js(poly.mu_min());
  rep.outputs["applicable"] = js(cr.applicable);
  rep.outputs["strict_hypotheses"] = js(clifford_hypotheses_strict(g, poly));
  rep.outputs["direct"] = js(cr.direct);
  rep.outputs["bound"] = js(cr.bound);
  rep.outputs["refined_by_duality"] = js(cr.refined_by_duality);
  json segs = json::array();
  for (const auto& sb : cr.per_segment) {
    json row = json::object();
    row["segment"] = sb.segment.str();
    row["case"] = segment_case_name(sb.which);
    row["bound"] = js(sb.bound);
    segs.push_back(std::move(row));
  }
  rep.outputs["per_segment"] = std::move(segs);
  return 0;
}

int run_fm(Report& rep, const std::string& gs, const std::string& rs,
           const std::string& ds, const std::string& restrict_side) {
  Genus g(arg_int(gs, "--genus"));
  NumClass c(arg_int(rs, "--rank"), arg_int(ds, "--degree"));
  rep.inputs["genus"] = js(g.g);
  rep.inputs["rank"] = js(c.r);
  rep.inputs["degree"] = js(c.d);
  if (!restrict_side.empty()) rep.inputs["restrict"] = restrict_side;
  Rational mu = slope(c);
  rep.outputs["mu"] = js(mu);
  rep.outputs["chi"] = js(chi(g, c));
  FMNumerics m = fm_matrix(g, c);
  json mj = json::object();
  mj["R"] = js(m.R);
  mj["D"] = js(m.D);
  rep.outputs["fm_matrix"] = std::move(mj);
  bool transform_term = false;
  if (g.g >= 1 && mu > Rational(2 * g.g - 2)) {
    NumClass f0 = fminus_f0_numerics(g, c);
    rep.outputs["fminus_f0"] = f0.str();
    rep.outputs["fminus_f0_slope"] = js(slope(f0));
    transform_term = true;
  }
  if (g.g >= 1 && mu < Rational(-2)) {
    NumClass f1 = fplus_f1_numerics(g, c);
    rep.outputs["fplus_f1"] = f1.str();
    rep.outputs["fplus_f1_slope"] = js(slope(f1));
    transform_term = true;
  }
  if (!restrict_side.empty()) {
    PicardNumerics p = picard_numerics(g, c, true);
    if (restrict_side == "minus") {
      if (!p.restriction_minus)
        throw hypothesis_error("--restrict minus needs slope > 2g-1, got " + mu.str());
      rep.outputs["restriction"] = p.restriction_minus->str();
    } else if (restrict_side == "plus") {
      if (!p.restriction_plus)
        throw hypothesis_error("--restrict plus needs slope < -1, got " + mu.str());
      rep.outputs["restriction"] = p.restriction_plus->str();
    } else {
      throw hypothesis_error("--restrict must be minus|plus, got '" + restrict_side + "'");
    }
    rep.outputs["theta_slope"] = js(*p.theta_slope);
    rep.caveats.push_back(kThetaCaveat);
    transform_term = true;
  }
  if (transform_term) rep.caveats.push_back(kSemistableCaveat);
  return 0;
}

int run_orth(Report& rep, const std::string& gs, const std::string& es,
             const std::string& fs, const std::string& ks) {
  Genus g(arg_int(gs, "--genus"));
  NumClass e = arg_class(es, "--e");
  NumClass f = arg_class(fs, "--f");
  OrthKind k = arg_kind(ks);
  rep.inputs["genus"] = js(g.g);
  rep.inputs["e"] = e.str();
  rep.inputs["f"] = f.str();
  rep.inputs["kind"] = orth_kind_name(k);
  Int ob = chi_obstruction(g, e, f, k);
  rep.outputs["obstruction"] = js(ob);
  rep.outputs["vanishes"] = js(ob == 0);
  rep.outputs["mu_e"] = js(slope(e));
  rep.outputs["mu_f"] = js(slope(f));
  try {
    rep.outputs["partner_slope"] = js(slope_partner(g, slope(e), k));
  } catch (const pole_error&) {
    rep.outputs["partner_slope"] = "pole";
  }
  if (k == OrthKind::minus_delta) {
    rep.outputs["branch"] = branch_name(minus_delta_branch(g, e, f));
    if (slope(e) != Rational(g.g)) {
      SameSlopeCondition ssc = same_slope_condition(g, e);
      json sj = json::object();
      sj["partner_slope"] = js(ssc.partner_slope);
      sj["common_transform_slope"] = js(ssc.common_transform_slope);
      sj["existence_guaranteed"] = js(ssc.existence_guaranteed);
      rep.outputs["same_slope_condition"] = std::move(sj);
    }
  }
  rep.caveats.push_back(kNecessaryCaveat);
  return 0;
}

int run_popa_value(Report& rep, const std::string& rs, const std::string& hs) {
  Int r = arg_int(rs, "--r");
  Int h = arg_int(hs, "--h");
  rep.inputs["r"] = js(r);
  rep.inputs["h"] = js(h);
  rep.outputs["P"] = js(popa_P(r, h));
  return 0;
}

int run_popa_regimes(Report& rep, const std::string& gs, const std::string& mus) {
  Genus g(arg_int(gs, "--genus"));
  Rational mu = Rational::parse(mus);
  rep.inputs["genus"] = js(g.g);
  rep.inputs["mu"] = js(mu);
  put_popa(rep.outputs, guaranteed_ranks(g, mu));
  return 0;
}

int run_oracle_verify(Report& rep, const std::string& gs, const std::string& ks,
                      const std::string& range, int parallel) {
  Genus g(arg_int(gs, "--genus"));
  Int max_rank = arg_int(ks, "--max-rank");
  auto [lo, hi] = arg_range(range);
  if (parallel < 1) throw hypothesis_error("--parallel must be >= 1");
  // The worker count is an execution detail: it must not influence a single
  // byte of the report, so it is not echoed here.
  rep.inputs["genus"] = js(g.g);
  rep.inputs["max_rank"] = js(max_rank);
  rep.inputs["deg_range"] = js(lo) + ":" + js(hi);

  std::vector<SplitBundle> bundles = enumerate_bundles(g, max_rank, lo, hi);
  std::vector<VerifyReport> results(bundles.size(),
                                    VerifyReport{true, 0, 0, 0, 0, 0, {}, ""});
  auto shard = [&](std::size_t first) {
    for (std::size_t i = first; i < bundles.size(); i += parallel)
      results[i] = verify_bundle(bundles[i]);
  };
  if (parallel == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < parallel; ++t) pool.emplace_back(shard, t);
    for (auto& t : pool) t.join();
  }

  Int failures = 0;
  json bad = json::array();
  for (const auto& r : results)
    if (!r.ok) {
      ++failures;
      bad.push_back(r.failure);
    }
  rep.outputs["bundles"] = js(static_cast<Int>(bundles.size()));
  rep.outputs["failures"] = js(failures);
  rep.outputs["all_passed"] = js(failures == 0);
  rep.outputs["counterexamples"] = std::move(bad);
  rep.outputs["summary"] =
      failures == 0
          ? "all checks passed, " + js(static_cast<Int>(bundles.size())) + " bundles"
          : js(failures) + " counterexamples out of " + js(static_cast<Int>(bundles.size())) +
                " bundles";
  rep.caveats.push_back(kGgModelCaveat);
  rep.caveats.push_back(kSplitOnlyCaveat);
  return failures == 0 ? 0 : 1;
}

int run_sweep(Report& rep, const std::string& gs, const std::string& ks,
              const std::string& range, const std::string& out_path,
              const std::string& as) {
  Genus g(arg_int(gs, "--genus"));
  Int rank_max = arg_int(ks, "--rank-max");
  auto [lo, hi] = arg_range(range);
  Assumption a = arg_assumption(as);
  if (rank_max < 1) throw hypothesis_error("--rank-max must be >= 1");
  rep.inputs["genus"] = js(g.g);
  rep.inputs["rank_max"] = js(rank_max);
  rep.inputs["deg_range"] = js(lo) + ":" + js(hi);
  rep.inputs["assume"] = assumption_name(a);
  rep.inputs["out"] = out_path;

  std::ofstream csv(out_path);
  if (!csv) throw hypothesis_error("cannot open output file '" + out_path + "'");
  csv << "g,r,d,mu,regime,conclusion,rank0,rank1,theta_slope,citation\n";
  Int rows = 0;
  for (Int r = 1; r <= rank_max; ++r) {
    for (Int d = lo; d <= hi; ++d) {
      NumClass c(r, d);
      Verdict v = classify(g, c, a);
      csv << js(g.g) << ',' << js(r) << ',' << js(d) << ',' << js(slope(c)) << ','
          << v.regime << ',' << conclusion_name(v.conclusion) << ','
          << (v.picard.rank0 ? js(*v.picard.rank0) : "") << ','
          << (v.picard.rank1 ? js(*v.picard.rank1) : "") << ','
          << (v.picard.theta_slope ? js(*v.picard.theta_slope) : "") << ','
          << v.citation << '\n';
      ++rows;
    }
  }
  csv.close();
  rep.outputs["rows"] = js(rows);
  rep.outputs["file"] = out_path;
  return 0;
}

}  // namespace
}  // namespace picnum::cli

int main(int argc, char** argv) {
  using namespace picnum;
  using namespace picnum::cli;

  CLI::App app{
      "picnum: exact slope/stability calculus for bundles on curves and their "
      "Picard-side transforms"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a JSON report instead of aligned text");

  std::string genus, rank, degree, assume = "semistable";
  std::string polygon, e_cls, f_cls, kind, restrict_side;
  std::string popa_r, popa_h, mu_str;
  std::string range, out_path, max_rank;
  int parallel = 1;

  auto* c_classify = app.add_subcommand("classify", "strongest conclusion for (g, r, d)");
  c_classify->fallthrough();
  c_classify->add_option("--genus", genus, "curve genus (>= 2)")->required();
  c_classify->add_option("--rank", rank, "bundle rank (>= 1)")->required();
  c_classify->add_option("--degree", degree, "bundle degree")->required();
  c_classify->add_option("--assume", assume, "stable|semistable|exists (default semistable)");

  auto* c_clifford =
      app.add_subcommand("clifford", "section upper bound for a slope polygon");
  c_clifford->fallthrough();
  c_clifford->add_option("--genus", genus, "curve genus (>= 2)")->required();
  c_clifford
      ->add_option("--polygon", polygon,
                   "segments r1:d1,r2:d2,... (merged and sorted by slope)")
      ->required();

  auto* c_fm = app.add_subcommand("fm", "transform numerics for (g, r, d)");
  c_fm->fallthrough();
  c_fm->add_option("--genus", genus, "curve genus")->required();
  c_fm->add_option("--rank", rank, "bundle rank (>= 1)")->required();
  c_fm->add_option("--degree", degree, "bundle degree")->required();
  c_fm->add_option("--restrict", restrict_side,
                   "minus|plus: restriction of the transform to an embedded curve");

  auto* c_orth = app.add_subcommand("orth", "orthogonality obstruction for a pair");
  c_orth->fallthrough();
  c_orth->add_option("--genus", genus, "curve genus")->required();
  c_orth->add_option("--e", e_cls, "first class R:D")->required();
  c_orth->add_option("--f", f_cls, "second class R:D")->required();
  c_orth->add_option("--kind", kind, "tensor|minus|plus")->required();

  auto* c_popa = app.add_subcommand("popa", "effective rank threshold P(r,h)");
  c_popa->fallthrough();
  c_popa->set_help_flag("--help", "print help");  // frees -h for the --h parameter
  c_popa->add_option("--r", popa_r, "rank parameter (>= 1)");
  c_popa->add_option("--h", popa_h, "polarization parameter (>= 1)");
  auto* c_regimes =
      c_popa->add_subcommand("regimes", "guaranteed ranks for a slope at genus g");
  c_regimes->fallthrough();
  c_regimes->add_option("--genus", genus, "curve genus (>= 2)")->required();
  c_regimes->add_option("--mu", mu_str, "slope as P/Q or integer")->required();

  auto* c_oracle =
      app.add_subcommand("oracle-verify", "exhaustively verify split bundles");
  c_oracle->fallthrough();
  c_oracle->add_option("--genus", genus, "curve genus (>= 2)")->required();
  c_oracle->add_option("--max-rank", max_rank, "largest rank to enumerate")->required();
  c_oracle->add_option("--deg-range", range, "piece degree range LO:HI")->required();
  c_oracle->add_option("--parallel", parallel, "worker threads (default 1)");

  auto* c_sweep = app.add_subcommand("sweep", "CSV of verdicts over a (r, d) grid");
  c_sweep->fallthrough();
  c_sweep->add_option("--genus", genus, "curve genus (>= 2)")->required();
  c_sweep->add_option("--rank-max", max_rank, "largest rank")->required();
  c_sweep->add_option("--deg-range", range, "degree range LO:HI")->required();
  c_sweep->add_option("--out", out_path, "CSV output path")->required();
  c_sweep->add_option("--assume", assume, "stable|semistable|exists (default semistable)");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  int code = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (c_classify->parsed()) {
      rep.command = "classify";
      code = run_classify(rep, genus, rank, degree, assume);
    } else if (c_clifford->parsed()) {
      rep.command = "clifford";
      code = run_clifford(rep, genus, polygon);
    } else if (c_fm->parsed()) {
      rep.command = "fm";
      code = run_fm(rep, genus, rank, degree, restrict_side);
    } else if (c_orth->parsed()) {
      rep.command = "orth";
      code = run_orth(rep, genus, e_cls, f_cls, kind);
    } else if (c_popa->parsed()) {
      if (c_regimes->parsed()) {
        rep.command = "popa regimes";
        code = run_popa_regimes(rep, genus, mu_str);
      } else {
        if (popa_r.empty() || popa_h.empty())
          throw hypothesis_error("popa needs --r and --h (or the 'regimes' subcommand)");
        rep.command = "popa";
        code = run_popa_value(rep, popa_r, popa_h);
      }
    } else if (c_oracle->parsed()) {
      rep.command = "oracle-verify";
      code = run_oracle_verify(rep, genus, max_rank, range, parallel);
    } else if (c_sweep->parsed()) {
      rep.command = "sweep";
      code = run_sweep(rep, genus, max_rank, range, out_path, assume);
    }
  } catch (const error& e) {
    if (json_mode) {
      json err;
      err["command"] = rep.command;
      err["error"] = e.what();
      std::cout << err.dump(2) << "\n";
    } else {
      std::cout << "error: " << e.what() << "\n";
    }
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  double millis = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (json_mode)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text(millis);
  return code;
}
