#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "toric/corpus.hpp"
#include "toric/fan_io.hpp"
#include "toric/report.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

struct LoadedFan {
  Fan fan;
  const CorpusEntry* entry = nullptr;  // set for corpus fans
};

LoadedFan load_fan(const std::string& source) {
  LoadedFan out;
  if (source.rfind("corpus:", 0) == 0) {
    const CorpusEntry* e = corpus_lookup(source.substr(7));
    if (!e) {
      std::string names;
      for (const auto& c : corpus()) names += (names.empty() ? "" : ", ") + c.name;
      throw StructuralError("unknown corpus entry '" + source.substr(7) +
                            "' (available: " + names + ")");
    }
    out.fan = e->fan;
    out.entry = e;
    return out;
  }
  out.fan = fan_from_file(source);
  return out;
}

DivisorClass parse_hypersurface(const LoadedFan& lf, const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{'))
    return divisor_from_json(text, lf.fan.ray_count());
  if (!lf.entry)
    throw StructuralError("named divisor expressions need a corpus fan; "
                          "pass a JSON coefficient vector instead");
  return parse_divisor_expr(*lf.entry, text);
}

CurveClass parse_curve(const LoadedFan& lf, const std::string& text) {
  if (!text.empty() && text[0] == '[') {
    DivisorClass as_vec = divisor_from_json(text, lf.fan.ray_count());
    return CurveClass{as_vec.coeffs};
  }
  if (lf.entry) {
    for (const auto& [name, c] : lf.entry->curves)
      if (name == text) return c;
  }
  throw StructuralError("unknown curve class '" + text + "'");
}

std::vector<DivisorClass> gather_hypersurfaces(const LoadedFan& lf,
                                               const std::vector<std::string>& exprs,
                                               bool anticanonical_flag) {
  std::vector<DivisorClass> hs;
  if (anticanonical_flag) hs.push_back(anticanonical(lf.fan));
  for (const auto& e : exprs) hs.push_back(parse_hypersurface(lf, e));
  if (hs.empty())
    throw StructuralError("no hypersurfaces given; use -H or --anticanonical");
  return hs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of rational-curve generation of H_2 for "
               "complete intersections in smooth toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int jobs = 0;
  unsigned long seed = 0;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "worker threads for per-class computations");
  app.add_option("--seed", seed, "seed for derived randomized runs (reports are deterministic)");

  std::string fan_arg;
  std::vector<std::string> hyp_exprs;
  std::string hyp_dummy;
  bool anti = false;
  std::string class_sel, target_sel;
  auto hyp_option = [&](CLI::App* cmd) {
    // raw tokens, one per -H occurrence (no container splitting of [..] forms)
    cmd->add_option("-H,--hypersurface", hyp_dummy, "ample hypersurface class")
        ->each([&hyp_exprs](std::string s) { hyp_exprs.push_back(std::move(s)); })
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->type_size(1);
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check smooth/complete/projective");
  c_validate->add_option("fan", fan_arg, "corpus:NAME or a fan JSON file")->required();

  CLI::App* c_classes = app.add_subcommand("classes", "contractible curve classes");
  c_classes->add_option("fan", fan_arg)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "full verification report");
  c_verify->add_option("fan", fan_arg)->required();
  hyp_option(c_verify);
  c_verify->add_flag("--anticanonical", anti, "use -K_Y as the hypersurface");

  CLI::App* c_count = app.add_subcommand("count-lines", "line count for one class");
  c_count->add_option("fan", fan_arg)->required();
  hyp_option(c_count);
  c_count->add_flag("--anticanonical", anti);
  c_count->add_option("--class", class_sel, "curve class name or JSON vector")->required();

  CLI::App* c_dec = app.add_subcommand("decompose", "decompose a curve class over "
                                       "the verified contractible classes");
  c_dec->add_option("fan", fan_arg)->required();
  c_dec->add_option("--target", target_sel, "curve class name or JSON vector")->required();

  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);
  (void)seed;

  try {
    LoadedFan lf = load_fan(fan_arg);

    if (c_validate->parsed()) {
      FanValidation v = validate_fan(lf.fan);
      std::cout << (format == "json" ? validation_json(v) : validation_text(v));
      return v.all() ? 0 : 1;
    }

    if (c_classes->parsed()) {
      FanValidation v = validate_fan(lf.fan);
      if (!v.structurally_valid) throw StructuralError(v.error);
      if (!v.smooth || !v.complete || !v.projective) {
        std::cerr << "fan is not smooth projective\n";
        return 1;
      }
      ClassListing listing;
      listing.candidates = enumerate_candidates(lf.fan);
      for (const auto& c : listing.candidates)
        listing.structures.push_back(build_contraction(lf.fan, c));
      std::cout << (format == "json" ? classes_json(lf.fan, listing)
                                     : classes_text(lf.fan, listing));
      return 0;
    }

    if (c_verify->parsed()) {
      auto hs = gather_hypersurfaces(lf, hyp_exprs, anti);
      IHCReport rep = ihc_verdict(lf.fan, hs);
      std::cout << (format == "json" ? ihc_json(lf.fan, rep) : ihc_text(lf.fan, rep));
      return rep.generated ? 0 : 1;
    }

    if (c_count->parsed()) {
      auto hs = gather_hypersurfaces(lf, hyp_exprs, anti);
      CurveClass target = parse_curve(lf, class_sel);
      for (const auto& cand : enumerate_candidates(lf.fan)) {
        if (!(cand.curve_class == target)) continue;
        ClassReport cr = verify_class(lf.fan, hs, cand);
        switch (cr.verdict) {
          case ChernVerdict::NonzeroCount:
            std::cout << cr.count.get_str() << "\n";
            return 0;
          case ChernVerdict::NonzeroPositiveDim:
            std::cout << "positive-dimensional\n";
            return 0;
          default:
            std::cout << to_string(cr.verdict) << "\n";
            return 1;
        }
      }
      std::cerr << "class is not a contractible candidate of this fan\n";
      return 1;
    }

    if (c_dec->parsed()) {
      CurveClass target = parse_curve(lf, target_sel);
      std::vector<CurveClass> gens;
      for (const auto& cand : enumerate_candidates(lf.fan))
        if (cand.status == CandidateStatus::VerifiedContractible)
          gens.push_back(cand.curve_class);
      Decomposition d = decompose_effective(lf.fan, target, gens);
      std::cout << (format == "json" ? decomposition_json(d) : decomposition_text(d));
      return d.found ? 0 : 1;
    }
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
