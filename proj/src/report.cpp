#include "toric/report.hpp"

#include <json.hpp>
#include <sstream>

namespace toric {

namespace {

using ojson = nlohmann::ordered_json;

ojson vec_json(const IntVec& v) {
  auto a = ojson::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

std::string vec_text(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

ojson candidate_json(const ContractibleCandidate& c) {
  ojson j;
  j["class"] = vec_json(c.curve_class.dots);
  j["e"] = c.e;
  j["r"] = c.r;
  j["extremal"] = c.extremal;
  j["status"] = to_string(c.status);
  return j;
}

ojson class_report_json(const ClassReport& cr) {
  ojson j = candidate_json(cr.candidate);
  j["minus_kx_degree"] = cr.minus_kx_degree.get_str();
  j["cor_hypothesis"] = cr.cor_hypothesis;
  if (cr.has_structure) {
    j["kind"] = cr.kind == ContractionKind::FiberType ? "fiber-type" : "birational";
    j["dim_exc"] = cr.dim_exc;
    j["dim_base"] = cr.dim_base;
    auto degs = ojson::array();
    for (const Int& d : cr.degrees) degs.push_back(d.get_str());
    j["relative_degrees"] = degs;
    j["inequality_degree_bound"] = cr.inequality1;
    j["chern_verdict"] = to_string(cr.verdict);
    if (cr.verdict != ChernVerdict::NotComputed) {
      j["rank"] = cr.rank_m;
      j["dim_grassmannian"] = cr.dim_gr;
      j["expected_fano_dim"] = cr.expected_fano_dim;
    }
    if (cr.verdict == ChernVerdict::NonzeroCount) j["count"] = cr.count.get_str();
    if (cr.verdict == ChernVerdict::NonzeroPositiveDim)
      j["fiber_schubert_nonneg"] = cr.fiber_schubert_nonneg;
    j["contained"] = cr.contained;
  }
  return j;
}

ojson hypotheses_json(const HypothesisReport& h) {
  ojson j;
  j["fan_smooth"] = h.fan.smooth;
  j["fan_complete"] = h.fan.complete;
  j["fan_projective"] = h.fan.projective;
  j["all_ample"] = h.all_ample;
  auto amp = ojson::array();
  for (bool a : h.ample) amp.push_back(a);
  j["ample"] = amp;
  j["dim_x"] = h.dim_x;
  j["dim_ok"] = h.dim_ok;
  j["minus_kx_nef"] = h.minus_kx_nef;
  auto viol = ojson::array();
  for (const auto& c : h.nef_violations) viol.push_back(vec_json(c.dots));
  j["nef_violations"] = viol;
  return j;
}

ojson decomposition_to_json(const Decomposition& d) {
  ojson j;
  j["found"] = d.found;
  if (!d.note.empty()) j["note"] = d.note;
  auto terms = ojson::array();
  for (const auto& [cls, m] : d.terms) {
    ojson t;
    t["class"] = vec_json(cls.dots);
    t["multiplicity"] = m.get_str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

std::string validation_json(const FanValidation& v) {
  ojson j;
  j["schema"] = 1;
  j["structurally_valid"] = v.structurally_valid;
  if (!v.error.empty()) j["error"] = v.error;
  j["smooth"] = v.smooth;
  j["complete"] = v.complete;
  j["projective"] = v.projective;
  return j.dump(2) + "\n";
}

std::string validation_text(const FanValidation& v) {
  std::ostringstream os;
  if (!v.structurally_valid) {
    os << "invalid fan: " << v.error << "\n";
    return os.str();
  }
  os << "smooth:     " << (v.smooth ? "yes" : "no") << "\n";
  os << "complete:   " << (v.complete ? "yes" : "no") << "\n";
  os << "projective: " << (v.projective ? "yes" : "no") << "\n";
  return os.str();
}

std::string classes_json(const Fan& fan, const ClassListing& listing) {
  ojson j;
  j["schema"] = 1;
  j["rays"] = fan.ray_count();
  j["dim"] = fan.dim();
  auto arr = ojson::array();
  for (std::size_t i = 0; i < listing.candidates.size(); ++i) {
    ojson c = candidate_json(listing.candidates[i]);
    if (listing.structures[i]) {
      const auto& cs = *listing.structures[i];
      c["kind"] = cs.kind == ContractionKind::FiberType ? "fiber-type" : "birational";
      c["dim_exc"] = cs.dim_exc;
      c["dim_base"] = cs.dim_base;
      c["fiber_dim"] = cs.fiber_dim;
      // Chern classes of the bundle as coefficients over named base monomials
      auto chern = ojson::array();
      for (std::size_t j = 0; j < cs.chern_of_e.size(); ++j) {
        ojson cj = ojson::object();
        const ChowElt& elt = cs.chern_of_e[j];
        int deg = static_cast<int>(j) + 1;
        if (deg < static_cast<int>(elt.comp.size()) && !elt.comp[deg].empty()) {
          for (int b = 0; b < cs.base_ring->basis_size(deg); ++b) {
            const Rat& coeff = elt.comp[deg][b];
            if (coeff != 0) cj[cs.base_ring->basis_name(deg, b)] = coeff.get_str();
          }
        }
        chern.push_back(cj);
      }
      c["chern_of_e"] = chern;
    }
    arr.push_back(c);
  }
  j["classes"] = arr;
  return j.dump(2) + "\n";
}

std::string classes_text(const Fan& fan, const ClassListing& listing) {
  std::ostringstream os;
  os << listing.candidates.size() << " candidate class(es) on a " << fan.dim()
     << "-fold with " << fan.ray_count() << " rays\n";
  for (std::size_t i = 0; i < listing.candidates.size(); ++i) {
    const auto& c = listing.candidates[i];
    os << "  " << vec_text(c.curve_class.dots) << "  e=" << c.e << " r=" << c.r
       << "  " << to_string(c.status) << (c.extremal ? " (extremal)" : "");
    if (listing.structures[i]) {
      const auto& cs = *listing.structures[i];
      os << "  " << (cs.kind == ContractionKind::FiberType ? "fiber-type" : "birational")
         << ": P^" << cs.fiber_dim << "-bundle over a " << cs.dim_base << "-fold";
    }
    os << "\n";
  }
  return os.str();
}

std::string ihc_json(const Fan& fan, const IHCReport& rep) {
  ojson j;
  j["schema"] = 1;
  j["dim"] = fan.dim();
  j["hypotheses"] = hypotheses_json(rep.hypotheses);
  auto arr = ojson::array();
  for (const auto& cr : rep.classes) arr.push_back(class_report_json(cr));
  j["classes"] = arr;
  j["lattice_generated"] = rep.lattice_generated;
  j["semigroup_generated"] = rep.semigroup_generated;
  j["verdict"] = rep.generated ? "generated-by-rational-curves" : "inconclusive";
  auto dec = ojson::array();
  for (const auto& [cls, d] : rep.wall_decompositions) {
    ojson entry;
    entry["class"] = vec_json(cls.dots);
    entry["decomposition"] = decomposition_to_json(d);
    dec.push_back(entry);
  }
  j["wall_decompositions"] = dec;
  return j.dump(2) + "\n";
}

std::string ihc_text(const Fan& fan, const IHCReport& rep) {
  std::ostringstream os;
  const auto& h = rep.hypotheses;
  os << "ambient: " << fan.dim() << "-fold with " << fan.ray_count() << " rays\n";
  os << "hypotheses: smooth=" << h.fan.smooth << " complete=" << h.fan.complete
     << " projective=" << h.fan.projective << " ample=" << h.all_ample
     << " dimX=" << h.dim_x << " (-K_X nef on Y: " << (h.minus_kx_nef ? "yes" : "no")
     << ")\n";
  for (const auto& cr : rep.classes) {
    os << "class " << vec_text(cr.candidate.curve_class.dots) << " ["
       << to_string(cr.candidate.status) << "]";
    if (cr.has_structure) {
      os << " -K_X.C=" << cr.minus_kx_degree.get_str();
      if (cr.verdict != ChernVerdict::NotComputed) {
        os << " rank=" << cr.rank_m << " dimGr=" << cr.dim_gr
           << " expdim=" << cr.expected_fano_dim << " verdict=" << to_string(cr.verdict);
        if (cr.verdict == ChernVerdict::NonzeroCount)
          os << " count=" << cr.count.get_str();
      } else {
        os << " verdict=" << to_string(cr.verdict);
      }
    }
    os << "\n";
  }
  os << "lattice generated: " << (rep.lattice_generated ? "yes" : "no") << "\n";
  os << "semigroup generated: " << (rep.semigroup_generated ? "yes" : "no") << "\n";
  os << "verdict: "
     << (rep.generated ? "generated-by-rational-curves" : "inconclusive") << "\n";
  return os.str();
}

std::string decomposition_json(const Decomposition& d) {
  ojson j;
  j["schema"] = 1;
  j["result"] = decomposition_to_json(d);
  return j.dump(2) + "\n";
}

std::string decomposition_text(const Decomposition& d) {
  if (!d.found) return "not-found" + (d.note.empty() ? "" : ": " + d.note) + "\n";
  std::ostringstream os;
  os << "decomposition:";
  for (const auto& [cls, m] : d.terms)
    os << " " << m.get_str() << "*" << vec_text(cls.dots);
  os << "\n";
  return os.str();
}

}  // namespace toric
