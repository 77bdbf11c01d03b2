#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fuchsian/attractor.hpp"
#include "fuchsian/markov.hpp"
#include "fuchsian/simulate.hpp"
#include "fuchsian/validate.hpp"

namespace fuchsian {

using json = nlohmann::ordered_json;

inline json to_json(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const signature& sig) {
  json j;
  j["text"] = sig.to_string();
  j["genus"] = sig.genus;
  j["orders"] = sig.orders;
  j["cusps"] = sig.cusps;
  j["input_order"] = sig.input_order;
  j["string"] = to_string(signature_string(sig));
  return j;
}

inline json to_json(const marked_polygon& poly) {
  json j;
  j["signature"] = poly.sig.to_string();
  j["signature_string"] = to_string(signature_string(poly.sig));
  j["input_order"] = poly.sig.input_order;
  j["ell"] = poly.ell;
  j["N"] = poly.N;
  json verts = json::array();
  for (int k = 0; k < poly.N; ++k) {
    const vertex& v = poly.V(k);
    json e{{"index", k}, {"kind", v.ideal ? "ideal" : "elliptic"}};
    if (!v.ideal) e["order"] = v.order;
    e["re"] = v.z.real();
    e["im"] = v.z.imag();
    if (v.ideal) e["arg"] = v.projection.theta();
    verts.push_back(std::move(e));
  }
  j["vertices"] = std::move(verts);
  json gens = json::array();
  for (int k = 1; k <= poly.N; ++k) {
    const moebius& g = poly.gamma(k);
    gens.push_back({{"index", k}, {"a", to_json(g.a())}, {"b", to_json(g.b())}, {"pairs_with", poly.pair(k)}});
  }
  j["generators"] = std::move(gens);
  json aux = json::array();
  for (int k = 0; k < poly.N; ++k) {
    const auto& a = poly.aux_at(k);
    aux.push_back({{"index", k}, {"P", a.P.theta()}, {"Q", a.Q.theta()}, {"M", a.M.theta()}});
  }
  j["aux"] = std::move(aux);
  return j;
}

inline json to_json(const validation_report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"tolerance", c.tolerance}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return {{"passed", rep.passed()},
          {"area", rep.area},
          {"expected_area", rep.expected_area},
          {"parabolic_trace", rep.parabolic_trace},
          {"checks", std::move(checks)}};
}

inline json to_json(const partition& part) {
  json j;
  j["mode"] = to_string(part.mode);
  std::vector<double> angles;
  std::vector<int> elliptic;
  for (int k = 0; k < part.size(); ++k) {
    angles.push_back(part.at(k).theta());
    if (part.elliptic[k]) elliptic.push_back(k);
  }
  j["A"] = angles;
  j["elliptic"] = elliptic;
  if (part.mode == partition_mode::custom) j["custom"] = part.custom;
  j["in_guarantee_range"] = part.in_guarantee_range;
  return j;
}

inline json to_json(const cycle_data& cd) {
  return {{"vertex", cd.k},
          {"order", cd.m},
          {"J", cd.J},
          {"I", cd.I},
          {"matching_steps", cd.matching_steps},
          {"end_of_cycle", cd.end_of_cycle.theta()},
          {"degenerate", cd.degenerate},
          {"on_block_corner", cd.on_block_corner},
          {"matching_residual", cd.matching_residual},
          {"monotone_descent", cd.monotone_descent}};
}

inline json to_json(const orbit_record& o) {
  std::vector<double> pts;
  for (const auto& p : o.points) pts.push_back(p.theta());
  return {{"start", o.start.theta()},
          {"side", o.side == orbit_side::upper ? "upper" : "lower"},
          {"points", pts},
          {"periodic_from", o.periodic_from},
          {"budget_exceeded", o.budget_exceeded}};
}

inline json to_json(const markov_report& rep) {
  json orbits = json::array();
  for (const auto& o : rep.orbits) orbits.push_back(to_json(o));
  json trans = json::array();
  for (std::size_t i = 0; i < rep.transitions.size(); ++i)
    trans.push_back({{"interval", i}, {"gamma", rep.cell_of_interval[i]}, {"covers", rep.transitions[i]}});
  return {{"passed", rep.passed()},
          {"all_finite", rep.all_finite},
          {"onto_union", rep.onto_union},
          {"max_endpoint_residual", rep.max_endpoint_residual},
          {"refined", rep.refined},
          {"transitions", std::move(trans)},
          {"orbits", std::move(orbits)}};
}

inline json to_json(const rect& r) {
  return {{"u", {r.u.start().theta(), r.u.end().theta()}},
          {"w", {r.w.start().theta(), r.w.end().theta()}},
          {"block", r.block},
          {"gamma", r.gamma},
          {"label", r.label}};
}

inline json to_json(const std::vector<rect>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

inline json to_json(const marked_polygon& poly, const partition& part, const attractor_domain& dom) {
  json strips = json::array();
  for (const auto& s : dom.strips) {
    json e{{"block", s.block}, {"symbol", to_string(std::vector<symbol>{s.sym})}, {"count", s.count}};
    if (s.sym.kind == symbol_kind::finite && s.sym.order >= 3) {
      e["I"] = s.I;
      e["J"] = s.J;
      e["degenerate"] = s.degenerate;
    }
    strips.push_back(std::move(e));
  }
  return {{"signature", poly.sig.to_string()},
          {"partition", to_json(part)},
          {"rects", to_json(dom.rects)},
          {"strips", std::move(strips)},
          {"in_guarantee_range", dom.in_guarantee_range},
          {"measure", dom.measure}};
}

inline json to_json(const bijectivity_report& rep) {
  return {{"passed", rep.passed()},
          {"domain_overlap", rep.domain_overlap},
          {"image_overlap", rep.image_overlap},
          {"symmetric_difference", rep.symmetric_difference},
          {"block_residual", rep.block_residual},
          {"domain_measure", rep.domain_measure},
          {"image_measure", rep.image_measure},
          {"single_cell_violations", rep.single_cell_violations}};
}

inline json to_json(const entry_summary& s) {
  return {{"samples", s.samples},
          {"entered", s.entered},
          {"max_K", s.max_K},
          {"mean_K", s.mean_K},
          {"exits_after_entry", s.exits_after_entry}};
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<entry_trace>& traces) {
  os << "sample,seed,u0,w0,K,escape_step,entered\n";
  for (const auto& t : traces)
    os << t.sample << ',' << t.seed << ',' << format_double(t.u0) << ',' << format_double(t.w0) << ','
       << t.K << ',' << t.escape_step << ',' << (t.entered ? 1 : 0) << '\n';
}

}  // namespace fuchsian
