#include "quiverpath/json_io.hpp"

#include <stdexcept>
#include <string>

namespace quiverpath {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

long long require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j)
    out.push_back(static_cast<int>(require_int(v, what)));
  return out;
}

mpq_class rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    bad("bad rational \"" + text + "\"");
  q.canonicalize();
  return q;
}

}  // namespace

Json to_json(const YoungDiagram& y) { return Json(y.parts()); }

Json to_json(const ChargedMaya& m) {
  return Json{{"parts", m.shape().parts()}, {"charge", m.charge()}};
}

Json to_json(const BasicPath& p) {
  Json out{{"n", p.rank()}, {"prefix", p.prefix()}};
  if (p.offset() != 0) out["offset"] = p.offset();
  return out;
}

Json to_json(const SegmentMultiset& f) {
  Json out;
  out["mode"] = f.mode().is_cyclic() ? "cyclic" : "inf";
  if (f.mode().is_cyclic()) out["n"] = f.mode().rank();
  Json segs = Json::array();
  for (const auto& [seg, mult] : f.support())
    segs.push_back(Json{{"lo", seg.lo}, {"hi", seg.hi}, {"mult", mult}});
  out["segments"] = std::move(segs);
  return out;
}

Json to_json(const MayaTuple& m) {
  Json out = Json::array();
  for (const ChargedMaya& e : m.entries()) out.push_back(to_json(e));
  return out;
}

Json to_json(const LevelPath& eta) {
  Json prefix = Json::array();
  for (const PathStep& step : eta.prefix()) prefix.push_back(step);
  return Json{{"n", eta.rank()},
              {"charges", eta.highest_weight().charges()},
              {"prefix", std::move(prefix)}};
}

Json to_json(const AffineWeight& w) {
  return Json{{"h", w.h}, {"deg", w.deg}};
}

Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [y, coeff] : v.terms())
    terms.push_back(
        Json{{"parts", y.parts()}, {"coeff", coeff.get_str()}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (long long r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (long long c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QuiverRep& x) {
  Json out;
  out["mode"] = x.mode().is_cyclic() ? "cyclic" : "inf";
  if (x.mode().is_cyclic()) out["n"] = x.mode().rank();
  Json spaces = Json::object();
  Json down = Json::object();
  Json up = Json::object();
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    std::string key = std::to_string(v);
    spaces[key] = x.dim(v);
    down[key] = to_json(x.down(v));
    up[key] = to_json(x.up(v));
  }
  out["spaces"] = std::move(spaces);
  out["down"] = std::move(down);
  out["up"] = std::move(up);
  return out;
}

YoungDiagram young_from_json(const Json& j) {
  if (!j.is_array()) bad("diagram must be an array of parts");
  std::vector<int> parts = int_list(j, "part");
  return YoungDiagram(std::move(parts));
}

ChargedMaya charged_maya_from_json(const Json& j) {
  YoungDiagram y = young_from_json(require_field(j, "parts"));
  long long charge = require_int(require_field(j, "charge"), "charge");
  return ChargedMaya(y, charge);
}

SegmentMultiset segments_from_json(const Json& j) {
  const Json& mode_j = require_field(j, "mode");
  if (!mode_j.is_string()) bad("mode must be \"inf\" or \"cyclic\"");
  std::string mode_s = mode_j.get<std::string>();
  SegmentMode mode = SegmentMode::infinite();
  if (mode_s == "cyclic") {
    mode = SegmentMode::cyclic(
        static_cast<int>(require_int(require_field(j, "n"), "n")));
  } else if (mode_s != "inf") {
    bad("mode must be \"inf\" or \"cyclic\"");
  }
  SegmentMultiset f(mode);
  const Json& segs = require_field(j, "segments");
  if (!segs.is_array()) bad("segments must be an array");
  for (const Json& rec : segs) {
    long long lo = require_int(require_field(rec, "lo"), "lo");
    long long hi = require_int(require_field(rec, "hi"), "hi");
    long long mult = require_int(require_field(rec, "mult"), "mult");
    if (hi < lo) bad("segment with hi < lo");
    if (mult <= 0) bad("segment multiplicity must be positive");
    f.add(Segment(lo, hi), mult);
  }
  return f;
}

MayaTuple tuple_from_json(const Json& j, SegmentMode mode) {
  if (!j.is_array()) bad("tuple must be an array of entries");
  std::vector<ChargedMaya> entries;
  entries.reserve(j.size());
  for (const Json& rec : j) entries.push_back(charged_maya_from_json(rec));
  return MayaTuple(mode, std::move(entries));
}

LevelPath path_from_json(const Json& j) {
  int n = static_cast<int>(require_int(require_field(j, "n"), "n"));
  const Json& charges_j = require_field(j, "charges");
  if (!charges_j.is_array()) bad("charges must be an array");
  std::vector<long long> charges;
  for (const Json& c : charges_j)
    charges.push_back(require_int(c, "charge"));
  const Json& prefix_j = require_field(j, "prefix");
  if (!prefix_j.is_array()) bad("prefix must be an array of steps");
  std::vector<PathStep> prefix;
  for (const Json& step : prefix_j) prefix.push_back(int_list(step, "residue"));
  return LevelPath(HighestWeight(n, std::move(charges)), std::move(prefix));
}

FockVector fock_from_json(const Json& j) {
  const Json& terms = require_field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  FockVector v;
  for (const Json& rec : terms) {
    YoungDiagram y = young_from_json(require_field(rec, "parts"));
    const Json& coeff = require_field(rec, "coeff");
    if (!coeff.is_string()) bad("coeff must be a rational string");
    v.add(y, rational_from_string(coeff.get<std::string>()));
  }
  return v;
}

}  // namespace quiverpath
