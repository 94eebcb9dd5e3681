#pragma once

// File formats: the family document (symbolic blocks or explicit rational
// boxes), DIMACS graph export, JSON reports and the run manifest. Exact
// numbers are emitted as integers or "num/den" strings, never floats.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boxfam/containers.hpp"
#include "boxfam/family.hpp"
#include "boxfam/graph.hpp"
#include "boxfam/random_construction.hpp"
#include "boxfam/solvers.hpp"

namespace boxfam {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "boxfam 0.1.0";
inline constexpr const char* kFamilyFormat = "boxfam-family/1";

// ---------------------------------------------------------------------------
// exact number <-> string

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("bad rational literal: " + s);
  }
}

// ---------------------------------------------------------------------------
// family document

struct FamilyDocument {
  enum class Kind { Blocks, Boxes };
  Kind kind = Kind::Boxes;
  std::optional<FamilyParams> params;  // set for Kind::Blocks
  int d = 0;
  std::vector<Block> blocks;
  std::vector<Box> boxes;  // explicit form (always derivable for blocks)

  std::vector<Box> to_boxes() const {
    if (kind == Kind::Boxes) return boxes;
    std::vector<Box> out;
    out.reserve(blocks.size());
    for (const Block& b : blocks) out.push_back(block_to_box(b, *params));
    return out;
  }
};

inline FamilyDocument make_document(const BlockFamily& fam) {
  FamilyDocument doc;
  doc.kind = FamilyDocument::Kind::Blocks;
  doc.params = fam.params;
  doc.d = fam.params.d;
  doc.blocks = fam.blocks;
  return doc;
}

inline FamilyDocument make_document(const std::vector<Box>& boxes) {
  FamilyDocument doc;
  doc.kind = FamilyDocument::Kind::Boxes;
  doc.d = boxes.empty() ? 0 : boxes.front().dim();
  doc.boxes = boxes;
  return doc;
}

inline Json box_to_json(const Box& b) {
  Json j;
  for (int i = 0; i < b.dim(); ++i) {
    j["lo"].push_back(rat_str(b.lo[static_cast<size_t>(i)]));
    j["hi"].push_back(rat_str(b.hi[static_cast<size_t>(i)]));
    j["lo_closed"].push_back(static_cast<bool>(b.lo_closed[static_cast<size_t>(i)]));
    j["hi_closed"].push_back(static_cast<bool>(b.hi_closed[static_cast<size_t>(i)]));
  }
  return j;
}

inline Box box_from_json(const Json& j) {
  Box b;
  for (const auto& v : j.at("lo")) b.lo.push_back(rat_parse(v.get<std::string>()));
  for (const auto& v : j.at("hi")) b.hi.push_back(rat_parse(v.get<std::string>()));
  for (const auto& v : j.at("lo_closed")) b.lo_closed.push_back(v.get<bool>());
  for (const auto& v : j.at("hi_closed")) b.hi_closed.push_back(v.get<bool>());
  b.validate();
  return b;
}

inline Json document_to_json(const FamilyDocument& doc) {
  Json j;
  j["format"] = kFamilyFormat;
  if (doc.kind == FamilyDocument::Kind::Blocks) {
    j["kind"] = "blocks";
    j["params"] = {{"d", doc.params->d}, {"s", doc.params->s}, {"k", doc.params->k}};
    j["blocks"] = Json::array();
    for (const Block& b : doc.blocks) {
      Json jb;
      jb["t"] = b.t;
      for (const Int& p : b.p) jb["p"].push_back(p.str());
      j["blocks"].push_back(std::move(jb));
    }
  } else {
    j["kind"] = "boxes";
    j["d"] = doc.d;
    j["boxes"] = Json::array();
    for (const Box& b : doc.boxes) j["boxes"].push_back(box_to_json(b));
  }
  return j;
}

inline FamilyDocument document_from_json(const Json& j) {
  if (j.value("format", "") != kFamilyFormat)
    throw DomainError("family document: unknown format field");
  FamilyDocument doc;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "blocks") {
    doc.kind = FamilyDocument::Kind::Blocks;
    const Json& p = j.at("params");
    doc.params = FamilyParams(p.at("d").get<int>(), p.at("s").get<int>(), p.at("k").get<int>());
    doc.d = doc.params->d;
    for (const auto& jb : j.at("blocks")) {
      Block b;
      for (const auto& v : jb.at("t")) b.t.push_back(v.get<int>());
      for (const auto& v : jb.at("p")) b.p.push_back(Int(v.get<std::string>()));
      doc.blocks.push_back(std::move(b));
    }
  } else if (kind == "boxes") {
    doc.kind = FamilyDocument::Kind::Boxes;
    doc.d = j.at("d").get<int>();
    for (const auto& jb : j.at("boxes")) doc.boxes.push_back(box_from_json(jb));
  } else {
    throw DomainError("family document: unknown kind " + kind);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// DIMACS

inline std::string export_dimacs(const IntersectionGraph& g) {
  std::ostringstream out;
  std::vector<std::pair<int, int>> es = g.edges();
  std::sort(es.begin(), es.end());
  out << "p edge " << g.n << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// reports

inline Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["kind"] = cert_kind_name(cert.kind);
  j["value"] = cert.value;
  j["exact"] = cert.exact;
  switch (cert.kind) {
    case CertKind::Clique:
    case CertKind::IndependentSet:
      j["witness"] = cert.vertices;
      break;
    case CertKind::Piercing: {
      j["witness"] = Json::array();
      for (const auto& p : cert.points) {
        Json jp = Json::array();
        for (const Rat& c : p) jp.push_back(rat_str(c));
        j["witness"].push_back(std::move(jp));
      }
      break;
    }
    case CertKind::Coloring:
      j["witness"] = cert.coloring;
      break;
  }
  return j;
}

inline Json trial_report_to_json(const TrialReport& rep) {
  Json j;
  j["params"] = {{"d", rep.params.d}, {"s", rep.params.s}, {"k", rep.params.k},
                 {"m", rep.params.m.str()}, {"M", rep.params.M.str()}};
  j["config"] = {{"p", std::to_string(rep.config.p.num) + "/" + std::to_string(rep.config.p.den)},
                 {"seed", rep.config.seed},
                 {"trials", rep.config.trials}};
  j["family_size"] = rep.family_size.str();
  j["thresholds"] = {
      {"size", rat_str(rep.size_threshold)},
      {"alpha", rat_str(rep.alpha_threshold)},
      {"omega_natural_log",
       std::isinf(rep.omega_threshold) ? Json("inf") : Json(rep.omega_threshold)},
      {"r", rep.r}};
  j["trials"] = Json::array();
  for (const TrialResult& t : rep.trials) {
    j["trials"].push_back({{"index", t.index},
                           {"sample_size", t.sample_size},
                           {"omega", t.omega},
                           {"alpha", t.alpha},
                           {"alpha_exact", t.alpha_exact},
                           {"size_ok", t.size_ok},
                           {"alpha_ok", t.alpha_ok},
                           {"omega_ok", t.omega_ok}});
  }
  int n = std::max(1, rep.config.trials);
  j["frequencies"] = {
      {"size", std::to_string(rep.size_ok_count) + "/" + std::to_string(n)},
      {"alpha", std::to_string(rep.alpha_ok_count) + "/" + std::to_string(n)},
      {"omega", std::to_string(rep.omega_ok_count) + "/" + std::to_string(n)}};
  return j;
}

// ---------------------------------------------------------------------------
// files, digests, manifest

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << data;
  if (!out) throw IoError("write failed for " + path);
}

/// FNV-1a 64-bit content digest, hex-encoded.
inline std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, digest
  std::vector<std::pair<std::string, std::string>> outputs;  // path, digest

  Json to_json() const {
    Json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["argv"] = argv;
    if (seed) j["seed"] = *seed;
    j["inputs"] = Json::object();
    for (const auto& [p, dig] : inputs) j["inputs"][p] = dig;
    j["outputs"] = Json::object();
    for (const auto& [p, dig] : outputs) j["outputs"][p] = dig;
    return j;
  }
};

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline FamilyDocument load_document(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError("family document parse error: " + std::string(e.what()));
  }
  return document_from_json(j);
}

}  // namespace boxfam
