#ifndef GORLAB_REPORT_HPP
#define GORLAB_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gorlab/json_io.hpp"

namespace gorlab {

enum class ReportFormat { Table, Json, Csv };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw InputError("unknown format '" + s + "' (expected table, json or csv)");
}

// Full analysis verdict for one ring.
struct RingReport {
  std::string ring;  // spec hash
  int dim = 0;
  int depth = 0;
  bool cm = false;
  bool gorenstein = false;
  std::optional<long> type;   // dim Soc(R/(sop)) when CM
  std::vector<long> socle_h;  // agreed Soc H^i_m dims, i = 0..dim
  std::vector<int> ell;       // observed ell_i, i = 0..dim
  std::vector<std::string> warnings;
  json experiments = json::object();

  json to_json() const {
    json j;
    j["ring"] = ring;
    j["dim"] = dim;
    j["depth"] = depth;
    j["cm"] = cm;
    j["gorenstein"] = gorenstein;
    if (type)
      j["type"] = *type;
    else
      j["type"] = nullptr;
    j["socle_h"] = socle_h;
    j["ell"] = ell;
    j["warnings"] = warnings;
    j["experiments"] = experiments;
    return j;
  }

  static RingReport from_json(const json& j) {
    RingReport r;
    r.ring = j.at("ring").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.depth = j.at("depth").get<int>();
    r.cm = j.at("cm").get<bool>();
    r.gorenstein = j.at("gorenstein").get<bool>();
    if (!j.at("type").is_null()) r.type = j.at("type").get<long>();
    r.socle_h = j.at("socle_h").get<std::vector<long>>();
    r.ell = j.at("ell").get<std::vector<int>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.experiments = j.at("experiments");
    return r;
  }

  bool operator==(const RingReport& o) const {
    return ring == o.ring && dim == o.dim && depth == o.depth && cm == o.cm &&
           gorenstein == o.gorenstein && type == o.type && socle_h == o.socle_h &&
           ell == o.ell && warnings == o.warnings && experiments == o.experiments;
  }
};

struct SweepRow {
  int n = 0;
  std::string ideal;
  long index = 0;
  bool irreducible = false;
};

struct SweepTable {
  std::string ring;
  std::vector<SweepRow> rows;
  long prediction = 0;  // sum_i binom(d, i) * dim Soc H^i_m(R)
  std::vector<std::string> warnings;

  json to_json() const {
    json j;
    j["ring"] = ring;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["ideal"] = r.ideal;
      row["index"] = r.index;
      row["irreducible"] = r.irreducible;
      j["rows"].push_back(row);
    }
    j["prediction"] = prediction;
    j["warnings"] = warnings;
    return j;
  }
};

struct TheoremVerdict {
  std::string ring;
  int ell = 0;
  int samples = 0;
  long irreducible_count = 0;
  int first_witness = -1;  // sample index of the first irreducible ideal
  std::string witness;     // its generators, when found
  bool gorenstein = false;  // the independent CM/type oracle
  std::string verdict;

  json to_json() const {
    json j;
    j["ring"] = ring;
    j["ell"] = ell;
    j["samples"] = samples;
    j["irreducible_count"] = irreducible_count;
    j["first_witness"] = first_witness;
    j["witness"] = witness;
    j["gorenstein"] = gorenstein;
    j["verdict"] = verdict;
    return j;
  }
};

struct CorollaryRow {
  int n = 0;
  bool found = false;
  std::string witness;  // generators of an irreducible parameter ideal in m^n
  int samples = 0;
  std::string theorem_verdict;
};

struct CorollaryTable {
  std::string ring;
  int ell = 0;
  bool gorenstein = false;
  std::vector<CorollaryRow> rows;

  json to_json() const {
    json j;
    j["ring"] = ring;
    j["ell"] = ell;
    j["gorenstein"] = gorenstein;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["found"] = r.found;
      row["witness"] = r.witness;
      row["samples"] = r.samples;
      row["theorem_verdict"] = r.theorem_verdict;
      j["rows"].push_back(row);
    }
    return j;
  }
};

// --- text renderings --------------------------------------------------------

inline std::string render_json(const json& j) { return j.dump(2) + "\n"; }

inline std::string render(const RingReport& r, ReportFormat f) {
  if (f == ReportFormat::Json) return render_json(r.to_json());
  std::ostringstream os;
  if (f == ReportFormat::Csv) {
    os << "ring,dim,depth,cm,gorenstein,type,socle_h,ell,warnings\n";
    os << r.ring << ',' << r.dim << ',' << r.depth << ',' << (r.cm ? "true" : "false") << ','
       << (r.gorenstein ? "true" : "false") << ',';
    if (r.type)
      os << *r.type;
    else
      os << "";
    os << ',';
    for (std::size_t i = 0; i < r.socle_h.size(); ++i) os << (i ? " " : "") << r.socle_h[i];
    os << ',';
    for (std::size_t i = 0; i < r.ell.size(); ++i) os << (i ? " " : "") << r.ell[i];
    os << ',' << r.warnings.size() << "\n";
    return os.str();
  }
  os << "ring        " << r.ring << "\n";
  os << "dim         " << r.dim << "\n";
  os << "depth       " << r.depth << "\n";
  os << "CM          " << (r.cm ? "yes" : "no") << "\n";
  os << "Gorenstein  " << (r.gorenstein ? "yes" : "no") << "\n";
  os << "type        " << (r.type ? std::to_string(*r.type) : "-") << "\n";
  os << "Soc H^i     ";
  for (std::size_t i = 0; i < r.socle_h.size(); ++i) os << (i ? " " : "") << r.socle_h[i];
  os << "\n";
  os << "ell_i       ";
  for (std::size_t i = 0; i < r.ell.size(); ++i) os << (i ? " " : "") << r.ell[i];
  os << "\n";
  for (const auto& w : r.warnings) os << "warning     " << w << "\n";
  return os.str();
}

inline std::string render(const SweepTable& t, ReportFormat f) {
  if (f == ReportFormat::Json) return render_json(t.to_json());
  std::ostringstream os;
  if (f == ReportFormat::Csv) {
    os << "n,ideal,index,irreducible\n";
    for (const auto& r : t.rows)
      os << r.n << ",\"" << r.ideal << "\"," << r.index << ','
         << (r.irreducible ? "true" : "false") << "\n";
    return os.str();
  }
  os << "  n  index  irreducible  ideal\n";
  for (const auto& r : t.rows) {
    os << "  " << r.n << "  " << r.index << "      " << (r.irreducible ? "yes" : "no ")
       << "         " << r.ideal << "\n";
  }
  os << "eventual-constant prediction: " << t.prediction << "\n";
  return os.str();
}

inline std::string render(const TheoremVerdict& v, ReportFormat f) {
  if (f == ReportFormat::Json) return render_json(v.to_json());
  std::ostringstream os;
  if (f == ReportFormat::Csv) {
    os << "ring,ell,samples,irreducible_count,first_witness,gorenstein,verdict\n";
    os << v.ring << ',' << v.ell << ',' << v.samples << ',' << v.irreducible_count << ','
       << v.first_witness << ',' << (v.gorenstein ? "true" : "false") << ",\"" << v.verdict
       << "\"\n";
    return os.str();
  }
  os << "ell         " << v.ell << "\n";
  os << "samples     " << v.samples << "\n";
  os << "irreducible " << v.irreducible_count << "\n";
  if (v.first_witness >= 0)
    os << "witness     #" << v.first_witness << ": " << v.witness << "\n";
  os << "verdict     " << v.verdict << "\n";
  return os.str();
}

inline std::string render(const CorollaryTable& t, ReportFormat f) {
  if (f == ReportFormat::Json) return render_json(t.to_json());
  std::ostringstream os;
  if (f == ReportFormat::Csv) {
    os << "n,found,witness,samples,theorem_verdict\n";
    for (const auto& r : t.rows)
      os << r.n << ',' << (r.found ? "true" : "false") << ",\"" << r.witness << "\"," << r.samples
         << ",\"" << r.theorem_verdict << "\"\n";
    return os.str();
  }
  os << "  n  witness in m^n                     verdict\n";
  for (const auto& r : t.rows) {
    os << "  " << r.n << "  ";
    std::string w = r.found ? r.witness : ("none found in " + std::to_string(r.samples) +
                                           " samples");
    os << w;
    if (w.size() < 34) os << std::string(34 - w.size(), ' ');
    os << " " << r.theorem_verdict << "\n";
  }
  return os.str();
}

}  // namespace gorlab

#endif
