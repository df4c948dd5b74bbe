#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lrhorn/hive.hpp"
#include "lrhorn/horn.hpp"
#include "lrhorn/numeric.hpp"
#include "lrhorn/partition.hpp"
#include "lrhorn/spectra.hpp"
#include "lrhorn/tail_cone.hpp"

namespace lrhorn {

using json = nlohmann::json;

/// "2,1,0": comma-separated decimal parts, most significant first.
inline std::string partition_to_string(const Partition& p) {
  std::string out;
  for (std::size_t q = 0; q < p.parts.size(); ++q) {
    if (q) out += ",";
    out += p.parts[q].str();
  }
  return out;
}

/// Parses "2,1,0"; the ambient length defaults to the number of fields.
inline Partition parse_partition(const std::string& text, int r = 0) {
  std::vector<Int> parts;
  for (const auto& field : split_csv(text)) parts.push_back(parse_int(field));
  const int length = r > 0 ? r : static_cast<int>(parts.size());
  if (length == 0) throw std::invalid_argument("empty partition needs an explicit length");
  return make_partition(std::move(parts), length);
}

inline std::vector<Rat> parse_rational_vector(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& field : split_csv(text)) out.push_back(parse_rational(field));
  return out;
}

inline json triple_to_json(const PartitionTriple& t) {
  return json{{"lambda", partition_to_string(t.lambda)},
              {"mu", partition_to_string(t.mu)},
              {"nu", partition_to_string(t.nu)}};
}

inline PartitionTriple triple_from_json(const json& j, int r = 0) {
  auto lambda = parse_partition(j.at("lambda").get<std::string>(), r);
  const int length = r > 0 ? r : lambda.rank();
  return make_partition_triple(std::move(lambda),
                               parse_partition(j.at("mu").get<std::string>(), length),
                               parse_partition(j.at("nu").get<std::string>(), length));
}

/// {"r": r, "values": [[i, j, k, v], ...]} in canonical position order.
/// Values are emitted as JSON numbers; arrays beyond the 64-bit range are
/// serialized with string values instead.
inline json triangle_array_to_json(const TriangleArray& y) {
  json values = json::array();
  const auto all = positions(y.r);
  for (std::size_t p = 0; p < all.size(); ++p) {
    const Int& v = y.values[p];
    json cell = json::array({all[p].i, all[p].j, all[p].k});
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      cell.push_back(v.convert_to<long long>());
    else
      cell.push_back(v.str());
    values.push_back(std::move(cell));
  }
  return json{{"r", y.r}, {"values", std::move(values)}};
}

inline TriangleArray triangle_array_from_json(const json& j) {
  const int r = j.at("r").get<int>();
  std::vector<Int> values(position_count(r), Int(0));
  for (const auto& item : j.at("values")) {
    const long idx = canonical_position_index(r, item.at(0).get<int>(), item.at(1).get<int>(),
                                              item.at(2).get<int>());
    if (idx < 0) throw std::invalid_argument("position outside the grid");
    const auto& cell = item.at(3);
    values[static_cast<std::size_t>(idx)] =
        cell.is_string() ? parse_int(cell.get<std::string>()) : Int(cell.get<long long>());
  }
  return make_triangle_array(r, std::move(values));
}

inline std::string tail_direction_name(TailDirection dir) {
  switch (dir) {
    case TailDirection::L: return "L";
    case TailDirection::M: return "M";
    case TailDirection::N: return "N";
  }
  throw std::logic_error("bad tail direction");
}

inline TailDirection tail_direction_from_name(const std::string& name) {
  if (name == "L") return TailDirection::L;
  if (name == "M") return TailDirection::M;
  if (name == "N") return TailDirection::N;
  throw std::invalid_argument("bad tail direction: " + name);
}

/// {"tails": [{"dir": "L|M|N", "t": t, "s": s, "coeff": "p/q"}, ...]}
inline json certificate_to_json(const TailCertificate& cert) {
  json tails = json::array();
  for (const auto& [id, coeff] : cert.combination)
    tails.push_back(json{{"dir", tail_direction_name(id.dir)},
                         {"t", id.t},
                         {"s", id.s},
                         {"coeff", rational_to_string(coeff)}});
  return json{{"tails", std::move(tails)}};
}

inline TailCertificate certificate_from_json(const json& j) {
  TailCertificate cert;
  for (const auto& item : j.at("tails"))
    cert.combination.emplace_back(
        TailIdentifier{tail_direction_from_name(item.at("dir").get<std::string>()),
                       item.at("t").get<int>(), item.at("s").get<int>()},
        parse_rational(item.at("coeff").get<std::string>()));
  return cert;
}

inline json horn_inequality_to_json(const HornInequality& h) {
  return json{{"I", h.subsets.I}, {"J", h.subsets.J}, {"K", h.subsets.K}};
}

/// Plain-text rendering, e.g. "λ2+λ3 ≤ μ1+μ3+ν1+ν3".
inline std::string horn_inequality_to_text(const HornInequality& h) {
  auto side = [](const char* symbol, const std::vector<int>& subset, std::string& out) {
    for (int index : subset) {
      if (!out.empty()) out += "+";
      out += symbol;
      out += std::to_string(index);
    }
  };
  std::string lhs, rhs;
  side("λ", h.subsets.I, lhs);
  side("μ", h.subsets.J, rhs);
  side("ν", h.subsets.K, rhs);
  return lhs + " ≤ " + rhs;
}

inline json saturation_report_to_json(const SaturationReport& report) {
  json candidates = json::array();
  for (const auto& candidate : report.candidates) {
    json stretched = json::array();
    for (const auto& [factor, coeff] : candidate.stretched)
      stretched.push_back(json{{"N", factor}, {"coeff", coeff.str()}});
    json entry = triple_to_json(candidate.triple);
    entry["stretched"] = std::move(stretched);
    candidates.push_back(std::move(entry));
  }
  return json{{"r", report.r},
              {"max_weight", report.max_weight.str()},
              {"max_stretch", report.max_stretch},
              {"triples_scanned", report.triples_scanned.str()},
              {"in_cone", report.in_cone.str()},
              {"candidates", std::move(candidates)},
              {"any_positive_stretch", report.any_positive_stretch}};
}

inline json spectral_report_to_json(const SpectralSampleReport& report) {
  json violations = json::array();
  for (const auto& violation : report.violations)
    violations.push_back(json{{"trial", violation.trial},
                              {"inequality", violation.inequality},
                              {"margin", violation.margin}});
  return json{{"r", report.r},
              {"trials", report.trials},
              {"seed", report.seed},
              {"tolerance", report.tolerance},
              {"violations", std::move(violations)},
              {"worst_margin", report.worst_margin},
              {"max_trace_error", report.max_trace_error},
              {"max_reconstruction_error", report.max_reconstruction_error}};
}

}  // namespace lrhorn
