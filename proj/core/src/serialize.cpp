// Copyright 2026 The mannheim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mannheim/serialize.hpp"

#include <cstdint>
#include <sstream>
#include <string_view>
#include <utility>

#include "json.hpp"

namespace mannheim {

namespace {

// ordered_json keeps document order, which is what makes the emit -> parse
// -> emit round trip byte-identical.
using json = nlohmann::ordered_json;

std::string emit(const json& doc) { return doc.dump(2) + "\n"; }

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require_field(const json& doc, const std::string& name) {
  if (!doc.is_object()) {
    throw ParseError("expected an object with field \"" + name + "\"");
  }
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError("missing required field \"" + name + "\"");
  }
  return *it;
}

std::int64_t require_int(const json& doc, const std::string& name) {
  const json& v = require_field(doc, name);
  if (!v.is_number_integer()) {
    throw ParseError("field \"" + name + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

GaussInt gauss_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer()) {
    throw ParseError("field \"" + where + "\" must be a [re, im] integer pair");
  }
  return GaussInt{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
}

std::vector<GaussInt> gauss_vector_from_string(std::string_view text) {
  std::vector<GaussInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = comma == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    out.push_back(parse_gauss_int(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<GaussInt> gauss_vector_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return gauss_vector_from_string(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("field \"" + where + "\": " + e.what());
    }
  }
  if (!v.is_array()) {
    throw ParseError("field \"" + where +
                     "\" must be an array of [re, im] pairs or a literal string");
  }
  std::vector<GaussInt> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(gauss_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json gauss_to_json(GaussInt a) { return json::array({a.re, a.im}); }

json gauss_vector_to_json(const std::vector<GaussInt>& v) {
  json out = json::array();
  for (GaussInt a : v) out.push_back(gauss_to_json(a));
  return out;
}

std::string gauss_vector_text(const std::vector<GaussInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

LinearCode code_from_json(const json& doc, const std::string& where) {
  const GaussInt pi = gauss_from_json(require_field(doc, "pi"), where + "pi");
  const std::int64_t p = require_int(doc, "p");
  if (p != norm(pi)) {
    throw ParseError("field \"" + where + "p\" is " + std::to_string(p) +
                     " but the modulus " + to_string(pi) + " has norm " +
                     std::to_string(norm(pi)));
  }
  FieldPtr field = PrimeField::make(pi);
  const std::int64_t n = require_int(doc, "n");
  if (n < 1) throw ParseError("field \"" + where + "n\" must be at least 1");

  const bool has_poly = doc.contains("generator_poly");
  const bool has_matrix = doc.contains("generator_matrix");
  if (has_poly == has_matrix) {
    throw ParseError("spec \"" + (where.empty() ? std::string("code") : where) +
                     "\" needs exactly one of \"generator_poly\" and \"generator_matrix\"");
  }
  if (has_matrix) {
    const json& rows = doc["generator_matrix"];
    if (!rows.is_array() || rows.empty()) {
      throw ParseError("field \"" + where + "generator_matrix\" must be a nonempty array");
    }
    std::vector<std::vector<GaussInt>> matrix;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<GaussInt> row = gauss_vector_from_json(
          rows[i], where + "generator_matrix[" + std::to_string(i) + "]");
      if (static_cast<std::int64_t>(row.size()) != n) {
        throw ParseError("field \"" + where + "generator_matrix[" + std::to_string(i) +
                         "]\" has length " + std::to_string(row.size()) + ", expected n = " +
                         std::to_string(n));
      }
      matrix.push_back(std::move(row));
    }
    return LinearCode::from_generator_matrix(field, matrix);
  }

  const std::string mod_text = require_field(doc, "modulus").is_string()
                                   ? doc["modulus"].get<std::string>()
                                   : std::string();
  Modulus modulus;
  if (mod_text == "+1") {
    modulus = Modulus::XnPlus1;
  } else if (mod_text == "-1") {
    modulus = Modulus::XnMinus1;
  } else {
    throw ParseError("field \"" + where + "modulus\" must be \"+1\" or \"-1\"");
  }
  std::vector<GaussInt> coeffs =
      gauss_vector_from_json(doc["generator_poly"], where + "generator_poly");
  return LinearCode::from_generator_poly(Polynomial(field, std::move(coeffs)),
                                         static_cast<int>(n), modulus);
}

CssSpec css_from_json(const json& doc, const std::string& where) {
  LinearCode c1 = code_from_json(require_field(doc, "c1"), where + "c1.");
  LinearCode c2 = code_from_json(require_field(doc, "c2"), where + "c2.");
  SearchOptions search;
  if (doc.contains("distance_cap")) {
    const std::int64_t cap = require_int(doc, "distance_cap");
    if (cap < 1) throw ParseError("field \"" + where + "distance_cap\" must be at least 1");
    search.cap = cap;
  }
  return CssSpec{std::move(c1), std::move(c2), search};
}

json bound_to_json(const DistanceBound& b) {
  json out;
  out["value"] = b.value;
  out["exact"] = b.exact;
  return out;
}

std::string bound_text(const std::string& name, const DistanceBound& b) {
  if (b.exact) return name + " = " + std::to_string(b.value);
  // A truncated scan only shows that some scanned word has this weight.
  return name + " <= " + std::to_string(b.value) + " (partial scan, " +
         std::to_string(b.enumerated) + " words)";
}

std::string status_text(SyndromeStatus s) {
  switch (s) {
    case SyndromeStatus::Found:
      return "found";
    case SyndromeStatus::NotFound:
      return "not-found";
    case SyndromeStatus::Ambiguous:
      return "ambiguous";
  }
  return "not-found";
}

json claim_to_json(const ParameterClaim& c) {
  json out;
  out["n"] = c.n;
  out["K"] = c.K;
  out["d"] = c.d;
  out["at_least"] = c.at_least;
  return out;
}

std::string claim_text(const ParameterClaim& c) {
  return "[[" + std::to_string(c.n) + ", " + std::to_string(c.K) + ", " +
         (c.at_least ? ">=" : "") + std::to_string(c.d) + "]]";
}

json attempt_to_json(const RowAttempt& a) {
  json out;
  out["interpretation"] = to_string(a.interp);
  out["built"] = a.built;
  if (!a.failure.empty()) out["failure"] = a.failure;
  if (a.k1 >= 0) out["k1"] = a.k1;
  if (a.k2 >= 0) out["k2"] = a.k2;
  if (a.K != -1 || a.built) out["K"] = a.K;
  if (a.built) out["K_matches"] = a.k_matches;
  if (a.d_m) {
    out["d_M"] = *a.d_m;
    out["d_M_matches"] = a.dm_matches;
  }
  if (a.d_h) {
    out["d_H"] = *a.d_h;
    out["d_H_matches"] = a.dh_matches;
  }
  return out;
}

std::string attempt_text(const RowAttempt& a) {
  std::string out = "interpretation " + to_string(a.interp) + ": ";
  std::string dims;
  if (a.k1 >= 0) {
    dims = "k1 = " + std::to_string(a.k1);
    if (a.k2 >= 0) {
      dims += ", k2 = " + std::to_string(a.k2) + ", K = " + std::to_string(a.K);
    }
  }
  if (!a.built) {
    out += a.failure.empty() ? "not built" : a.failure;
    if (!dims.empty()) out += " (" + dims + ")";
    return out;
  }
  out += dims;
  if (!a.k_matches) {
    out += "; K does not match the recorded parameters";
    return out;
  }
  if (a.d_m) {
    out += "; d_M = " + std::to_string(*a.d_m) + (a.dm_matches ? " (match)" : " (MISMATCH)");
  } else {
    out += "; d_M beyond the enumeration cap";
  }
  if (a.d_h) {
    out += "; d_H = " + std::to_string(*a.d_h) + (a.dh_matches ? " (match)" : " (MISMATCH)");
  } else {
    out += "; d_H beyond the enumeration cap";
  }
  return out;
}

}  // namespace

LinearCode code_from_spec_json(const std::string& text) {
  return code_from_json(parse_doc(text), "");
}

CssSpec css_from_spec_json(const std::string& text) {
  return css_from_json(parse_doc(text), "");
}

ProtocolSpec protocol_from_spec_json(const std::string& text) {
  const json doc = parse_doc(text);
  CssSpec css = css_from_json(require_field(doc, "css"), "css.");

  const std::string mode_text = require_field(doc, "mode").is_string()
                                    ? doc["mode"].get<std::string>()
                                    : std::string();
  ProtocolOptions options;
  if (mode_text == "full") {
    options.mode = ProtocolMode::Full;
  } else if (mode_text == "syndrome-only") {
    options.mode = ProtocolMode::SyndromeOnly;
  } else {
    throw ParseError("field \"mode\" must be \"full\" or \"syndrome-only\"");
  }
  if (doc.contains("t1")) options.t1 = static_cast<int>(require_int(doc, "t1"));
  if (doc.contains("t2")) options.t2 = static_cast<int>(require_int(doc, "t2"));
  options.search = css.search;

  const int n = css.c1.n();
  std::vector<GaussInt> x = gauss_vector_from_json(require_field(doc, "x"), "x");
  if (static_cast<int>(x.size()) == css.c1.k() && css.c1.k() != n) {
    x = css.c1.encode(x);
  } else if (static_cast<int>(x.size()) != n) {
    throw ParseError("field \"x\" has length " + std::to_string(x.size()) +
                     "; expected a codeword of length " + std::to_string(n) +
                     " or a message of length " + std::to_string(css.c1.k()));
  }
  std::vector<GaussInt> e1 = gauss_vector_from_json(require_field(doc, "e1"), "e1");
  std::vector<GaussInt> e2 = gauss_vector_from_json(require_field(doc, "e2"), "e2");
  if (static_cast<int>(e1.size()) != n || static_cast<int>(e2.size()) != n) {
    throw ParseError("fields \"e1\" and \"e2\" must have length n = " + std::to_string(n));
  }
  return ProtocolSpec{std::move(css), std::move(x), std::move(e1), std::move(e2), options};
}

std::string make_field_report(const FieldPtr& field, bool structured) {
  if (structured) {
    json doc;
    doc["p"] = field->p();
    doc["pi"] = gauss_to_json(field->modulus());
    doc["alpha1"] = gauss_to_json(field->alpha1());
    doc["alpha2"] = gauss_to_json(field->alpha2());
    doc["residues"] = gauss_vector_to_json(field->residues());
    return emit(doc);
  }
  std::ostringstream out;
  out << "field G_pi with pi = " << to_string(field->modulus()) << ", p = " << field->p()
      << "\n";
  out << "alpha1 = " << to_string(field->alpha1())
      << ", alpha2 = " << to_string(field->alpha2()) << "\n";
  out << "residues (" << field->p() << "): " << gauss_vector_text(field->residues()) << "\n";
  return out.str();
}

std::string make_code_report(const LinearCode& code, const SearchOptions& search,
                             bool structured) {
  SearchOptions opts = search;
  opts.allow_partial = true;
  const DistanceBound dm = code.distance_bound(Metric::Mannheim, opts);
  const DistanceBound dh = code.distance_bound(Metric::Hamming, opts);
  const LinearCode dual = code.dual();
  const bool dual_nonzero = dual.k() > 0;
  DistanceBound dual_dm{0, true, 0};
  DistanceBound dual_dh{0, true, 0};
  if (dual_nonzero) {
    dual_dm = dual.distance_bound(Metric::Mannheim, opts);
    dual_dh = dual.distance_bound(Metric::Hamming, opts);
  }

  if (structured) {
    json doc;
    doc["p"] = code.field()->p();
    doc["pi"] = gauss_to_json(code.field()->modulus());
    doc["n"] = code.n();
    doc["k"] = code.k();
    doc["d_M"] = bound_to_json(dm);
    doc["d_H"] = bound_to_json(dh);
    json dual_doc;
    dual_doc["n"] = dual.n();
    dual_doc["k"] = dual.k();
    if (dual_nonzero) {
      dual_doc["d_M"] = bound_to_json(dual_dm);
      dual_doc["d_H"] = bound_to_json(dual_dh);
    }
    doc["dual"] = dual_doc;
    return emit(doc);
  }
  std::ostringstream out;
  out << "code over G_pi with pi = " << to_string(code.field()->modulus())
      << " (p = " << code.field()->p() << ")\n";
  out << "n = " << code.n() << ", k = " << code.k() << "\n";
  out << bound_text("d_M", dm) << "\n" << bound_text("d_H", dh) << "\n";
  out << "dual: n = " << dual.n() << ", k = " << dual.k();
  if (dual_nonzero) {
    out << ", " << bound_text("d_M", dual_dm) << ", " << bound_text("d_H", dual_dh);
  }
  out << "\n";
  return out.str();
}

std::string make_css_report(const CssCode& css, const SymplecticParams& pair_view,
                            bool structured) {
  const FieldPtr field = css.c1.field();
  const ErrorCountReport count_m =
      correctable_count(css.n, css.d_m.value, Metric::Mannheim, field->p());
  const ErrorCountReport count_h =
      correctable_count(css.n, css.d_h.value, Metric::Hamming, field->p());
  const SingletonCheck singleton = check_singleton(css.n, css.K, css.d_h.value, field->p());

  std::vector<std::string> notes;
  notes.push_back("pair view: dim C = " + std::to_string(pair_view.dim_code) +
                  ", dim C^perp* = " + std::to_string(pair_view.dim_dual) + ", K_pair = " +
                  std::to_string(pair_view.K_pair) + " counts (Z|X) pairs while K = " +
                  std::to_string(pair_view.K_css) + " counts qudits");
  if (pair_view.no_logical_operators) {
    notes.push_back("C1 = C2: the symplectic code is self-dual and has no logical operators");
  } else if (pair_view.d_pair.exact) {
    notes.push_back("pair-view d = " + std::to_string(pair_view.d_pair.value));
  } else {
    notes.push_back("pair-view d <= " + std::to_string(pair_view.d_pair.value) +
                    " (sampled, " + std::to_string(pair_view.sample_size) + " draws)");
  }
  if (!css.d_m.exact || !css.d_h.exact) {
    notes.push_back("distances marked partial come from a truncated scan; raise the cap "
                    "for exact values");
  }
  if (!css.d_h.exact) {
    notes.push_back("the Singleton check uses the partial d_H bound");
  }

  if (structured) {
    json doc;
    doc["n"] = css.n;
    doc["K"] = css.K;
    doc["d_M"] = bound_to_json(css.d_m);
    doc["d_H"] = bound_to_json(css.d_h);
    json counts;
    counts["mannheim"] = count_m.count;
    counts["hamming"] = count_h.count;
    doc["counts"] = counts;
    json singleton_doc;
    singleton_doc["attains"] = singleton.attains;
    singleton_doc["slack"] = singleton.slack;
    doc["singleton"] = singleton_doc;
    doc["interpretation_notes"] = notes;
    return emit(doc);
  }
  std::ostringstream out;
  out << "[[" << css.n << ", " << css.K << ", " << css.d_m.value << "]]_{"
      << to_string(field->modulus()) << "}" << (css.d_m.exact ? "" : " (partial bound)")
      << "\n";
  out << bound_text("d_M", css.d_m) << " (component bounds " << css.dm_c1.value << ", "
      << css.dm_c2dual.value << ")\n";
  out << bound_text("d_H", css.d_h) << " (component bounds " << css.dh_c1.value << ", "
      << css.dh_c2dual.value << ")\n";
  out << "correctable Mannheim patterns (t = " << count_m.t << "): " << count_m.count << "\n";
  out << "correctable Hamming patterns (t = " << count_h.t << "): " << count_h.count << "\n";
  out << "Singleton (Hamming): " << (singleton.attains ? "attains" : "does not attain")
      << ", slack " << singleton.slack << "\n";
  for (const std::string& note : notes) out << "note: " << note << "\n";
  return out.str();
}

std::string make_table_report(const std::vector<RowReport>& rows, bool structured) {
  if (structured) {
    json doc;
    json row_array = json::array();
    for (const RowReport& report : rows) {
      json row;
      row["row"] = report.row.index;
      row["p_listed"] = report.row.p_listed;
      row["pi"] = gauss_to_json(report.row.pi);
      row["n"] = report.row.n;
      row["modulus"] = report.row.modulus == Modulus::XnPlus1 ? "+1" : "-1";
      row["h1"] = gauss_vector_to_json(report.row.h1);
      row["g2"] = gauss_vector_to_json(report.row.g2);
      if (report.row.g2_corrected) {
        row["g2_corrected"] = gauss_vector_to_json(*report.row.g2_corrected);
      }
      row["claimed_hamming"] = claim_to_json(report.row.hamming_claim);
      row["claimed_mannheim"] = claim_to_json(report.row.mannheim_claim);
      json attempts = json::array();
      for (const RowAttempt& attempt : report.attempts) {
        attempts.push_back(attempt_to_json(attempt));
      }
      row["attempts"] = attempts;
      row["verdict"] = to_string(report.verdict);
      row["notes"] = report.notes;
      row_array.push_back(row);
    }
    doc["rows"] = row_array;
    return emit(doc);
  }
  std::ostringstream out;
  for (const RowReport& report : rows) {
    out << "row " << report.row.index << ": pi = " << to_string(report.row.pi)
        << " (p listed " << report.row.p_listed << "), n = " << report.row.n << ", modulus x^"
        << report.row.n << (report.row.modulus == Modulus::XnPlus1 ? "+1" : "-1") << "\n";
    out << "  h1 = " << gauss_vector_text(report.row.h1) << "\n";
    out << "  g2 = " << gauss_vector_text(report.row.g2);
    if (report.row.g2_corrected) {
      out << " (corrected to " << gauss_vector_text(*report.row.g2_corrected) << ")";
    }
    out << "\n";
    out << "  claimed: HM " << claim_text(report.row.hamming_claim) << ", MM "
        << claim_text(report.row.mannheim_claim) << "\n";
    for (const RowAttempt& attempt : report.attempts) {
      out << "  " << attempt_text(attempt) << "\n";
    }
    out << "  verdict: " << to_string(report.verdict) << "\n";
    for (const std::string& note : report.notes) {
      out << "  note: " << note << "\n";
    }
  }
  return out.str();
}

std::string make_transcript_report(const ProtocolTranscript& transcript, bool structured) {
  if (structured) {
    json doc;
    doc["mode"] = transcript.syndrome_only ? "syndrome-only" : "full";
    doc["within_capacity"] = transcript.within_capacity;
    doc["t1"] = transcript.t1;
    doc["t2"] = transcript.t2;
    doc["bit_syndrome"] = gauss_vector_to_json(transcript.bit_syndrome);
    doc["phase_syndrome"] = gauss_vector_to_json(transcript.phase_syndrome);
    doc["bit_status"] = status_text(transcript.bit_status);
    doc["phase_status"] = status_text(transcript.phase_status);
    doc["e1_hat"] = gauss_vector_to_json(transcript.e1_hat);
    doc["e2_hat"] = gauss_vector_to_json(transcript.e2_hat);
    doc["corrected"] = transcript.corrected;
    doc["fidelity"] = transcript.fidelity;
    return emit(doc);
  }
  std::ostringstream out;
  out << "mode = " << (transcript.syndrome_only ? "syndrome-only" : "full")
      << ", t1 = " << transcript.t1 << ", t2 = " << transcript.t2 << "\n";
  out << "bit syndrome: " << gauss_vector_text(transcript.bit_syndrome) << " ("
      << status_text(transcript.bit_status) << ")\n";
  out << "phase syndrome: " << gauss_vector_text(transcript.phase_syndrome) << " ("
      << status_text(transcript.phase_status) << ")\n";
  out << "e1_hat = " << gauss_vector_text(transcript.e1_hat) << "\n";
  out << "e2_hat = " << gauss_vector_text(transcript.e2_hat) << "\n";
  out << "corrected = " << (transcript.corrected ? "true" : "false")
      << ", fidelity = " << transcript.fidelity << "\n";
  return out.str();
}

std::string reserialize_json(const std::string& text) { return emit(parse_doc(text)); }

}  // namespace mannheim
