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

#pragma once

#include <string>
#include <vector>

#include "mannheim/catalog.hpp"
#include "mannheim/css.hpp"
#include "mannheim/linear_code.hpp"
#include "mannheim/qudit.hpp"

// Spec-document parsing and report emission. Documents are JSON text; the
// parser names the offending field in every ParseError. Reports come in two
// flavors: "text" for human eyes (canonical Gaussian literals throughout)
// and "structured" JSON that re-parses byte-identically.

namespace mannheim {

// { "p": int, "pi": [re, im], "n": int, "modulus": "+1" | "-1",
//   "generator_poly": [[re, im], ...] }   (or "generator_matrix": rows)
LinearCode code_from_spec_json(const std::string& text);

struct CssSpec {
  LinearCode c1;
  LinearCode c2;
  SearchOptions search;
};

// { "c1": <code spec>, "c2": <code spec>, "distance_cap": int }
CssSpec css_from_spec_json(const std::string& text);

struct ProtocolSpec {
  CssSpec css;
  std::vector<GaussInt> x;
  std::vector<GaussInt> e1;
  std::vector<GaussInt> e2;
  ProtocolOptions options;
};

// { "css": <css spec>, "x": message or codeword, "e1": vector,
//   "e2": vector, "mode": "full" | "syndrome-only" }
// x is resolved by length: n entries mean a codeword of C1, k1 entries a
// message to encode. Vectors accept [[re, im], ...] or the comma grammar.
ProtocolSpec protocol_from_spec_json(const std::string& text);

std::string make_field_report(const FieldPtr& field, bool structured);
std::string make_code_report(const LinearCode& code, const SearchOptions& search,
                             bool structured);
std::string make_css_report(const CssCode& css, const SymplecticParams& pair_view,
                            bool structured);
std::string make_table_report(const std::vector<RowReport>& rows, bool structured);
std::string make_transcript_report(const ProtocolTranscript& transcript, bool structured);

// Parses structured-report text and re-emits it with canonical formatting.
// Emitted reports survive this round trip byte-identically.
std::string reserialize_json(const std::string& text);

}  // namespace mannheim
