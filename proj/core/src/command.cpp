// Copyright 2026 the sdh authors
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

#include "sdh/command.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdh/constructions.hpp"
#include "sdh/equivalence.hpp"
#include "sdh/gf3.hpp"
#include "sdh/hadamard.hpp"
#include "sdh/int_matrix.hpp"
#include "sdh/io.hpp"
#include "sdh/search.hpp"
#include "sdh/sign_matrix.hpp"

namespace sdh {
namespace {

using nlohmann::json;

std::vector<std::string> split_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& s, const std::string& what) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
  }
  return value;
}

int parse_int(const std::string& s, const std::string& what) {
  const long long v = parse_ll(s, what);
  if (v < -2147483647LL || v > 2147483647LL) {
    throw std::invalid_argument(what + ": value out of range");
  }
  return static_cast<int>(v);
}

u64 parse_u64(const std::string& s, const std::string& what) {
  const long long v = parse_ll(s, what);
  if (v < 0) {
    throw std::invalid_argument(what + ": value must be nonnegative");
  }
  return static_cast<u64>(v);
}

// Command line split into positionals and --key value options; a fixed
// catalog tells which options take a value.
struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;

  bool has(const std::string& name) const { return options.count(name) > 0; }
  std::string get(const std::string& name, const std::string& fallback) const {
    const auto it = options.find(name);
    return it == options.end() ? fallback : it->second;
  }
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
  static const std::set<std::string> kValueOptions = {
      "--out",       "--in-code",     "--threads", "--budget",
      "--node-budget", "--max-cliques", "--size",
  };
  static const std::set<std::string> kFlagOptions = {"--span-equals"};
  ParsedArgs out;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) == 0) {
      if (kValueOptions.count(tok) > 0) {
        if (i + 1 >= args.size()) {
          throw std::invalid_argument("option " + tok + " needs a value");
        }
        out.options[tok] = args[++i];
      } else if (kFlagOptions.count(tok) > 0) {
        out.options[tok] = "true";
      } else {
        throw std::invalid_argument("unknown option " + tok);
      }
    } else {
      out.positional.push_back(tok);
    }
  }
  return out;
}

TernaryCode make_code_object(const std::string& spec) {
  const std::vector<std::string> parts = split_spec(spec);
  const std::string& kind = parts[0];
  if (kind == "nv" && parts.size() == 3) {
    const int p = parse_int(parts[1], spec);
    const int a = parse_int(parts[2], spec);
    return build_nv_code(NvParameters::make(p, a));
  }
  if (kind == "qr" && parts.size() == 2) {
    return build_extended_qr(parse_int(parts[1], spec));
  }
  if (kind == "pless" && parts.size() == 2) {
    return build_pless_symmetry(parse_int(parts[1], spec));
  }
  if (kind == "neg4" && parts.size() == 2) {
    const auto pair = negacirculant_pair(parse_int(parts[1], spec));
    return build_four_negacirculant(pair.first, pair.second);
  }
  if (kind == "code" && parts.size() >= 2) {
    return parse_code(read_file(spec.substr(5))).code;
  }
  throw std::invalid_argument("unknown code object '" + spec + "'");
}

SdsPair sds_pair_from_spec(int p, const std::string& selector) {
  const CyclotomicClasses cc = cyclotomic_classes(p);
  if (selector == "eq+1") {
    return SdsPair::make(p, cc.coset_union(2, 2 + cc.epsilon),
                         cc.coset_union(0, cc.epsilon + 2));
  }
  if (selector == "eq-1") {
    return SdsPair::make(p, cc.coset_union(0, cc.epsilon),
                         cc.coset_union(2, cc.epsilon));
  }
  const int i = parse_int(selector, "hsds selector");
  if (i < 0 || i > 3) {
    throw std::invalid_argument("hsds selector must be 0..3, eq+1 or eq-1");
  }
  return SdsPair::make(p, cc.coset_union(i, i + 1), cc.coset_union(i + 1, i + 2));
}

// Builds the raw sign matrix of a matrix spec without asserting that it is
// Hadamard; verify reports that property instead of failing on it.
SignMatrix make_sign_object(const std::string& spec) {
  const std::vector<std::string> parts = split_spec(spec);
  const std::string& kind = parts[0];
  if (kind == "hnv" && parts.size() == 3) {
    return build_h_nv(parse_int(parts[1], spec), parse_int(parts[2], spec))
        .matrix();
  }
  if (kind == "hsds" && parts.size() == 3) {
    return build_h_sds(sds_pair_from_spec(parse_int(parts[1], spec), parts[2]))
        .matrix();
  }
  if (kind == "paley1" && parts.size() == 2) {
    return build_paley(parse_int(parts[1], spec), PaleyKind::kOne).matrix();
  }
  if (kind == "paley2" && parts.size() == 2) {
    return build_paley(parse_int(parts[1], spec), PaleyKind::kTwo).matrix();
  }
  if (kind == "oct" && parts.size() >= 3) {
    const size_t cut = spec.rfind(':');
    const std::string path = spec.substr(4, cut - 4);
    const int order = parse_int(spec.substr(cut + 1), spec);
    return from_binary(octal_decode(read_file(path), order));
  }
  if (kind == "sign" && parts.size() >= 2) {
    return parse_sign_matrix(read_file(spec.substr(5)));
  }
  throw std::invalid_argument("unknown matrix object '" + spec + "'");
}

HadamardMatrix make_hadamard_object(const std::string& spec) {
  return HadamardMatrix(make_sign_object(spec));
}

bool is_code_spec(const std::string& spec) {
  const std::string kind = split_spec(spec)[0];
  return kind == "nv" || kind == "qr" || kind == "pless" || kind == "neg4" ||
         kind == "code";
}

struct Report {
  json fields = json::object();
  int exit_code = 0;
};

CommandResult finish(const std::vector<std::string>& args, const Report& r) {
  CommandResult out;
  out.exit_code = r.exit_code;
  json root;
  root["command"] = args;
  root["fields"] = r.fields;
  out.json = root.dump();
  std::ostringstream text;
  for (const auto& item : r.fields.items()) {
    if (item.value().is_string()) {
      out.fields[item.key()] = item.value().get<std::string>();
      text << item.key() << ": " << item.value().get<std::string>() << "\n";
    } else if (item.value().is_primitive()) {
      out.fields[item.key()] = item.value().dump();
      text << item.key() << ": " << item.value().dump() << "\n";
    } else {
      text << item.key() << ": " << item.value().dump() << "\n";
    }
  }
  out.text = text.str();
  return out;
}

bool sign_matrix_is_skew(const SignMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    if (m.get(i, i) != 1) {
      return false;
    }
    for (int j = i + 1; j < n; ++j) {
      if (m.get(i, j) + m.get(j, i) != 0) {
        return false;
      }
    }
  }
  return true;
}

std::string matrix_fingerprint(const SignMatrix& m) {
  u64 h = 1469598103934665603ull;
  const auto feed = [&h](u64 v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  feed(static_cast<u64>(m.order()));
  for (int i = 0; i < m.order(); ++i) {
    for (int w = 0; w < m.words_per_row(); ++w) {
      feed(m.row_bits(i)[w]);
    }
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

json perm_to_json(const std::vector<int>& v) { return json(v); }

json witness_to_json(const MonomialPair& w) {
  json out;
  out["row_perm"] = perm_to_json(w.row.perm);
  out["row_sign"] = perm_to_json(w.row.sign);
  out["col_perm"] = perm_to_json(w.col.perm);
  out["col_sign"] = perm_to_json(w.col.sign);
  return out;
}

Report cmd_construct(const ParsedArgs& pa) {
  if (pa.positional.size() != 2) {
    throw std::invalid_argument("usage: construct <code-object> [--out PATH]");
  }
  const std::string& spec = pa.positional[1];
  const TernaryCode code = make_code_object(spec);
  Report r;
  r.fields["object"] = spec;
  r.fields["n"] = code.length();
  r.fields["k"] = code.dimension();
  r.fields["self_dual"] = is_self_dual(code);
  if (pa.has("--out")) {
    const std::string path = pa.get("--out", "");
    write_file(path, format_code(code, spec));
    r.fields["wrote"] = path;
  }
  return r;
}

void verify_code_object(const std::string& spec, Report* r, bool* ok) {
  const std::vector<std::string> parts = split_spec(spec);
  const TernaryCode code = make_code_object(spec);
  const bool self_dual = is_self_dual(code);
  r->fields["n"] = code.length();
  r->fields["k"] = code.dimension();
  r->fields["self_dual"] = self_dual;
  if (parts[0] == "nv") {
    const NvParameters params =
        NvParameters::make(parse_int(parts[1], spec), parse_int(parts[2], spec));
    const NvBlocks blocks = build_blocks(params.p);
    const int n = params.p + 1;
    const bool skew_x = blocks.x.transpose() == -blocks.x;
    const bool skew_y = blocks.y.transpose() == -blocks.y;
    const bool commute = blocks.x * blocks.y == blocks.y * blocks.x;
    const bool squares = blocks.x * blocks.x + blocks.y * blocks.y ==
                         IntMatrix::identity(n).scaled(-params.p);
    r->fields["skew_x"] = skew_x;
    r->fields["skew_y"] = skew_y;
    r->fields["commute"] = commute;
    r->fields["squares"] = squares;
    *ok = *ok && skew_x && skew_y && commute && squares;
  }
  if (parts[0] == "pless") {
    const int q = parse_int(parts[1], spec);
    const IntMatrix s = pless_conference(q);
    const bool conference =
        s * s.transpose() == IntMatrix::identity(q + 1).scaled(q);
    r->fields["conference"] = conference;
    *ok = *ok && conference;
  }
  if (parts[0] != "code") {
    *ok = *ok && self_dual;
  }
}

void verify_matrix_object(const std::string& spec, const ParsedArgs& pa,
                          Report* r, bool* ok) {
  const std::vector<std::string> parts = split_spec(spec);
  const SignMatrix m = make_sign_object(spec);
  const bool hadamard = is_hadamard(m);
  r->fields["order"] = m.order();
  r->fields["hadamard"] = hadamard;
  r->fields["skew"] = sign_matrix_is_skew(m);
  r->fields["skew_negated"] = sign_matrix_is_skew(m.negated());
  r->fields["rank3"] = rank3(m.to_int());
  *ok = *ok && hadamard;
  if (parts[0] == "hsds") {
    const SdsPair pair =
        sds_pair_from_spec(parse_int(parts[1], spec), parts[2]);
    const bool sds_valid = is_sds(pair);
    r->fields["sds_valid"] = sds_valid;
    r->fields["sds_v"] = pair.v;
    r->fields["sds_k"] = pair.k;
    r->fields["sds_lambda"] = pair.lambda;
    *ok = *ok && sds_valid;
  }
  if (pa.has("--in-code")) {
    const TernaryCode code = make_code_object(pa.get("--in-code", ""));
    const bool in_code = rows_in_code(m, code);
    r->fields["in_code"] = in_code;
    *ok = *ok && in_code;
    if (pa.has("--span-equals")) {
      const bool span_equal =
          TernaryCode::from_generator(reduce_mod3(m.to_int())) == code;
      r->fields["span_equals_code"] = span_equal;
      *ok = *ok && span_equal;
    }
  } else if (pa.has("--span-equals")) {
    throw std::invalid_argument("--span-equals requires --in-code");
  }
}

Report cmd_verify(const ParsedArgs& pa) {
  if (pa.positional.size() != 2) {
    throw std::invalid_argument(
        "usage: verify <object> [--in-code SPEC [--span-equals]]");
  }
  const std::string& spec = pa.positional[1];
  Report r;
  r.fields["object"] = spec;
  bool ok = true;
  if (is_code_spec(spec)) {
    verify_code_object(spec, &r, &ok);
  } else {
    verify_matrix_object(spec, pa, &r, &ok);
  }
  r.fields["ok"] = ok;
  r.exit_code = ok ? 0 : 2;
  return r;
}

Report cmd_hadamard(const ParsedArgs& pa) {
  if (pa.positional.size() < 2) {
    throw std::invalid_argument(
        "usage: hadamard encode <matrix-object> --out PATH | "
        "hadamard decode PATH ORDER [--out PATH]");
  }
  const std::string& sub = pa.positional[1];
  Report r;
  if (sub == "encode") {
    if (pa.positional.size() != 3 || !pa.has("--out")) {
      throw std::invalid_argument("usage: hadamard encode <matrix-object> --out PATH");
    }
    const SignMatrix m = make_sign_object(pa.positional[2]);
    const std::string path = pa.get("--out", "");
    write_file(path, octal_encode(to_binary(m)));
    r.fields["order"] = m.order();
    r.fields["wrote"] = path;
    return r;
  }
  if (sub == "decode") {
    if (pa.positional.size() != 4) {
      throw std::invalid_argument("usage: hadamard decode PATH ORDER [--out PATH]");
    }
    const int order = parse_int(pa.positional[3], "order");
    const BitMatrix b = octal_decode(read_file(pa.positional[2]), order);
    int zero_count = 0;
    int zero_position = 0;
    for (int j = 0; j < order; ++j) {
      if (b.get(0, j) == 0) {
        ++zero_count;
        if (zero_position == 0) {
          zero_position = j + 1;
        }
      }
    }
    const SignMatrix m = from_binary(b);
    r.fields["order"] = order;
    r.fields["row0_zero_count"] = zero_count;
    r.fields["row0_zero_position"] = zero_position;
    r.fields["hadamard"] = is_hadamard(m);
    r.fields["rank3"] = rank3(m.to_int());
    if (pa.has("--out")) {
      const std::string path = pa.get("--out", "");
      write_file(path, format_sign_matrix(m));
      r.fields["wrote"] = path;
    }
    return r;
  }
  throw std::invalid_argument("unknown hadamard subcommand '" + sub + "'");
}

Report cmd_search(const ParsedArgs& pa) {
  if (pa.positional.size() < 2) {
    throw std::invalid_argument(
        "usage: search fullweight|minweight|clique|p36-classes ...");
  }
  const std::string& sub = pa.positional[1];
  const int threads = parse_int(pa.get("--threads", "1"), "--threads");
  Report r;
  if (sub == "fullweight") {
    if (pa.positional.size() != 3) {
      throw std::invalid_argument("usage: search fullweight <code-object>");
    }
    const TernaryCode code = make_code_object(pa.positional[2]);
    const FullWeightResult res = enumerate_full_weight(code, threads);
    r.fields["count"] = res.count;
    r.fields["normalized"] = res.count / 2;
    return r;
  }
  if (sub == "minweight") {
    if (pa.positional.size() != 3) {
      throw std::invalid_argument("usage: search minweight <code-object>");
    }
    const TernaryCode code = make_code_object(pa.positional[2]);
    MinWeightOptions options;
    options.threads = threads;
    if (pa.has("--budget")) {
      options.message_budget = parse_u64(pa.get("--budget", ""), "--budget");
    }
    const MinWeightResult res = min_weight_bz(code, options);
    r.fields["weight"] = res.weight;
    r.fields["exact"] = res.exact;
    r.fields["lower_bound"] = res.lower_bound;
    r.fields["enumerated"] = res.enumerated;
    return r;
  }
  if (sub == "clique") {
    if (pa.positional.size() != 3 || !pa.has("--size")) {
      throw std::invalid_argument(
          "usage: search clique <code-object> --size K [--node-budget B] "
          "[--max-cliques M]");
    }
    const TernaryCode code = make_code_object(pa.positional[2]);
    const FullWeightResult fw = enumerate_full_weight(code, threads);
    const SignVectorSet reps = sign_normalize(fw.words);
    const OrthoGraph graph = build_ortho_graph(reps);
    int dmin = graph.nv > 0 ? graph.degree(0) : 0;
    int dmax = dmin;
    for (int v = 1; v < graph.nv; ++v) {
      dmin = std::min(dmin, graph.degree(v));
      dmax = std::max(dmax, graph.degree(v));
    }
    CliqueOptions options;
    options.size = parse_int(pa.get("--size", ""), "--size");
    options.node_budget = parse_u64(pa.get("--node-budget", "0"), "--node-budget");
    options.max_cliques = parse_u64(pa.get("--max-cliques", "0"), "--max-cliques");
    const CliqueResult res = find_cliques(graph, options);
    r.fields["vertices"] = graph.nv;
    r.fields["degree_min"] = dmin;
    r.fields["degree_max"] = dmax;
    r.fields["cliques"] = static_cast<u64>(res.cliques.size());
    r.fields["exhaustive"] = res.exhaustive;
    r.fields["nodes"] = res.nodes;
    return r;
  }
  if (sub == "p36-classes") {
    if (pa.positional.size() != 2) {
      throw std::invalid_argument(
          "usage: search p36-classes [--node-budget B] [--max-cliques M]");
    }
    const TernaryCode code = build_pless_symmetry(17);
    const FullWeightResult fw = enumerate_full_weight(code, threads);
    const SignVectorSet reps = sign_normalize(fw.words);
    const OrthoGraph graph = build_ortho_graph(reps);
    CliqueOptions options;
    options.size = 36;
    options.node_budget = parse_u64(pa.get("--node-budget", "0"), "--node-budget");
    options.max_cliques = parse_u64(pa.get("--max-cliques", "0"), "--max-cliques");
    const CliqueResult res = find_cliques(graph, options);
    std::set<SignMatrix> classes;
    for (const std::vector<int>& clique : res.cliques) {
      const HadamardMatrix h(reps.matrix_from(clique));
      classes.insert(canonical_form(h).matrix);
    }
    const SignMatrix paley2 =
        canonical_form(build_paley(17, PaleyKind::kTwo)).matrix;
    r.fields["vertices"] = graph.nv;
    r.fields["cliques"] = static_cast<u64>(res.cliques.size());
    r.fields["classes"] = static_cast<u64>(classes.size());
    r.fields["exhaustive"] = res.exhaustive;
    r.fields["paley2_found"] = classes.count(paley2) > 0;
    return r;
  }
  throw std::invalid_argument("unknown search subcommand '" + sub + "'");
}

Report cmd_equiv(const ParsedArgs& pa) {
  if (pa.positional.size() < 2) {
    throw std::invalid_argument("usage: equiv check|canon|autorder|code ...");
  }
  const std::string& sub = pa.positional[1];
  Report r;
  if (sub == "check") {
    if (pa.positional.size() != 4) {
      throw std::invalid_argument("usage: equiv check <matrix1> <matrix2>");
    }
    const HadamardMatrix h1 = make_hadamard_object(pa.positional[2]);
    const HadamardMatrix h2 = make_hadamard_object(pa.positional[3]);
    const EquivalenceResult res = are_equivalent(h1, h2);
    r.fields["equivalent"] = res.equivalent;
    if (res.equivalent) {
      r.fields["witness_verified"] = true;
      r.fields["witness"] = witness_to_json(res.witness);
    }
    return r;
  }
  if (sub == "canon") {
    if (pa.positional.size() != 3) {
      throw std::invalid_argument("usage: equiv canon <matrix-object>");
    }
    const HadamardMatrix h = make_hadamard_object(pa.positional[2]);
    const CanonicalForm form = canonical_form(h);
    r.fields["order"] = h.order();
    r.fields["fingerprint"] = matrix_fingerprint(form.matrix);
    if (pa.has("--out")) {
      const std::string path = pa.get("--out", "");
      write_file(path, format_sign_matrix(form.matrix));
      r.fields["wrote"] = path;
    }
    return r;
  }
  if (sub == "autorder") {
    if (pa.positional.size() != 3) {
      throw std::invalid_argument("usage: equiv autorder <matrix-object>");
    }
    const HadamardMatrix h = make_hadamard_object(pa.positional[2]);
    const AutomorphismInfo info = automorphism_group_order(h);
    r.fields["order"] = info.order;
    r.fields["generators"] = info.generator_count;
    r.fields["convention"] = info.convention;
    return r;
  }
  if (sub == "code") {
    if (pa.positional.size() != 4) {
      throw std::invalid_argument("usage: equiv code <code1> <code2>");
    }
    const TernaryCode a = make_code_object(pa.positional[2]);
    const TernaryCode b = make_code_object(pa.positional[3]);
    u64 budget = u64{1} << 20;
    if (pa.has("--node-budget")) {
      budget = parse_u64(pa.get("--node-budget", ""), "--node-budget");
    }
    const CodeEquivalence res = code_equivalent_small(a, b, budget);
    r.fields["status"] = res.status == Tri::kTrue    ? "true"
                         : res.status == Tri::kFalse ? "false"
                                                     : "undecided";
    r.fields["nodes"] = res.nodes;
    return r;
  }
  throw std::invalid_argument("unknown equiv subcommand '" + sub + "'");
}

Report cmd_describe(const ParsedArgs& pa) {
  if (pa.positional.size() != 2) {
    throw std::invalid_argument("usage: describe <object>");
  }
  Report r;
  r.fields["object"] = pa.positional[1];
  r.fields["description"] = describe(pa.positional[1]);
  return r;
}

}  // namespace

std::string describe(const std::string& spec) {
  const std::vector<std::string> parts = split_spec(spec);
  const std::string& kind = parts[0];
  std::ostringstream out;
  if (kind == "nv" && parts.size() == 3) {
    out << "Self-dual ternary code of length 2(p+1) built from a skew block "
           "pair over F_p (p = " << parts[1] << ", sign a = " << parts[2]
        << ").  Checks: X^T = -X, Y^T = -Y, XY = YX, X^2 + Y^2 = -pI over "
           "the integers, and self-duality of the row span mod 3.";
  } else if (kind == "qr" && parts.size() == 2) {
    out << "Extended quadratic-residue code of length p+1 over GF(3) "
           "(p = " << parts[1] << ", p = -1 mod 12).  The cyclic part is "
           "gcd-cut from x^p - 1; each row gains a checksum digit.  "
           "Checks: dimension (p+1)/2 and self-duality.";
  } else if (kind == "pless" && parts.size() == 2) {
    out << "Symmetry code of length 2q+2 with generator (I | S_q) for the "
           "conference matrix S_q (q = " << parts[1] << ", prime, "
           "q = -1 mod 6).  Checks: S S^T = qI over the integers and "
           "self-duality.";
  } else if (kind == "neg4" && parts.size() == 2) {
    out << "Four-negacirculant [60, 30] code from bundled first-row pair "
        << parts[1] << ".  Checks: self-duality; the minimum weight 18 is "
           "established separately by the minweight search.";
  } else if (kind == "code" && parts.size() >= 2) {
    out << "Ternary code loaded from " << spec.substr(5)
        << ".  Checks: self-duality report only.";
  } else if (kind == "hnv" && parts.size() == 3) {
    out << "Order-2(p+1) sign matrix assembled from the skew block pair "
           "(p = " << parts[1] << ", a = " << parts[2] << ").  Checks: "
           "Hadamard, skewness of aH, rank p+1 mod 3, rows inside the "
           "matching nv code, and row span equal to that code.";
  } else if (kind == "hsds" && parts.size() == 3) {
    out << "Order-2(p+1) Hadamard matrix from a supplementary difference "
           "set pair on Z_p (p = " << parts[1] << ", selector " << parts[2]
        << "; digits pick the coset pair (C_i u C_i+1, C_i+1 u C_i+2), "
           "eq+1/eq-1 pick the pairs matched to hnv with a = +1/-1).  "
           "Checks: difference counts and the Hadamard identity.";
  } else if (kind == "paley1" && parts.size() == 2) {
    out << "Paley type I matrix of order q+1 (q = " << parts[1]
        << ", q = 3 mod 4) from the quadratic character, with the infinity "
           "point last.  Checks: Hadamard and skew.";
  } else if (kind == "paley2" && parts.size() == 2) {
    out << "Paley type II matrix of order 2(q+1) (q = " << parts[1]
        << ", q = 1 mod 4) from the conference matrix blocks.  Checks: "
           "Hadamard.";
  } else if (kind == "oct" && parts.size() >= 3) {
    out << "Sign matrix decoded from the octal text file " << spec.substr(4)
        << " (three bits per digit, 1 -> +1, 0 -> -1).  Checks: Hadamard "
           "and rank mod 3.";
  } else if (kind == "sign" && parts.size() >= 2) {
    out << "Sign matrix parsed from the +- text file " << spec.substr(5)
        << ".  Checks: Hadamard and rank mod 3.";
  } else {
    throw std::invalid_argument("unknown object '" + spec + "'");
  }
  return out.str();
}

CommandResult run_command(const std::vector<std::string>& args) {
  try {
    if (args.empty()) {
      throw std::invalid_argument(
          "usage: construct|verify|describe|hadamard|search|equiv ...");
    }
    const ParsedArgs pa = parse_args(args);
    const std::string& verb = pa.positional.empty() ? args[0] : pa.positional[0];
    Report r;
    if (verb == "construct") {
      r = cmd_construct(pa);
    } else if (verb == "verify") {
      r = cmd_verify(pa);
    } else if (verb == "hadamard") {
      r = cmd_hadamard(pa);
    } else if (verb == "search") {
      r = cmd_search(pa);
    } else if (verb == "equiv") {
      r = cmd_equiv(pa);
    } else if (verb == "describe") {
      r = cmd_describe(pa);
    } else {
      throw std::invalid_argument("unknown command '" + verb + "'");
    }
    return finish(args, r);
  } catch (const std::exception& err) {
    CommandResult out;
    out.exit_code = 3;
    out.fields["error"] = err.what();
    json root;
    root["command"] = args;
    root["error"] = err.what();
    out.json = root.dump();
    out.text = std::string("error: ") + err.what() + "\n";
    return out;
  }
}

}  // namespace sdh
