// Command-line front end: classification, torus/symmetric-function utilities,
// stabilizer dimensions, family certificates, and certificate re-validation.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polystab/classify.hpp"
#include "polystab/family.hpp"
#include "polystab/parser.hpp"
#include "polystab/stabilizer.hpp"
#include "polystab/symfun.hpp"
#include "polystab/torus.hpp"

using nlohmann::json;
using namespace polystab;

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> var_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::uint64_t> parse_char_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty characteristic list");
  return out;
}

FieldSpec field_of(std::uint64_t p) { return p == 0 ? FieldSpec() : FieldSpec(p); }

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << doc.dump(2) << "\n";
  }
}

json certificate_json(const StabilityVerdict& v) {
  if (v.destabilizer) {
    const OnePSG& p = *v.destabilizer;
    json support = json::array();
    for (const auto& m : p.support_in_basis) support.push_back(m);
    return json{{"type", "destabilizing-one-psg"},
                {"basis_names", p.basis_names},
                {"basis_matrix", p.basis_matrix},
                {"exponents", p.exponents},
                {"direction", p.direction},
                {"support_in_basis", support},
                {"weights", p.weights}};
  }
  if (v.boundary_point) {
    return json{{"type", "boundary-point"},
                {"boundary", v.boundary_point->str(var_names(v.boundary_point->nvars()))},
                {"dim_f", v.dim_f},
                {"dim_w", v.dim_w}};
  }
  if (v.stable_refined) {
    return json{{"type", "stabilizer-dimension"}, {"dim_f", v.dim_f}};
  }
  return nullptr;
}

json verdict_document(const std::string& input, const Polynomial& f, int n, std::uint64_t chr,
                      const StabilityVerdict& v, double ms) {
  return json{{"schema_version", kSchemaVersion},
              {"input", input},
              {"input_canonical", f.str(var_names(n))},
              {"n", n},
              {"d", f.degree()},
              {"char", chr},
              {"class", verdict_class_string(v)},
              {"branch", v.branch},
              {"note", v.note},
              {"used_groebner", v.used_groebner},
              {"stable_refined", v.stable_refined},
              {"ruled_out", v.ruled_out},
              {"certificate", certificate_json(v)},
              {"timings", json{{"classify_ms", ms}}}};
}

struct ClassifyOutcome {
  json doc;
  int exit_code = 0;
};

ClassifyOutcome classify_one(const std::string& input, int n, std::uint64_t chr, const GroebnerLimits& limits) {
  FieldSpec field = field_of(chr);
  Polynomial f = parse(input, n, field);
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  try {
    StabilityVerdict v;
    if (f.is_zero() || classify_detail::is_symmetric(f, n)) {
      v = classify_symmetric(f, n, limits);
    } else {
      bool even = true;
      for (const auto& [m, c] : f.terms())
        for (int e : m)
          if (e % 2 != 0) even = false;
      if (!even)
        throw std::invalid_argument("input is neither symmetric nor entirely even; no decision procedure applies");
      v = classify_entirely_even(f, n, f.degree(), limits);
    }
    return {verdict_document(input, f, n, chr, v, elapsed()), 0};
  } catch (const InconclusiveError& e) {
    json doc{{"schema_version", kSchemaVersion},
             {"input", input},
             {"input_canonical", f.str(var_names(n))},
             {"n", n},
             {"d", f.degree()},
             {"char", chr},
             {"class", "inconclusive"},
             {"note", e.what()},
             {"timings", json{{"classify_ms", elapsed()}}}};
    return {doc, 3};
  }
}

int cmd_classify(const std::string& input, int n, const std::string& chars, const GroebnerLimits& limits,
                 const std::string& out_path) {
  auto char_list = parse_char_list(chars);
  // one worker per characteristic
  std::vector<std::future<ClassifyOutcome>> futs;
  for (auto chr : char_list)
    futs.push_back(std::async(std::launch::async, classify_one, input, n, chr, limits));
  std::vector<ClassifyOutcome> outcomes;
  for (auto& f : futs) outcomes.push_back(f.get());
  int code = 0;
  for (const auto& o : outcomes) code = std::max(code, o.exit_code);
  if (outcomes.size() == 1) {
    emit(outcomes[0].doc, out_path);
  } else {
    json arr = json::array();
    for (const auto& o : outcomes) arr.push_back(o.doc);
    emit(arr, out_path);
  }
  return code;
}

int cmd_torus(const std::string& weights_str, const std::string& support_str, const std::string& out_path) {
  std::vector<std::vector<long>> weights;
  std::stringstream rows(weights_str);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<long> w;
    std::stringstream cols(row);
    std::string c;
    while (std::getline(cols, c, ',')) w.push_back(std::stol(c));
    if (!w.empty()) weights.push_back(std::move(w));
  }
  if (weights.empty()) throw std::invalid_argument("no weights given");
  int rank = static_cast<int>(weights[0].size());
  WeightedVector v;
  v.system = WeightSystem(weights, rank);
  if (support_str == "all") {
    for (std::size_t i = 0; i < weights.size(); ++i) v.support.insert(static_cast<int>(i));
  } else {
    for (auto idx : parse_char_list(support_str)) {
      if (idx >= weights.size()) throw std::invalid_argument("support index out of range");
      v.support.insert(static_cast<int>(idx));
    }
  }
  StabilityClass cls = torus_classify(v);
  json doc{{"schema_version", kSchemaVersion},
           {"weights", weights},
           {"support", std::vector<int>(v.support.begin(), v.support.end())},
           {"class", to_string(cls)}};
  emit(doc, out_path);
  return 0;
}

int cmd_symfun_expand(const std::string& basis, const std::string& shape, int n, std::uint64_t chr,
                      const std::string& out_path) {
  Partition lambda = partition_from_string(shape);
  Polynomial f = basis_poly(basis_kind_from_char(basis.at(0)), lambda, n, field_of(chr));
  json doc{{"schema_version", kSchemaVersion}, {"basis", basis},   {"shape", shape},
           {"n", n},                           {"char", chr},      {"polynomial", f.str(var_names(n))}};
  emit(doc, out_path);
  return 0;
}

int cmd_symfun_D(const std::string& basis, const std::string& shape, int n, std::uint64_t chr, int k,
                 const std::string& out_path) {
  Partition lambda = partition_from_string(shape);
  Polynomial f = basis_poly(basis_kind_from_char(basis.at(0)), lambda, n, field_of(chr));
  Polynomial df = divided_power_D(f, k);
  json doc{{"schema_version", kSchemaVersion},
           {"basis", basis},
           {"shape", shape},
           {"n", n},
           {"char", chr},
           {"k", k},
           {"polynomial", df.str(var_names(n))}};
  emit(doc, out_path);
  return 0;
}

int cmd_symfun_syt(const std::string& outer, const std::string& inner, const std::string& out_path) {
  Partition out_shape = partition_from_string(outer);
  Partition in_shape = inner.empty() ? Partition() : partition_from_string(inner);
  mpz_class count = skew_syt_count(SkewShape(out_shape, in_shape));
  json doc{{"schema_version", kSchemaVersion},
           {"outer", outer},
           {"inner", inner},
           {"count", count.get_str()}};
  emit(doc, out_path);
  return 0;
}

int cmd_stabdim(const std::string& input, int n, std::uint64_t chr, const GroebnerLimits& limits,
                const std::string& out_path) {
  FieldSpec field = field_of(chr);
  Polynomial f = parse(input, n, field);
  try {
    StabilizerDim sd = stabilizer_dim(f, n, limits);
    json doc{{"schema_version", kSchemaVersion}, {"input", input}, {"n", n},
             {"char", chr},                      {"dim", sd.dim},  {"used_groebner", sd.used_groebner}};
    emit(doc, out_path);
    return 0;
  } catch (const InconclusiveError& e) {
    json doc{{"schema_version", kSchemaVersion}, {"input", input}, {"n", n},
             {"char", chr},                      {"dim", nullptr}, {"note", e.what()}};
    emit(doc, out_path);
    return 3;
  }
}

int cmd_certify_family(const std::string& family, int n, std::uint64_t chr, const std::string& out_path) {
  FieldSpec field = field_of(chr);
  FamilyReport rep =
      family == "cubic" ? verify_cubic_lemmas(n, field) : verify_tensor_lemmas(n, field);
  json lemmas = json::array();
  for (const auto& l : rep.lemmas)
    lemmas.push_back(json{{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
  json doc{{"schema_version", kSchemaVersion},
           {"family", rep.family},
           {"n", rep.n},
           {"char", chr},
           {"lemmas", lemmas},
           {"exceptional_values", rep.exceptional_values},
           {"all_passed", rep.all_passed()}};
  emit(doc, out_path);
  return rep.all_passed() ? 0 : 1;
}

int cmd_appendix(const GroebnerLimits& limits, const std::string& out_path) {
  json rows = json::array();
  int code = 0;
  for (std::uint64_t chr : {0ull, 2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    FieldSpec field = field_of(chr);
    Polynomial h3 = symfun::complete_homogeneous(3, 3, field);
    auto t0 = std::chrono::steady_clock::now();
    json row{{"char", chr}, {"input_canonical", h3.str(var_names(3))}};
    try {
      StabilityVerdict v = classify_symmetric(h3, 3, limits);
      row["class"] = verdict_class_string(v);
      row["branch"] = v.branch;
      row["certificate"] = certificate_json(v);
    } catch (const InconclusiveError& e) {
      row["class"] = "inconclusive";
      row["note"] = e.what();
      code = 3;
    }
    row["timings"] =
        json{{"classify_ms",
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
    rows.push_back(row);
  }
  emit(json{{"schema_version", kSchemaVersion}, {"rows", rows}}, out_path);
  return code;
}

// Re-validation: strict schema, then weight arithmetic on unstable certificates.
bool check_document(const json& doc, std::string& why) {
  static const std::set<std::string> allowed{"schema_version", "input",         "input_canonical",
                                             "n",              "d",             "char",
                                             "class",          "branch",        "note",
                                             "used_groebner",  "stable_refined", "ruled_out",
                                             "certificate",    "timings"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!allowed.count(it.key())) {
      why = "unknown field '" + it.key() + "'";
      return false;
    }
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    why = "missing or unsupported schema_version";
    return false;
  }
  if (!doc.contains("class")) {
    why = "missing class";
    return false;
  }
  if (doc["class"] == "unstable" && doc.value("branch", "") != "zero-input") {
    if (!doc.contains("certificate") || doc["certificate"].is_null()) {
      why = "unstable verdict without certificate";
      return false;
    }
    const json& c = doc["certificate"];
    if (c.value("type", "") != "destabilizing-one-psg") {
      why = "unstable certificate has wrong type";
      return false;
    }
    std::vector<long> exps = c["exponents"].get<std::vector<long>>();
    long total = 0;
    for (long e : exps) total += e;
    if (total != 0) {
      why = "one-psg exponents do not sum to zero";
      return false;
    }
    std::string dir = c["direction"];
    auto support = c["support_in_basis"].get<std::vector<std::vector<long>>>();
    auto weights = c["weights"].get<std::vector<long>>();
    if (support.size() != weights.size() || support.empty()) {
      why = "support/weight length mismatch";
      return false;
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      long w = 0;
      for (std::size_t v = 0; v < support[i].size(); ++v) w += exps.at(v) * support[i][v];
      if (w != weights[i]) {
        why = "recomputed weight disagrees with certificate";
        return false;
      }
      bool ok = dir == "t->0" ? w > 0 : dir == "t->infinity" ? w < 0 : false;
      if (!ok) {
        why = "weight sign does not destabilize in the stated direction";
        return false;
      }
    }
  }
  return true;
}

int cmd_check_certificate(const std::string& in_path) {
  std::ifstream f(in_path);
  if (!f) {
    std::cerr << "cannot open " << in_path << "\n";
    return 2;
  }
  json data = json::parse(f);
  std::vector<json> docs;
  if (data.is_array()) {
    for (const auto& d : data) docs.push_back(d);
  } else if (data.contains("rows")) {
    for (const auto& d : data["rows"]) docs.push_back(d);
  } else {
    docs.push_back(data);
  }
  int checked = 0;
  for (const auto& d : docs) {
    std::string why;
    if (!check_document(d, why)) {
      std::cerr << "certificate check failed: " << why << "\n";
      return 1;
    }
    ++checked;
  }
  std::cout << json{{"checked", checked}, {"ok", true}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability classification for symmetric forms under SL_n"};
  app.require_subcommand(1);

  std::string input, chars = "0", out_path, weights_str, support_str = "all";
  std::string basis = "h", shape, outer, inner, family, in_path;
  int n = 0, k = 1;
  GroebnerLimits limits;

  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-basis", limits.max_basis, "Groebner basis size cap");
    sub->add_option("--max-degree", limits.max_degree, "Groebner degree cap");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "write JSON here instead of stdout"); };

  CLI::App* classify = app.add_subcommand("classify", "classify a symmetric or entirely-even form");
  classify->add_option("--input", input, "polynomial expression or macro (e.g. h3, e{2,1})")->required();
  classify->add_option("--n", n, "number of variables")->required();
  classify->add_option("--char", chars, "characteristic or comma list (e.g. 0,2,5)");
  add_limits(classify);
  add_out(classify);

  CLI::App* torus = app.add_subcommand("torus", "classify a weighted vector under a torus");
  torus->add_option("--weights", weights_str, "semicolon-separated weight rows, e.g. \"1,-1;-1,1\"")->required();
  torus->add_option("--support", support_str, "\"all\" or comma list of indices");
  add_out(torus);

  CLI::App* symfun_cmd = app.add_subcommand("symfun", "symmetric function utilities");
  symfun_cmd->require_subcommand(1);
  CLI::App* expand = symfun_cmd->add_subcommand("expand", "expand a basis element in monomials");
  expand->add_option("--basis", basis, "e|h|p|m|s")->required();
  expand->add_option("--shape", shape, "partition, e.g. 2,1")->required();
  expand->add_option("--n", n, "number of variables")->required();
  expand->add_option("--char", chars, "characteristic");
  add_out(expand);
  CLI::App* dop = symfun_cmd->add_subcommand("D", "apply the divided-power sum-of-partials operator");
  dop->add_option("--basis", basis, "e|h|p|m|s")->required();
  dop->add_option("--shape", shape, "partition, e.g. 2,1")->required();
  dop->add_option("--n", n, "number of variables")->required();
  dop->add_option("--char", chars, "characteristic");
  dop->add_option("--k", k, "divided power order (D^k/k!)");
  add_out(dop);
  CLI::App* syt = symfun_cmd->add_subcommand("syt", "count standard Young tableaux of a (skew) shape");
  syt->alias("syt-count");
  syt->add_option("--outer", outer, "outer shape, e.g. 2,1")->required();
  syt->add_option("--inner", inner, "inner shape (optional)");
  add_out(syt);

  CLI::App* stabdim = app.add_subcommand("stabdim", "stabilizer dimension of a form");
  stabdim->add_option("--input", input, "polynomial expression or macro")->required();
  stabdim->add_option("--n", n, "number of variables")->required();
  stabdim->add_option("--char", chars, "characteristic");
  add_limits(stabdim);
  add_out(stabdim);

  CLI::App* certify = app.add_subcommand("certify-family", "verify the closed-orbit family lemmas");
  certify->add_option("--family", family, "cubic|tensor")->required()->check(CLI::IsMember({"cubic", "tensor"}));
  certify->add_option("--n", n, "family size parameter")->required();
  certify->add_option("--char", chars, "characteristic");
  add_out(certify);

  CLI::App* appendix = app.add_subcommand("appendix", "classify h3 in 3 variables across characteristics");
  add_limits(appendix);
  add_out(appendix);

  CLI::App* check = app.add_subcommand("check-certificate", "re-validate an emitted JSON document");
  check->add_option("--in", in_path, "path to a JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(input, n, chars, limits, out_path);
    if (torus->parsed()) return cmd_torus(weights_str, support_str, out_path);
    if (symfun_cmd->parsed()) {
      std::uint64_t chr = parse_char_list(chars).at(0);
      if (expand->parsed()) return cmd_symfun_expand(basis, shape, n, chr, out_path);
      if (dop->parsed()) return cmd_symfun_D(basis, shape, n, chr, k, out_path);
      if (syt->parsed()) return cmd_symfun_syt(outer, inner, out_path);
    }
    if (stabdim->parsed()) return cmd_stabdim(input, n, parse_char_list(chars).at(0), limits, out_path);
    if (certify->parsed()) return cmd_certify_family(family, n, parse_char_list(chars).at(0), out_path);
    if (appendix->parsed()) return cmd_appendix(limits, out_path);
    if (check->parsed()) return cmd_check_certificate(in_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
