#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "fibrekit/error.hpp"
#include "fibrekit/pants.hpp"
#include "fibrekit/scl.hpp"
#include "fibrekit/twist.hpp"
#include "fibrekit/twist_length.hpp"
#include "report.hpp"
#include "word_text.hpp"

namespace fibrekit::workbench {

namespace {

struct Options {
  std::string surface = "1,1";
  std::string word;
  std::string classes_file;
  std::string n;
  std::string model;
  std::string format = "json";
  bool verify = false;
  std::string out;
  std::string fibre_b1;
  std::string twist_bounds;
  std::string phi0 = "0";
  std::string tc;
  std::string korkmaz_genus;
};

struct Document {
  Json json;
  std::string tsv;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Round-trips a document through its text form, as a consumer would see it.
Json reparse(const Json& doc) { return Json::parse(doc.dump()); }

Document alexander(const Options& opts) {
  const SurfaceSignature surface = parse_surface(opts.surface);
  const TwistWord word = parse_word(opts.word, surface);
  const IntMatrix action = word_action(word);
  const AlexanderReport report = alexander_report(word);

  Document doc;
  doc.json = Json{{"command", "alexander"}, {"surface", to_json(surface)}, {"word", format_word(word)},
                  {"action", to_json(action)}};
  doc.json.update(to_json(report));

  if (opts.verify) {
    const Json emitted = reparse(doc.json);
    const TwistWord reread = parse_word(emitted.at("word").get<std::string>(), surface);
    const AlexanderReport again = alexander_report(reread);
    bool ok = preserves_form(word_action(reread), standard_form(surface)) &&
              again.poly.to_string() == emitted.at("poly").get<std::string>() &&
              again.delta_one.get_str() == emitted.at("delta_one").get<std::string>();
    for (std::size_t shift = 1; ok && shift < reread.size(); ++shift) {
      ok = alexander_report(reread.rotated(shift)).poly == again.poly;
    }
    if (!ok) throw VerificationError("alexander report failed re-verification");
    doc.json["verification"] = Json{{"passed", true}, {"checks", "symplectic,reparse,cyclic"}};
  }

  doc.tsv = "word\tpoly\tdelta_one\tclassification\n" + format_word(word) + "\t" + report.poly.to_string() +
            "\t" + report.delta_one.get_str() + "\t" + to_string(report.classification) + "\n";
  return doc;
}

TwistWord random_word(const std::vector<HomologyClass>& classes, const SurfaceSignature& surface,
                      std::mt19937_64& rng) {
  std::vector<TwistLetter> letters;
  const std::size_t length = 1 + rng() % 12;
  for (std::size_t i = 0; i < length; ++i) {
    const auto& c = classes[rng() % classes.size()];
    auto e = static_cast<std::int64_t>(rng() % 10) - 5;
    if (e >= 0) ++e;  // [-5, 5] without zero
    letters.emplace_back(c, e);
  }
  return TwistWord(surface, std::move(letters));
}

Document twistlb(const Options& opts) {
  const SurfaceSignature surface = parse_surface(opts.surface);
  if (opts.classes_file.empty()) throw UsageError("twistlb needs --classes <file>");
  if (surface.boundary() != 1) {
    throw PreconditionError("twistlb needs a surface with exactly one boundary component");
  }
  if (surface.genus() < 1) throw PreconditionError("twistlb needs genus >= 1");
  const auto classes = parse_classes(read_file(opts.classes_file), surface);
  const auto cert = knot_monodromy_obstruction(surface.genus(), classes);

  Document doc;
  Json input = Json::array();
  for (const auto& c : classes) input.push_back(format_class(c));
  doc.json = Json{{"command", "twistlb"},
                  {"surface", to_json(surface)},
                  {"twist_length_lower_bound", knot_twist_length_lower_bound(surface.genus())},
                  {"input_classes", std::move(input)},
                  {"distinct_classes", distinct_curves(classes).size()},
                  {"status", cert ? "certificate" : "not_applicable"}};
  if (cert) doc.json["certificate"] = to_json(*cert);

  if (opts.verify && cert) {
    const ObstructionCertificate reread = certificate_from_json(reparse(doc.json).at("certificate"), surface);
    if (!certificate_is_consistent(reread)) throw VerificationError("certificate is inconsistent");
    std::vector<TwistWord> words;
    std::vector<TwistLetter> each_once;
    for (const auto& c : reread.classes) each_once.emplace_back(c, 1);
    words.emplace_back(surface, std::move(each_once));
    if (!opts.word.empty()) words.push_back(parse_word(opts.word, surface));
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 100; ++i) words.push_back(random_word(reread.classes, surface, rng));
    for (const auto& w : words) {
      if (!verify_certificate(reread, w)) {
        throw VerificationError("certificate fails on word '" + format_word(w) + "'");
      }
    }
    doc.json["verification"] = Json{{"passed", true}, {"words_checked", words.size()}};
  }

  std::string witness = "-";
  if (cert) witness = format_class(cert->witness_class());
  std::string listed;
  for (const auto& c : classes) listed += (listed.empty() ? "" : " ") + format_class(c);
  doc.tsv = "status\tclasses\twitness\n" + doc.json["status"].get<std::string>() + "\t" + listed + "\t" +
            witness + "\n";
  return doc;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rational rational_option(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a rational p or p/q, got '" + text + "'");
  }
}

Document sclbound(const Options& opts) {
  if (opts.n.empty()) throw UsageError("sclbound needs --n <int>");
  const std::int64_t n = parse_int64(opts.n);
  if (opts.tc.empty() == opts.korkmaz_genus.empty()) {
    throw UsageError("sclbound needs exactly one of --tc <rational> or --korkmaz-genus <g>");
  }
  std::vector<Premise> twists;
  for (const auto& item : split_list(opts.twist_bounds)) {
    twists.emplace_back(RationalBound::lower(rational_option(item, "--twist-bounds"),
                                             "scl(T_" + std::to_string(twists.size() + 1) + ")"));
  }
  Premise phi0 = RationalBound::lower(rational_option(opts.phi0, "--phi0"), "scl(phi_0)");
  Premise tc = opts.tc.empty() ? Premise(korkmaz_lower(parse_int64(opts.korkmaz_genus)))
                               : Premise(RationalBound::lower(rational_option(opts.tc, "--tc"), "scl(T_c)"));
  const DerivationPtr chain = chain_lower(twists, std::move(phi0), std::move(tc), n);

  Document doc;
  doc.json = Json{{"command", "sclbound"},
                  {"k", twists.size()},
                  {"n", n},
                  {"bound", to_json(chain->result)},
                  {"derivation", to_json(*chain)}};
  if (opts.verify) {
    const DerivationPtr reread = derivation_from_json(reparse(doc.json).at("derivation"));
    if (!replay(*reread) || reread->result != chain->result) {
      throw VerificationError("derivation replay failed");
    }
    doc.json["verification"] = Json{{"passed", true}, {"nodes_replayed", "all"}};
  }
  doc.tsv = "k\tn\tkind\tvalue\tsubject\n" + std::to_string(twists.size()) + "\t" + std::to_string(n) + "\t" +
            to_string(chain->result.kind) + "\t" + to_string(chain->result.value) + "\t" +
            chain->result.subject + "\n";
  return doc;
}

// Evaluates f on every value; results keep the input order.
template <typename F>
std::vector<Json> parallel_rows(const std::vector<std::int64_t>& values, F f) {
  std::vector<Json> rows(values.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(values.size() / 64, 1));
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < values.size(); i += workers) rows[i] = f(values[i]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

Document heightlb(const Options& opts) {
  if (opts.n.empty()) throw UsageError("heightlb needs --n <int|range>");
  const std::int64_t fibre_b1 =
      opts.fibre_b1.empty() ? parse_surface(opts.surface).b1() : parse_int64(opts.fibre_b1);
  CBoundModel model = CBoundModel::illustrative();
  if (!opts.model.empty()) {
    const auto parts = split_list(opts.model);
    if (parts.size() != 2) throw UsageError("--model expects alpha,beta");
    model = CBoundModel(rational_option(parts[0], "--model"), rational_option(parts[1], "--model"),
                        ModelFlag::UserSupplied);
  }
  const auto values = parse_range(opts.n).values();

  const auto rows = parallel_rows(values, [&](std::int64_t n) {
    const HeightQuery q{fibre_b1, n, model};
    const HeightResult result = height_lower_bound(q);
    Json steps = Json::array();
    for (const auto& step : result.steps) steps.push_back(to_json(step));
    return Json{{"n", n}, {"h_lb", result.h_lb}, {"steps", std::move(steps)}};
  });

  Document doc;
  doc.json = Json{{"command", "heightlb"},
                  {"fibre_b1", fibre_b1},
                  {"model", to_string(model.flag)},
                  {"model_parameters", {{"alpha", to_string(model.alpha)}, {"beta", to_string(model.beta)}}},
                  {"rows", rows}};

  if (opts.verify) {
    const Json emitted = reparse(doc.json);
    for (const auto& row : emitted.at("rows")) {
      const HeightQuery q{fibre_b1, row.at("n").get<std::int64_t>(), model};
      HeightResult reread{row.at("h_lb").get<std::int64_t>(), {}};
      for (const auto& step : row.at("steps")) reread.steps.push_back(height_step_from_json(step));
      if (!verify_height(q, reread)) {
        throw VerificationError("height derivations fail for n = " + std::to_string(q.n));
      }
    }
    doc.json["verification"] = Json{{"passed", true}, {"rows_checked", rows.size()}};
  }

  std::ostringstream tsv;
  tsv << "n\th_lb\tmodel\n";
  for (const auto& row : rows) {
    tsv << row.at("n").get<std::int64_t>() << '\t' << row.at("h_lb").get<std::int64_t>() << '\t'
        << to_string(model.flag) << '\n';
  }
  doc.tsv = tsv.str();
  return doc;
}

Document pants_sweep(const Options& opts) {
  if (opts.n.empty()) throw UsageError("pants needs --n <int|range>");
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "n\ttwist_length\tgamma1\tgamma2\tgamma3\tobstructed\n";
  for (const auto n : parse_range(opts.n).values()) {
    const pants::FamilyMember member{n};
    const auto w = member.monodromy();
    const auto cuts = pants::cut_annulus_twists(n);
    const bool obstructed = pants::hopf_deplumbing_obstructed(n);
    const auto alex = pants::pants_alexander(w);
    rows.push_back(Json{{"n", n},
                        {"class", {w.p, w.q, w.r}},
                        {"twist_length", pants::twist_length(w)},
                        {"cuts", to_json(cuts)},
                        {"obstructed", obstructed},
                        {"poly", alex.poly.to_string()},
                        {"delta_one", alex.delta_one.get_str()}});
    tsv << n << '\t' << pants::twist_length(w);
    for (const auto& arc : cuts.arcs) tsv << '\t' << arc.full_twists;
    tsv << '\t' << (obstructed ? "true" : "false") << '\n';
  }

  Document doc;
  doc.json = Json{{"command", "pants"}, {"rows", std::move(rows)}};
  if (opts.verify) {
    for (const auto& row : reparse(doc.json).at("rows")) {
      const auto n = row.at("n").get<std::int64_t>();
      const auto report = alexander_report(pants::to_word(pants::FamilyMember{n}.monodromy()));
      const auto& cuts = row.at("cuts");
      bool any_hopf = false;
      for (const auto& arc : cuts) {
        const auto t = arc.at("full_twists").get<std::int64_t>();
        any_hopf = any_hopf || t == 1 || t == -1;
      }
      const bool ok = report.poly.to_string() == row.at("poly").get<std::string>() &&
                      report.delta_one.get_str() == row.at("delta_one").get<std::string>() &&
                      cuts.at(1).at("full_twists").get<std::int64_t>() -
                              cuts.at(2).at("full_twists").get<std::int64_t>() == 2 &&
                      any_hopf != row.at("obstructed").get<bool>();
      if (!ok) throw VerificationError("pants row failed re-verification for n = " + std::to_string(n));
    }
    doc.json["verification"] = Json{{"passed", true}};
  }
  doc.tsv = tsv.str();
  return doc;
}

std::string error_json(const char* code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}}.dump() + "\n";
}

void add_common(CLI::App& sub, Options& opts) {
  sub.add_option("--surface", opts.surface, "Surface as genus,boundary")->capture_default_str();
  sub.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  sub.add_flag("--verify", opts.verify, "Re-read the emitted document and re-check it");
  sub.add_option("--out", opts.out, "Write the report to this path instead of stdout");
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  Options opts;
  CLI::App app{"Exact computations with Dehn-twist monodromies", "fibrework"};
  app.require_subcommand(1);

  auto* alex = app.add_subcommand("alexander", "Homological action and Alexander polynomial of a twist word");
  add_common(*alex, opts);
  alex->add_option("--word", opts.word, "Twist word, e.g. \"a1 b1^-1 [1,1]^2\"")->required();

  auto* twl = app.add_subcommand("twistlb", "Certificate that too few twist curves cannot give a knot monodromy");
  add_common(*twl, opts);
  twl->add_option("--classes", opts.classes_file, "File listing twist-curve classes")->required();
  twl->add_option("--word", opts.word, "Extra word to check the certificate against (with --verify)");

  auto* scl = app.add_subcommand("sclbound", "Lower bound from the product-rule chain");
  add_common(*scl, opts);
  scl->add_option("--n", opts.n, "Exponent of T_c")->required();
  scl->add_option("--twist-bounds", opts.twist_bounds, "Comma-separated lower bounds for scl(T_i)");
  scl->add_option("--phi0", opts.phi0, "Lower bound for scl(phi_0)")->capture_default_str();
  scl->add_option("--tc", opts.tc, "Lower bound for scl(T_c)");
  scl->add_option("--korkmaz-genus", opts.korkmaz_genus, "Derive scl(T_c) >= 1/(18g-6) for this genus");

  auto* height = app.add_subcommand("heightlb", "Lower bounds on stabilisation height over an n sweep");
  add_common(*height, opts);
  height->add_option("--n", opts.n, "Stallings exponent: n, a..b or a..b:step")->required();
  height->add_option("--model", opts.model, "C(m) = alpha m + beta as alpha,beta (default illustrative 1,0)");
  height->add_option("--fibre-b1", opts.fibre_b1, "First Betti number of the fibre (default: from --surface)");

  auto* pants_cmd = app.add_subcommand("pants", "Pair-of-pants family phi_n = T_a T_b^-1 T_c^n");
  add_common(*pants_cmd, opts);
  pants_cmd->add_option("--n", opts.n, "n, a..b or a..b:step")->required();

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitParse;
    result.err = error_json("usage", e.what());
    return result;
  }

  try {
    Document doc;
    if (alex->parsed()) doc = alexander(opts);
    if (twl->parsed()) doc = twistlb(opts);
    if (scl->parsed()) doc = sclbound(opts);
    if (height->parsed()) doc = heightlb(opts);
    if (pants_cmd->parsed()) doc = pants_sweep(opts);

    std::string text = opts.format == "tsv" ? doc.tsv : doc.json.dump(2) + "\n";
    if (!opts.out.empty()) {
      std::ofstream file(opts.out, std::ios::binary);
      if (!file || !(file << text)) throw UsageError("cannot write '" + opts.out + "'");
    } else {
      result.out = std::move(text);
    }
  } catch (const ParseError& e) {
    result.exit_code = kExitParse;
    result.err = error_json(to_string(e.code()), e.what());
  } catch (const UsageError& e) {
    result.exit_code = kExitParse;
    result.err = error_json("usage", e.what());
  } catch (const PreconditionError& e) {
    result.exit_code = kExitPrecondition;
    result.err = error_json("precondition", e.what());
  } catch (const VerificationError& e) {
    result.exit_code = kExitVerification;
    result.err = error_json("verification", e.what());
  } catch (const std::exception& e) {
    result.exit_code = kExitVerification;
    result.err = error_json("internal", e.what());
  }
  return result;
}

}  // namespace fibrekit::workbench
