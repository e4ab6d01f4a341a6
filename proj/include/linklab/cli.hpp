#pragma once

#include "linklab/io.hpp"
#include "linklab/minor.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace linklab {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

namespace cli_detail {

inline std::string read_input(const std::string &path, std::istream &in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw InputError(path + ": cannot open file");
  buf << f.rdbuf();
  return buf.str();
}

inline void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw InputError(path + ": cannot write file");
}

template <class T> T read_as(const std::string &path, std::istream &in, const char *expected) {
  auto doc = parse_document(read_input(path, in));
  if (!std::holds_alternative<T>(doc))
    throw InputError(path + ": expected a document of kind \"" + expected + "\", got \"" +
                     document_kind(doc) + "\"");
  return std::get<T>(std::move(doc));
}

inline std::uint64_t parse_seed(const std::string &text, const char *source) {
  std::uint64_t v = 0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw InputError(std::string(source) + ": invalid seed \"" + text + "\"");
  return v;
}

/// --seed, else LINKLAB_SEED, else 0.
inline std::uint64_t resolve_seed(const std::optional<std::string> &flag) {
  if (flag)
    return parse_seed(*flag, "--seed");
  if (const char *env = std::getenv("LINKLAB_SEED"))
    return parse_seed(env, "LINKLAB_SEED");
  return 0;
}

inline Json verification_json(const EmbeddingReport &r, const char *kind) {
  Json j = io_detail::header("verification");
  j["document"] = kind;
  j["valid"] = r.valid();
  j["violations"] = Json::array();
  for (const auto &v : r.violations)
    j["violations"].push_back(Json{{"kind", v.kind}, {"first", v.first}, {"second", v.second}});
  return j;
}

inline Json pairs_json() {
  Json j = io_detail::header("dual-pairs");
  j["pairs"] = Json::array();
  for (const auto &p : dual_pairs())
    j["pairs"].push_back(to_json(p));
  return j;
}

inline Json lemma32_json(bool &matches) {
  const auto &c = EmbeddedSuspension::complex();
  const auto found = lemma32_pairs(c);
  using Key = std::pair<std::vector<Vertex>, std::vector<std::size_t>>;
  std::set<Key> got, expected;
  Json j = io_detail::header("lemma32");
  j["pairs"] = Json::array();
  for (const auto &p : found) {
    got.insert({p.one.vertices, p.two.faces});
    Json faces = Json::array();
    for (std::size_t i = 0; i < p.two.faces.size(); ++i) {
      auto v = c.faces()[p.two.faces[i]].v;
      if (p.two.orientation[i] < 0)
        std::swap(v[1], v[2]);
      faces.push_back(Json::array({v[0], v[1], v[2]}));
    }
    j["pairs"].push_back(Json{{"cycle", p.one.vertices}, {"surface", std::move(faces)}});
  }
  for (const auto &t : k6_triangles())
    expected.insert({{t.v[0], t.v[1], t.v[2]}, suspension_two_cycle(c, t.dual()).faces});
  matches = got == expected;
  j["count"] = found.size();
  j["matchesDualTriangles"] = matches;
  return j;
}

inline Json fuzz_json(const FuzzSummary &s, std::uint64_t seed) {
  Json j = io_detail::header("fuzz");
  j["trials"] = s.trials;
  j["seed"] = seed;
  j["lambdaOnes"] = s.lambda_ones;
  j["LambdaOnes"] = s.big_lambda_ones;
  j["parityAnomalies"] = s.anomalies;
  j["pairDisagreements"] = s.pair_disagreements;
  j["retries"] = s.retries;
  j["records"] = Json::array();
  for (const auto &r : s.records) {
    Json rec{{"index", r.index}, {"seed", r.seed}, {"lambda", r.lambda.value.value_or(-1)}};
    if (r.big_lambda.value)
      rec["Lambda"] = *r.big_lambda.value;
    rec["parityAnomaly"] = r.big_lambda.parity_anomaly;
    rec["pairsAgree"] = r.pairs_agree;
    rec["retries"] = r.lambda.retries + r.big_lambda.retries;
    j["records"].push_back(std::move(rec));
  }
  j["ok"] = s.ok();
  j["toolVersion"] = kToolVersion;
  return j;
}

} // namespace cli_detail

/// Entry point of the `linklab` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on invariant/verification failure, 2 on bad input.
inline int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
                   std::ostream &err) {
  using namespace cli_detail;
  CLI::App app{"Exact linking invariants of embedded K6 and its suspension", "linklab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file, output;
  std::optional<std::string> seed_flag;
  std::string base = "moment";
  std::size_t trials = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_output = [&](CLI::App *sub) { sub->add_option("-o,--output", output, "Output file (default stdout)"); };
  auto add_seed = [&](CLI::App *sub) { sub->add_option("--seed", seed_flag, "Seed (fallback: LINKLAB_SEED)"); };
  auto add_file = [&](CLI::App *sub, const char *what) {
    sub->add_option("file", file, what)->required();
  };

  auto *pairs = app.add_subcommand("pairs", "List the 10 dual triangle pairs of K6");
  add_output(pairs);
  auto *lam = app.add_subcommand("lambda", "Conway-Gordon invariant of an embedded K6");
  add_file(lam, "embedded-k6 document, or - for stdin");
  add_seed(lam);
  add_output(lam);
  auto *susp = app.add_subcommand("suspend", "Suspension of a graph as a two-complex");
  add_file(susp, "graph document, or - for stdin");
  add_output(susp);
  auto *sig = app.add_subcommand("sigma6", "Straight-cone embedding of S(K6) in R^4");
  sig->add_option("--base", base, "Base embedding of K6")->check(CLI::IsMember({"moment", "random"}));
  add_seed(sig);
  add_output(sig);
  auto *big = app.add_subcommand("biglambda", "Invariant of an embedded suspension of K6");
  add_file(big, "embedded-suspension document, or - for stdin");
  add_seed(big);
  add_output(big);
  auto *ver = app.add_subcommand("verify", "Check that a document is an embedding");
  add_file(ver, "embedded-k6 or embedded-suspension document, or - for stdin");
  add_output(ver);
  auto *min = app.add_subcommand("minor", "Decide whether a graph has a K6 minor");
  add_file(min, "graph document, or - for stdin");
  add_output(min);
  auto *lem = app.add_subcommand("lemma32", "Disjoint cycle/surface pairs of S(K6)");
  add_output(lem);
  auto *fuzz = app.add_subcommand("fuzz", "Randomized invariance check of lambda and Lambda");
  fuzz->add_option("--trials", trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  add_seed(fuzz);
  fuzz->add_option("--jobs", jobs, "Parallel trials (default: available cores)")->check(CLI::PositiveNumber);
  add_output(fuzz);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    int status = kExitOk;
    Json result;
    if (pairs->parsed()) {
      result = pairs_json();
    } else if (lam->parsed()) {
      const auto report = lambda(read_as<EmbeddedK6>(file, in, "embedded-k6"), resolve_seed(seed_flag));
      status = report.value == 1 ? kExitOk : kExitFailure;
      result = to_json(report);
    } else if (susp->parsed()) {
      result = to_json(suspension(read_as<Graph>(file, in, "graph")));
    } else if (sig->parsed()) {
      const auto seed = resolve_seed(seed_flag);
      if (base == "moment") {
        const Point3 origin{0, 0, 0};
        result = to_json(sigma6(moment_curve_k6(), origin, origin));
      } else {
        Rng rng(seed);
        const auto k6 = random_generic_k6(rng.next(), 100);
        const Box<3> box{{Rational(-50), Rational(-50), Rational(-50)},
                         {Rational(50), Rational(50), Rational(50)}};
        const auto a = rng.grid_point(box);
        const auto b = rng.grid_point(box);
        result = to_json(sigma6(k6, a, b));
      }
    } else if (big->parsed()) {
      const auto report = big_lambda(read_as<EmbeddedSuspension>(file, in, "embedded-suspension"),
                                     resolve_seed(seed_flag));
      status = report.value == 1 ? kExitOk : kExitFailure;
      result = to_json(report);
    } else if (ver->parsed()) {
      const auto doc = parse_document(read_input(file, in));
      EmbeddingReport report;
      if (const auto *k = std::get_if<EmbeddedK6>(&doc))
        report = verify_embedding3(*k);
      else if (const auto *s = std::get_if<EmbeddedSuspension>(&doc))
        report = verify_embedding4(*s);
      else
        throw InputError(file + ": cannot verify a document of kind \"" + document_kind(doc) + "\"");
      status = report.valid() ? kExitOk : kExitFailure;
      result = verification_json(report, document_kind(doc));
    } else if (min->parsed()) {
      result = Json{{"hasK6Minor", has_k6_minor(read_as<Graph>(file, in, "graph"))}};
    } else if (lem->parsed()) {
      bool matches = false;
      result = lemma32_json(matches);
      status = matches ? kExitOk : kExitFailure;
    } else if (fuzz->parsed()) {
      const auto seed = resolve_seed(seed_flag);
      const auto summary = fuzz_invariance(trials, seed, jobs);
      status = summary.ok() ? kExitOk : kExitFailure;
      result = fuzz_json(summary, seed);
    }
    write_output(output, emit(result), out);
    return status;
  } catch (const InvalidEmbedding &e) {
    err << "linklab: " << e.what() << "\n";
    for (const auto &v : e.report().violations)
      err << "  " << v.kind << ": " << v.first << " / " << v.second << "\n";
    return kExitFailure;
  } catch (const InputError &e) {
    err << "linklab: " << e.what() << "\n";
    return kExitInput;
  } catch (const LimitExceeded &e) {
    err << "linklab: " << e.what() << "\n";
    return kExitInput;
  } catch (const RetryBudgetExhausted &e) {
    err << "linklab: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument &e) {
    err << "linklab: " << e.what() << "\n";
    return kExitInput;
  }
}

} // namespace linklab
