#pragma once
// Command-line front end: command dispatch over the algebra kernels with
// deterministic JSON reports.  One command per process; exit status 0 iff
// the report says ok.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dk/catalog.hpp"
#include "dk/expr.hpp"
#include "dk/framing.hpp"
#include "dk/gt.hpp"
#include "dk/kv.hpp"
#include "dk/presented.hpp"
#include "dk/series.hpp"

namespace dk::cli {

using Json = nlohmann::ordered_json;

// Safety limit for --max-degree, configurable through the environment.
inline int degreeLimit() {
  if (const char* e = std::getenv("DK_MAX_DEGREE")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  return 8;
}

inline void checkDegree(int D) {
  if (D < 1) throw Error("max-degree must be at least 1");
  if (D > degreeLimit())
    throw Error("max-degree " + std::to_string(D) +
                " exceeds the safety limit " + std::to_string(degreeLimit()) +
                " (set DK_MAX_DEGREE to raise it)");
}

// ---------------------------------------------------------------------------
// JSON rendering of algebra values.
// ---------------------------------------------------------------------------

inline Json ratJson(const Rat& r) { return r.get_str(); }

template <class K>
Json lieJson(const Lie<K>& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"word", wordString(*e.alphabet(), w)},
                     {"coeff", coeffString(K(c))}});
  return {{"terms", terms}, {"text", e.toString()}};
}

template <class K>
Json tensorJson(const Tensor<K>& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"word", wordString(*e.alphabet(), w)},
                     {"coeff", coeffString(K(c))}});
  return terms;
}

inline Json cyclicJson(const Cyclic<Rat>& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"necklace", wordString(*e.alphabet(), w)},
                     {"coeff", ratJson(c)}});
  return terms;
}

inline Json cyclic2Json(const AlphabetPtr& alpha, const Cyclic2<Rat>& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back({{"left", wordString(*alpha, k.first)},
                     {"right", wordString(*alpha, k.second)},
                     {"coeff", ratJson(c)}});
  return terms;
}

// ---------------------------------------------------------------------------
// Input parsing helpers.
// ---------------------------------------------------------------------------

inline Rat parseRat(const std::string& s) {
  Scalar v;
  if (!expr_detail::parseScalar(s, &v) || !v.isConstant())
    throw Error("bad rational '" + s + "'");
  return v.rat();
}

inline std::vector<Rat> parseRatList(const std::string& s) {
  std::vector<Rat> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(parseRat(cur));
  return out;
}

// "a=1,0;b=0,0;c=-1" with any subset of keys; missing entries default to 0.
inline FramingData parseFraming(const KvContext& ctx, const std::string& s) {
  FramingData fr;
  fr.a.assign(static_cast<size_t>(ctx.g), Rat(0));
  fr.b.assign(static_cast<size_t>(ctx.g), Rat(0));
  fr.c.assign(static_cast<size_t>(ctx.n), Rat(0));
  std::string part;
  std::stringstream ss(s);
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("bad framing entry '" + part + "'");
    std::string key = part.substr(0, eq);
    std::vector<Rat> vals = parseRatList(part.substr(eq + 1));
    std::vector<Rat>* dst = key == "a"   ? &fr.a
                            : key == "b" ? &fr.b
                            : key == "c" ? &fr.c
                                         : nullptr;
    if (!dst) throw Error("bad framing key '" + key + "'");
    if (vals.size() != dst->size())
      throw Error("framing key '" + key + "' expects " +
                  std::to_string(dst->size()) + " value(s)");
    *dst = std::move(vals);
  }
  return fr;
}

inline Lie<Scalar> parseLie(const std::string& text, const AlphabetPtr& alpha,
                            int D) {
  return evalLie(*parseExpr(text), alpha, D);
}

// ---------------------------------------------------------------------------
// Verb implementations.  Each fills result/failures; ok defaults to
// "no failures".
// ---------------------------------------------------------------------------

struct VerbOutcome {
  Json result = Json::object();
  std::vector<std::string> failures;
  bool ok = true;
  void failAll() { ok = failures.empty(); }
};

inline StrandSet numberedStrands(int g, int strands, bool framed) {
  StrandSet s;
  s.g = g;
  s.framed = framed;
  for (int i = 1; i <= strands; ++i) s.labels.push_back(std::to_string(i));
  return s;
}

inline VerbOutcome runDims(int g, int strands, bool framed, int D) {
  checkDegree(D);
  GradedBasis b(makeTf(numberedStrands(g, strands, framed)), D);
  VerbOutcome o;
  o.result["dims"] = b.dims();
  o.result["total"] = b.totalDim();
  return o;
}

inline VerbOutcome runNf(int g, int strands, bool framed, int D,
                         const std::string& text) {
  checkDegree(D);
  AlphabetPtr alpha = strandAlphabet(numberedStrands(g, strands, framed));
  ExprPtr e = parseExpr(text);
  GradedBasis b(makeTf(numberedStrands(g, strands, framed)), D);
  Lie<Scalar> nf = b.reduce(evalLie(*e, alpha, D));
  VerbOutcome o;
  o.result["expr"] = printExpr(*e);
  o.result["normal_form"] = lieJson(nf);
  o.result["zero"] = nf.isZero();
  return o;
}

inline VerbOutcome runBch(int g, int strands, bool framed, int D,
                          const std::vector<std::string>& texts) {
  checkDegree(D);
  AlphabetPtr alpha = strandAlphabet(numberedStrands(g, strands, framed));
  std::vector<Lie<Scalar>> args;
  for (const auto& t : texts) args.push_back(parseLie(t, alpha, D));
  VerbOutcome o;
  o.result["value"] = lieJson(bchLie<Scalar>(args));
  return o;
}

inline VerbOutcome runInsert(int g, int strands, bool framed, int D,
                             const std::string& at,
                             const std::vector<std::string>& labels,
                             const std::string& text) {
  checkDegree(D);
  StrandSet s = numberedStrands(g, strands, framed);
  AlphabetPtr alpha = strandAlphabet(s);
  Lie<Rat> e = toRational(parseLie(text, alpha, D));
  Lie<Rat> img = insertK(s, at, labels, e, D);
  VerbOutcome o;
  o.result["value"] = lieJson(img);
  o.result["strands"] = insertStrands(s, at, labels).labels;
  return o;
}

inline VerbOutcome runVerifyAction(int g, int n, int D, bool mutate) {
  checkDegree(D);
  VerbOutcome o;
  o.failures = verifyAction(g, n, D, mutate);
  o.result["checked"] = true;
  o.failAll();
  return o;
}

inline VerbOutcome runVerifySplit(int g, int n, int D) {
  checkDegree(D);
  SplitReport rep = verifySplit(g, n, D);
  VerbOutcome o;
  o.result["dims_direct"] = rep.dimsDirect;
  o.result["dims_tower"] = rep.dimsTower;
  o.failures = rep.failures;
  o.failAll();
  return o;
}

inline VerbOutcome runGoldman(int g, int n, int D, const std::string& ta,
                              const std::string& tb) {
  checkDegree(D);
  GtContext ctx = makeGt(g, n, D);
  Tensor<Rat> a = toRational(evalTensor(*parseExpr(ta), ctx.base, D));
  Tensor<Rat> b = toRational(evalTensor(*parseExpr(tb), ctx.base, D));
  auto eta = [&](const Tensor<Rat>& u, const Tensor<Rat>& v) {
    return evalE(ctx, u, v);
  };
  VerbOutcome o;
  o.result["bracket"] = cyclicJson(goldmanBracket(ctx, eta, a, b));
  return o;
}

inline VerbOutcome runTuraev(int g, int n, int D, const std::string& tv) {
  checkDegree(D);
  GtContext ctx = makeGt(g, n, D);
  Tensor<Rat> v = toRational(evalTensor(*parseExpr(tv), ctx.ext, D));
  Cyclic2<Rat> d = traceBoth(cobracketGrouplike(ctx, defaultPhi(ctx), v));
  VerbOutcome o;
  o.result["cobracket"] = cyclic2Json(ctx.base, d);
  return o;
}

inline VerbOutcome runFoxEval(int g, int n, int D, const std::string& ta,
                              const std::string& tb) {
  checkDegree(D);
  GtContext ctx = makeGt(g, n, D);
  Tensor<Rat> a = toRational(evalTensor(*parseExpr(ta), ctx.base, D));
  Tensor<Rat> b = toRational(evalTensor(*parseExpr(tb), ctx.base, D));
  VerbOutcome o;
  o.result["diamond"] = tensorJson(diamond(ctx, a, b));
  o.result["e"] = tensorJson(evalE(ctx, a, b));
  return o;
}

inline Json kvReportJson(const KvReport& r) {
  return {{"equation", r.equation},
          {"fixed_point_ok", r.residueZero},
          {"membership_ok", r.member},
          {"ok", r.ok()},
          {"residue", r.residue.toString()},
          {"cocycle", r.cocycle.toString()}};
}

inline VerbOutcome runKvCheck(const std::string& inputPath,
                              const std::string& framing,
                              const std::string& equation) {
  std::ifstream in(inputPath);
  if (!in) throw Error("cannot open input file " + inputPath);
  nlohmann::json doc = nlohmann::json::parse(in);
  int g = doc.at("g").get<int>();
  int n = doc.at("n").get<int>();
  int D = doc.at("D").get<int>();
  checkDegree(D);
  KvContext ctx = makeKv(g, n, D);

  std::vector<Lie<Rat>> ux, uy, conj;
  const auto& u = doc.at("u");
  for (int i = 1; i <= g; ++i) {
    ux.push_back(toRational(
        parseLie(u.at("x" + std::to_string(i)).get<std::string>(), ctx.alpha, D)));
    uy.push_back(toRational(
        parseLie(u.at("y" + std::to_string(i)).get<std::string>(), ctx.alpha, D)));
  }
  for (const auto& c : doc.at("conjugators"))
    conj.push_back(toRational(parseLie(c.get<std::string>(), ctx.alpha, D)));
  TAut G{makeTDer(ctx, std::move(ux), std::move(uy), std::move(conj))};
  FramingData fr = parseFraming(ctx, framing);

  VerbOutcome o;
  Json reports = Json::array();
  auto push = [&](const KvReport& r) {
    reports.push_back(kvReportJson(r));
    for (const auto& f : r.failures()) o.failures.push_back(f);
  };
  if (equation == "kv" || equation == "all") push(checkKV(ctx, fr, G));
  if (equation == "krv" || equation == "all") push(checkKRV(ctx, fr, G));
  if (equation == "solkv" || equation == "all") push(checkSolKV(ctx, fr, G));
  if (reports.empty()) throw Error("unknown equation '" + equation + "'");
  o.result["reports"] = reports;
  o.failAll();
  return o;
}

inline VerbOutcome runFramingEqs(int g, int handle, bool swap) {
  FramingEquations eqs = expandReducedDg(g, handle, swap);
  VerbOutcome o;
  Json ex = Json::array(), ey = Json::array();
  for (const Scalar& e : eqs.eqX) ex.push_back(e.toString());
  for (const Scalar& e : eqs.eqY) ey.push_back(e.toString());
  o.result["equations"] = {
      {"t", eqs.eqT.toString()}, {"x", ex}, {"y", ey}};
  o.result["framing"] = eqs.framingNu.toString();
  o.result["framing_s"] = eqs.framingS.toString();
  o.result["uses_weight3_coefficients"] = eqs.usesPi;
  if (g == 1) {
    Genus1Report sol = solveGenus1(false, swap);
    o.result["genus1_solution"] = {
        {"nu", ratJson(sol.nu)},
        {"s", ratJson(sol.s)},
        {"residues_zero", sol.residuesZero},
        {"framing", sol.framingAtSolution.toString()}};
    if (!sol.ok()) o.failures.push_back("genus-1 solution is not forced");
  }
  o.failAll();
  return o;
}

inline VerbOutcome runSeries(const std::string& name, int D) {
  checkDegree(D);
  ScalarSeries s = name == "r"   ? rSeries(D)
                   : name == "s" ? sSeries(D)
                                 : throw Error("unknown series '" + name + "'");
  VerbOutcome o;
  Json coeffs = Json::array();
  for (const Rat& c : s.c) coeffs.push_back(ratJson(c));
  o.result["name"] = s.name;
  o.result["coefficients"] = coeffs;
  return o;
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

inline int runCli(const std::vector<std::string>& args, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  std::string verb;
  bool timing = false;
  Json j;
  int exitCode = 0;
  try {
    CLI::App app{"exact graded Lie-algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the verb
    long seed = 0;  // reproducibility hook for property-style inputs
    app.add_flag("--timing", timing, "include timing_ms in the report");
    app.add_option("--seed", seed, "seed for randomized inputs");

    int genus = 0, strands = 1, punctures = 0, D = 4, handle = 1;
    bool framed = true, mutate = false, swap = false;
    std::string at, text, text2, inputPath, framing, equation = "all",
                seriesName = "s";
    std::vector<std::string> labels, texts;

    auto addCtx = [&](CLI::App* c, bool withStrands) {
      c->add_option("--genus", genus, "genus g");
      if (withStrands) {
        c->add_option("--strands", strands, "number of strands");
        c->add_flag("--framed,!--unframed", framed, "framed variant");
      } else {
        c->add_option("--punctures", punctures, "number of punctures");
      }
      c->add_option("--max-degree", D, "weight truncation");
    };

    CLI::App* cDims = app.add_subcommand("dims", "per-degree dimensions");
    addCtx(cDims, true);
    CLI::App* cNf = app.add_subcommand("nf", "normal form of a Lie element");
    addCtx(cNf, true);
    cNf->add_option("expr", text, "element expression")->required();
    CLI::App* cBch = app.add_subcommand("bch", "Baker-Campbell-Hausdorff");
    addCtx(cBch, true);
    cBch->add_option("exprs", texts, "Lie element expressions")
        ->expected(2, -1);
    CLI::App* cIns = app.add_subcommand("insert", "operadic strand insertion");
    addCtx(cIns, true);
    cIns->add_option("--at", at, "strand label to replace")->required();
    cIns->add_option("--labels", labels, "replacement labels")
        ->required()
        ->delimiter(',');
    cIns->add_option("expr", text, "element expression")->required();
    CLI::App* cVa =
        app.add_subcommand("verify-action", "action-table verification");
    addCtx(cVa, false);
    cVa->add_flag("--mutate", mutate, "use the deliberately wrong table");
    CLI::App* cVs =
        app.add_subcommand("verify-split", "semidirect splitting verification");
    addCtx(cVs, false);
    CLI::App* cGo = app.add_subcommand("goldman", "bracket of group-likes");
    addCtx(cGo, false);
    cGo->add_option("alpha", text, "first group-like")->required();
    cGo->add_option("beta", text2, "second group-like")->required();
    CLI::App* cTu = app.add_subcommand("turaev", "cobracket of a group-like");
    addCtx(cTu, false);
    cTu->add_option("expr", text, "group-like element")->required();
    CLI::App* cFx = app.add_subcommand("fox-eval", "Fox pairing evaluation");
    addCtx(cFx, false);
    cFx->add_option("a", text, "left argument")->required();
    cFx->add_option("b", text2, "right argument")->required();
    CLI::App* cKv =
        app.add_subcommand("kv-check", "Kashiwara-Vergne membership checks");
    cKv->add_option("--input", inputPath, "automorphism JSON file")->required();
    cKv->add_option("--framing", framing, "rotation numbers a=..;b=..;c=..");
    cKv->add_option("--equation", equation, "kv | krv | solkv | all");
    CLI::App* cFe =
        app.add_subcommand("framing-eqs", "doubling-relation equations");
    cFe->add_option("--genus", genus, "genus g")->required();
    cFe->add_option("--handle", handle, "handle index a");
    cFe->add_flag("--swap", swap, "exchange the x and y roles");
    CLI::App* cSe = app.add_subcommand("series", "structure series coefficients");
    cSe->add_option("--name", seriesName, "r | s")->required();
    cSe->add_option("--max-degree", D, "last coefficient index");

    std::vector<const char*> argv;
    argv.push_back("dk");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    VerbOutcome o;
    if (cDims->parsed()) {
      verb = "dims";
      o = runDims(genus, strands, framed, D);
    } else if (cNf->parsed()) {
      verb = "nf";
      o = runNf(genus, strands, framed, D, text);
    } else if (cBch->parsed()) {
      verb = "bch";
      o = runBch(genus, strands, framed, D, texts);
    } else if (cIns->parsed()) {
      verb = "insert";
      o = runInsert(genus, strands, framed, D, at, labels, text);
    } else if (cVa->parsed()) {
      verb = "verify-action";
      o = runVerifyAction(genus, punctures, D, mutate);
    } else if (cVs->parsed()) {
      verb = "verify-split";
      o = runVerifySplit(genus, punctures, D);
    } else if (cGo->parsed()) {
      verb = "goldman";
      o = runGoldman(genus, punctures, D, text, text2);
    } else if (cTu->parsed()) {
      verb = "turaev";
      o = runTuraev(genus, punctures, D, text);
    } else if (cFx->parsed()) {
      verb = "fox-eval";
      o = runFoxEval(genus, punctures, D, text, text2);
    } else if (cKv->parsed()) {
      verb = "kv-check";
      o = runKvCheck(inputPath, framing, equation);
    } else if (cFe->parsed()) {
      verb = "framing-eqs";
      o = runFramingEqs(genus, handle, swap);
    } else if (cSe->parsed()) {
      verb = "series";
      o = runSeries(seriesName, D);
    } else {
      throw Error("no verb selected");
    }

    j["ok"] = o.ok;
    j["verb"] = verb;
    j["result"] = o.result;
    j["failures"] = o.failures;
    exitCode = o.ok ? 0 : 1;
  } catch (const CLI::CallForHelp&) {
    j["ok"] = true;
    j["verb"] = "help";
    j["result"] = {{"usage",
                    "verbs: dims nf bch insert verify-action verify-split "
                    "goldman turaev fox-eval kv-check framing-eqs series"}};
    j["failures"] = Json::array();
    exitCode = 0;
  } catch (const CLI::ParseError& e) {
    j = Json::object();
    j["ok"] = false;
    j["verb"] = verb;
    j["error"] = {{"kind", "usage"}, {"message", e.what()}};
    exitCode = 2;
  } catch (const std::exception& e) {
    j = Json::object();
    j["ok"] = false;
    j["verb"] = verb;
    j["error"] = {{"kind", "error"}, {"message", e.what()}};
    exitCode = 2;
  }
  if (timing) {
    auto dt = std::chrono::steady_clock::now() - t0;
    j["timing_ms"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  }
  out << j.dump(2) << "\n";
  return exitCode;
}

}  // namespace dk::cli
