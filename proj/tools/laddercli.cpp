// Command-line front end: lambda solving, cylinder reports, the check
// suite, figure rendering, and membership tests. Exit codes: 0 success,
// 1 check failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ladder/checks.hpp"
#include "ladder/hexchart.hpp"
#include "ladder/orbit.hpp"
#include "ladder/surface.hpp"
#include "ladder/svg.hpp"

using namespace ladder;

namespace {

struct CommonOpts {
  long k = 2;
  long l = 1;
  int depth = 24;
  int digits = 12;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 20240607;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_depth = true) {
  cmd->add_option("--k", o.k, "ladder parameter k (k > l > 0, coprime)");
  cmd->add_option("--l", o.l, "ladder parameter l");
  if (with_depth) cmd->add_option("--depth", o.depth, "truncation depth");
  cmd->add_option("--digits", o.digits, "decimal digits in approximations");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", o.output, "write to file instead of stdout");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
}

void enforce_depth_limit(int depth) {
  if (const char* cap = std::getenv("LADDER_DEPTH_LIMIT")) {
    int limit = std::atoi(cap);
    if (limit > 0 && depth > limit)
      throw CLI::ValidationError(
          "--depth", "exceeds LADDER_DEPTH_LIMIT=" + std::to_string(limit));
  }
  if (depth < 2) throw CLI::ValidationError("--depth", "must be >= 2");
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output: " + o.output);
  out << payload;
}

int cmd_lambda(const CommonOpts& o) {
  auto p = solve_lambda(o.k, o.l);
  QuadExt residual = defining_equation_residual(o.k, o.l, p.lambda);
  if (o.format == "json") {
    Json j{{"schema", "veech-ladder/1"},
           {"k", o.k},
           {"l", o.l},
           {"D", p.radicand},
           {"lambda", quadext_to_json(p.lambda)},
           {"lambda_exact", p.lambda.text()},
           {"lambda_approx", p.lambda.to_decimal(o.digits)},
           {"residual", residual.text()}};
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "lambda_{" << o.k << "," << o.l << "} = " << p.lambda.text()
       << "\n  D = " << p.radicand << "\n  approx = "
       << p.lambda.to_decimal(o.digits)
       << "\n  residual of k(lambda+1) - l(1/lambda+1+lambda) = "
       << residual.text() << "\n";
    emit(o, os.str());
  }
  return 0;
}

int cmd_cylinders(const CommonOpts& o, const std::string& direction) {
  enforce_depth_limit(o.depth);
  auto p = solve_lambda(o.k, o.l);
  if (o.format == "json") {
    Report r = build_report(p, o.depth, o.digits);
    emit(o, report_to_json(r).dump(2) + "\n");
    return 0;
  }
  LadderSurface surf(p, o.depth);
  std::ostringstream os;
  os << "lambda = " << p.lambda.text() << " ~ "
     << p.lambda.to_decimal(o.digits) << "\n";
  for (Direction dir : {Direction::horizontal, Direction::vertical,
                        Direction::antidiagonal}) {
    if (direction != "all" && direction != direction_name(dir)) continue;
    auto dec = decompose(surf, dir);
    os << "\n[" << direction_name(dir) << "]\n";
    int rows = std::min<size_t>(8, dec.cylinders.size());
    os << "  idx  height | circumference | modulus (approx)\n";
    for (int i = 0; i < rows; ++i) {
      const auto& c = dec.cylinders[static_cast<size_t>(i)];
      os << "  " << c.index << "  " << c.height.text() << " | "
         << c.circumference.text() << " | " << c.modulus().text() << " ("
         << c.modulus().to_decimal(o.digits) << ")\n";
    }
    if (dec.cylinders.size() > static_cast<size_t>(rows))
      os << "  ... (" << dec.cylinders.size() << " cylinders at this depth; "
         << "the rest scale by lambda)\n";
    if (dec.common) {
      os << "  m = " << dec.common->common_inverse_modulus.text()
         << "  (1/m = " << dec.common->common_inverse_modulus.inverse().text()
         << " ~ "
         << dec.common->common_inverse_modulus.inverse().to_decimal(o.digits)
         << ")\n  multipliers:";
      size_t shown = std::min<size_t>(8, dec.common->multipliers.size());
      for (size_t i = 0; i < shown; ++i)
        os << ' ' << dec.common->multipliers[i].get_str();
      os << " ...\n  parabolic: " << synthesize_parabolic(dec).text() << "\n";
      auto twists = twist_counts(dec, p.shear());
      os << "  twists of the k(1+lambda) shear:";
      for (size_t i = 0; i < std::min<size_t>(8, twists.size()); ++i)
        os << ' ' << twists[i].get_str();
      os << " ...\n";
    } else {
      os << "  not commensurable\n";
    }
  }
  emit(o, os.str());
  return 0;
}

int cmd_check(const CommonOpts& o, int max_word_len) {
  enforce_depth_limit(o.depth);
  CheckOptions copts;
  copts.k = o.k;
  copts.l = o.l;
  copts.depth = std::max(o.depth, 52);
  copts.digits = o.digits;
  copts.max_word_len = max_word_len;
  copts.seed = o.seed;
  auto results = run_check_suite(copts);
  std::ostringstream os;
  const CheckVerdict* first_fail = nullptr;
  for (const auto& r : results) {
    os << (r.verdict == "pass" ? "[PASS] " : r.verdict == "skipped"
               ? "[SKIP] " : "[FAIL] ")
       << r.name << " - " << r.detail << "\n";
    if (r.verdict == "fail" && !first_fail) first_fail = &r;
  }
  if (first_fail)
    os << "FAILED: " << first_fail->name << "\n";
  else
    os << "all " << results.size() << " checks passed\n";
  if (o.format == "json") {
    Json j;
    j["schema"] = "veech-ladder/1";
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"name", r.name},
                         {"verdict", r.verdict},
                         {"detail", r.detail}});
    j["checks"] = arr;
    j["ok"] = (first_fail == nullptr);
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, os.str());
  }
  return first_fail ? 1 : 0;
}

int cmd_render(const CommonOpts& o, const std::string& figure,
               const std::string& slope_str, int count) {
  enforce_depth_limit(o.depth);
  auto p = solve_lambda(o.k, o.l);
  std::string svg;
  if (figure == "surface") {
    svg = render_surface(p, o.depth);
  } else if (figure == "cylinders") {
    svg = render_cylinders(p, o.depth);
  } else if (figure == "segments") {
    Rational slope = q_from_string(slope_str);
    svg = render_segments(p, o.depth, slope,
                          std::min(count, o.depth - 1));
  } else if (figure == "domain") {
    svg = render_domain(p);
  } else {
    throw CLI::ValidationError("--figure",
                               "must be surface|cylinders|segments|domain");
  }
  emit(o, svg);
  return 0;
}

int cmd_membership(const CommonOpts& o, const std::string& entries,
                   const std::string& word_str, bool trace) {
  auto p = solve_lambda(o.k, o.l);
  FundamentalDomain dom(p);
  MoebiusElement m;
  if (!word_str.empty()) {
    m = evaluate(GroupWord::parse(word_str), p);
  } else {
    // four entries in exact field syntax, comma-separated (whitespace
    // works when no entry contains spaces)
    std::vector<std::string> parts;
    if (entries.find(',') != std::string::npos) {
      std::stringstream ss(entries);
      std::string tok;
      while (std::getline(ss, tok, ',')) parts.push_back(tok);
    } else {
      std::stringstream ss(entries);
      std::string tok;
      while (ss >> tok) parts.push_back(tok);
    }
    if (parts.size() != 4)
      throw parse_error("need exactly 4 matrix entries, got " +
                        std::to_string(parts.size()));
    m = MoebiusElement(QuadExt::parse(parts[0]), QuadExt::parse(parts[1]),
                       QuadExt::parse(parts[2]), QuadExt::parse(parts[3]));
  }
  auto res = membership(dom, m);
  std::ostringstream os;
  std::string label = dom.theorem_scope() ? "Veech-group membership"
                                          : "G-membership (l > 1: theorem "
                                            "scope not established)";
  Json j{{"schema", "veech-ladder/1"},
         {"query", label},
         {"matrix", matrix_to_json(m.mat())}};
  switch (res.verdict) {
    case MemberVerdict::yes:
      os << "yes: " << res.word.text() << "\n";
      j["verdict"] = "yes";
      j["word"] = res.word.text();
      break;
    case MemberVerdict::no:
      os << "no\n";
      j["verdict"] = "no";
      break;
    case MemberVerdict::ambiguous:
      os << "ambiguous (base point collided; retry offsets exhausted)\n";
      j["verdict"] = "ambiguous";
      break;
  }
  if (trace) {
    HalfPlanePoint z0{QuadExt(make_rational(1, 7)), QuadExt(2)};
    auto red = reduce(dom, apply(m, z0));
    Json steps = Json::array();
    for (const Letter& l : red.word.letters())
      steps.push_back(Json{{"letter", l.is_r ? "R" : "T"}, {"exp", l.exp}});
    j["reduction"] = Json{{"word", red.word.text()},
                          {"iterations", red.iterations},
                          {"steps", steps}};
    os << "reduction word: " << red.word.text() << " (" << red.iterations
       << " disk ejections)\n";
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ladder surface Veech-group toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  auto* lam = app.add_subcommand("lambda", "solve for the ladder parameter");
  add_common(lam, o, false);

  auto* cyl = app.add_subcommand("cylinders", "cylinder decompositions");
  std::string direction = "all";
  add_common(cyl, o);
  cyl->add_option("--direction", direction,
                  "horizontal, vertical, antidiagonal or all")
      ->check(CLI::IsMember({"horizontal", "vertical", "antidiagonal", "all"}));

  auto* chk = app.add_subcommand("check", "run the verification suite");
  int max_word_len = 8;
  add_common(chk, o);
  chk->add_option("--max-word-len", max_word_len,
                  "orbit ball radius for the gap check (<= 16)");

  auto* ren = app.add_subcommand("render", "emit an SVG figure");
  std::string figure = "surface", slope = "1";
  int count = 10;
  add_common(ren, o);
  ren->add_option("--figure", figure, "surface|cylinders|segments|domain");
  ren->add_option("--slope", slope, "segment slope (rational, in band)");
  ren->add_option("--count", count, "number of segment corners");

  auto* mem = app.add_subcommand("membership", "test a matrix against G");
  std::string entries, word_str;
  bool trace = false;
  add_common(mem, o, false);
  mem->add_option("--entries", entries,
                  "matrix entries a,b,c,d in exact field syntax");
  mem->add_option("--word", word_str, "evaluate a word like 'T^3 R T^-1'");
  mem->add_flag("--trace", trace, "print the reduction trace");

  try {
    app.parse(argc, argv);
    if (lam->parsed()) return cmd_lambda(o);
    if (cyl->parsed()) return cmd_cylinders(o, direction);
    if (chk->parsed()) return cmd_check(o, max_word_len);
    if (ren->parsed()) return cmd_render(o, figure, slope, count);
    if (mem->parsed()) {
      if (entries.empty() == word_str.empty())
        throw parse_error("provide exactly one of --entries / --word");
      return cmd_membership(o, entries, word_str, trace);
    }
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_parameters& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
