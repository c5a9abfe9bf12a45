// Command-line front end: exact quadratic-form reduction, the modular group
// on the upper half-plane, root systems, the E7 certificate suite, group
// presentations, Minkowski torsion bounds, and an SVG sketch of the
// fundamental domain. All arithmetic is exact; exit codes are 0 (all checks
// pass), 1 (a verification check failed), 2 (malformed input).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arith/e7.hpp"
#include "arith/formats.hpp"
#include "arith/minkowski.hpp"
#include "arith/modgroup.hpp"
#include "arith/presentations.hpp"
#include "arith/rootsys.hpp"
#include "arith/svgplot.hpp"

using nlohmann::json;
using namespace arith;

namespace {

std::string read_input(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty()) throw input_error("provide inline JSON or --input <file>");
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw input_error("cannot write " + out_path);
  out << text;
}

IMat parse_inline_matrix(const std::string& csv, size_t n) {
  std::vector<Int> entries;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      entries.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw input_error("bad integer '" + tok + "' in matrix");
    }
  }
  if (n == 0) {
    // square matrix inferred from the entry count
    size_t d = 1;
    while (d * d < entries.size()) ++d;
    if (d * d != entries.size()) throw input_error("entry count is not a perfect square");
    n = d;
  }
  if (entries.size() != n * n) throw input_error("expected " + std::to_string(n * n) + " entries");
  IMat m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = entries[i * n + j];
  return m;
}

// "r*sqrt(s)" with r rational, s a positive integer; plain "r" means s = 1
std::pair<Rat, Int> parse_im(const std::string& text) {
  auto star = text.find("*sqrt(");
  if (star == std::string::npos) {
    auto bare = text.find("sqrt(");
    if (bare == 0) {
      std::string s = text.substr(5, text.size() - 6);
      return {Rat(1), Int(s)};
    }
    return {rat_from_string(text), Int(1)};
  }
  if (text.back() != ')') throw input_error("malformed imaginary part '" + text + "'");
  Rat r = rat_from_string(text.substr(0, star));
  std::string s = text.substr(star + 6, text.size() - star - 7);
  try {
    return {r, Int(s)};
  } catch (const std::invalid_argument&) {
    throw input_error("bad radicand '" + s + "'");
  }
}

json hpoint_to_json(const HPoint& z) {
  return json{{"re", rat_to_string(z.re)},
              {"im", rat_to_string(z.im_coeff) + "*sqrt(" + z.im_radicand.get_str() + ")"}};
}

int finish_report(const Report& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
    std::cout << (rep.all_pass() ? "OK" : "FAILED") << " (" << rep.checks.size() << " checks, "
              << rep.failure_count() << " failures)\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with arithmetic groups"};
  app.require_subcommand(1);

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "Siegel-reduce a positive definite form");
  std::string form_text, input_path, out_path;
  reduce->add_option("--form", form_text, "form document inline JSON");
  reduce->add_option("--input", input_path, "path to a form document");
  reduce->callback([&] {
    QuadraticForm phi = form_from_json(parse_json(read_input(form_text, input_path)));
    ReductionCertificate cert = siegel_reduce(phi);
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  });

  // ---- sl2 ----
  auto* sl2 = app.add_subcommand("sl2", "modular group on the upper half-plane");
  auto* sl2_reduce = sl2->add_subcommand("reduce", "move a point into the fundamental domain");
  std::string re_text = "0", im_text = "1";
  sl2_reduce->add_option("--re", re_text, "real part, p/q");
  sl2_reduce->add_option("--im", im_text, "imaginary part, r*sqrt(s)");
  sl2_reduce->callback([&] {
    auto [r, s] = parse_im(im_text);
    HPoint z(rat_from_string(re_text), r, s);
    DomainReduction red = reduce_to_domain(z);
    json j{{"word", red.word.to_string()},
           {"gamma", imat_to_json(red.gamma.to_matrix())},
           {"reduced", hpoint_to_json(red.z)}};
    std::cout << j.dump(2) << "\n";
  });
  auto* sl2_decompose = sl2->add_subcommand("decompose", "write a matrix as a word in S, T");
  std::string mat_text;
  sl2_decompose->add_option("--matrix", mat_text, "a,b,c,d")->required();
  sl2_decompose->callback([&] {
    SL2 g = SL2::from_matrix(parse_inline_matrix(mat_text, 2));
    GeneratorWord w = decompose_st(g);
    bool exact = w.evaluate() == g;
    json j{{"word", w.to_string()}, {"sign", exact ? 1 : -1}};
    std::cout << j.dump(2) << "\n";
  });

  // ---- roots ----
  auto* roots = app.add_subcommand("roots", "generate a root system from simple roots");
  std::string type_name = "E7";
  roots->add_option("--type", type_name, "A<n>, D<n>, E6, E7 or E8");
  roots->callback([&] {
    RootSystem rs = root_system_by_name(type_name);
    json cart = json::array();
    IMat c = rs.cartan_matrix();
    for (size_t i = 0; i < c.rows(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < c.cols(); ++j) row.push_back(c(i, j).get_si());
      cart.push_back(std::move(row));
    }
    json j{{"type", type_name},
           {"rank", rs.rank()},
           {"root_count", rs.roots().size()},
           {"cartan_matrix", std::move(cart)},
           {"weight_lattice_index", rs.weight_lattice_index().get_str()}};
    std::cout << j.dump(2) << "\n";
  });

  // ---- e7 ----
  auto* e7cmd = app.add_subcommand("e7", "the 56-dimensional realization of E7");
  auto* e7verify = e7cmd->add_subcommand("verify", "run the full certificate suite");
  bool as_json = false, serial = false;
  int flip_root = -1;
  unsigned pairs = 200, triples = 200;
  e7verify->add_flag("--json", as_json, "machine-readable report");
  e7verify->add_flag("--serial", serial, "disable the per-check parallelism");
  e7verify->add_option("--flip-root", flip_root,
                       "negative control: flip the sign of one root vector");
  e7verify->add_option("--pairs", pairs, "sampled root pairs for the group relations");
  e7verify->add_option("--triples", triples, "sampled triples for the Jacobi identity");
  int exit_code = 0;
  e7verify->callback([&] {
    e7::VerifyOptions opts;
    opts.parallel = !serial;
    opts.flip_root = flip_root;
    opts.sample_pairs = pairs;
    opts.sample_triples = triples;
    e7::VerificationReport vr = e7::verify(opts);
    Report rep;
    rep.command = "e7 verify";
    for (const auto& c : vr.checks) rep.checks.push_back({c.name, c.pass, c.witness});
    exit_code = finish_report(rep, as_json);
  });

  // ---- present ----
  auto* present = app.add_subcommand("present", "finite presentations");
  auto* check = present->add_subcommand("check", "verify a presentation against matrices");
  std::string group = "sl2a";
  bool present_json = false;
  check->add_option("--group", group, "sl2a, sl2b or steinberg:<N>");
  check->add_flag("--json", present_json, "machine-readable report");
  check->callback([&] {
    Presentation pres;
    std::vector<IMat> assign;
    if (group == "sl2a") {
      pres = sl2_presentation_xy();
      assign = sl2_assignment_xy();
    } else if (group == "sl2b") {
      pres = sl2_presentation_wa();
      assign = sl2_assignment_wa();
    } else if (group.rfind("steinberg:", 0) == 0) {
      unsigned n = static_cast<unsigned>(std::stoul(group.substr(10)));
      pres = steinberg_presentation(n);
      assign = steinberg_assignment(n);
    } else {
      throw input_error("unknown group '" + group + "'");
    }
    RelationReport rr = verify_relations(pres, assign);
    Report rep;
    rep.command = "present check --group " + group;
    for (size_t i = 0; i < rr.relator_holds.size(); ++i)
      rep.checks.push_back({"relator-" + std::to_string(i), rr.relator_holds[i], ""});
    std::vector<Int> inv = abelianization(pres);
    std::string factors;
    for (const Int& d : inv) factors += (factors.empty() ? "" : ",") + d.get_str();
    auto order = abelian_order(inv);
    rep.checks.push_back({"abelianization", true,
                          "invariant factors " + factors +
                              (order ? ", order " + order->get_str() : ", infinite")});
    exit_code = finish_report(rep, present_json);
  });

  // ---- minkowski ----
  auto* mink = app.add_subcommand("minkowski", "least common multiple of finite subgroup orders");
  unsigned mn = 2;
  mink->add_option("--n", mn, "matrix dimension N")->required();
  mink->callback([&] {
    MinkowskiTable t = minkowski_bound(mn);
    json factors = json::object();
    for (const auto& [p, r] : t.factors) factors[std::to_string(p)] = r;
    json j{{"n", t.n}, {"factors", std::move(factors)}, {"m", t.m.get_str()}};
    std::cout << j.dump(2) << "\n";
  });

  // ---- order ----
  auto* order_cmd = app.add_subcommand("order", "order of an integer matrix");
  std::string order_matrix;
  size_t order_n = 0;
  order_cmd->add_option("--matrix", order_matrix, "comma-separated row-major entries")->required();
  order_cmd->add_option("--n", order_n, "dimension (inferred when omitted)");
  order_cmd->callback([&] {
    IMat g = parse_inline_matrix(order_matrix, order_n);
    auto k = element_order(g);
    json j{{"order", k ? json(k->get_str()) : json("infinite")}};
    std::cout << j.dump(2) << "\n";
  });

  // ---- plot ----
  auto* plot = app.add_subcommand("plot", "SVG sketch of the fundamental domain");
  unsigned depth = 3;
  double range = 2.0;
  plot->add_option("--depth", depth, "word length bound for the orbit arcs");
  plot->add_option("--range", range, "half-width of the drawn strip");
  plot->add_option("--out", out_path, "write the SVG here instead of stdout");
  plot->callback([&] { emit(plot_fundamental_domain(depth, range), out_path); });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
