#include "symloop/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "symloop/acceptance.hpp"
#include "symloop/errors.hpp"
#include "symloop/json_io.hpp"
#include "symloop/tame.hpp"

namespace symloop::cli {

namespace {

using json_io::Json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_doc(const std::string& path) { return json_io::parse(read_text(path)); }

std::size_t parse_group(const std::string& g) {
  std::string lower = g;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower.size() < 3 || lower.substr(0, 2) != "sl") throw ParseError("group must be sl<n>, got '" + g + "'");
  std::size_t n = 0;
  for (char c : lower.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || n > 1000) throw ParseError("group must be sl<n>, got '" + g + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n < 2) throw DomainError("group size must be at least 2, got " + std::to_string(n));
  return n;
}

RootA parse_root(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("root must be 'i,j', got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    int i = std::stoi(s.substr(0, comma), &a);
    int j = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {i, j};
  } catch (const std::logic_error&) {
    throw ParseError("root must be 'i,j', got '" + s + "'");
  }
}

mpq_class parse_rational(const std::string& s) { return Field::rationals().parse_element(s).rational(); }

Json path_factors_from(const Json& side, std::vector<PathFactor>& out) {
  if (!side.is_array()) throw ParseError("malformed document: each side must be a list of path factors");
  for (const auto& f : side) {
    if (f.is_object() && f.contains("path")) {
      bool inv = f.value("inverted", false);
      out.push_back({json_io::path_from_doc(f.at("path")), inv});
    } else {
      out.push_back({json_io::path_from_doc(f), false});
    }
  }
  return side;
}

std::vector<GroupMatrix> generators_from(const Json& doc) {
  std::vector<GroupMatrix> gens;
  if (doc.is_array()) {
    for (const auto& m : doc) gens.push_back(json_io::matrix_from_doc(m));
    return gens;
  }
  std::string s = json_io::schema_of(doc);
  if (!s.empty() && s != json_io::kGenerators)
    throw ParseError("malformed document: schema \"" + s + "\" where \"" + std::string(json_io::kGenerators) + "\" was expected");
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("n") || !doc.contains("ring"))
    throw ParseError("malformed document: generators need \"n\", \"ring\" and \"generators\"");
  const auto n = doc.at("n").get<std::size_t>();
  Ring r = Ring::parse(doc.at("ring").get<std::string>());
  for (const auto& e : doc.at("generators")) gens.push_back(json_io::matrix_from_entries(n, r, e));
  return gens;
}

Json simplex_any(const Json& doc, std::size_t i, bool degenerate) {
  if (json_io::schema_of(doc) == json_io::kSimplexPoly || (doc.is_object() && doc.contains("poly"))) {
    auto f = json_io::simplex_poly_from_doc(doc);
    return json_io::simplex_poly_doc(degenerate ? degeneracy(i, f) : face(i, f));
  }
  auto m = json_io::simplex_matrix_from_doc(doc);
  return json_io::simplex_matrix_doc(degenerate ? degeneracy(i, m) : face(i, m));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbol loops in SL_n(k[T]), Steinberg words and K_2 oracles", "symloop"};
  app.require_subcommand(1);
  std::function<Json()> action;
  int status_on_success = 0;

  // symbol-loop
  std::string group, root_text = "1,2", u_text, v_text, ring_text = "Q", kind = "c";
  auto* sl = app.add_subcommand("symbol-loop", "Emit a loop or path X/W/H/C over k[T]");
  sl->add_option("--group", group, "sl<n>")->required();
  sl->add_option("--root", root_text, "root i,j");
  sl->add_option("--u", u_text, "first parameter")->required();
  sl->add_option("--v", v_text, "second parameter (kinds c and closed)");
  sl->add_option("--ring", ring_text, "base field: Q or Fq:<p>^<e>");
  sl->add_option("--kind", kind, "x, w, h, c, or closed (the SL2 closed form)")
      ->check(CLI::IsMember({"x", "w", "h", "c", "closed"}));
  sl->final_callback([&] {
    action = [&] {
      const std::size_t n = parse_group(group);
      RootA root = parse_root(root_text);
      root.validate(n);
      Field k = Field::parse(ring_text);
      Scalar u = k.parse_element(u_text);
      auto need_v = [&] {
        if (v_text.empty()) throw DomainError("--v is required for kind " + kind);
        return k.parse_element(v_text);
      };
      if (kind == "x") return json_io::path_doc(x_loop(root, u, n));
      if (kind == "w") return json_io::path_doc(w_loop(root, u, n));
      if (kind == "h") return json_io::path_doc(h_loop(root, u, n));
      if (kind == "closed") {
        if (n != 2 || !(root == RootA{1, 2})) throw DomainError("the closed form is defined for sl2 with root 1,2 only");
        return json_io::path_doc(sl2_closed_form(u, need_v()));
      }
      return json_io::path_doc(c_loop(root, u, need_v(), n));
    };
  });

  // verify-loop
  std::string in_path;
  auto* vl = app.add_subcommand("verify-loop", "Report the endpoints of a path");
  vl->add_option("--in", in_path, "path document ('-' for stdin)")->required();
  vl->final_callback([&] {
    action = [&] {
      PathMatrix p = json_io::path_from_doc(read_doc(in_path));
      return Json{{"schema", "symloop.loop-report/1"},
                  {"is_path", p.is_path()},
                  {"is_loop", p.is_loop()},
                  {"endpoints", Json{{"T=0", json_io::matrix_entries(p.start())}, {"T=1", json_io::matrix_entries(p.end())}}}};
    };
  });

  // verify-identity
  auto* vi = app.add_subcommand("verify-identity", "Compare two products of paths");
  vi->add_option("--in", in_path, "identity document with \"lhs\" and \"rhs\" lists")->required();
  vi->final_callback([&] {
    action = [&] {
      Json doc = read_doc(in_path);
      std::string s = json_io::schema_of(doc);
      if (!s.empty() && s != json_io::kIdentity) throw ParseError("malformed document: unexpected schema \"" + s + "\"");
      if (!doc.is_object() || !doc.contains("lhs") || !doc.contains("rhs"))
        throw ParseError("malformed document: missing \"lhs\" or \"rhs\"");
      std::vector<PathFactor> lhs, rhs;
      path_factors_from(doc.at("lhs"), lhs);
      path_factors_from(doc.at("rhs"), rhs);
      auto check = verify_path_identity(lhs, rhs);
      Json j{{"schema", "symloop.identity-report/1"}, {"holds", check.holds}};
      if (check.certificate) {
        const auto& c = *check.certificate;
        j["certificate"] = Json{{"row", c.row + 1}, {"col", c.col + 1}, {"lhs", json_io::to_json(c.lhs)}, {"rhs", json_io::to_json(c.rhs)}};
      }
      return j;
    };
  });

  // factor
  auto* fa = app.add_subcommand("factor", "Factor a matrix over k or k[T] into elementary matrices");
  fa->add_option("--in", in_path, "matrix document")->required();
  fa->final_callback([&] {
    action = [&] {
      GroupMatrix m = json_io::matrix_from_doc(read_doc(in_path));
      return json_io::factors_doc(m.n(), m.ring(), factor_elementary(m));
    };
  });

  // lift
  auto* li = app.add_subcommand("lift", "Lift a path y with y(0) = I to a Steinberg word");
  li->add_option("--in", in_path, "path document")->required();
  li->final_callback([&] {
    action = [&] {
      SteinbergWord w = path_to_steinberg(json_io::path_from_doc(read_doc(in_path)));
      Json j = json_io::word_doc(w);
      j["is_k2"] = in_k2(w);
      return j;
    };
  });

  // k2-check
  bool want_tame = false;
  auto* kc = app.add_subcommand("k2-check", "Test whether a word projects to the identity");
  kc->add_option("--in", in_path, "word or symbol-product document")->required();
  kc->add_flag("--tame", want_tame, "also report tame invariants (symbol products only)");
  kc->final_callback([&] {
    action = [&] {
      Json doc = read_doc(in_path);
      const bool symbols = json_io::schema_of(doc) == json_io::kSymbols || (doc.is_object() && doc.contains("symbols"));
      std::optional<SymbolProduct> product;
      std::optional<SteinbergWord> word;
      if (symbols) {
        product = json_io::symbols_from_doc(doc);
        const std::size_t n = doc.value("n", std::size_t{3});
        RootA root{1, 2};
        if (doc.contains("root")) {
          const auto& r = doc.at("root");
          if (!r.is_array() || r.size() != 2) throw ParseError("malformed document: \"root\" must be [i, j]");
          root = {r[0].get<int>(), r[1].get<int>()};
        }
        word = to_word(*product, root, n);
      } else {
        word = json_io::word_from_doc(doc);
        if (want_tame) throw DomainError("tame invariants: word is not in symbol form");
      }
      Json j{{"schema", "symloop.k2-report/1"},
             {"projection_is_identity", in_k2(*word)},
             {"reduced_length", word->size()},
             {"presentation_faithful", word->presentation_faithful()}};
      if (!word->presentation_faithful()) j["note"] = "rank-1: presentation not modeled";
      if (product) {
        Json inv = Json::object();
        for (const auto& [p, v] : tame_invariants(*product)) inv[std::to_string(p)] = std::to_string(v);
        j["tame_invariants"] = std::move(inv);
      }
      return j;
    };
  });

  // tame
  std::string a_text, b_text;
  std::uint64_t prime = 0;
  auto* ta = app.add_subcommand("tame", "Tame symbol tau_p{a, b}");
  ta->add_option("--a", a_text, "nonzero rational")->required();
  ta->add_option("--b", b_text, "nonzero rational")->required();
  ta->add_option("--p", prime, "prime")->required();
  ta->final_callback([&] {
    action = [&] { return Json{{"value", std::to_string(tame_symbol(parse_rational(a_text), parse_rational(b_text), prime))}}; };
  });

  // k2m-field
  std::uint64_t q = 0;
  auto* km = app.add_subcommand("k2m-field", "Milnor K_2 of F_q by Smith normal form");
  km->add_option("--q", q, "prime power <= 16")->required();
  km->final_callback([&] { action = [&] { return json_io::presentation_doc(milnor_k2_finite_field(q)); }; });

  // schur
  std::string gens_path;
  std::size_t bound = 200;
  bool timing = false;
  auto* sc = app.add_subcommand("schur", "Schur multiplier of a finite matrix group");
  sc->add_option("--gens", gens_path, "generators document")->required();
  sc->add_option("--bound", bound, "order bound (default 200)");
  sc->add_flag("--timing", timing, "include wall-clock seconds (breaks byte-identical output)");
  sc->final_callback([&] {
    action = [&] {
      auto t0 = std::chrono::steady_clock::now();
      auto s = schur_multiplier(generators_from(read_doc(gens_path)), bound);
      Json j = json_io::presentation_doc(s.h2);
      Json out_doc{{"schema", "symloop.schur/1"},
                   {"order", s.order},
                   {"invariant_factors", j["invariant_factors"]},
                   {"free_rank", j["free_rank"]},
                   {"boundary_squares_to_zero", s.boundary_checked},
                   {"note", s.h2.note}};
      if (timing) out_doc["timing"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return out_doc;
    };
  });

  // simplicial-face
  std::size_t index = 0;
  bool degenerate = false;
  auto* sf = app.add_subcommand("simplicial-face", "Apply d_i (or s_i) to a simplex polynomial or matrix");
  sf->add_option("--in", in_path, "simplex-poly, simplex-matrix or path document")->required();
  sf->add_option("--i", index, "index")->required();
  sf->add_flag("--degeneracy", degenerate, "apply s_i instead of d_i");
  sf->final_callback([&] { action = [&] { return simplex_any(read_doc(in_path), index, degenerate); }; });

  // verify-homotopy
  std::string sigma_path, from_path, to_path_arg;
  auto* vh = app.add_subcommand("verify-homotopy", "Check a 2-simplex witnessing l ~ l'");
  vh->add_option("--sigma", sigma_path, "level-2 simplex-matrix document")->required();
  vh->add_option("--from", from_path, "loop l (level-1 simplex-matrix or path)")->required();
  vh->add_option("--to", to_path_arg, "loop l' (level-1 simplex-matrix or path)")->required();
  vh->final_callback([&] {
    action = [&] {
      auto c = verify_homotopy_witness(json_io::simplex_matrix_from_doc(read_doc(sigma_path)),
                                       json_io::simplex_matrix_from_doc(read_doc(from_path)),
                                       json_io::simplex_matrix_from_doc(read_doc(to_path_arg)));
      return Json{{"schema", "symloop.homotopy-report/1"},
                  {"certified", c.certified},
                  {"faces", Json{{"d0", json_io::matrix_entries(c.d0.matrix())},
                                 {"d1", json_io::matrix_entries(c.d1.matrix())},
                                 {"d2", json_io::matrix_entries(c.d2.matrix())}}},
                  {"expected_boundary", json_io::matrix_entries(c.expected_boundary.matrix())}};
    };
  });

  // reproduce
  std::uint64_t seed = kDefaultSeed;
  auto* rp = app.add_subcommand("reproduce", "Run the acceptance suite");
  rp->add_option("--seed", seed, "seed for the randomized checks (default " + std::to_string(kDefaultSeed) + ")");
  rp->add_flag("--timing", timing, "include wall-clock seconds (breaks byte-identical output)");
  rp->final_callback([&] {
    action = [&] {
      Json rows = Json::array();
      int passed = 0;
      for (const auto& r : run_acceptance(seed)) {
        Json row{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}};
        if (timing) {
          row["seconds"] = r.seconds;
          if (!r.timing.empty()) row["timing"] = r.timing;
        }
        rows.push_back(std::move(row));
        passed += r.passed ? 1 : 0;
      }
      status_on_success = passed == static_cast<int>(rows.size()) ? 0 : 3;
      return Json{{"schema", "symloop.acceptance/1"}, {"seed", seed}, {"passed", passed}, {"total", rows.size()}, {"criteria", rows}};
    };
  });

  auto error_doc = [&](int code, const std::string& msg) {
    out << Json{{"error", msg}}.dump(2) << '\n';
    err << "symloop: " << msg << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return error_doc(1, e.what());
  }

  try {
    Json result = action();
    out << result.dump(2) << '\n';
    return status_on_success;
  } catch (const DomainError& e) {
    return error_doc(2, e.what());
  } catch (const ParseError& e) {
    return error_doc(1, e.what());
  } catch (const Json::exception& e) {
    return error_doc(1, std::string("malformed document: ") + e.what());
  }
}

}  // namespace symloop::cli
