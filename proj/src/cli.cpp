#include "k3cone/cli.hpp"

#include "k3cone/catalog.hpp"
#include "k3cone/cone.hpp"
#include "k3cone/error.hpp"
#include "k3cone/io.hpp"
#include "k3cone/roots.hpp"
#include "k3cone/surface.hpp"
#include "k3cone/vinberg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace k3cone {

namespace {

struct Outcome {
  Json payload;
  int exit_code = 0;
};

// Plain rendering: one "key: value" line per top-level field, list
// elements on their own indented lines.
std::string render_text(const Json& j) {
  std::ostringstream out;
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return out.str();
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
      out << key << ":\n";
      for (const Json& el : value)
        out << "  " << el.dump() << "\n";
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> split_tokens(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& r : raw) {
    std::string cur;
    int paren = 0;
    for (char c : r) {
      if (c == '(')
        ++paren;
      else if (c == ')')
        --paren;
      if ((c == ',' || c == ' ') && paren == 0) {
        if (!cur.empty())
          out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty())
      out.push_back(cur);
  }
  return out;
}

struct LatticeArgs {
  std::string file;
  std::vector<std::string> blocks;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--lattice", file, "lattice definition file (JSON)");
    auto* b = cmd->add_option("--blocks", blocks, "block tokens, e.g. U,E8MINUS,DIAG(-4)");
    f->excludes(b);
    b->excludes(f);
  }

  GramLattice load() const {
    if (!file.empty())
      return load_lattice_file(file);
    if (blocks.empty())
      throw PreconditionError("give --lattice <file> or --blocks <tokens>");
    std::vector<std::string> tokens = split_tokens(blocks);
    std::string label;
    for (const std::string& t : tokens)
      label += (label.empty() ? "" : " + ") + t;
    return direct_sum_tokens(tokens, label);
  }
};

Json signature_json(const Signature& s) {
  return Json::array({s.positive, s.negative});
}

Json load_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path), path);
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw ParseError("bad range '" + text + "', expected a..b");
    return v;
  };
  if (dots == std::string::npos)
    throw ParseError("bad range '" + text + "', expected a..b");
  long a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
  if (a < 0 || b < a)
    throw ParseError("bad range '" + text + "', expected 0 <= a <= b");
  return {a, b};
}

Json hirzebruch_row(long n) {
  const FixedComponentAnalysis f = fixed_component_analysis(Int(n));
  return {{"n", n},
          {"minus_K_dot_C0", int_to_json(f.minus_k_dot_c0)},
          {"residual_dot_C0", int_to_json(f.residual_dot_c0)},
          {"multiplicity_of_C0_in_base_locus", to_string(f.multiplicity)},
          {"smooth_K3_cover_possible", f.smooth_k3_cover_possible}};
}

Json cross_check_json(const std::vector<CrossCheckRow>& rows) {
  Json out = Json::array();
  for (const CrossCheckRow& r : rows) {
    Json j = {{"label", r.label}, {"outcome", to_string(r.outcome)}, {"note", r.note}};
    j["verdict"] = r.verdict ? Json(to_string(*r.verdict)) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

Json vinberg_json(const GramLattice& lattice, const VinbergResult& r, const VinbergBudget& budget) {
  Json walls = Json::array();
  for (const Root& w : r.walls)
    walls.push_back(vec_to_json(w.vec()));
  Json transcript = Json::array();
  for (const LevelLog& l : r.transcript)
    transcript.push_back(
        {{"level", l.level}, {"candidates", l.candidates}, {"accepted", l.accepted}, {"complete", l.complete}});
  return {{"lattice", lattice.label()},
          {"verdict", to_string(r.verdict)},
          {"v0", vec_to_json(r.v0)},
          {"v0_source", r.v0_source},
          {"walls", walls},
          {"chamber_rays", vecs_to_json(r.chamber_rays)},
          {"transcript", transcript},
          {"stop_reason", r.stop_reason},
          {"budget",
           {{"max_walls", budget.max_walls},
            {"max_level", budget.max_level},
            {"max_candidates", budget.max_candidates},
            {"spent_walls", r.spent.walls},
            {"spent_candidates", r.spent.candidates},
            {"last_level", r.spent.last_level}}},
          {"aut_finiteness", aut_finiteness_report(lattice, r).statement}};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args, std::ostream* progress) {
  CLI::App app{"Exact lattice, reflection-group and cone computations for K3-fibred threefolds", "k3cone"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  std::function<Outcome()> action;

  // lattice info
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice invariants");
  lattice_cmd->require_subcommand(1);
  LatticeArgs info_args;
  auto* info = lattice_cmd->add_subcommand("info", "rank, signature and determinant");
  info_args.attach(info);
  info->add_flag("--json", json);
  info->callback([&] {
    action = [&] {
      const GramLattice l = info_args.load();
      const Signature s = signature(l);
      return Outcome{{{"label", l.label()},
                      {"rank", l.rank()},
                      {"signature", signature_json(s)},
                      {"determinant", int_to_json(l.determinant())},
                      {"hyperbolic", s.hyperbolic()},
                      {"gram", matrix_to_json(l.gram())}}};
    };
  });

  // roots enum
  auto* roots_cmd = app.add_subcommand("roots", "(-2)-roots");
  roots_cmd->require_subcommand(1);
  LatticeArgs roots_args;
  std::string roots_v0;
  long roots_level = 0;
  auto* roots_enum = roots_cmd->add_subcommand("enum", "roots a with a.v0 = level");
  roots_args.attach(roots_enum);
  roots_enum->add_option("--v0", roots_v0, "controlling vector, comma separated (default: search)");
  roots_enum->add_option("--level", roots_level, "level a.v0")->required();
  roots_enum->add_flag("--json", json);
  roots_enum->callback([&] {
    action = [&] {
      const GramLattice l = roots_args.load();
      const LatticeVector v0 = roots_v0.empty() ? default_controlling_vector(l) : parse_csv(roots_v0);
      if (roots_level < 0)
        throw PreconditionError("level must be nonnegative");
      Json roots = Json::array();
      std::vector<Root> found = enumerate_roots_at_level(l, v0, Int(roots_level));
      for (const Root& r : found)
        roots.push_back(vec_to_json(r.vec()));
      return Outcome{{{"v0", vec_to_json(v0)}, {"level", roots_level}, {"count", found.size()}, {"roots", roots}}};
    };
  });

  // vinberg run
  auto* vinberg_cmd = app.add_subcommand("vinberg", "Vinberg's algorithm");
  vinberg_cmd->require_subcommand(1);
  LatticeArgs vin_args;
  std::string vin_v0;
  VinbergBudget budget;
  auto* vin_run = vinberg_cmd->add_subcommand("run", "decide 2-reflectivity within a budget");
  vin_args.attach(vin_run);
  vin_run->add_option("--v0", vin_v0, "controlling vector, comma separated (default: search)");
  vin_run->add_option("--max-walls", budget.max_walls, "accepted wall limit");
  vin_run->add_option("--max-level", budget.max_level, "level limit");
  vin_run->add_option("--max-candidates", budget.max_candidates, "enumerated root limit");
  vin_run->add_flag("--json", json);
  vin_run->callback([&] {
    action = [&] {
      const GramLattice l = vin_args.load();
      std::optional<LatticeVector> v0;
      if (!vin_v0.empty())
        v0 = parse_csv(vin_v0);
      VinbergProgress report;
      if (progress)
        report = [&](const LevelLog& log, std::size_t walls) {
          *progress << "vinberg: level " << log.level << ", " << log.candidates << " candidates, " << log.accepted
                    << " accepted, " << walls << " walls" << (log.complete ? "" : " (candidate budget hit)") << "\n";
        };
      const VinbergResult r = run_vinberg(l, v0, budget, report);
      return Outcome{vinberg_json(l, r, budget), r.verdict == Verdict::TwoReflective ? 0 : 1};
    };
  });

  // cone ...
  auto* cone_cmd = app.add_subcommand("cone", "rational polyhedral cones");
  cone_cmd->require_subcommand(1);
  std::string cone_in;
  std::size_t codim = 1;
  auto add_in = [&](CLI::App* c) {
    c->add_option("--in", cone_in, "input JSON file")->required();
    c->add_flag("--json", json);
  };
  auto* cone_dual = cone_cmd->add_subcommand("dual", "dual cone");
  add_in(cone_dual);
  cone_dual->callback([&] {
    action = [&] {
      const RationalCone c = cone_from_json(load_json_file(cone_in));
      return Outcome{{{"input", cone_to_json(c)}, {"dual", cone_to_json(dual_cone(c))}}};
    };
  });
  auto* cone_faces = cone_cmd->add_subcommand("faces", "faces of a given codimension");
  add_in(cone_faces);
  cone_faces->add_option("--codim", codim, "codimension (default 1)");
  cone_faces->callback([&] {
    action = [&] {
      const RationalCone c = cone_from_json(load_json_file(cone_in));
      Json list = Json::array();
      for (const ConeFace& f : faces(c, codim)) {
        std::vector<IntVec> rays;
        for (std::size_t i : f.rays)
          rays.push_back(c.rays()[i]);
        list.push_back({{"active_facets", f.active_facets}, {"rays", vecs_to_json(rays)}, {"dim", f.dim}});
      }
      return Outcome{{{"codim", codim}, {"count", list.size()}, {"faces", list}}};
    };
  });
  auto* cone_orbits = cone_cmd->add_subcommand("orbits", "orbits of faces under a matrix group");
  add_in(cone_orbits);
  cone_orbits->callback([&] {
    action = [&] {
      const Json in = load_json_file(cone_in);
      if (!in.is_object() || !in.contains("generators"))
        throw ParseError(cone_in + ": expected generators and either faces or cone with codim");
      std::vector<IntMatrix> gens;
      for (const Json& g : in["generators"])
        gens.push_back(matrix_from_json(g, "generators"));
      std::size_t budget_words = 8;
      if (in.contains("word_budget"))
        budget_words = int_from_json(in["word_budget"], "word_budget").get_ui();
      std::vector<RationalCone> fs;
      if (in.contains("faces")) {
        for (const Json& f : in["faces"])
          fs.push_back(cone_from_json(f));
      } else if (in.contains("cone")) {
        const RationalCone c = cone_from_json(in["cone"]);
        const std::size_t k = in.contains("codim") ? int_from_json(in["codim"], "codim").get_ui() : 1;
        for (const ConeFace& f : faces(c, k))
          fs.push_back(face_cone(c, f));
      } else {
        throw ParseError(cone_in + ": expected faces or cone");
      }
      const OrbitPartition p = orbit_faces(fs, gens, budget_words);
      Json orbits = Json::array();
      for (std::size_t i = 0; i < p.classes.size(); ++i)
        orbits.push_back({{"members", p.classes[i]},
                          {"representative", cone_to_json(fs[p.representatives[i]])},
                          {"complete", static_cast<bool>(p.complete[i])}});
      return Outcome{{{"faces", fs.size()}, {"orbit_count", p.classes.size()}, {"orbits", orbits}}};
    };
  });
  auto* cone_validate = cone_cmd->add_subcommand("validate-complex", "check a chamber complex");
  add_in(cone_validate);
  cone_validate->callback([&] {
    action = [&] {
      const ChamberComplex cc = chamber_complex_from_json(load_json_file(cone_in));
      const ChamberComplexReport rep = validate_chamber_complex(cc);
      Json overlaps = Json::array();
      for (const auto& o : rep.overlaps)
        overlaps.push_back({{"chambers", {o.first, o.second}}, {"witness", vec_to_json(o.witness)}});
      Json adj = Json::array();
      for (const auto& a : rep.adjacencies) {
        Json j = {{"chambers", {a.first, a.second}}, {"ok", a.ok}, {"detail", a.detail}};
        j["common_facet"] = a.common_facet ? cone_to_json(*a.common_facet) : Json(nullptr);
        adj.push_back(std::move(j));
      }
      return Outcome{{{"ok", rep.ok()},
                      {"shared_ray_ok", rep.shared_ray_ok()},
                      {"missing_shared_ray", rep.missing_shared_ray},
                      {"disjoint_ok", rep.disjoint_ok()},
                      {"overlaps", overlaps},
                      {"adjacency_ok", rep.adjacency_ok()},
                      {"adjacencies", adj}},
                     rep.ok() ? 0 : 1};
    };
  });

  // surface ...
  auto* surface_cmd = app.add_subcommand("surface", "surface intersection arithmetic");
  surface_cmd->require_subcommand(1);
  long hz_n = -1;
  std::string hz_scan;
  auto* hz = surface_cmd->add_subcommand("hirzebruch", "fixed components of |-2K| on F_n");
  auto* hz_n_opt = hz->add_option("--n", hz_n, "Hirzebruch index");
  auto* hz_scan_opt = hz->add_option("--scan", hz_scan, "range a..b");
  hz_n_opt->excludes(hz_scan_opt);
  hz->add_flag("--json", json);
  hz->callback([&] {
    action = [&] {
      if (!hz_scan.empty()) {
        const auto [a, b] = parse_range(hz_scan);
        Json rows = Json::array();
        for (long n = a; n <= b; ++n)
          rows.push_back(hirzebruch_row(n));
        return Outcome{{{"scan", {a, b}}, {"rows", rows}}};
      }
      if (hz_n < 0)
        throw PreconditionError("give --n <n >= 0> or --scan a..b");
      const Hirzebruch f{Int(hz_n)};
      Json row = hirzebruch_row(hz_n);
      row["antiK"] = {int_to_json(f.anticanonical().a), int_to_json(f.anticanonical().b)};
      row["C1_squared"] = int_to_json(f.intersect(f.positive_section(), f.positive_section()));
      const bool smooth = row["smooth_K3_cover_possible"].get<bool>();
      return Outcome{row, smooth ? 0 : 1};
    };
  });
  std::string lsq_text;
  bool not_nef_big = false;
  auto* rr = surface_cmd->add_subcommand("rr", "h0 of a nef and big class on a K3 surface");
  rr->add_option("--lsq", lsq_text, "self-intersection L^2 (even)")->required();
  rr->add_flag("--not-nef-big", not_nef_big, "the class is not nef and big");
  rr->add_flag("--json", json);
  rr->callback([&] {
    action = [&] {
      Int lsq;
      if (lsq_text.empty() || lsq.set_str(lsq_text, 10) != 0)
        throw ParseError("--lsq expects an integer, got '" + lsq_text + "'");
      const Int h0 = k3_riemann_roch({lsq, !not_nef_big});
      return Outcome{{{"L_squared", int_to_json(lsq)}, {"h0", int_to_json(h0)}}};
    };
  });
  int mori_type = 0;
  auto* classify = surface_cmd->add_subcommand("classify", "contraction type elimination");
  classify->add_option("--type", mori_type, "Mori type 1..8")->required();
  classify->add_flag("--json", json);
  classify->callback([&] {
    action = [&] {
      const ContractionVerdict v = classify_contraction({mori_type});
      return Outcome{{{"type", mori_type},
                      {"description", mori_type_description(mori_type)},
                      {"allowed", v.allowed},
                      {"reason", v.reason}},
                     v.allowed ? 0 : 1};
    };
  });

  // catalog ...
  auto* catalog_cmd = app.add_subcommand("catalog", "Fano mirror catalog");
  catalog_cmd->require_subcommand(1);
  std::string catalog_file;
  catalog_cmd->add_option("--catalog", catalog_file, "catalog file (default: built-in)");
  auto load_cat = [&] { return catalog_file.empty() ? default_catalog() : load_catalog(catalog_file); };
  auto* cat_list = catalog_cmd->add_subcommand("list", "entries and count checks");
  cat_list->add_option("--catalog", catalog_file, "catalog file (default: built-in)");
  cat_list->add_flag("--json", json);
  cat_list->callback([&] {
    action = [&] {
      const Catalog c = load_cat();
      Json entries = Json::array();
      for (const FanoEntry& e : c.entries)
        entries.push_back({{"label", e.label},
                           {"galois_trivial", e.galois_trivial},
                           {"status", to_string(e.status)},
                           {"has_lattice", e.lattice.has_value()}});
      const CatalogArithmetic a = check_arithmetic(c);
      return Outcome{{{"entries", entries},
                      {"summary", {{"total", c.summary.total}, {"excluded", c.summary.excluded},
                                   {"infinite", c.summary.infinite}}},
                      {"arithmetic",
                       {{"galois_nontrivial", a.galois_nontrivial},
                        {"asserted_2reflective", a.asserted_reflective},
                        {"excluded_matches", a.excluded_matches},
                        {"remainder_matches", a.remainder_matches}}}}};
    };
  });
  std::string show_label;
  auto* cat_show = catalog_cmd->add_subcommand("show", "one entry");
  cat_show->add_option("label", show_label, "entry label")->required();
  cat_show->add_option("--catalog", catalog_file, "catalog file (default: built-in)");
  cat_show->add_flag("--json", json);
  cat_show->callback([&] {
    action = [&] {
      const Catalog c = load_cat();
      const FanoEntry* e = c.find(show_label);
      if (!e)
        throw PreconditionError("no catalog entry labelled '" + show_label + "'");
      Json j = entry_to_json(*e);
      if (e->lattice) {
        const GramLattice l = e->lattice->build();
        j["rank"] = l.rank();
        j["signature"] = signature_json(signature(l));
        j["determinant"] = int_to_json(l.determinant());
      }
      return Outcome{j};
    };
  });
  auto* cat_check = catalog_cmd->add_subcommand("cross-check", "compare assertions with Vinberg runs");
  cat_check->add_option("--catalog", catalog_file, "catalog file (default: built-in)");
  cat_check->add_flag("--json", json);
  cat_check->callback([&] {
    action = [&] {
      const Catalog c = load_cat();
      const auto rows = cross_check(c.entries);
      const bool contradiction = std::any_of(rows.begin(), rows.end(), [](const CrossCheckRow& r) {
        return r.outcome == CrossCheckOutcome::Contradiction;
      });
      return Outcome{{{"rows", cross_check_json(rows)}, {"contradiction", contradiction}}, contradiction ? 1 : 0};
    };
  });

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    if (code != 0 && result.err.find("Usage") == std::string::npos)
      result.err += app.help();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  try {
    Outcome o = action();
    result.exit_code = o.exit_code;
    result.out = json ? o.payload.dump(2) + "\n" : render_text(o.payload);
  } catch (const Error& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 3;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace k3cone
