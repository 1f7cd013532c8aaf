#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ellfm/errors.hpp"
#include "ellfm/fitting.hpp"
#include "ellfm/fourier_mukai.hpp"
#include "ellfm/geometry.hpp"
#include "ellfm/remark.hpp"
#include "ellfm/spectral.hpp"
#include "ellfm/stability.hpp"

namespace ellfm::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { table, machine };

/// Thrown for bad flag values; always maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One invocation's output. Every entry carries a machine value and the text
// shown in table mode, so both formats are rendered from the same data.
class Report {
 public:
  void set(const std::string& section, const std::string& key, Json value, std::string text) {
    Section& sec = find(section);
    sec.rows.push_back({key, std::move(value), std::move(text)});
  }
  void diagnostic(std::string message) { diagnostics_.push_back(std::move(message)); }

  void print(std::ostream& out, Format format) const {
    if (format == Format::machine) {
      Json doc = Json::object();
      for (const char* name : {"geometry", "input", "output"}) {
        Json obj = Json::object();
        for (const auto& sec : sections_) {
          if (sec.name != name) continue;
          for (const auto& row : sec.rows) obj[row.key] = row.value;
        }
        doc[name] = std::move(obj);
      }
      doc["diagnostics"] = diagnostics_;
      out << doc.dump(2) << '\n';
      return;
    }
    for (const char* name : {"geometry", "input", "output"}) {
      for (const auto& sec : sections_) {
        if (sec.name != name || sec.rows.empty()) continue;
        std::size_t width = 0;
        for (const auto& row : sec.rows) width = std::max(width, row.key.size());
        out << '[' << sec.name << "]\n";
        for (const auto& row : sec.rows) {
          out << "  " << std::left << std::setw(static_cast<int>(width)) << row.key << "  "
              << row.text << '\n';
        }
      }
    }
    for (const auto& d : diagnostics_) out << "note: " << d << '\n';
  }

 private:
  struct Row {
    std::string key;
    Json value;
    std::string text;
  };
  struct Section {
    std::string name;
    std::vector<Row> rows;
  };

  Section& find(const std::string& name) {
    for (auto& sec : sections_) {
      if (sec.name == name) return sec;
    }
    sections_.push_back({name, {}});
    return sections_.back();
  }

  std::vector<Section> sections_;
  std::vector<std::string> diagnostics_;
};

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + " '" + text + "': line 1, column " + std::to_string(e.column()) + ": " +
                         e.what(),
                     e.column());
  }
}

long parse_flag_integer(const std::string& flag, const std::string& text) {
  const Rational q = parse_flag_rational(flag, text);
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw ParseError(flag + " '" + text + "': expected an integer", 1);
  }
  return q.get_num().get_si();
}

// "a,b" -> aH + b mu
std::pair<Rational, Rational> parse_pair(const std::string& flag, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError(flag + " '" + text + "': line 1, column " + std::to_string(text.size() + 1) +
                         ": expected two comma-separated rationals",
                     text.size() + 1);
  }
  auto part = [&](std::string_view piece, std::size_t offset) {
    try {
      return parse_rational(piece);
    } catch (const ParseError& e) {
      const std::size_t col = offset + e.column();
      throw ParseError(flag + " '" + text + "': line 1, column " + std::to_string(col) + ": " +
                           e.what(),
                       col);
    }
  };
  const std::string_view view(text);
  return {part(view.substr(0, comma), 0), part(view.substr(comma + 1), comma + 1)};
}

// "lo:hi"
std::pair<long, long> parse_range(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError(flag + " '" + text + "': expected lo:hi", text.size() + 1);
  }
  return {parse_flag_integer(flag, text.substr(0, colon)),
          parse_flag_integer(flag, text.substr(colon + 1))};
}

Json rational_json(const Rational& q) { return to_string(q); }

Json divisor_json(const DivisorClass& d) {
  return Json{{"side", std::string(side_name(d.side()))},
              {"section", to_string(d.section_coeff())},
              {"fibre", to_string(d.fibre_coeff())}};
}

Json chern_json(const ChernCharacter& ch) {
  return Json{{"side", std::string(side_name(ch.side()))},
              {"rank", to_string(ch.rank())},
              {"c1", divisor_json(ch.c1())},
              {"ch2", to_string(ch.ch2())}};
}

std::string chern_text(const ChernCharacter& ch) {
  return to_string(ch) + " on " + std::string(side_name(ch.side()));
}

Json candidate_json(const SubsheafCandidate& c) {
  return Json{{"n'", c.rank}, {"c'", c.section_degree}, {"d'", c.fibre_degree}};
}

Json box_json(const CandidateBox& box) {
  return Json{{"c'", {box.c_min, box.c_max}}, {"d'", {box.d_min, box.d_max}}};
}

std::string box_text(const CandidateBox& box) {
  return "c' in [" + std::to_string(box.c_min) + ", " + std::to_string(box.c_max) + "], d' in [" +
         std::to_string(box.d_min) + ", " + std::to_string(box.d_max) + "]";
}

// Flags shared by every subcommand that takes a Chern character.
struct ChernSpec {
  std::string rank = "0";
  std::string c1 = "0,0";
  std::string ch2 = "0";
  std::string side;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--rank", rank, "ch_0 (integer)");
    cmd.add_option("--c1", c1, "c_1 as a,b meaning aH + b*mu (or a*Theta + b*muhat)");
    cmd.add_option("--ch2", ch2, "coefficient of the fundamental class");
    cmd.add_option("--side", side, "X or Xhat");
  }

  ChernCharacter build(Side default_side) const {
    const Side s = side.empty() ? default_side : parse_side(side);
    const long n = parse_flag_integer("--rank", rank);
    auto [h, f] = parse_pair("--c1", c1);
    return {s, n, DivisorClass(s, std::move(h), std::move(f)), parse_flag_rational("--ch2", ch2)};
  }
};

struct BoxSpec {
  long bound = 3;
  std::string c_range;
  std::string d_range;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--box", bound, "symmetric bound on |c'| and |d'|")->capture_default_str();
    cmd.add_option("--c-range", c_range, "explicit c' range lo:hi (overrides --box)");
    cmd.add_option("--d-range", d_range, "explicit d' range lo:hi (overrides --box)");
  }

  CandidateBox build() const {
    CandidateBox box = CandidateBox::symmetric(bound, bound);
    if (!c_range.empty()) std::tie(box.c_min, box.c_max) = parse_range("--c-range", c_range);
    if (!d_range.empty()) std::tie(box.d_min, box.d_max) = parse_range("--d-range", d_range);
    return box;
  }
};

void add_geometry(Report& report, const SurfaceGeometry& geo) {
  report.set("geometry", "genus", geo.genus(), std::to_string(geo.genus()));
  report.set("geometry", "e", geo.e(), std::to_string(geo.e()));
}

void add_input_chern(Report& report, const SurfaceGeometry& geo, const ChernCharacter& ch) {
  report.set("input", "ch", chern_json(ch), chern_text(ch));
  const FibreInvariants inv = fibre_invariants(geo, ch);
  report.set("input", "fibre_invariants",
             Json{{"n", to_string(inv.rank)},
                  {"d", to_string(inv.fibre_degree)},
                  {"c", to_string(inv.section_degree)},
                  {"s", to_string(inv.ch2)}},
             "n=" + to_string(inv.rank) + " d=" + to_string(inv.fibre_degree) +
                 " c=" + to_string(inv.section_degree) + " s=" + to_string(inv.ch2));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ellfm: exact Chern-character and stability calculator for elliptic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  long genus = 0;
  long e = 0;
  std::string format_name = "table";
  app.add_option("--genus", genus, "genus g of the base curve")->capture_default_str();
  app.add_option("--e", e, "e = deg E = -H^2")->capture_default_str();
  app.add_option("--format", format_name, "table or machine")
      ->check(CLI::IsMember({"table", "machine"}))
      ->capture_default_str();

  // transform
  auto* transform = app.add_subcommand("transform", "Fourier-Mukai transform of a Chern character");
  ChernSpec transform_spec;
  transform_spec.add_to(*transform);
  bool inverse = false;
  bool wit1 = false;
  transform->add_flag("--inverse", inverse, "inverse transform (input on Xhat)");
  transform->add_flag("--wit1", wit1, "ch of S^1(F) for a WIT_1 sheaf (requires fibre degree 0)");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Invariants of a spectral cover C = n*Theta + k*muhat");
  std::string cover_n = "1";
  std::string cover_k = "0";
  std::string cover_r = "0";
  cover_cmd->add_option("--n", cover_n, "degree of C over B (>= 1)");
  cover_cmd->add_option("--k", cover_k, "muhat coefficient of C");
  cover_cmd->add_option("--r", cover_r, "degree of the rank-one sheaf on C");

  // slope
  auto* slope_cmd = app.add_subcommand("slope", "Slope with respect to aH + b*mu");
  ChernSpec slope_spec;
  slope_spec.add_to(*slope_cmd);
  std::string pol_a = "1";
  std::string pol_b = "1";
  slope_cmd->add_option("--a", pol_a);
  slope_cmd->add_option("--b", pol_b);

  // threshold
  auto* threshold_cmd = app.add_subcommand("threshold", "Threshold b0 over a finite candidate box");
  ChernSpec threshold_spec;
  threshold_spec.add_to(*threshold_cmd);
  BoxSpec threshold_box;
  threshold_box.add_to(*threshold_cmd);
  std::string threshold_a = "1";
  threshold_cmd->add_option("--a", threshold_a);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Destabilizing candidates in a finite box");
  ChernSpec scan_spec;
  scan_spec.add_to(*scan_cmd);
  BoxSpec scan_box;
  scan_box.add_to(*scan_cmd);
  std::string scan_a = "1";
  std::string scan_b = "1";
  scan_cmd->add_option("--a", scan_a);
  scan_cmd->add_option("--b", scan_b);

  // fitting
  auto* fitting_cmd = app.add_subcommand("fitting", "Fitting cycle of an S-equivalence class");
  std::vector<std::string> parts;
  fitting_cmd->add_option("--part", parts, "id:mult or id:mult:s (singular point)")->required();

  auto* remark_cmd = app.add_subcommand("verify-remark", "Reproduce the C = 2Theta counterexample");
  auto* todd_cmd = app.add_subcommand("todd", "Relative Todd class");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const Format format = format_name == "machine" ? Format::machine : Format::table;
  Report report;
  int exit_code = kSuccess;

  try {
    const SurfaceGeometry geo(genus, e);
    add_geometry(report, geo);

    if (transform->parsed()) {
      if (inverse && wit1) throw UsageError("--inverse and --wit1 are mutually exclusive");
      const ChernCharacter in = transform_spec.build(inverse ? Side::Xhat : Side::X);
      add_input_chern(report, geo, in);
      const char* kind = inverse ? "inverse" : (wit1 ? "wit1" : "forward");
      const ChernCharacter result = inverse ? fm_inverse_ch(geo, in)
                                            : (wit1 ? wit1_transform_ch(geo, in) : fm_transform_ch(geo, in));
      report.set("output", "transform", kind, kind);
      report.set("output", "ch", chern_json(result), chern_text(result));
    } else if (cover_cmd->parsed()) {
      const long n = parse_flag_integer("--n", cover_n);
      const long k = parse_flag_integer("--k", cover_k);
      const Rational r = parse_flag_rational("--r", cover_r);
      if (n < 1) throw UsageError("--n must be >= 1 (got " + std::to_string(n) + ")");
      const CoverClass cover(geo, n, k);
      report.set("input", "cover", divisor_json(cover.divisor()), to_string(cover.divisor()));
      report.set("input", "r", rational_json(r), to_string(r));
      const CoverInvariants inv = cover_invariants(cover);
      report.set("output", "chi", rational_json(inv.chi), to_string(inv.chi));
      report.set("output", "p", rational_json(inv.arithmetic_genus), to_string(inv.arithmetic_genus));
      report.set("output", "ell", rational_json(inv.ell), to_string(inv.ell));
      const ChernCharacter on_cover = cover_sheaf_ch_on_cover_side(cover, r);
      const ChernCharacter surface = cover_sheaf_to_surface_ch(cover, r);
      report.set("output", "ch_on_cover_side", chern_json(on_cover), chern_text(on_cover));
      report.set("output", "ch_on_surface", chern_json(surface), chern_text(surface));
      const CoverSheafInvariants back = degree_on_cover(surface, cover);
      report.set("output", "rank_on_cover", rational_json(back.rank), to_string(back.rank));
      report.set("output", "degree_on_cover", rational_json(back.degree), to_string(back.degree));
      report.set("output", "slope_on_cover", rational_json(back.slope()), to_string(back.slope()));
    } else if (slope_cmd->parsed()) {
      const ChernCharacter in = slope_spec.build(Side::X);
      if (in.side() != Side::X) throw SideMismatch("slope is defined for sheaves on X");
      const Polarization pol(parse_flag_rational("--a", pol_a), parse_flag_rational("--b", pol_b));
      add_input_chern(report, geo, in);
      report.set("input", "polarization", Json{{"a", to_string(pol.a())}, {"b", to_string(pol.b())}},
                 to_string(pol.a()) + "*H + " + to_string(pol.b()) + "*mu");
      const Rational s = slope(geo, in, pol);
      report.set("output", "slope", rational_json(s), to_string(s));
    } else if (threshold_cmd->parsed()) {
      const ChernCharacter in = threshold_spec.build(Side::X);
      if (in.side() != Side::X) throw SideMismatch("threshold is defined for sheaves on X");
      const Rational a = parse_flag_rational("--a", threshold_a);
      const CandidateBox box = threshold_box.build();
      add_input_chern(report, geo, in);
      report.set("input", "a", rational_json(a), to_string(a));
      report.set("input", "box", box_json(box), box_text(box));
      const ThresholdReport t = threshold_b0(geo, in, a, box);
      report.set("output", "b0", rational_json(t.b0), to_string(t.b0));
      report.set("output", "binding", t.binding ? candidate_json(*t.binding) : Json(nullptr),
                 t.binding ? to_string(*t.binding) : "none");
      report.set("output", "rho", t.rho ? rational_json(*t.rho) : Json(nullptr),
                 t.rho ? to_string(*t.rho) : "none");
      Json indep = Json::array();
      std::string indep_text;
      for (const auto& c : t.b_independent) {
        indep.push_back(candidate_json(c));
        indep_text += (indep_text.empty() ? "" : " ") + to_string(c);
      }
      report.set("output", "b_independent", std::move(indep), indep_text.empty() ? "none" : indep_text);
      if (box.empty()) report.diagnostic("empty candidate box: b0 = 0 with no binding candidate");
      report.diagnostic("b0 is exact for the scanned box and a lower bound over all subsheaves");
    } else if (scan_cmd->parsed()) {
      const ChernCharacter in = scan_spec.build(Side::X);
      if (in.side() != Side::X) throw SideMismatch("scan is defined for sheaves on X");
      const Polarization pol(parse_flag_rational("--a", scan_a), parse_flag_rational("--b", scan_b));
      const CandidateBox box = scan_box.build();
      add_input_chern(report, geo, in);
      report.set("input", "polarization", Json{{"a", to_string(pol.a())}, {"b", to_string(pol.b())}},
                 to_string(pol.a()) + "*H + " + to_string(pol.b()) + "*mu");
      report.set("input", "box", box_json(box), box_text(box));
      const auto hits = destabilizer_scan(geo, in, pol, box);
      report.set("output", "count", hits.size(), std::to_string(hits.size()));
      Json list = Json::array();
      for (const auto& hit : hits) {
        Json item = candidate_json(hit.candidate);
        item["excess"] = to_string(hit.excess);
        list.push_back(std::move(item));
      }
      std::string text;
      for (const auto& hit : hits) {
        text += "\n    " + to_string(hit.candidate) + " excess " + to_string(hit.excess);
      }
      report.set("output", "destabilizers", std::move(list), hits.empty() ? "none" : text);
    } else if (fitting_cmd->parsed()) {
      std::vector<SEquivalencePart> parsed_parts;
      for (const auto& p : parts) parsed_parts.push_back(parse_part(p));
      const SEquivalenceClass cls(std::move(parsed_parts));
      Json in = Json::array();
      for (const auto& p : cls.parts()) {
        in.push_back(Json{{"point", p.point}, {"multiplicity", p.multiplicity}, {"singular", p.singular}});
      }
      report.set("input", "parts", std::move(in), to_string(sym_point(cls)));
      const FittingCycle cycle = fitting_cycle(cls);
      Json cyc = Json::array();
      std::string cyc_text;
      for (const auto& t : cycle.cycle) {
        cyc.push_back(Json{{"point", t.point}, {"exponent", t.exponent}});
        cyc_text += (cyc_text.empty() ? "" : " * ") + std::string("m_") + t.point + "^" +
                    std::to_string(t.exponent);
      }
      report.set("output", "cycle", std::move(cyc), cyc_text);
      report.set("output", "length", cycle.length, std::to_string(cycle.length));
      report.set("output", "rank", cls.rank(), std::to_string(cls.rank()));
      report.set("output", "singular_multiplicity", cls.singular_multiplicity(),
                 std::to_string(cls.singular_multiplicity()));
      const SymPoint point = sym_point(cls);
      report.set("output", "sym_point", to_string(point), to_string(point));
    } else if (remark_cmd->parsed()) {
      const RemarkReport r = verify_remark(geo);
      report.set("output", "slope_L", rational_json(r.cover_sheaf_slope), to_string(r.cover_sheaf_slope));
      report.set("output", "slope_sub", rational_json(r.subsheaf_slope), to_string(r.subsheaf_slope));
      report.set("output", "ch_F", chern_json(r.surface_sheaf), chern_text(r.surface_sheaf));
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed},
                              {"ok", c.ok}});
      }
      std::string check_text;
      for (const auto& c : r.checks) {
        check_text += "\n    " + std::string(c.ok ? "ok   " : "DIFF ") + c.name + ": ";
        check_text += c.ok ? c.computed : "expected " + c.expected + ", computed " + c.computed;
      }
      report.set("output", "checks", std::move(checks), check_text);
      const bool pass = r.passed();
      report.set("output", "verdict", pass ? "PASS" : "FAIL", pass ? "PASS" : "FAIL");
      if (pass && e == 0) report.diagnostic("stable boundary: no strict destabilizer");
      if (!pass) exit_code = kVerifyFailed;
    } else if (todd_cmd->parsed()) {
      const GradedClass closed = todd_relative(geo);
      const GradedClass expanded = todd_relative_expanded(geo);
      auto graded_json = [](const GradedClass& g) {
        return Json{{"deg0", to_string(g.deg0)}, {"deg2", divisor_json(g.deg2)}, {"deg4", to_string(g.deg4)}};
      };
      auto graded_text = [](const GradedClass& g) {
        return to_string(g.deg0) + " + (" + to_string(g.deg2) + ") + " + to_string(g.deg4) + "*w";
      };
      report.set("output", "todd", graded_json(closed), graded_text(closed));
      report.set("output", "todd_expanded", graded_json(expanded), graded_text(expanded));
      report.set("output", "agree", closed == expanded, closed == expanded ? "yes" : "no");
      if (!(closed == expanded)) exit_code = kVerifyFailed;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const SideMismatch& ex) {
    err << "error: wrong side: " << ex.what() << '\n';
    return kUsageError;
  } catch (const PreconditionViolation& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  }

  report.print(out, format);
  return exit_code;
}

}  // namespace ellfm::cli
