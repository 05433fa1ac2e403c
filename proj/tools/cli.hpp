#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsurf/tsurf.hpp"

#ifndef TSURF_DATA_DIR
#define TSURF_DATA_DIR "data"
#endif

namespace tsurf::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t expected) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(s, ',')) {
    Rational r = Rational::parse(part);
    if (!r.is_integer()) throw Error(ErrorKind::ParseError, "expected integers, got " + s);
    out.push_back(r.num());
  }
  if (expected && out.size() != expected)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(expected) + " comma-separated integers, got " + s);
  return out;
}

inline Vec2 parse_vec(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorKind::ParseError, "expected x,y, got " + s);
  return {Scalar::parse(parts[0]), Scalar::parse(parts[1])};
}

inline ShearMatrix parse_matrix(const std::string& s) {
  auto v = parse_ints(s, 4);
  return {v[0], v[1], v[2], v[3]};
}

inline std::string num(const Scalar& x) {
  if (x.is_exact()) return x.to_string();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x.to_double());
  return buf;
}

inline std::string pi_multiple(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", angle / std::numbers::pi);
  return std::string(buf) + "pi";
}

inline Surface from_data(const std::string& file) {
  return square_tiled(load_square_tiled(std::string(TSURF_DATA_DIR) + "/" + file));
}

/// Registry lookup. Parameters come either as separate arguments or after a
/// colon, e.g. "double-ngon:7".
inline Surface make_surface(std::string name, std::vector<std::string> params) {
  if (auto colon = name.find(':'); colon != std::string::npos) {
    for (const auto& p : split(name.substr(colon + 1), ',')) params.push_back(p);
    name = name.substr(0, colon);
  }
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw Error(ErrorKind::ParseError, name + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto integer = [&](std::size_t i) { return parse_ints(params[i], 1)[0]; };
  auto scalar = [&](std::size_t i) { return Scalar::parse(params[i]); };
  if (name == "square-torus") return need(0), square_torus();
  if (name == "rectangle-torus") return need(2), rectangle_torus(scalar(0), scalar(1));
  if (name == "hexagon-torus" || name == "hexagon") return need(0), hexagon_torus();
  if (name == "octagon") return need(0), regular_even_gon(8);
  if (name == "regular-even-gon") return need(1), regular_even_gon(integer(0));
  if (name == "double-pentagon") return need(0), double_ngon(5);
  if (name == "double-ngon") return need(1), double_ngon(integer(0));
  if (name == "ward") return need(1), ward(integer(0));
  if (name == "pillowcase") return need(0), pillowcase();
  if (name == "tetrahedron") return need(0), tetrahedron();
  if (name == "cube") return need(0), cube();
  if (name == "three-square-l") return need(0), three_square_l();
  if (name == "golden-l") return need(0), golden_l();
  if (name == "l-table") return need(4), l_table(scalar(0), scalar(1), scalar(2), scalar(3));
  if (name == "eierlegende-wollmilchsau") return need(0), from_data("eierlegende_wollmilchsau.json");
  if (name == "escalator") return need(0), from_data("escalator.json");
  if (name == "square-tiled") return need(1), square_tiled(load_square_tiled(params[0]));
  if (name == "unfold-triangle") {
    need(3);
    return unfold_triangle({{Rational::parse(params[0]), Rational::parse(params[1]), Rational::parse(params[2])}});
  }
  throw Error(ErrorKind::ParseError, "unknown surface '" + name + "'");
}

inline const char* surface_names =
    "square-torus, rectangle-torus W H, hexagon-torus, octagon, regular-even-gon N, double-pentagon, double-ngon N, "
    "ward N, pillowcase, tetrahedron, cube, three-square-l, golden-l, l-table W1 H1 W2 H2, "
    "eierlegende-wollmilchsau, escalator, square-tiled SPEC.json, unfold-triangle A B C (angles as fractions of pi)";

struct SurfaceArg {
  std::string name;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("surface", name, "registry name, optionally name:params");
    app->add_option("--file", file, "surface JSON file");
  }
  Surface get() const {
    if (!file.empty()) return load_surface(file);
    if (name.empty()) throw Error(ErrorKind::ParseError, "give a surface name or --file");
    return make_surface(name, {});
  }
};

struct DirectionArg {
  std::string direction;
  std::string angle;

  void attach(CLI::App* app) {
    app->add_option("--direction", direction, "direction vector dx,dy");
    app->add_option("--angle", angle, "direction angle as a fraction of pi");
  }
  Vec2 get() const {
    if (!angle.empty()) {
      Rational a = Rational::parse(angle);
      return tsurf::detail::unit_pi(a.num(), a.den());
    }
    if (direction.empty()) throw Error(ErrorKind::ParseError, "give --direction or --angle");
    return parse_vec(direction);
  }
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

inline std::string verdict_text(const Verdict& v) {
  if (auto ok = std::get_if<Valid>(&v)) return "VALID: slope " + ok->slope.to_string();
  const auto& r = std::get<Rejected>(v);
  if (r.step == RejectStep::BothDoubled) return "REJECTED: both AA and BB present";
  return "REJECTED: boundary word";
}

inline void print_stages(std::ostream& out, const std::vector<Stage>& stages) {
  for (const auto& st : stages) out << st.operation << '\t' << st.word.letters() << '\t' << st.slope.to_string() << '\n';
}

}  // namespace detail

/// Runs one command line. Returns 0 on success, 1 on a domain error and 2 on
/// a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Flat surfaces, cutting sequences and cylinder decompositions", "tsurf"};
  app.require_subcommand(1);
  app.fallthrough();
  double eps = 1e-9;
  std::uint64_t seed = 20240601;
  app.add_option("--eps", eps, "tolerance for floating comparisons")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized commands");

  // surface
  auto* surface = app.add_subcommand("surface", "construct and inspect surfaces");
  surface->require_subcommand(1);
  std::string make_name;
  std::vector<std::string> make_params;
  auto* s_make = surface->add_subcommand("make", std::string("print a named surface as JSON; names: ") + surface_names);
  s_make->add_option("name", make_name)->required();
  s_make->add_option("params", make_params);
  SurfaceArg info_arg, vert_arg;
  auto* s_info = surface->add_subcommand("info", "vertex count, angles, Euler characteristic, genus");
  info_arg.attach(s_info);
  auto* s_vert = surface->add_subcommand("vertices", "vertex classes with their corners");
  vert_arg.attach(s_vert);
  std::string load_path;
  auto* s_load = surface->add_subcommand("load", "validate a surface file and print its JSON");
  s_load->add_option("file", load_path)->required();

  // trace
  auto* tr = app.add_subcommand("trace", "straight-line flow, printed as CSV crossings");
  SurfaceArg tr_surf;
  DirectionArg tr_dir;
  std::string tr_start, tr_svg;
  std::size_t tr_poly = 0, tr_max = 10000;
  tr_surf.attach(tr);
  tr_dir.attach(tr);
  tr->add_option("--start", tr_start, "start point x,y");
  tr->add_option("--polygon", tr_poly, "polygon containing the start");
  tr->add_option("--max", tr_max, "crossing budget");
  tr->add_option("--svg", tr_svg, "also write an SVG drawing");

  // cutseq
  auto* cs = app.add_subcommand("cutseq", "cutting sequences on the square torus");
  cs->require_subcommand(1);
  std::string cs_slope, cs_word, cs_op = "derive";
  std::size_t cs_n = 0, cs_samples = 100;
  std::int64_t cs_period = 0;
  auto* c_from = cs->add_subcommand("from-slope", "cutting sequence of slope p/q");
  c_from->add_option("slope", cs_slope)->required();
  auto* c_val = cs->add_subcommand("validate", "test whether a word is a cutting sequence");
  c_val->add_option("word", cs_word)->required();
  auto* c_shear = cs->add_subcommand("shear", "apply a word operator");
  c_shear->add_option("word", cs_word)->required();
  c_shear->add_option("--op", cs_op, "lengthen-a, lengthen-b, derive, conjugate-derive, swap or sandwiched")
      ->check(CLI::IsMember({"lengthen-a", "lengthen-b", "derive", "conjugate-derive", "swap", "sandwiched"}));
  auto* c_cx = cs->add_subcommand("complexity", "number of distinct factors of each length");
  c_cx->add_option("word", cs_word)->required();
  c_cx->add_option("--n", cs_n, "largest factor length (default 2|w|)");
  auto* c_en = cs->add_subcommand("enumerate", "valid periodic words of a given period");
  c_en->add_option("period", cs_period)->required();
  auto* c_check = cs->add_subcommand("check", "compare traced and symbolic words on random slopes");
  c_check->add_option("--samples", cs_samples, "number of random slopes");

  // cf
  auto* cf = app.add_subcommand("cf", "continued fractions");
  cf->require_subcommand(1);
  std::string cf_arg;
  bool cf_stages = false;
  auto* f_exp = cf->add_subcommand("expand", "expansion of p/q or a decimal");
  f_exp->add_option("value", cf_arg)->required();
  auto* f_eval = cf->add_subcommand("eval", "value of a0,a1,...");
  f_eval->add_option("terms", cf_arg)->required();
  auto* f_tw = cf->add_subcommand("to-word", "cutting sequence built from the expansion of p/q");
  f_tw->add_option("slope", cf_arg)->required();
  f_tw->add_flag("--stages", cf_stages, "print every intermediate word");
  auto* f_fw = cf->add_subcommand("from-word", "expansion recovered from a cutting sequence");
  f_fw->add_option("word", cf_arg)->required();
  f_fw->add_flag("--stages", cf_stages, "print the reduction chain");

  // matrix
  auto* mx = app.add_subcommand("matrix", "SL(2,Z) matrices a,b,c,d");
  mx->require_subcommand(1);
  std::string m_arg, m_slope, m_word;
  auto* m_dec = mx->add_subcommand("decompose", "factor into powers of S and T");
  m_dec->add_option("matrix", m_arg)->required();
  auto* m_act = mx->add_subcommand("act", "image of a slope");
  m_act->add_option("matrix", m_arg)->required();
  m_act->add_option("--slope", m_slope, "p/q or inf")->required();
  auto* m_aw = mx->add_subcommand("apply-word", "act on a cutting sequence");
  m_aw->add_option("matrix", m_arg)->required();
  m_aw->add_option("--word", m_word)->required();

  // cylinders
  auto* cy = app.add_subcommand("cylinders", "cylinder decomposition in a direction");
  SurfaceArg cy_surf;
  DirectionArg cy_dir;
  std::string cy_svg;
  std::int64_t cy_den = 64;
  cy_surf.attach(cy);
  cy_dir.attach(cy);
  cy->add_option("--svg", cy_svg, "write the shaded decomposition");
  cy->add_option("--max-den", cy_den, "largest denominator for modulus ratios");

  // billiard
  auto* bi = app.add_subcommand("billiard", "the square billiard table");
  bi->require_subcommand(1);
  std::string b_slope, b_start, b_dir, b_word;
  std::size_t b_max = 10000;
  auto* b_tr = bi->add_subcommand("trace", "bounce sequence");
  b_tr->add_option("--slope", b_slope, "p/q, using the standard start");
  b_tr->add_option("--start", b_start, "start x,y");
  b_tr->add_option("--direction", b_dir, "direction dx,dy");
  b_tr->add_option("--max", b_max, "bounce budget");
  auto* b_fold = bi->add_subcommand("fold", "torus word of a billiard word");
  b_fold->add_option("word", b_word)->required();
  auto* b_unf = bi->add_subcommand("unfold", "billiard word of a torus word");
  b_unf->add_option("word", b_word)->required();

  // render
  auto* rd = app.add_subcommand("render", "SVG drawing of a surface");
  SurfaceArg rd_surf;
  DirectionArg rd_dir;
  std::string rd_out, rd_start;
  std::size_t rd_poly = 0;
  bool rd_traj = false, rd_cyl = false, rd_vert = false;
  rd_surf.attach(rd);
  rd_dir.attach(rd);
  rd->add_option("-o,--output", rd_out, "output file (default stdout)");
  rd->add_option("--start", rd_start, "trajectory start x,y");
  rd->add_option("--polygon", rd_poly, "polygon containing the start");
  rd->add_flag("--trajectory", rd_traj, "draw a trajectory in the direction");
  rd->add_flag("--cylinders", rd_cyl, "shade the cylinders in the direction");
  rd->add_flag("--vertices", rd_vert, "mark vertices, one tone per class");

  std::vector<const char*> argv{"tsurf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CLI::App* deepest = &app;
    for (bool more = true; more;) {
      more = false;
      for (auto* sub : deepest->get_subcommands())
        if (sub->parsed()) {
          deepest = sub;
          more = true;
          break;
        }
    }
    out << deepest->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    CLI::App* deepest = &app;
    for (bool more = true; more;) {
      more = false;
      for (auto* sub : deepest->get_subcommands())
        if (sub->parsed()) {
          deepest = sub;
          more = true;
          break;
        }
    }
    err << "usage error: " << e.what() << "\n\n" << deepest->help();
    return 2;
  }

  ScopedEps scoped(eps);
  try {
    if (s_make->parsed()) {
      out << to_json(make_surface(make_name, make_params)).dump(2) << '\n';
    } else if (s_load->parsed()) {
      out << to_json(load_surface(load_path)).dump(2) << '\n';
    } else if (s_info->parsed()) {
      Surface s = info_arg.get();
      auto classes = vertex_classes(s);
      out << "polygons: " << s.polygons().size() << '\n'
          << "edges: " << s.gluings().size() << '\n'
          << "vertices: " << classes.size() << '\n';
      for (std::size_t i = 0; i < classes.size(); ++i)
        out << "vertex " << i << ": angle " << pi_multiple(classes[i].total_angle) << '\n';
      std::int64_t chi = euler_characteristic(s);
      out << "euler characteristic: " << chi << '\n';
      if (chi % 2 == 0) out << "genus: " << genus(s) << '\n';
      out << "translation surface: " << (s.is_translation_surface() ? "yes" : "no") << '\n'
          << "area: " << num(s.area()) << '\n';
    } else if (s_vert->parsed()) {
      Surface s = vert_arg.get();
      auto classes = vertex_classes(s);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "vertex " << i << " (" << pi_multiple(classes[i].total_angle) << "):";
        for (const auto& k : classes[i].corners) out << " p" << k.polygon << "v" << k.vertex;
        out << '\n';
      }
    } else if (tr->parsed()) {
      Surface s = tr_surf.get();
      Vec2 d = tr_dir.get();
      std::optional<StartPoint> start;
      if (!tr_start.empty()) start = StartPoint{tr_poly, parse_vec(tr_start)};
      auto seq = cutting_sequence(s, d, start, tr_max);
      out << "index,label,x,y\n";
      for (std::size_t i = 0; i < seq.trace.crossings.size(); ++i) {
        const auto& c = seq.trace.crossings[i];
        out << i << ',' << c.label << ',' << num(c.point.x) << ',' << num(c.point.y) << '\n';
      }
      if (seq.periodic)
        out << "# periodic, period " << seq.trace.period() << ", word " << CyclicWord(seq.word()).letters() << '\n';
      else if (seq.trace.hit_vertex())
        out << "# stopped at a vertex\n";
      else
        out << "# budget exhausted\n";
      if (!tr_svg.empty()) {
        Overlays o;
        o.trajectory = trajectory_segments(s, seq.trace);
        write_text(tr_svg, render_svg(s, o));
      }
    } else if (c_from->parsed()) {
      out << word_from_slope(Rational::parse(cs_slope)).display() << '\n';
    } else if (c_val->parsed()) {
      auto v = validate(CyclicWord(cs_word));
      out << verdict_text(v) << '\n';
      return is_valid(v) ? 0 : 1;
    } else if (c_shear->parsed()) {
      CyclicWord w(cs_word);
      check_binary(w);
      if (cs_op == "sandwiched") {
        auto r = sandwiched(w);
        if (!r) throw Error(ErrorKind::InvalidArgument, "no letter of " + cs_word + " is sandwiched");
        out << r->letters() << '\n';
      } else if (cs_op == "swap") {
        out << swap(w).letters() << '\n';
      } else {
        WordOp op = cs_op == "lengthen-a"   ? WordOp::LengthenA
                    : cs_op == "lengthen-b" ? WordOp::LengthenB
                    : cs_op == "derive"     ? WordOp::Derive
                                            : WordOp::ConjugateDerive;
        out << apply(op, w).letters() << '\n';
      }
    } else if (c_cx->parsed()) {
      CyclicWord w(cs_word);
      std::size_t n = cs_n ? cs_n : 2 * w.size();
      for (std::size_t k = 1; k <= n; ++k) out << k << ' ' << complexity(w, k) << '\n';
    } else if (c_en->parsed()) {
      auto e = enumerate_valid_periodic(cs_period);
      for (const auto& w : e.words) out << w.canonical() << '\n';
      out << "# " << e.words.size() << " words, " << e.swap_classes.size() << " swap classes\n";
    } else if (c_check->parsed()) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::int64_t> pick(1, 20);
      std::size_t agree = 0;
      Surface torus = square_torus();
      for (std::size_t i = 0; i < cs_samples; ++i) {
        std::int64_t p = pick(rng) - 1, q = pick(rng);
        std::int64_t g = std::gcd(p, q);
        p /= g, q /= g;
        auto seq = cutting_sequence(torus, Vec2{Scalar(q), Scalar(p)}, StartPoint{0, Vec2{Rational(1, 2), Rational(2 * q + 1, 4 * q)}});
        bool ok = seq.periodic && CyclicWord(seq.word()) == word_from_slope(p, q);
        agree += ok ? 1 : 0;
        if (!ok) out << "mismatch at slope " << Rational(p, q).to_string() << '\n';
      }
      out << "agree " << agree << '/' << cs_samples << '\n';
      return agree == cs_samples ? 0 : 1;
    } else if (f_exp->parsed()) {
      Scalar x = Scalar::parse(cf_arg);
      out << (x.is_exact() ? cf_expand(x.exact()) : cf_expand_float(x.to_double())).to_string() << '\n';
    } else if (f_eval->parsed()) {
      out << cf_eval({parse_ints(cf_arg, 0)}).to_string() << '\n';
    } else if (f_tw->parsed()) {
      Rational r = Rational::parse(cf_arg);
      if (r.num() == 0) {
        out << "B\n";
      } else {
        auto staged = word_from_cf_staged(cf_expand(r));
        if (cf_stages) print_stages(out, staged.stages);
        out << staged.word.display() << '\n';
      }
    } else if (f_fw->parsed()) {
      auto r = cf_from_word(CyclicWord(cf_arg));
      if (cf_stages) print_stages(out, r.trace);
      out << r.cf.to_string() << " = " << cf_eval(r.cf).to_string() << '\n';
    } else if (m_dec->parsed()) {
      out << decompose(parse_matrix(m_arg)).to_string() << '\n';
    } else if (m_act->parsed()) {
      Slope s = m_slope == "inf" ? Slope::infinity() : Slope::of(Rational::parse(m_slope));
      out << slope_action(parse_matrix(m_arg), s).to_string() << '\n';
    } else if (m_aw->parsed()) {
      auto r = apply_matrix_to_word(parse_matrix(m_arg), CyclicWord(m_word));
      out << "decomposition: " << r.decomposition.to_string() << '\n';
      print_stages(out, r.stages);
      out << r.word.letters() << '\t' << line_slope_of(r.word).to_string() << '\n';
    } else if (cy->parsed()) {
      Surface s = cy_surf.get();
      auto dec = decompose_cylinders(s, cy_dir.get());
      for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
        const auto& c = dec.cylinders[i];
        out << "cylinder " << i << ": width " << num(c.width) << " height " << num(c.height) << " modulus "
            << num(c.modulus) << " core " << c.core_word << (c.rectangular ? " rectangular" : "") << '\n';
      }
      if (auto ratios = moduli_rationally_related(dec, cy_den)) {
        out << "moduli rationally related: yes (ratios";
        for (const auto& r : *ratios) out << ' ' << r.to_string();
        out << ")\n";
        Scalar M = *minimal_shear_parameter(dec, cy_den);
        out << "minimal shear parameter: " << num(M) << "\ntwists:";
        for (auto k : twist_counts(dec, M)) out << ' ' << k;
        out << '\n';
      } else {
        out << "moduli rationally related: no\n";
      }
      if (!cy_svg.empty()) {
        Overlays o;
        o.cylinders = dec;
        write_text(cy_svg, render_svg(s, o));
      }
    } else if (b_tr->parsed()) {
      BilliardResult r;
      if (!b_slope.empty()) {
        Rational q = Rational::parse(b_slope);
        r = billiard_trace(q.num(), q.den(), b_max);
      } else {
        if (b_start.empty() || b_dir.empty()) throw Error(ErrorKind::ParseError, "give --slope, or --start and --direction");
        r = billiard_trace(parse_vec(b_start), parse_vec(b_dir), b_max);
      }
      out << r.word() << '\n';
      if (r.period)
        out << "period " << *r.period << '\n';
      else
        out << "no period within budget\n";
    } else if (b_fold->parsed()) {
      out << billiard_word_to_torus(CyclicWord(b_word)).letters() << '\n';
    } else if (b_unf->parsed()) {
      out << torus_word_to_billiard(CyclicWord(b_word)).letters() << '\n';
    } else if (rd->parsed()) {
      Surface s = rd_surf.get();
      Overlays o;
      o.vertex_markers = rd_vert;
      if (rd_traj) {
        Vec2 d = rd_dir.get();
        std::optional<StartPoint> start;
        if (!rd_start.empty()) start = StartPoint{rd_poly, parse_vec(rd_start)};
        o.trajectory = trajectory_segments(s, cutting_sequence(s, d, start).trace);
      }
      if (rd_cyl) o.cylinders = decompose_cylinders(s, rd_dir.get());
      std::string svg = render_svg(s, o);
      if (rd_out.empty())
        out << svg;
      else
        write_text(rd_out, svg);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tsurf::cli
