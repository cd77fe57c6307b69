#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "certificate_json.hpp"
#include "origami/construction.hpp"
#include "origami/density.hpp"
#include "origami/errors.hpp"
#include "origami/ring_analysis.hpp"
#include "specs.hpp"

namespace origami::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string angles;
  int depth = 3;
  unsigned degree_bound = 3;
  long precision = 64;
  std::size_t max_points = 250000;
  std::string out;
  std::string format = "json";
  // Subcommand inputs.
  std::string target;
  std::string epsilon = "1/1000";
  std::string x;
  std::string y;
  std::string in;
  std::string theta = "1/4";
  std::string viewport;
  double radius = 2.0;
};

struct Context {
  RunConfig cfg;
  std::vector<std::string> angle_names;
  std::optional<AngleSet> angles;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

ojson config_json(const Context& ctx) {
  const RunConfig& c = ctx.cfg;
  ojson j;
  j["angles"] = ctx.angle_names;
  j["depth"] = c.depth;
  j["degree_bound"] = c.degree_bound;
  j["precision"] = c.precision;
  j["max_points"] = c.max_points;
  j["format"] = c.format;
  j["out"] = c.out;
  if (c.command == "density") {
    j["target"] = c.target;
    j["epsilon"] = c.epsilon;
  }
  if (c.command == "lattice-eq") {
    j["x"] = c.x;
    j["y"] = c.y;
  }
  if (c.command == "verify") j["in"] = c.in;
  if (ctx.angles && ctx.angles->backend() == Backend::parametric) j["theta"] = c.theta;
  if (c.format == "svg") {
    j["viewport"] = c.viewport;
    j["radius"] = c.radius;
  }
  return j;
}

ojson header_json(const Context& ctx) {
  return ojson{{"tool", "origami"}, {"version", kVersion}, {"command", ctx.cfg.command}, {"config", config_json(ctx)}};
}

void emit(const Context& ctx, const std::string& text) {
  if (ctx.cfg.out.empty() || ctx.cfg.out == "-") {
    *ctx.out << text;
    return;
  }
  std::ofstream f(ctx.cfg.out, std::ios::binary);
  if (!f) throw ParseError("cannot open output file '" + ctx.cfg.out + "'");
  f << text;
}

void emit_json(const Context& ctx, const ojson& j) { emit(ctx, j.dump(2) + "\n"); }

const AngleSet& angles_of(const Context& ctx) {
  if (!ctx.angles) throw ParseError("--angles is required");
  return *ctx.angles;
}

std::optional<ComplexInterval> specialization(const Context& ctx) {
  if (!ctx.angles || ctx.angles->backend() != Backend::parametric) return std::nullopt;
  return ComplexInterval::unit(Interval(parse_rational(ctx.cfg.theta), ctx.cfg.precision));
}

ComplexInterval enclose(const Context& ctx, const ExactScalar& v) {
  return to_interval(v, ctx.cfg.precision, specialization(ctx));
}

ojson interval_json(const Interval& i) { return ojson::array({i.lo_string(), i.hi_string()}); }

ojson value_json(const Context& ctx, const ExactScalar& v) {
  const ComplexInterval box = enclose(ctx, v);
  return ojson{{"value", to_string(v)}, {"key", canonical_key(v)}, {"re", interval_json(box.re)},
               {"im", interval_json(box.im)}};
}

std::string angle_name(const Context& ctx, const UnitAngle& a) {
  const AngleSet& set = angles_of(ctx);
  for (std::size_t k = 0; k < set.size(); ++k)
    if (set[k].equivalent(a)) return ctx.angle_names[k];
  return to_string(a.value());
}

std::optional<LatticeDescriptor> lattice_for(const AngleSet& angles) {
  if (angles.size() != 3 || !angles.contains_one()) return std::nullopt;
  return LatticeDescriptor::from_generator(lattice_generator(angles));
}

// ---- construct / plot -----------------------------------------------------

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string render_svg(const Context& ctx, const GenerationSet& g) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [key, rec] : g.points()) {
    const ComplexInterval box = enclose(ctx, rec.value);
    pts.emplace_back(box.re.midpoint(), box.im.midpoint());
  }
  double x0, y0, x1, y1;
  if (!ctx.cfg.viewport.empty()) {
    std::vector<double> v;
    std::stringstream ss(ctx.cfg.viewport);
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(parse_rational(part).get_d());
    if (v.size() != 4 || v[2] <= v[0] || v[3] <= v[1])
      throw ParseError("--viewport expects xmin,ymin,xmax,ymax with xmin < xmax and ymin < ymax");
    x0 = v[0], y0 = v[1], x1 = v[2], y1 = v[3];
  } else {
    x0 = y0 = 0;
    x1 = y1 = 1;
    for (const auto& [x, y] : pts) {
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
    const double margin = 0.05 * std::max(x1 - x0, y1 - y0);
    x0 -= margin, y0 -= margin, x1 += margin, y1 += margin;
  }
  const double size = 800.0;
  const double scale = size / std::max(x1 - x0, y1 - y0);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<!-- " << header_json(ctx).dump() << " -->\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double ax = (0 - x0) * scale;
  const double ay = size - (0 - y0) * scale;
  o << "<line x1=\"0\" y1=\"" << format_coord(ay) << "\" x2=\"" << size << "\" y2=\"" << format_coord(ay)
    << "\" stroke=\"#bbb\"/>\n";
  o << "<line x1=\"" << format_coord(ax) << "\" y1=\"0\" x2=\"" << format_coord(ax) << "\" y2=\"" << size
    << "\" stroke=\"#bbb\"/>\n";
  for (const auto& [x, y] : pts) {
    o << "<circle cx=\"" << format_coord((x - x0) * scale) << "\" cy=\"" << format_coord(size - (y - y0) * scale)
      << "\" r=\"" << format_coord(ctx.cfg.radius) << "\" fill=\"black\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

int cmd_construct(const Context& ctx) {
  const AngleSet& angles = angles_of(ctx);
  if (angles.size() < 2) throw ParseError("construct needs at least two angles");
  const ClosureResult r = closure_to_depth({angles, ctx.cfg.depth, ctx.cfg.max_points});
  const GenerationSet& last = r.partial ? *r.partial : r.generations.back();
  const auto lattice = lattice_for(angles);
  if (r.cap_exceeded())
    *ctx.err << "origami: point cap of " << ctx.cfg.max_points << " reached while building S_" << last.depth()
             << "; writing the partial set\n";

  if (ctx.cfg.format == "svg") {
    emit(ctx, render_svg(ctx, last));
  } else if (ctx.cfg.format == "csv") {
    std::ostringstream o;
    o << "# origami " << kVersion << "\n";
    o << "# config: " << header_json(ctx).dump() << "\n";
    if (r.cap_exceeded()) o << "# cap_exceeded: partial S_" << last.depth() << "\n";
    o << "re_lo,re_hi,im_lo,im_hi,canonical_key,depth" << (lattice ? ",in_lattice" : "") << "\n";
    for (const auto& [key, rec] : last.points()) {
      const ComplexInterval box = enclose(ctx, rec.value);
      o << box.re.lo_string() << ',' << box.re.hi_string() << ',' << box.im.lo_string() << ','
        << box.im.hi_string() << ',' << key << ',' << rec.depth;
      if (lattice) o << ',' << (lattice->contains(rec.value) ? "true" : "false");
      o << "\n";
    }
    emit(ctx, o.str());
  } else {
    ojson j;
    j["header"] = header_json(ctx);
    j["cap_exceeded"] = r.cap_exceeded();
    j["generations"] = ojson::array();
    for (const auto& g : r.generations) j["generations"].push_back({{"depth", g.depth()}, {"size", g.size()}});
    if (r.partial) j["partial"] = {{"depth", r.partial->depth()}, {"size", r.partial->size()}};
    if (lattice) j["lattice_generator"] = value_json(ctx, lattice->x);
    j["points"] = ojson::array();
    for (const auto& [key, rec] : last.points()) {
      ojson p = value_json(ctx, rec.value);
      p["depth"] = rec.depth;
      if (lattice) {
        const auto mn = lattice->coordinates(rec.value);
        p["lattice"] = mn ? ojson::array({mn->first.get_str(), mn->second.get_str()}) : ojson();
      }
      j["points"].push_back(std::move(p));
    }
    emit_json(ctx, j);
  }
  return r.cap_exceeded() ? kCapExceeded : kSuccess;
}

// ---- elementary / projections --------------------------------------------

int cmd_elementary(const Context& ctx) {
  const AngleSet& angles = angles_of(ctx);
  ojson j;
  j["header"] = header_json(ctx);
  j["elementary"] = ojson::array();
  for (const auto& m : elementary_monomials(angles)) {
    ojson e = value_json(ctx, m.value);
    e["alpha"] = angle_name(ctx, m.alpha);
    e["beta"] = angle_name(ctx, m.beta);
    j["elementary"].push_back(std::move(e));
  }
  j["primary"] = ojson::array();
  std::size_t k = 1;
  for (const auto& m : primary_monomials(angles)) {
    ojson e = value_json(ctx, m.value);
    e["name"] = "z" + std::to_string(k++);
    e["alpha"] = angle_name(ctx, m.alpha);
    e["beta"] = angle_name(ctx, m.beta);
    j["primary"].push_back(std::move(e));
  }
  emit_json(ctx, j);
  return kSuccess;
}

int cmd_projections(const Context& ctx) {
  const AngleSet& angles = angles_of(ctx);
  const ProjectionSet ps = projection_set(angles);
  ojson j;
  j["header"] = header_json(ctx);
  j["values"] = ojson::array();
  for (const auto& v : ps.values) j["values"].push_back(value_json(ctx, v));
  j["nontrivial"] = ojson::array();
  for (const auto& p : ps.nontrivial) {
    ojson e = value_json(ctx, p.value);
    e["source"] = to_string(p.source);
    e["along"] = angle_name(ctx, p.along);
    j["nontrivial"].push_back(std::move(e));
  }
  j["basis"] = ojson::array();
  for (std::size_t k = 0; k < ps.basis.size(); ++k) {
    ojson e = value_json(ctx, ps.basis[k]);
    e["id"] = k;
    j["basis"].push_back(std::move(e));
  }
  j["normal_form_x"] = ps.normal_form_x ? value_json(ctx, *ps.normal_form_x) : ojson();
  j["normal_form_holds"] = ps.normal_form_holds;
  emit_json(ctx, j);
  return kSuccess;
}

// ---- check-ring / verify --------------------------------------------------

// Generators and projections as check_ring lays them out for these angles.
RingVerdict empty_layout(const AngleSet& angles) {
  RingVerdict v;
  if (angles.size() == 3) {
    v.context.generators = {angles.one(), lattice_generator(angles)};
    v.generator_names = {"1", "x"};
  } else {
    v.context = module_context(angles);
    v.generator_names.push_back("1");
    for (std::size_t k = 1; k < v.context.generators.size(); ++k)
      v.generator_names.push_back("z" + std::to_string(k));
  }
  return v;
}

ojson context_json(const Context& ctx, const RingVerdict& v) {
  ojson j;
  j["generators"] = ojson::array();
  for (std::size_t k = 0; k < v.context.generators.size(); ++k) {
    ojson g = value_json(ctx, v.context.generators[k]);
    g["id"] = k;
    g["name"] = v.generator_names[k];
    j["generators"].push_back(std::move(g));
  }
  j["projections"] = ojson::array();
  for (std::size_t k = 0; k < v.context.projections.size(); ++k) {
    ojson p = value_json(ctx, v.context.projections[k]);
    p["id"] = k;
    j["projections"].push_back(std::move(p));
  }
  return j;
}

int cmd_check_ring(const Context& ctx) {
  const AngleSet& angles = angles_of(ctx);
  const RingVerdict v = check_ring(angles, ctx.cfg.degree_bound);
  ojson j;
  j["header"] = header_json(ctx);
  const ojson layout = context_json(ctx, v);
  j["generators"] = layout["generators"];
  j["projections"] = layout["projections"];
  j["degree_bound"] = ctx.cfg.degree_bound;
  auto certs_json = [](const std::vector<Certificate>& certs) {
    ojson a = ojson::array();
    for (const auto& c : certs) a.push_back(certificate_to_json(c));
    return a;
  };
  int code = kSuccess;
  if (const auto* ring = std::get_if<verdict::Ring>(&v.result)) {
    j["verdict"] = "Ring";
    j["certificates"] = certs_json(ring->certificates);
  } else if (const auto* no = std::get_if<verdict::NotRing>(&v.result)) {
    j["verdict"] = "NotRing";
    j["witness"] = {{"x", to_string(no->x)},
                    {"trace", to_string(ExactScalar(no->x + conj(no->x)))},
                    {"norm", to_string(ExactScalar(no->x * conj(no->x)))}};
    code = kNegative;
  } else {
    const auto& unk = std::get<verdict::Unknown>(v.result);
    j["verdict"] = "Unknown";
    j["certificates"] = certs_json(unk.resolved);
    j["unresolved"] = ojson::array();
    for (const auto& [a, b] : unk.unresolved) j["unresolved"].push_back({a, b});
    code = kUnknown;
  }
  emit_json(ctx, j);
  return code;
}

int cmd_verify(Context& ctx) {
  if (ctx.cfg.in.empty()) throw ParseError("verify needs --in <file>");
  nlohmann::json doc;
  try {
    if (ctx.cfg.in == "-") {
      doc = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream f(ctx.cfg.in);
      if (!f) throw ParseError("cannot open '" + ctx.cfg.in + "'");
      doc = nlohmann::json::parse(f);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("input is not JSON: ") + e.what());
  }

  std::string angle_text;
  try {
    for (const auto& a : doc.at("header").at("config").at("angles")) {
      if (!angle_text.empty()) angle_text += ',';
      angle_text += a.get<std::string>();
    }
  } catch (const nlohmann::json::exception&) {
    throw ParseError("input has no header.config.angles");
  }
  const AngleList parsed = parse_angle_list(angle_text);
  ctx.angle_names = parsed.normalized;
  ctx.angles = parsed.set;

  const RingVerdict layout = empty_layout(*ctx.angles);
  bool keys_match = true;
  try {
    const auto& gens = doc.at("generators");
    const auto& projs = doc.at("projections");
    keys_match = gens.size() == layout.context.generators.size() && projs.size() == layout.context.projections.size();
    for (std::size_t k = 0; keys_match && k < gens.size(); ++k)
      keys_match = gens[k].at("key").get<std::string>() == canonical_key(layout.context.generators[k]);
    for (std::size_t k = 0; keys_match && k < projs.size(); ++k)
      keys_match = projs[k].at("key").get<std::string>() == canonical_key(layout.context.projections[k]);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("input lacks generator and projection listings");
  }

  ojson j;
  j["header"] = header_json(ctx);
  j["source_verdict"] = doc.value("verdict", "");
  j["context_matches"] = keys_match;
  j["results"] = ojson::array();
  bool all = keys_match;
  if (doc.contains("certificates")) {
    for (const auto& c : doc.at("certificates")) {
      const Certificate cert = certificate_from_json(c, layout.context.projections.size());
      const bool ok = keys_match && cert.product && verify_certificate(cert, layout.context);
      all = all && ok;
      ojson r;
      r["product"] = cert.product ? ojson::array({cert.product->first, cert.product->second}) : ojson();
      r["verified"] = ok;
      j["results"].push_back(std::move(r));
    }
  }
  j["all_verified"] = all;
  emit_json(ctx, j);
  return all ? kSuccess : kNegative;
}

// ---- lattice-eq / density -------------------------------------------------

int cmd_lattice_eq(const Context& ctx) {
  if (ctx.cfg.x.empty() || ctx.cfg.y.empty()) throw ParseError("lattice-eq needs --x and --y");
  const ExactScalar x = parse_point_spec(ctx.cfg.x);
  const ExactScalar y = parse_point_spec(ctx.cfg.y);
  const bool same = same_lattice(x, y);
  ojson j;
  j["header"] = header_json(ctx);
  j["x"] = to_string(x);
  j["y"] = to_string(y);
  j["same_lattice"] = same;
  emit_json(ctx, j);
  return same ? kSuccess : kNegative;
}

int cmd_density(const Context& ctx) {
  const AngleSet& angles = angles_of(ctx);
  if (ctx.cfg.target.empty()) throw ParseError("density needs --target re,im");
  const auto [re, im] = parse_complex(ctx.cfg.target);
  const Rational eps = parse_rational(ctx.cfg.epsilon);
  if (eps <= 0) throw ParseError("--epsilon must be positive");
  const DensityWitness w = approximate(re, im, eps, angles, ctx.cfg.precision);
  const bool certified = witness_within_epsilon(w);
  ojson j;
  j["header"] = header_json(ctx);
  j["p"] = {{"value", to_string(w.p)}, {"from", w.p_description}};
  j["z"] = to_string(w.z);
  j["a"] = w.a.get_str();
  j["b"] = w.b.get_str();
  j["N1"] = w.n1;
  j["N2"] = w.n2;
  j["value"] = to_string(w.value);
  j["value_interval"] = {{"re", interval_json(w.value_interval.re)}, {"im", interval_json(w.value_interval.im)}};
  j["target"] = {{"re", to_string(w.target_re)}, {"im", to_string(w.target_im)}};
  j["epsilon"] = to_string(w.epsilon);
  j["certified"] = certified;
  emit_json(ctx, j);
  return certified ? kSuccess : kFailure;
}

void add_common(CLI::App* sub, RunConfig& c, bool angles_required) {
  auto* a = sub->add_option("--angles", c.angles, "comma-separated angles: 0, pi*p/q, deg:<r>, param:<k>");
  if (angles_required) a->required();
  sub->add_option("--depth", c.depth, "construction depth")->check(CLI::NonNegativeNumber);
  sub->add_option("--degree-bound", c.degree_bound, "certificate degree bound");
  sub->add_option("--precision", c.precision, "interval precision in bits");
  sub->add_option("--max-points", c.max_points, "cap on the size of one generation");
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  sub->add_option("--theta", c.theta, "t = e^{i theta} (radians) when printing parametric values");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  RunConfig& c = ctx.cfg;

  CLI::App app{"Exact straightedge constructions with a fixed set of line directions", "origami"};
  app.set_version_flag("--version", std::string("origami ") + kVersion);
  app.require_subcommand(1, 1);

  auto* construct = app.add_subcommand("construct", "build S_0 .. S_depth and export the last set");
  add_common(construct, c, true);
  auto* elementary = app.add_subcommand("elementary", "list the elementary monomials");
  add_common(elementary, c, true);
  auto* projections = app.add_subcommand("projections", "list the real-axis projections");
  add_common(projections, c, true);
  auto* check = app.add_subcommand("check-ring", "decide or certify that R(U) is a ring");
  add_common(check, c, true);
  auto* verify = app.add_subcommand("verify", "re-check certificates written by check-ring");
  add_common(verify, c, false);
  verify->add_option("--in", c.in, "check-ring JSON output ('-' for stdin)")->required();
  auto* lattice = app.add_subcommand("lattice-eq", "compare the lattices Z + xZ and Z + yZ");
  add_common(lattice, c, false);
  lattice->add_option("--x", c.x, "point spec, e.g. '1/2 + 3*i' or 'I(pi*1/6,pi*1/2)'")->required();
  lattice->add_option("--y", c.y, "point spec")->required();
  auto* density = app.add_subcommand("density", "approximate a target by a point of R(U)");
  add_common(density, c, true);
  density->add_option("--target", c.target, "re,im")->required();
  density->add_option("--epsilon", c.epsilon, "tolerance (rational or decimal)");
  auto* plot = app.add_subcommand("plot", "SVG scatter plot of S_depth");
  add_common(plot, c, true);
  plot->add_option("--radius", c.radius, "circle radius in pixels")->check(CLI::PositiveNumber);
  plot->add_option("--viewport", c.viewport, "xmin,ymin,xmax,ymax");
  construct->add_option("--radius", c.radius, "circle radius in pixels (svg)")->check(CLI::PositiveNumber);
  construct->add_option("--viewport", c.viewport, "xmin,ymin,xmax,ymax (svg)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "plot") c.format = "svg";

  try {
    if (c.max_points < 2) throw ParseError("--max-points must be at least 2");
    if (c.precision < kMinPrecisionBits)
      throw ParseError("--precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
    parse_rational(c.theta);
    if (!c.angles.empty()) {
      AngleList parsed = parse_angle_list(c.angles);
      ctx.angle_names = std::move(parsed.normalized);
      ctx.angles = std::move(parsed.set);
    }
    if (c.command == "construct" || c.command == "plot") return cmd_construct(ctx);
    if (c.command == "elementary") return cmd_elementary(ctx);
    if (c.command == "projections") return cmd_projections(ctx);
    if (c.command == "check-ring") return cmd_check_ring(ctx);
    if (c.command == "verify") return cmd_verify(ctx);
    if (c.command == "lattice-eq") return cmd_lattice_eq(ctx);
    if (c.command == "density") return cmd_density(ctx);
  } catch (const CapExceeded& e) {
    err << "origami: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "origami: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedConfiguration& e) {
    err << "origami: unsupported configuration: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateReal& e) {
    err << "origami: " << e.what() << "\n";
    return kUsage;
  } catch (const BackendMismatch& e) {
    err << "origami: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownGenerator& e) {
    err << "origami: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "origami: " << e.what() << "\n";
    return kFailure;
  }
  err << "origami: unknown command\n";
  return kUsage;
}

}  // namespace origami::cli
